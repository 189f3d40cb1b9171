#include "qhopf/algebra.hpp"

#include <string>

namespace qhopf {

namespace {

void check_scalar(const Scalar& s, const FieldSpec& f, const std::string& where) {
  if (s.is_zero()) return;
  if (s.modulus() == f.characteristic()) return;
  if (s.modulus() == 0 && s.value().get_den() == 1 && !f.is_rational()) return;
  throw FieldMismatch(where + ": coefficient " + s.str() + " is not in field " + f.tag());
}

void check_vector(const Vector& v, std::size_t n, const FieldSpec& f, const std::string& where) {
  if (v.size() != n) {
    throw DimensionError(where + ": expected length " + std::to_string(n) + ", got " +
                         std::to_string(v.size()));
  }
  for (const auto& s : v) check_scalar(s, f, where);
}

void check_tensor(const Tensor& t, std::size_t n, std::size_t rank, const FieldSpec& f,
                  const std::string& where) {
  if (t.dim() != n || t.rank() != rank) {
    throw DimensionError(where + ": expected rank-" + std::to_string(rank) + " tensor of dimension " +
                         std::to_string(n));
  }
  for (std::size_t i = 0; i < t.size(); ++i) check_scalar(t[i], f, where);
}

void check_matrix(const Matrix& m, std::size_t rows, std::size_t cols, const FieldSpec& f,
                  const std::string& where) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(where + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) check_scalar(m(r, c), f, where);
  }
}

void check_algebra_shapes(const AlgebraPresentation& a) {
  if (a.dim == 0) throw DimensionError("algebra dimension must be positive");
  check_tensor(a.mult, a.dim, 3, a.field, "mult");
  check_vector(a.unit.coeffs(), a.dim, a.field, "unit");
  if (!a.labels.empty() && a.labels.size() != a.dim) throw DimensionError("labels: wrong count");
}

}  // namespace

void check_shapes(const QuasiHopfPresentation& p) {
  const auto& a = p.qb.algebra;
  check_algebra_shapes(a);
  const std::size_t n = a.dim;
  check_matrix(p.qb.delta, n * n, n, a.field, "delta");
  check_vector(p.qb.counit.coeffs(), n, a.field, "epsilon");
  check_tensor(p.qb.phi, n, 3, a.field, "phi");
  check_tensor(p.qb.phi_inv, n, 3, a.field, "phi_inv");
  check_matrix(p.antipode, n, n, a.field, "antipode");
  check_vector(p.alpha.coeffs(), n, a.field, "alpha");
  check_vector(p.beta.coeffs(), n, a.field, "beta");
}

Algebra::Algebra(AlgebraPresentation p) : p_(std::move(p)) {
  check_algebra_shapes(p_);
  const std::size_t n = p_.dim;
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = p_.mult[(i * n + j) * n + k];
        if (!c.is_zero()) table_[i * n + j].emplace_back(k, c);
      }
    }
  }
}

Element Algebra::mul(const Element& a, const Element& b) const {
  if (a.dim() != dim() || b.dim() != dim()) throw DimensionError("mul: dimension mismatch");
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      for (const auto& [k, s] : basis_product(i, j)) out[k] += c * s;
    }
  }
  return out;
}

Element Algebra::mul(std::initializer_list<Element> factors) const {
  Element out = one();
  for (const auto& f : factors) out = mul(out, f);
  return out;
}

Tensor Algebra::mul(const Tensor& a, const Tensor& b) const {
  if (a.rank() != b.rank() || a.dim() != dim() || b.dim() != dim()) {
    throw DimensionError("tensor mul: shape mismatch");
  }
  const std::size_t r = a.rank();
  struct Entry {
    Tensor::Index idx;
    Scalar c;
  };
  std::vector<Entry> na;
  std::vector<Entry> nb;
  a.for_each_nonzero([&](const Tensor::Index& i, const Scalar& c) { na.push_back({i, c}); });
  b.for_each_nonzero([&](const Tensor::Index& i, const Scalar& c) { nb.push_back({i, c}); });

  Tensor out(dim(), r);
  std::vector<std::pair<std::size_t, Scalar>> partial;
  std::vector<std::pair<std::size_t, Scalar>> next;
  for (const auto& ea : na) {
    for (const auto& eb : nb) {
      partial.assign(1, {0, ea.c * eb.c});
      for (std::size_t leg = 0; leg < r && !partial.empty(); ++leg) {
        next.clear();
        const auto& terms = basis_product(ea.idx[leg], eb.idx[leg]);
        for (const auto& [f, c] : partial) {
          for (const auto& [k, s] : terms) next.emplace_back(f * dim() + k, c * s);
        }
        partial.swap(next);
      }
      for (const auto& [f, c] : partial) out[f] += c;
    }
  }
  return out;
}

Tensor Algebra::one_tensor(std::size_t rank) const {
  Tensor t = Tensor::scalar(Scalar{1});
  for (std::size_t i = 0; i < rank; ++i) t = outer(t, Tensor::from_element(one()));
  return t;
}

LinMap Algebra::left_mult(const Element& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(a, basis(j)).coeffs());
  return Matrix::from_columns(cols, dim());
}

LinMap Algebra::right_mult(const Element& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(basis(j), a).coeffs());
  return Matrix::from_columns(cols, dim());
}

std::optional<Element> Algebra::inverse(const Element& a) const {
  auto x = solve_linear(left_mult(a), one().coeffs());
  if (!x) return std::nullopt;
  Element inv(*x);
  // Dedekind-finite: a right inverse is two-sided, but confirm anyway.
  if (!(mul(inv, a) == one())) return std::nullopt;
  return inv;
}

LinMap Algebra::conjugation(const Element& u) const {
  auto inv = inverse(u);
  if (!inv) throw std::domain_error("conjugation by a non-unit");
  return left_mult(u) * right_mult(*inv);
}

Tensor tensor_contract(const Algebra& alg, const Tensor& t, const std::vector<LegOp>& legs,
                       const MultPlan& plan) {
  const std::size_t n = alg.dim();
  if (t.dim() != n) throw DimensionError("tensor_contract: dimension mismatch");
  if (legs.size() != t.rank()) throw DimensionError("tensor_contract: one leg op per leg required");
  std::vector<int> used(t.rank(), 0);
  for (std::size_t l = 0; l < legs.size(); ++l) {
    if (const auto* m = std::get_if<LinMap>(&legs[l])) {
      if (m->rows() != n || m->cols() != n) throw DimensionError("tensor_contract: map shape");
    } else if (const auto* f = std::get_if<Functional>(&legs[l])) {
      if (f->dim() != n) throw DimensionError("tensor_contract: functional shape");
      used[l] = 1;
    }
  }
  for (const auto& group : plan) {
    if (group.empty()) throw DimensionError("tensor_contract: empty output leg");
    for (auto l : group) {
      if (l >= t.rank() || used[l] != 0) throw DimensionError("tensor_contract: bad leg plan");
      used[l] = 2;
    }
  }
  for (auto u : used) {
    if (u == 0) throw DimensionError("tensor_contract: leg neither consumed nor placed");
  }

  return expand(t, n, plan.size(), [&](const Tensor::Index& idx) {
    Scalar factor{1};
    std::vector<Element> leg_values(t.rank());
    for (std::size_t l = 0; l < t.rank(); ++l) {
      Element e = alg.basis(idx[l]);
      if (const auto* m = std::get_if<LinMap>(&legs[l])) {
        leg_values[l] = Element(m->apply(e.coeffs()));
      } else if (const auto* f = std::get_if<Functional>(&legs[l])) {
        factor *= (*f)(e);
      } else {
        leg_values[l] = std::move(e);
      }
    }
    Tensor out = Tensor::scalar(factor);
    for (const auto& group : plan) {
      Element prod = leg_values[group[0]];
      for (std::size_t g = 1; g < group.size(); ++g) prod = alg.mul(prod, leg_values[group[g]]);
      out = outer(out, Tensor::from_element(prod));
    }
    return out;
  });
}

QuasiBialgebra::QuasiBialgebra(QuasiBialgebraPresentation qb)
    : qb_(std::move(qb)), alg_(qb_.algebra) {
  const std::size_t n = alg_.dim();
  const auto& f = alg_.field();
  check_matrix(qb_.delta, n * n, n, f, "delta");
  check_vector(qb_.counit.coeffs(), n, f, "epsilon");
  check_tensor(qb_.phi, n, 3, f, "phi");
  check_tensor(qb_.phi_inv, n, 3, f, "phi_inv");
}

QuasiHopfAlgebra::QuasiHopfAlgebra(QuasiHopfPresentation p)
    : QuasiBialgebra((check_shapes(p), p.qb)), p_(std::move(p)) {
  s_inv_ = inverse(p_.antipode);
}

const LinMap& QuasiHopfAlgebra::antipode_inverse_or_throw() const {
  if (!s_inv_) throw InconsistentPresentation("antipode is not invertible");
  return *s_inv_;
}

Element QuasiHopfAlgebra::S_inv(const Element& a) const {
  return Element(antipode_inverse_or_throw().apply(a.coeffs()));
}

Tensor QuasiBialgebra::delta(const Element& a) const {
  Tensor t(dim(), 2);
  const Vector v = qb_.delta.apply(a.coeffs());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

Tensor QuasiBialgebra::delta_leg(const Tensor& t, std::size_t leg) const {
  if (leg >= t.rank()) throw DimensionError("delta_leg: leg out of range");
  const std::size_t n = dim();
  Tensor out(n, t.rank() + 1);
  t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) {
    Tensor::Index o(t.rank() + 1);
    for (std::size_t l = 0; l < leg; ++l) o[l] = idx[l];
    for (std::size_t l = leg + 1; l < t.rank(); ++l) o[l + 1] = idx[l];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& d = qb_.delta(i * n + j, idx[leg]);
        if (d.is_zero()) continue;
        o[leg] = i;
        o[leg + 1] = j;
        out.at(o) += c * d;
      }
    }
  });
  return out;
}

Tensor QuasiBialgebra::eps_leg(const Tensor& t, std::size_t leg) const {
  std::vector<LegOp> ops(t.rank(), KeepLeg{});
  ops.at(leg) = counit();
  MultPlan plan;
  for (std::size_t l = 0; l < t.rank(); ++l) {
    if (l != leg) plan.push_back({l});
  }
  if (plan.empty()) {
    Scalar s{0};
    t.for_each_nonzero([&](const Tensor::Index& idx, const Scalar& c) { s += c * counit()[idx[0]]; });
    return Tensor::scalar(s);
  }
  return tensor_contract(alg_, t, ops, plan);
}

Tensor QuasiBialgebra::map_leg(const Tensor& t, std::size_t leg, const LinMap& m) const {
  std::vector<LegOp> ops(t.rank(), KeepLeg{});
  ops.at(leg) = m;
  MultPlan plan;
  for (std::size_t l = 0; l < t.rank(); ++l) plan.push_back({l});
  return tensor_contract(alg_, t, ops, plan);
}

Tensor QuasiBialgebra::insert_unit(const Tensor& t, std::size_t pos) const {
  if (pos > t.rank()) throw DimensionError("insert_unit: position out of range");
  std::vector<std::size_t> perm;
  // outer(t, 1) then move the last leg to pos
  Tensor ext = outer(t, Tensor::from_element(alg_.one()));
  for (std::size_t l = 0; l < pos; ++l) perm.push_back(l);
  perm.push_back(t.rank());
  for (std::size_t l = pos; l < t.rank(); ++l) perm.push_back(l);
  return ext.permute(perm);
}

Tensor QuasiBialgebra::delta_left_iterated(const Element& a) const {
  return delta_leg(delta(a), 0);
}

Tensor QuasiBialgebra::delta_right_iterated(const Element& a) const {
  return delta_leg(delta(a), 1);
}

}  // namespace qhopf
