#include "qhopf/extensions.hpp"

#include <stdexcept>

#include "sums.hpp"

namespace qhopf {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& e, std::size_t r) {
  Matrix out = Matrix::identity(1);
  for (std::size_t i = 0; i < r; ++i) out = kron(out, e);
  return out;
}

Vector flat(const Tensor& t) {
  Vector v;
  for (std::size_t i = 0; i < t.size(); ++i) v.push_back(t[i]);
  return v;
}

Tensor unflat(const Vector& v, std::size_t dim, std::size_t rank) {
  Tensor t(dim, rank);
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
  return t;
}

std::string idx(std::size_t i) { return "e" + std::to_string(i); }

Element embed(const Matrix& e, const Vector& c) { return Element(e.apply(c)); }

/// Tensor in K-coordinates, or nullopt when t is not in K^{(x) rank}.
std::optional<Tensor> sub_tensor(const Matrix& e, const Tensor& t) {
  const auto c = solve_linear(tensor_power(e, t.rank()), flat(t));
  if (!c) return std::nullopt;
  return unflat(*c, e.cols(), t.rank());
}

}  // namespace

Matrix SubalgebraPair::embedding() const {
  std::vector<Vector> cols;
  for (const auto& v : sub_basis) cols.push_back(v.coeffs());
  return Matrix::from_columns(cols, ambient.dim());
}

std::optional<Vector> sub_coordinates(const Matrix& embedding, const Vector& v) {
  const auto c = solve_linear(embedding, v);
  if (!c || !(embedding.apply(*c) == v)) return std::nullopt;
  return c;
}

VerificationReport verify_subalgebra(const SubalgebraPair& pair) {
  VerificationReport rep;
  const std::size_t n = pair.ambient.dim();
  const std::size_t m = pair.sub_basis.size();
  auto& shape = rep.law("subalgebra.shape");
  shape.expect(pair.sub_presentation.dim() == m, "dim K", "sub_presentation has the wrong dimension");
  shape.expect(pair.sub_presentation.field() == pair.ambient.field(), "field", "field mismatch");
  bool shapes_ok = shape.passed();
  for (const auto& v : pair.sub_basis) shapes_ok = shapes_ok && v.dim() == n;
  shape.expect(shapes_ok, "sub_basis", "vector of the wrong length");
  if (!shape.passed()) return rep;

  const QuasiHopfAlgebra h(pair.ambient);
  const QuasiHopfAlgebra k(pair.sub_presentation);
  const Matrix e = pair.embedding();
  rep.law("subalgebra.independent").expect(rank(e) == m, "sub_basis", "linearly dependent");
  rep.law("subalgebra.unit").expect_equal(embed(e, k.alg().one().coeffs()), h.alg().one(), "1_K");

  auto& closure = rep.law("subalgebra.closure");
  auto& mult = rep.law("subalgebra.multiplication");
  auto& dstable = rep.law("subalgebra.delta-stable");
  auto& dmatch = rep.law("subalgebra.coproduct");
  auto& counit = rep.law("subalgebra.counit");
  auto& sstable = rep.law("subalgebra.antipode-stable");
  auto& smatch = rep.law("subalgebra.antipode");
  const Matrix e2 = tensor_power(e, 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Element ki = pair.sub_basis[i];
    for (std::size_t j = 0; j < m; ++j) {
      const Element prod = h.alg().mul(ki, pair.sub_basis[j]);
      const std::string where = "(k" + std::to_string(i) + ",k" + std::to_string(j) + ")";
      if (closure.expect(sub_coordinates(e, prod.coeffs()).has_value(), where, prod.str() + " not in K")) {
        mult.expect_equal(prod, embed(e, k.alg().mul(k.alg().basis(i), k.alg().basis(j)).coeffs()), where);
      }
    }
    const std::string where = "k" + std::to_string(i);
    const Tensor d = h.delta(ki);
    if (dstable.expect(sub_tensor(e, d).has_value(), where, "Delta(k) = " + d.str() + " escapes K (x) K")) {
      dmatch.expect_equal(d, unflat(e2.apply(flat(k.delta(k.alg().basis(i)))), n, 2), where);
    }
    counit.expect_equal(h.eps(ki), k.eps(k.alg().basis(i)), where);
    const Element s = h.S(ki);
    if (sstable.expect(sub_coordinates(e, s.coeffs()).has_value(), where, "S(k) = " + s.str() + " escapes K")) {
      smatch.expect_equal(s, embed(e, k.S(k.alg().basis(i)).coeffs()), where);
    }
  }

  const VerificationReport sub = verify_all(k);
  for (const auto& l : sub.laws()) {
    auto& dst = rep.law("K." + l.law);
    dst = l;
    dst.law = "K." + l.law;
  }
  return rep;
}

LinMap psi_nakayama(const QuasiHopfAlgebra& h, const Functional& mu) {
  return h.antipode() * right_hit(h, mu) * h.antipode();
}

bool is_algebra_automorphism(const Algebra& alg, const LinMap& m) {
  if (!inverse(m)) return false;
  auto img = [&](const Element& a) { return Element(m.apply(a.coeffs())); };
  if (!(img(alg.one()) == alg.one())) return false;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (!(img(alg.mul(alg.basis(i), alg.basis(j))) == alg.mul(img(alg.basis(i)), img(alg.basis(j))))) {
        return false;
      }
    }
  }
  return true;
}

LinMap relative_nakayama(const SubalgebraPair& pair, const LinMap& rho_H, const LinMap& rho_K) {
  const Matrix e = pair.embedding();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < pair.sub_basis.size(); ++i) {
    const Vector img = rho_H.apply(pair.sub_basis[i].coeffs());
    const auto c = sub_coordinates(e, img);
    if (!c) {
      throw std::domain_error("rho_H does not stabilize K: rho_H(k" + std::to_string(i) +
                              ") = " + Element(img).str());
    }
    cols.push_back(*c);
  }
  const auto rk_inv = inverse(rho_K);
  if (!rk_inv) throw std::domain_error("rho_K is singular");
  return *rk_inv * Matrix::from_columns(cols, pair.sub_basis.size());
}

std::optional<std::vector<Element>> right_module_basis(const SubalgebraPair& pair) {
  const Algebra alg(pair.ambient.qb.algebra);
  const std::size_t n = alg.dim();
  const std::size_t m = pair.sub_basis.size();
  std::vector<Element> chosen;
  std::vector<Vector> span;
  std::vector<Element> candidates{alg.one()};
  for (std::size_t a = 0; a < n; ++a) candidates.push_back(alg.basis(a));
  for (const auto& c : candidates) {
    if (span.size() == n) break;
    std::vector<Vector> trial = span;
    for (const auto& k : pair.sub_basis) trial.push_back(alg.mul(c, k).coeffs());
    if (rank(Matrix::from_rows(trial, n)) == span.size() + m) {
      span = std::move(trial);
      chosen.push_back(c);
    }
  }
  if (span.size() != n) return std::nullopt;
  return chosen;
}

LinMap extension_frobenius_matrix(const SubalgebraPair& pair, const Functional& psi, const Element& Lambda) {
  const QuasiHopfAlgebra h(pair.ambient);
  const Algebra& alg = h.alg();
  const Matrix e = pair.embedding();
  const Tensor ul = underline_coproduct(h, qp_elements(h), Lambda);
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const Element ea = alg.basis(a);
    const Element f = detail::sum_element(ul, h.dim(), [&](const Tensor::Index& ij) {
      return psi(alg.mul(ea, alg.basis(ij[1]))) * h.S_inv(alg.basis(ij[0]));
    });
    const auto c = sub_coordinates(e, f.coeffs());
    if (!c) throw std::domain_error("F(" + idx(a) + ") = " + f.str() + " is not in K");
    cols.push_back(*c);
  }
  return Matrix::from_columns(cols, pair.sub_basis.size());
}

BetaFrobeniusCertificate extension_frobenius_hom(const SubalgebraPair& pair, const Functional& psi,
                                                 const Element& Lambda) {
  BetaFrobeniusCertificate out;
  const QuasiHopfAlgebra h(pair.ambient);
  const QuasiHopfAlgebra k(pair.sub_presentation);
  const Algebra& ha = h.alg();
  const Algebra& ka = k.alg();
  const std::size_t n = h.dim();
  const std::size_t m = ka.dim();
  const Matrix e = pair.embedding();

  out.F = extension_frobenius_matrix(pair, psi, Lambda);
  auto F = [&](const Element& a) { return Element(out.F.apply(a.coeffs())); };

  const auto lambda_k = sub_coordinates(e, Lambda.coeffs());
  if (!lambda_k) throw std::invalid_argument("Lambda is not in K");
  const LinMap rho_H = psi_nakayama(h, integral_data(h).mu);
  const LinMap rho_K = psi_nakayama(k, modular_augmentation(k, Element(*lambda_k)));

  auto& stable = out.checks.law("extension.nakayama-stable");
  for (std::size_t i = 0; i < m; ++i) {
    const Vector img = rho_H.apply(pair.sub_basis[i].coeffs());
    stable.expect(sub_coordinates(e, img).has_value(), "k" + std::to_string(i), Element(img).str() + " escapes K");
  }
  if (!stable.passed()) return out;
  out.beta_rel = relative_nakayama(pair, rho_H, rho_K);
  out.checks.law("extension.beta-automorphism")
      .expect(is_algebra_automorphism(ka, out.beta_rel), "beta_rel", "not an algebra automorphism");

  auto& right = out.checks.law("extension.right-linear");
  auto& twisted = out.checks.law("extension.twisted-bimodule");
  for (std::size_t a = 0; a < n; ++a) {
    const Element ea = ha.basis(a);
    const Element fa = F(ea);
    for (std::size_t j = 0; j < m; ++j) {
      const Element kj = ka.basis(j);
      right.expect_equal(F(ha.mul(ea, pair.sub_basis[j])), ka.mul(fa, kj),
                         "(" + idx(a) + ",k" + std::to_string(j) + ")");
      for (std::size_t i = 0; i < m; ++i) {
        const Element bk(out.beta_rel.apply(ka.basis(i).coeffs()));
        twisted.expect_equal(F(ha.mul({pair.sub_basis[i], ea, pair.sub_basis[j]})), ka.mul({bk, fa, kj}),
                             "(k" + std::to_string(i) + "," + idx(a) + ",k" + std::to_string(j) + ")");
      }
    }
  }

  const auto basis = right_module_basis(pair);
  out.checks.law("extension.free").expect(basis.has_value(), "H_K", "greedy elimination found no K-basis");
  if (!basis) return out;
  out.module_basis = *basis;

  const std::size_t r = basis->size();
  Matrix sys(0, n);
  for (const auto& b : *basis) sys = sys.vstack(out.F * ha.right_mult(b));
  auto& solvable = out.checks.law("extension.dual-bases-solvable");
  for (std::size_t j = 0; j < r; ++j) {
    Vector rhs = zero_vector(r * m);
    const Element one = ka.one();
    for (std::size_t q = 0; q < m; ++q) rhs[j * m + q] = one[q];
    const auto y = solve_linear(sys, rhs);
    if (!solvable.expect(y.has_value(), "y" + std::to_string(j), "no solution")) return out;
    out.x.push_back((*basis)[j]);
    out.y.emplace_back(*y);
  }
  auto& dual = out.checks.law("extension.dual-bases");
  for (std::size_t a = 0; a < n; ++a) {
    const Element ea = ha.basis(a);
    Element s(n);
    for (std::size_t j = 0; j < r; ++j) s += ha.mul(out.x[j], embed(e, F(ha.mul(out.y[j], ea)).coeffs()));
    dual.expect_equal(s, ea, idx(a));
  }
  return out;
}

BetaFrobeniusCertificate beta_frobenius_certificate(const SubalgebraPair& pair) {
  const QuasiHopfAlgebra h(pair.ambient);
  const QuasiHopfAlgebra k(pair.sub_presentation);
  const Functional psi = integral_data(h).lambda.compose(h.antipode());
  const Element lambda_k = integral_generator(integral_space(k, Side::Left));
  return extension_frobenius_hom(pair, psi, embed(pair.embedding(), lambda_k.coeffs()));
}

SubalgebraPair restricted_pair(const QuasiHopfPresentation& ambient, std::vector<Element> sub_basis) {
  const QuasiHopfAlgebra h(ambient);
  const Algebra& alg = h.alg();
  const std::size_t m = sub_basis.size();
  SubalgebraPair pair;
  pair.ambient = ambient;
  pair.sub_basis = std::move(sub_basis);
  const Matrix e = pair.embedding();

  QuasiHopfPresentation k = empty_presentation(m, ambient.field());
  for (std::size_t i = 0; i < m; ++i) {
    const Element& v = pair.sub_basis[i];
    std::string lab = "k" + std::to_string(i);
    for (std::size_t a = 0; a < h.dim(); ++a) {
      if (v == alg.basis(a)) lab = detail::label(ambient.qb.algebra, a);
    }
    k.qb.algebra.labels.push_back(lab);
    for (std::size_t j = 0; j < m; ++j) {
      if (auto c = sub_coordinates(e, alg.mul(v, pair.sub_basis[j]).coeffs())) {
        for (std::size_t q = 0; q < m; ++q) k.qb.algebra.mult.at({i, j, q}) = (*c)[q];
      }
    }
    if (auto d = sub_tensor(e, h.delta(v))) {
      for (std::size_t q = 0; q < m * m; ++q) k.qb.delta(q, i) = (*d)[q];
    }
    k.qb.counit[i] = h.eps(v);
    if (auto s = sub_coordinates(e, h.S(v).coeffs())) {
      for (std::size_t q = 0; q < m; ++q) k.antipode(q, i) = (*s)[q];
    }
  }
  if (auto u = sub_coordinates(e, alg.one().coeffs())) k.qb.algebra.unit = Element(*u);
  const Element one = k.qb.algebra.unit;
  auto element_or_one = [&](const Element& x) {
    const auto c = sub_coordinates(e, x.coeffs());
    return c ? Element(*c) : one;
  };
  k.alpha = element_or_one(ambient.alpha);
  k.beta = element_or_one(ambient.beta);
  const Tensor one3 = outer({one, one, one});
  const auto phi = sub_tensor(e, ambient.qb.phi);
  const auto phi_inv = sub_tensor(e, ambient.qb.phi_inv);
  k.qb.phi = phi && phi_inv ? *phi : one3;
  k.qb.phi_inv = phi && phi_inv ? *phi_inv : one3;
  k.name = ambient.name + " subalgebra of dimension " + std::to_string(m);
  pair.sub_presentation = std::move(k);
  return pair;
}

SubalgebraPair subgroup_pair(const GroupTable& g, const std::vector<std::size_t>& elements, const FieldSpec& field) {
  SubalgebraPair pair;
  pair.ambient = build_group_algebra(g, field);
  pair.sub_presentation = build_group_algebra(subgroup_table(g, elements), field);
  for (std::size_t a : elements) pair.sub_basis.push_back(Element::basis(g.order(), a));
  return pair;
}

SubalgebraPair whole_pair(const QuasiHopfPresentation& h) {
  SubalgebraPair pair;
  pair.ambient = h;
  pair.sub_presentation = h;
  for (std::size_t a = 0; a < h.dim(); ++a) pair.sub_basis.push_back(Element::basis(h.dim(), a));
  return pair;
}

SubalgebraPair scalar_pair(const QuasiHopfPresentation& h) {
  SubalgebraPair pair;
  pair.ambient = h;
  pair.sub_presentation = build_group_algebra(cyclic_group(1), h.field());
  pair.sub_basis.push_back(QuasiHopfAlgebra(h).alg().one());
  return pair;
}

}  // namespace qhopf
