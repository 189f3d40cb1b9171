#include "qhopf/builders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qhopf/axioms.hpp"
#include "sums.hpp"

namespace qhopf {

void GroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (auto v : row) {
      if (v >= n) throw std::invalid_argument("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          throw std::invalid_argument("group table is not associative at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  const std::size_t e = identity();
  for (std::size_t g = 0; g < n; ++g) {
    if (mul[g][inverse(g)] != e) throw std::invalid_argument("element has no inverse");
  }
  if (!labels.empty() && labels.size() != n) throw std::invalid_argument("wrong number of labels");
}

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
    if (ok) return e;
  }
  throw std::invalid_argument("group table has no identity");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h) {
    if (mul[g][h] == e && mul[h][g] == e) return h;
  }
  throw std::invalid_argument("element has no inverse");
}

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  GroupTable g;
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return g;
}

namespace {

std::string cycle_label(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupTable symmetric_group(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  GroupTable g;
  const std::size_t n = perms.size();
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.labels.push_back(cycle_label(perms[a]));
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(k);
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      g.mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<std::size_t>& elements) {
  GroupTable s;
  const std::size_t m = elements.size();
  s.mul.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    if (!g.labels.empty()) s.labels.push_back(g.labels.at(elements[a]));
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t prod = g.mul.at(elements[a]).at(elements[b]);
      auto it = std::find(elements.begin(), elements.end(), prod);
      if (it == elements.end()) throw std::invalid_argument("subset is not closed under multiplication");
      s.mul[a][b] = static_cast<std::size_t>(it - elements.begin());
    }
  }
  s.validate();
  return s;
}

QuasiHopfPresentation empty_presentation(std::size_t n, const FieldSpec& field) {
  QuasiHopfPresentation p;
  p.qb.algebra.field = field;
  p.qb.algebra.dim = n;
  p.qb.algebra.mult = Tensor(n, 3);
  p.qb.algebra.unit = Element(n);
  p.qb.delta = Matrix(n * n, n);
  p.qb.counit = Functional(n);
  p.qb.phi = Tensor(n, 3);
  p.qb.phi_inv = Tensor(n, 3);
  p.antipode = Matrix(n, n);
  p.alpha = Element(n);
  p.beta = Element(n);
  return p;
}

namespace {

void require_valid(const QuasiHopfPresentation& p, const std::string& what) {
  const QuasiHopfAlgebra h(p);
  const auto rep = verify_all(h);
  if (!rep.ok()) throw InconsistentPresentation(what + " failed verification:\n" + rep.summary());
}

}  // namespace

QuasiHopfPresentation build_group_algebra(const GroupTable& g, const FieldSpec& field) {
  g.validate();
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  const Scalar one = field.one();
  QuasiHopfPresentation p = empty_presentation(n, field);
  p.qb.algebra.labels = g.labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) p.qb.algebra.mult.at({a, b, g.mul[a][b]}) = one;
    p.qb.delta(a * n + a, a) = one;
    p.qb.counit[a] = one;
    p.antipode(g.inverse(a), a) = one;
  }
  p.qb.algebra.unit[e] = one;
  p.qb.phi.at({e, e, e}) = one;
  p.qb.phi_inv.at({e, e, e}) = one;
  p.alpha[e] = one;
  p.beta[e] = one;
  p.name = "group algebra of order " + std::to_string(n);
  require_valid(p, "group algebra");
  return p;
}

Cocycle z2_sign_cocycle() {
  Cocycle w(8, Scalar{1});
  w[7] = Scalar{-1};
  return w;
}

Cocycle trivial_cocycle(std::size_t order) { return Cocycle(order * order * order, Scalar{1}); }

QuasiHopfPresentation build_dual_group_algebra_twisted(const GroupTable& g, const Cocycle& omega,
                                                       const FieldSpec& field) {
  g.validate();
  const std::size_t n = g.order();
  if (omega.size() != n * n * n) throw std::invalid_argument("cocycle has wrong number of values");
  std::vector<Scalar> w;
  for (const auto& v : omega) {
    Scalar s = v.modulus() == 0 && !field.is_rational() ? field.from_rational(v.value()) : v;
    if (s.is_zero()) throw std::invalid_argument("cocycle value is not a unit");
    w.push_back(s);
  }
  auto W = [&](std::size_t a, std::size_t b, std::size_t c) { return w[(a * n + b) * n + c]; };
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (W(a, e, b) != Scalar{1}) throw std::invalid_argument("cocycle is not normalized");
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar lhs = W(b, c, d) * W(a, g.mul[b][c], d) * W(a, b, c);
          const Scalar rhs = W(a, b, g.mul[c][d]) * W(g.mul[a][b], c, d);
          if (lhs != rhs) throw std::invalid_argument("omega fails the 3-cocycle identity");
        }
      }
    }
  }

  const Scalar one = field.one();
  QuasiHopfPresentation p = empty_presentation(n, field);
  for (std::size_t a = 0; a < n; ++a) {
    p.qb.algebra.labels.push_back("e_" + (g.labels.empty() ? std::to_string(a) : g.labels[a]));
    p.qb.algebra.mult.at({a, a, a}) = one;
    p.qb.algebra.unit[a] = one;
    for (std::size_t b = 0; b < n; ++b) p.qb.delta(a * n + b, g.mul[a][b]) = one;
    p.antipode(g.inverse(a), a) = one;
    p.alpha[a] = one;
    p.beta[a] = W(a, g.inverse(a), a).inverse();
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        p.qb.phi.at({a, b, c}) = W(a, b, c);
        p.qb.phi_inv.at({a, b, c}) = W(a, b, c).inverse();
      }
    }
  }
  p.qb.counit[e] = one;
  p.name = "twisted dual group algebra of order " + std::to_string(n);
  require_valid(p, "twisted dual group algebra");
  return p;
}

QuasiHopfPresentation build_sweedler(const FieldSpec& field) {
  if (field.characteristic() == 2) throw std::invalid_argument("Sweedler algebra needs characteristic != 2");
  constexpr std::size_t n = 4;
  // index = a + 2b for g^a x^b
  QuasiHopfPresentation p = empty_presentation(n, field);
  p.qb.algebra.labels = {"1", "g", "x", "gx"};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
      if (b + d > 1) continue;
      const long sign = (b * c) % 2 == 1 ? -1 : 1;
      p.qb.algebra.mult.at({i, j, (a + c) % 2 + 2 * (b + d)}) = field.from_int(sign);
    }
  }
  p.qb.algebra.unit[0] = field.one();

  const Algebra alg(p.qb.algebra);
  const Tensor dg = outer(alg.basis(1), alg.basis(1));
  const Tensor dx = outer(alg.basis(2), alg.one()) + outer(alg.basis(1), alg.basis(2));
  const Tensor dcol[n] = {alg.one_tensor(2), dg, dx, alg.mul(dg, dx)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t f = 0; f < n * n; ++f) p.qb.delta(f, k) = dcol[k][f];
  }
  p.qb.counit[0] = field.one();
  p.qb.counit[1] = field.one();
  p.qb.phi = alg.one_tensor(3);
  p.qb.phi_inv = alg.one_tensor(3);
  p.antipode(0, 0) = field.one();
  p.antipode(1, 1) = field.one();
  p.antipode(3, 2) = field.from_int(-1);
  p.antipode(2, 3) = field.one();
  p.alpha = alg.one();
  p.beta = alg.one();
  p.name = "Sweedler algebra";
  require_valid(p, "Sweedler algebra");
  return p;
}

Tensor invert_tensor2(const Algebra& alg, const Tensor& t) {
  const std::size_t n = alg.dim();
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Tensor prod = alg.mul(t, outer(alg.basis(a), alg.basis(b)));
      Vector v(n * n);
      for (std::size_t f = 0; f < n * n; ++f) v[f] = prod[f];
      cols.push_back(std::move(v));
    }
  }
  const Tensor one = alg.one_tensor(2);
  Vector rhs(n * n);
  for (std::size_t f = 0; f < n * n; ++f) rhs[f] = one[f];
  const auto x = solve_linear(Matrix::from_columns(cols, n * n), rhs);
  if (!x) throw std::domain_error("tensor is not invertible in H (x) H");
  Tensor inv(n, 2);
  for (std::size_t f = 0; f < n * n; ++f) inv[f] = (*x)[f];
  if (!(alg.mul(inv, t) == one)) throw std::domain_error("tensor has only a one-sided inverse");
  return inv;
}

QuasiHopfPresentation gauge_twist(const QuasiHopfPresentation& p, const Tensor& F) {
  const QuasiHopfAlgebra h(p);
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  if (F.rank() != 2 || F.dim() != n) throw std::invalid_argument("twist must be an element of H (x) H");
  const Tensor one = Tensor::from_element(alg.one());
  if (!(h.eps_leg(F, 0) == one) || !(h.eps_leg(F, 1) == one)) {
    throw std::invalid_argument("twist is not counit-normalized");
  }
  Tensor Finv;
  try {
    Finv = invert_tensor2(alg, F);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("twist: ") + e.what());
  }
  const detail::BasisImages img(h);

  QuasiHopfPresentation out = p;
  for (std::size_t k = 0; k < n; ++k) {
    const Tensor d = alg.mul(alg.mul(F, h.delta(alg.basis(k))), Finv);
    for (std::size_t f = 0; f < n * n; ++f) out.qb.delta(f, k) = d[f];
  }
  const Tensor F23 = h.insert_unit(F, 0);
  const Tensor F12 = h.insert_unit(F, 2);
  const Tensor F23inv = h.insert_unit(Finv, 0);
  const Tensor F12inv = h.insert_unit(Finv, 2);
  out.qb.phi = alg.mul(alg.mul(alg.mul(alg.mul(F23, h.delta_leg(F, 1)), h.phi()), h.delta_leg(Finv, 0)),
                       F12inv);
  out.qb.phi_inv = alg.mul(
      alg.mul(alg.mul(alg.mul(F12, h.delta_leg(F, 0)), h.phi_inv()), h.delta_leg(Finv, 1)), F23inv);
  out.alpha = detail::sum_element(Finv, n, [&](const Tensor::Index& x) {
    return alg.mul({img.S(x[0]), h.alpha(), img.e(x[1])});
  });
  out.beta = detail::sum_element(F, n, [&](const Tensor::Index& x) {
    return alg.mul({img.e(x[0]), h.beta(), img.S(x[1])});
  });
  if (!p.name.empty()) out.name = p.name + " (twisted)";
  require_valid(out, "gauge twist");
  return out;
}

}  // namespace qhopf
