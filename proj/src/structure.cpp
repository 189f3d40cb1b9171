#include "qhopf/structure.hpp"

#include <stdexcept>

#include "sums.hpp"

namespace qhopf {

namespace {

Tensor dual_tensor(const FrobeniusSystem& fs, bool swapped) {
  Tensor t(fs.phi.dim(), 2);
  for (std::size_t i = 0; i < fs.x.size(); ++i) {
    t += swapped ? outer(fs.y[i], fs.x[i]) : outer(fs.x[i], fs.y[i]);
  }
  return t;
}

Element multiply_legs(const Algebra& alg, const Tensor& t) {
  return tensor_contract(alg, t, {KeepLeg{}, KeepLeg{}}, {{0, 1}}).to_element();
}

std::string idx(std::size_t i) { return "e" + std::to_string(i); }

SeparabilityCertificate certify(const QuasiHopfAlgebra& h, Tensor e, SeparabilityVariant v,
                                const Element& integral) {
  SeparabilityCertificate c;
  c.checks = verify_separability_element(h.alg(), e);
  c.element = std::move(e);
  c.variant = v;
  c.normalized_integral = integral;
  return c;
}

Tensor e12(const QuasiHopfAlgebra& h, const Element& r, const Tensor& p) {
  const Tensor m = h.alg().mul(h.delta(r), p);
  return h.map_leg(h.map_leg(m, 0, h.antipode()), 1, h.alg().left_mult(h.alpha()));
}

Tensor e34(const QuasiHopfAlgebra& h, const Element& t, const Tensor& q) {
  const Tensor m = h.alg().mul(q, h.delta(t));
  return h.map_leg(h.map_leg(m, 0, h.alg().right_mult(h.beta())), 1, h.antipode());
}

LinMap power(const LinMap& m, int k) {
  LinMap out = LinMap::identity(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace

std::optional<Element> normalized_integral(const QuasiHopfAlgebra& h, Side side) {
  const Element t = integral_generator(integral_space(h, side));
  const Scalar e = h.eps(t);
  if (e.is_zero()) return std::nullopt;
  return (Scalar{1} / e) * t;
}

std::string to_string(SeparabilityVariant v) {
  switch (v) {
    case SeparabilityVariant::E1: return "e1";
    case SeparabilityVariant::E2: return "e2";
    case SeparabilityVariant::E3: return "e3";
    case SeparabilityVariant::E4: return "e4";
    case SeparabilityVariant::Custom: return "custom";
  }
  return "custom";
}

VerificationReport verify_separability_element(const Algebra& alg, const Tensor& e) {
  VerificationReport rep;
  rep.law("separability.unit").expect_equal(multiply_legs(alg, e), alg.one(), "e^1 e^2");
  auto& casimir = rep.law("separability.casimir");
  const Element one = alg.one();
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    const Element x = alg.basis(a);
    casimir.expect_equal(alg.mul(outer(x, one), e), alg.mul(e, outer(one, x)), "a=" + idx(a));
  }
  return rep;
}

SeparabilityElements separability_elements(const QuasiHopfAlgebra& h, const QPElements& qp,
                                           const std::optional<Element>& t,
                                           const std::optional<Element>& r) {
  SeparabilityElements out;
  if (r) {
    out.certificates.push_back(certify(h, e12(h, *r, qp.p_L), SeparabilityVariant::E1, *r));
    out.certificates.push_back(certify(h, e12(h, *r, qp.p_R), SeparabilityVariant::E2, *r));
  }
  if (t) {
    out.certificates.push_back(certify(h, e34(h, *t, qp.q_L), SeparabilityVariant::E3, *t));
    out.certificates.push_back(certify(h, e34(h, *t, qp.q_R), SeparabilityVariant::E4, *t));
  }
  if (!t && !r) out.diagnostic = "no normalized left or right integral";
  return out;
}

SeparabilityElements separability_elements(const QuasiHopfAlgebra& h) {
  return separability_elements(h, qp_elements(h), normalized_integral(h, Side::Left),
                               normalized_integral(h, Side::Right));
}

Element integral_from_separability(const QuasiHopfAlgebra& h, const Tensor& e) {
  return h.eps_leg(e, 1).to_element();
}

std::optional<Element> counit_splitting(const QuasiHopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix m(0, n);
  for (std::size_t a = 0; a < n; ++a) {
    Matrix block = h.alg().left_mult(h.alg().basis(a));
    const Scalar e = h.eps(h.alg().basis(a));
    for (std::size_t i = 0; i < n; ++i) block(i, i) -= e;
    m = m.vstack(block);
  }
  m = m.vstack(Matrix::from_rows({h.counit().coeffs()}, n));
  Vector rhs = zero_vector(m.rows());
  rhs.back() = h.field().one();
  const auto s = solve_linear(m, rhs);
  if (!s) return std::nullopt;
  return Element(*s);
}

bool is_unimodular(const QuasiHopfAlgebra& h) {
  const auto left = integral_space(h, Side::Left);
  const auto right = integral_space(h, Side::Right);
  if (left.dim() != right.dim()) return false;
  std::vector<Vector> rows;
  for (const auto& v : left.basis) rows.push_back(v.coeffs());
  for (const auto& v : right.basis) rows.push_back(v.coeffs());
  return rank(Matrix::from_rows(rows, h.dim())) == left.dim();
}

StrongSeparability strong_separability_check(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs) {
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  StrongSeparability out;
  out.u = Element(n);
  for (std::size_t i = 0; i < fs.x.size(); ++i) out.u += alg.mul(fs.y[i], fs.x[i]);
  out.strongly_separable = alg.inverse(out.u).has_value();
  out.hypotheses = alg.mul(h.beta(), h.S(h.alpha())) == alg.one() &&
                   h.antipode() * h.antipode() == LinMap::identity(n);
  out.separable = normalized_integral(h, Side::Left).has_value() ||
                  normalized_integral(h, Side::Right).has_value();
  if (!out.hypotheses || !out.separable) return out;

  out.checks.law("strong.u-is-one").expect_equal(out.u, alg.one(), "sum y_i x_i");
  out.checks.law("strong.nakayama-identity").expect_equal(fs.eta, LinMap::identity(n), "eta");
  auto& trace = out.checks.law("strong.trace");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      trace.expect_equal(fs.phi(alg.mul(alg.basis(a), alg.basis(b))),
                         fs.phi(alg.mul(alg.basis(b), alg.basis(a))), "(" + idx(a) + "," + idx(b) + ")");
    }
  }
  out.checks.law("strong.symmetric-tensor")
      .expect_equal(dual_tensor(fs, false), dual_tensor(fs, true), "sum x_i (x) y_i");
  return out;
}

std::optional<FrobeniusSystem> haar_frobenius_system(const QuasiHopfAlgebra& h, const QPElements& qp) {
  const auto t = normalized_integral(h, Side::Left);
  if (!t) return std::nullopt;
  return frobenius_system(h, qp, *t);
}

VerificationReport integral_qp_lemmas(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t,
                                      const Element& r) {
  const Algebra& alg = h.alg();
  VerificationReport rep;
  const Tensor dt = h.delta(t);
  const Tensor dr = h.delta(r);
  const Tensor qdt = alg.mul(qp.q_R, dt);
  const Tensor drp = alg.mul(dr, qp.p_R);

  const Tensor l1 = h.map_leg(qdt, 1, alg.left_mult(h.S_inv(h.beta())));
  rep.law("integral.left-q").expect_equal(l1, dt, "t");
  const Tensor l2 = h.map_leg(drp, 1, alg.right_mult(h.alpha()));
  rep.law("integral.right-p").expect_equal(l2, dr, "r");
  const Tensor l3 = h.map_leg(h.map_leg(qdt, 0, alg.left_mult(h.beta())), 1, h.antipode());
  rep.law("integral.left-q-beta").expect_equal(l3, h.map_leg(dt, 1, h.antipode()), "t");
  const Tensor l4 = h.map_leg(drp, 0, alg.right_mult(h.S_inv(h.alpha())));
  rep.law("integral.right-p-alpha").expect_equal(l4, dr, "r");
  return rep;
}

RadfordReport pre_radford_check(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs) {
  const LinMap& S = h.antipode();
  const LinMap& S_inv = h.antipode_inverse_or_throw();
  const FrobeniusSystem transformed = antipode_transform(fs, S);
  const auto d = derivative(h.alg(), fs, transformed.phi);
  RadfordReport out;
  out.d_or_u = d.d;
  out.lhs = S * fs.eta * S_inv * fs.eta;
  out.rhs = ad(h.alg(), d.d_inv);
  out.holds = out.lhs == out.rhs;
  out.checks.merge(d.checks);
  out.checks.law("pre-radford").expect_equal(out.lhs, out.rhs, "S eta S^-1 eta");
  return out;
}

Comodulus comodulus(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs) {
  Comodulus c;
  c.psi_system = antipode_transform(fs, h.antipode_inverse_or_throw());
  const auto d = derivative(h.alg(), c.psi_system, fs.phi);
  c.u = d.d;
  c.u_inv = d.d_inv;
  return c;
}

LinMap right_hit(const QuasiHopfAlgebra& h, const Functional& mu) {
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    cols.push_back(tensor_contract(h.alg(), h.delta(h.alg().basis(a)), {mu, KeepLeg{}}, {{1}})
                       .to_element()
                       .coeffs());
  }
  return Matrix::from_columns(cols, h.dim());
}

LinMap left_hit(const QuasiHopfAlgebra& h, const Functional& mu) {
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    cols.push_back(tensor_contract(h.alg(), h.delta(h.alg().basis(a)), {KeepLeg{}, mu}, {{0}})
                       .to_element()
                       .coeffs());
  }
  return Matrix::from_columns(cols, h.dim());
}

RadfordReport hn_fourth_power_check(const QuasiHopfAlgebra& h, const IntegralData& data) {
  const Algebra& alg = h.alg();
  const LinMap& S = h.antipode();
  const Comodulus c = comodulus(h, data.fs);
  const LinMap hit = right_hit(h, data.mu);
  const LinMap S_mu = hit * S;

  RadfordReport out;
  out.d_or_u = c.u;
  out.lhs = S * S * S_mu * S_mu;
  out.rhs = ad(alg, c.u_inv);
  out.holds = out.lhs == out.rhs;

  out.checks.law("psi.functional")
      .expect_equal(c.psi_system.phi, data.lambda.compose(S), "psi = lambda o S");
  out.checks.law("psi.nakayama").expect_equal(c.psi_system.eta, S * S_mu, "rho = S S_mu");
  const auto eta_inv = inverse(data.fs.eta);
  out.checks.law("nakayama.inverse")
      .expect(eta_inv.has_value() && *eta_inv == S * S * hit, "eta^-1", "eta^-1 != S^2(- <- mu)");

  const QPElements& qp = data.qp;
  const Tensor ul = underline_coproduct(h, qp, data.t);
  const Tensor swapped = h.map_leg(ul.permute({1, 0}), 1, h.antipode_inverse_or_throw());
  Tensor psi_dual(h.dim(), 2);
  for (std::size_t i = 0; i < c.psi_system.x.size(); ++i) {
    psi_dual += outer(c.psi_system.x[i], c.psi_system.y[i]);
  }
  out.checks.law("psi.dual-bases").expect_equal(psi_dual, swapped, "t_(2) (x) S^-1(t_(1))");
  out.checks.law("hausser-nill").expect_equal(out.lhs, out.rhs, "S^2 S_mu^2");
  return out;
}

LinMap cointegral_matrix(const QuasiHopfAlgebra& h, const QPElements& qp) {
  // coefficient vector of f o M is M^T f
  const LinMap m = h.antipode_inverse_or_throw() * projection_matrix(h, qp) * h.antipode();
  return m.transpose();
}

Functional cointegral_projection_E(const QuasiHopfAlgebra& h, const QPElements& qp, const Functional& f) {
  return f.compose(h.antipode_inverse_or_throw() * projection_matrix(h, qp) * h.antipode());
}

bool is_hopf(const QuasiHopfAlgebra& h) {
  return h.phi() == h.alg().one_tensor(3) && h.alpha() == h.alg().one() && h.beta() == h.alg().one();
}

RadfordReport hopf_radford_check(const QuasiHopfAlgebra& h) {
  if (!is_hopf(h)) throw std::invalid_argument("hopf_radford_check: input is not a Hopf algebra");
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  RadfordReport out;

  const Element t = integral_generator(integral_space(h, Side::Right));
  // m with a t = m(a) t
  Functional m(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element at = alg.mul(alg.basis(a), t);
    std::size_t k = 0;
    while (t[k].is_zero()) ++k;
    m[a] = at[k] / t[k];
    out.checks.law("radford.modular").expect_equal(at, m[a] * t, "a=" + idx(a));
  }

  // f(x_(1)) x_(2) = f(x) 1: for each basis x and output coordinate k
  Matrix sys(0, n);
  for (std::size_t x = 0; x < n; ++x) {
    const Tensor dx = h.delta(alg.basis(x));
    Matrix block(n, n);
    dx.for_each_nonzero([&](const Tensor::Index& ij, const Scalar& c) { block(ij[1], ij[0]) += c; });
    for (std::size_t k = 0; k < n; ++k) block(k, x) -= alg.one()[k];
    sys = sys.vstack(block);
  }
  const auto ker = kernel_basis(sys);
  if (ker.size() != 1) {
    throw InconsistentPresentation("right integral functionals span dimension " + std::to_string(ker.size()));
  }
  Functional f(ker[0]);
  f *= Scalar{1} / f(t);

  // x_(1) f(x_(2)) = f(x) b
  std::size_t pivot = 0;
  while (f[pivot].is_zero()) ++pivot;
  auto left_f = [&](std::size_t x) {
    return tensor_contract(alg, h.delta(alg.basis(x)), {KeepLeg{}, f}, {{0}}).to_element();
  };
  const Element b = (Scalar{1} / f[pivot]) * left_f(pivot);
  auto& eig = out.checks.law("radford.grouplike-eigen");
  for (std::size_t x = 0; x < n; ++x) eig.expect_equal(left_f(x), f[x] * b, "x=" + idx(x));
  out.checks.law("radford.grouplike").expect_equal(h.delta(b), outer(b, b), "Delta(b)");
  const auto b_inv = alg.inverse(b);
  if (!b_inv) throw InconsistentPresentation("distinguished group-like is not invertible");

  // m^-1 = m o S; x -> m(x_(1)) x_(2) m(S(x_(3)))
  const Functional m_inv = m.compose(h.antipode());
  std::vector<Vector> cols;
  for (std::size_t x = 0; x < n; ++x) {
    const Tensor d3 = h.delta_left_iterated(alg.basis(x));
    cols.push_back(tensor_contract(alg, d3, {m, KeepLeg{}, m_inv}, {{1}}).to_element().coeffs());
  }
  const LinMap hits = Matrix::from_columns(cols, n);

  out.d_or_u = b;
  out.lhs = power(h.antipode(), 4);
  out.rhs = ad(alg, b) * hits;
  out.holds = out.lhs == out.rhs;
  out.checks.law("radford").expect_equal(out.lhs, out.rhs, "S^4");
  return out;
}

}  // namespace qhopf
