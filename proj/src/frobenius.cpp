#include "qhopf/frobenius.hpp"

#include <stdexcept>

#include "sums.hpp"

namespace qhopf {

namespace {

Matrix integral_system(const QuasiHopfAlgebra& h, Side side) {
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  Matrix m(0, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element e = alg.basis(a);
    const LinMap mult = side == Side::Left ? alg.left_mult(e) : alg.right_mult(e);
    const Scalar eps = h.eps(e);
    Matrix block = mult;
    for (std::size_t i = 0; i < n; ++i) block(i, i) -= eps;
    m = m.vstack(block);
  }
  return m;
}

/// c with v = c w, where w is nonzero; nullopt if v is not a multiple of w.
std::optional<Scalar> proportion(const Element& v, const Element& w) {
  std::size_t k = 0;
  while (k < w.dim() && w[k].is_zero()) ++k;
  if (k == w.dim()) throw std::invalid_argument("proportion: reference vector is zero");
  const Scalar c = v[k] / w[k];
  if (!(v == c * w)) return std::nullopt;
  return c;
}

Tensor dual_bases_tensor(const FrobeniusSystem& fs) {
  const std::size_t n = fs.phi.dim();
  Tensor t(n, 2);
  for (std::size_t i = 0; i < fs.x.size(); ++i) t += outer(fs.x[i], fs.y[i]);
  return t;
}

}  // namespace

IntegralSpace integral_space(const QuasiHopfAlgebra& h, Side side) {
  IntegralSpace s;
  s.side = side;
  for (auto& v : kernel_basis(integral_system(h, side))) s.basis.emplace_back(std::move(v));
  return s;
}

Element integral_generator(const IntegralSpace& space) {
  if (space.dim() != 1) {
    throw InconsistentPresentation(std::string(space.side == Side::Left ? "left" : "right") +
                                   " integral space has dimension " + std::to_string(space.dim()) +
                                   ", expected 1");
  }
  Element t = space.basis[0];
  std::size_t k = 0;
  while (t[k].is_zero()) ++k;
  return t[k].inverse() * t;
}

bool is_left_integral(const QuasiHopfAlgebra& h, const Element& t) {
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const Element e = h.alg().basis(a);
    if (!(h.alg().mul(e, t) == h.eps(e) * t)) return false;
  }
  return true;
}

bool is_right_integral(const QuasiHopfAlgebra& h, const Element& t) {
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const Element e = h.alg().basis(a);
    if (!(h.alg().mul(t, e) == h.eps(e) * t)) return false;
  }
  return true;
}

Element projection_P(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& x) {
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  const LinMap S2 = h.antipode() * h.antipode();
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor d = h.delta(alg.basis(i));
    const Tensor term = detail::sum_pairs(qp.q_R, d, n, 1, [&](const Tensor::Index& q, const Tensor::Index& a) {
      const Element inner = alg.mul(alg.basis(q[1]), alg.basis(a[1]));
      const Element arg = alg.mul({h.beta(), Element(S2.apply(inner.coeffs())), x});
      return Tensor::from_element(arg[i] * alg.mul(alg.basis(q[0]), alg.basis(a[0])));
    });
    out += term.to_element();
  }
  return out;
}

Element projection_P(const QuasiHopfAlgebra& h, const Element& x) {
  return projection_P(h, qp_elements(h), x);
}

LinMap projection_matrix(const QuasiHopfAlgebra& h, const QPElements& qp) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < h.dim(); ++j) cols.push_back(projection_P(h, qp, h.alg().basis(j)).coeffs());
  return Matrix::from_columns(cols, h.dim());
}

Scalar integral_certificate(const QuasiHopfAlgebra& h, const QPElements& qp) {
  Scalar s{0};
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const Element pj = projection_P(h, qp, h.alg().basis(j));
    s += h.S(h.alg().mul(pj, h.beta()))[j];
  }
  return s;
}

Tensor underline_coproduct(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& x) {
  return h.alg().mul(h.alg().mul(qp.q_R, h.delta(x)), qp.p_R);
}

Tensor underline_coproduct(const QuasiHopfAlgebra& h, const Element& x) {
  return underline_coproduct(h, qp_elements(h), x);
}

Element theta(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t, const Functional& f) {
  if (t.is_zero()) throw std::invalid_argument("theta: integral is zero");
  if (!is_left_integral(h, t)) throw std::invalid_argument("theta: not a left integral");
  const Tensor dt = underline_coproduct(h, qp, t);
  return detail::sum_element(dt, h.dim(), [&](const Tensor::Index& i) {
    return f(h.S(h.alg().basis(i[1]))) * h.alg().basis(i[0]);
  });
}

Functional frobenius_functional(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t) {
  if (t.is_zero() || !is_left_integral(h, t)) throw std::invalid_argument("not a nonzero left integral");
  Functional lambda(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    const auto c = proportion(projection_P(h, qp, h.alg().basis(j)), t);
    if (!c) throw InconsistentPresentation("P(e" + std::to_string(j) + ") is not a multiple of the integral");
    lambda[j] = *c;
  }
  return lambda;
}

ThetaPreimage theta_inv(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t, const Element& x) {
  if (t.is_zero() || !is_left_integral(h, t)) throw std::invalid_argument("theta_inv: not a nonzero left integral");
  ThetaPreimage out{t, Functional(h.dim())};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const auto c = proportion(projection_P(h, qp, h.alg().mul(h.alg().basis(i), x)), t);
    if (!c) throw InconsistentPresentation("P(a x) is not a multiple of the integral");
    out.functional[i] = *c;
  }
  return out;
}

Matrix gram_matrix(const Algebra& alg, const Functional& phi) {
  Matrix g(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Scalar s{0};
      for (const auto& [k, c] : alg.basis_product(i, j)) s += c * phi[k];
      g(i, j) = s;
    }
  }
  return g;
}

LinMap nakayama(const Algebra& alg, const FrobeniusSystem& fs) {
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Element v(alg.dim());
    for (std::size_t i = 0; i < fs.x.size(); ++i) {
      v += fs.phi(alg.mul(alg.basis(a), fs.y[i])) * fs.x[i];
    }
    cols.push_back(v.coeffs());
  }
  return Matrix::from_columns(cols, alg.dim());
}

FrobeniusSystem frobenius_system(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t) {
  FrobeniusSystem fs;
  fs.phi = frobenius_functional(h, qp, t);
  if (fs.phi(t) != Scalar{1}) {
    throw InconsistentPresentation("lambda(t) = " + fs.phi(t).str() + ", expected 1");
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    fs.x.push_back(theta(h, qp, t, Functional::coordinate(h.dim(), i)));
    fs.y.push_back(h.alg().basis(i));
  }
  fs.eta = nakayama(h.alg(), fs);
  return fs;
}

FrobeniusSystem frobenius_system_for(const Algebra& alg, const Functional& psi) {
  const auto inv = inverse(gram_matrix(alg, psi));
  if (!inv) throw std::domain_error("functional is degenerate: Gram matrix is singular");
  FrobeniusSystem fs;
  fs.phi = psi;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    fs.x.push_back(alg.basis(i));
    fs.y.emplace_back(inv->row(i));
  }
  fs.eta = nakayama(alg, fs);
  return fs;
}

VerificationReport verify_frobenius_system(const Algebra& alg, const FrobeniusSystem& fs) {
  VerificationReport rep;
  const std::size_t n = alg.dim();
  auto& first = rep.law("frobenius.first");
  auto& second = rep.law("frobenius.second");
  auto& naka = rep.law("nakayama.law");
  for (std::size_t a = 0; a < n; ++a) {
    const Element e = alg.basis(a);
    Element s1(n), s2(n);
    for (std::size_t i = 0; i < fs.x.size(); ++i) {
      s1 += fs.phi(alg.mul(e, fs.x[i])) * fs.y[i];
      s2 += fs.phi(alg.mul(fs.y[i], e)) * fs.x[i];
    }
    first.expect_equal(s1, e, "e" + std::to_string(a));
    second.expect_equal(s2, e, "e" + std::to_string(a));
    const Element ea(fs.eta.apply(e.coeffs()));
    for (std::size_t b = 0; b < n; ++b) {
      naka.expect_equal(fs.phi(alg.mul(e, alg.basis(b))), fs.phi(alg.mul(alg.basis(b), ea)),
                        "(e" + std::to_string(a) + ",e" + std::to_string(b) + ")");
    }
  }
  rep.law("nakayama.invertible").expect(inverse(fs.eta).has_value(), "eta", "singular");
  rep.law("nakayama.consistent").expect_equal(fs.eta, nakayama(alg, fs), "eta");
  return rep;
}

Functional modular_augmentation(const QuasiHopfAlgebra& h, const Element& t) {
  if (t.is_zero()) throw std::invalid_argument("modular augmentation of the zero integral");
  Functional mu(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const auto c = proportion(h.alg().mul(t, h.alg().basis(a)), t);
    if (!c) throw InconsistentPresentation("t e" + std::to_string(a) + " is not a multiple of t");
    mu[a] = *c;
  }
  return mu;
}

bool is_algebra_character(const Algebra& alg, const Functional& mu) {
  if (mu(alg.one()) != Scalar{1}) return false;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (mu(alg.mul(alg.basis(i), alg.basis(j))) != mu[i] * mu[j]) return false;
    }
  }
  return true;
}

LinMap ad(const Algebra& alg, const Element& u) { return alg.conjugation(u); }

DerivativeResult derivative(const Algebra& alg, const FrobeniusSystem& fs_old, const Functional& psi_new) {
  DerivativeResult out;
  out.d = Element(alg.dim());
  for (std::size_t i = 0; i < fs_old.x.size(); ++i) out.d += psi_new(fs_old.x[i]) * fs_old.y[i];
  const auto inv = alg.inverse(out.d);
  if (!inv) throw std::domain_error("derivative is not invertible: the functional is not a Frobenius homomorphism");
  out.d_inv = *inv;

  out.checks.law("derivative.functional")
      .expect_equal(fs_old.phi.compose(alg.left_mult(out.d)), psi_new, "psi = phi(d -)");
  const FrobeniusSystem fs_new = frobenius_system_for(alg, psi_new);
  FrobeniusSystem moved = fs_new;
  for (auto& v : moved.y) v = alg.mul(out.d, v);
  out.checks.law("derivative.dual-bases")
      .expect_equal(dual_bases_tensor(moved), dual_bases_tensor(fs_old), "sum u (x) d v");
  const auto eta_inv = inverse(fs_old.eta);
  if (!eta_inv) {
    out.checks.law("derivative.nakayama").expect(false, "eta", "singular");
  } else {
    out.checks.law("derivative.nakayama").expect_equal(*eta_inv * fs_new.eta, ad(alg, out.d), "eta^-1 rho");
  }
  return out;
}

FrobeniusSystem antipode_transform(const FrobeniusSystem& fs, const LinMap& S) {
  const auto s_inv = inverse(S);
  if (!s_inv) throw std::domain_error("antipode transform: S is singular");
  const auto eta_inv = inverse(fs.eta);
  if (!eta_inv) throw std::domain_error("antipode transform: Nakayama automorphism is singular");
  FrobeniusSystem out;
  out.phi = fs.phi.compose(*s_inv);
  for (const auto& v : fs.y) out.x.emplace_back(S.apply(v.coeffs()));
  for (const auto& v : fs.x) out.y.emplace_back(S.apply(v.coeffs()));
  out.eta = S * *eta_inv * *s_inv;
  return out;
}

IntegralData integral_data(const QuasiHopfAlgebra& h) {
  IntegralData d;
  d.qp = qp_elements(h);
  d.left = integral_space(h, Side::Left);
  d.right = integral_space(h, Side::Right);
  d.t = integral_generator(d.left);
  d.r = integral_generator(d.right);
  d.fs = frobenius_system(h, d.qp, d.t);
  d.lambda = d.fs.phi;
  d.mu = modular_augmentation(h, d.t);
  return d;
}

}  // namespace qhopf
