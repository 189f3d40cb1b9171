#pragma once

#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/axioms.hpp"
#include "qhopf/verification.hpp"

namespace qhopf {

enum class Side { Left, Right };

struct IntegralSpace {
  Side side = Side::Left;
  std::vector<Element> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Kernel of {a t - eps(a) t} (left) or {t a - eps(a) t} (right) over the basis a.
IntegralSpace integral_space(const QuasiHopfAlgebra& h, Side side);

/// The spanning integral scaled so its first nonzero coordinate is 1. Throws
/// InconsistentPresentation unless the space is one-dimensional.
Element integral_generator(const IntegralSpace& space);

bool is_left_integral(const QuasiHopfAlgebra& h, const Element& t);
bool is_right_integral(const QuasiHopfAlgebra& h, const Element& t);

/// P(x) = sum_i f^i(beta S^2(q^2_R a_i(2)) x) q^1_R a_i(1) over the standard
/// basis a_i and coordinate functionals f^i.
Element projection_P(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& x);
Element projection_P(const QuasiHopfAlgebra& h, const Element& x);
/// Matrix of P on coefficient vectors.
LinMap projection_matrix(const QuasiHopfAlgebra& h, const QPElements& qp);

/// sum_j f^j(S(P(a_j) beta)); equals 1 whenever eps(beta) = 1.
Scalar integral_certificate(const QuasiHopfAlgebra& h, const QPElements& qp);

/// q^1_R x(1) p^1_R (x) q^2_R x(2) p^2_R.
Tensor underline_coproduct(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& x);
Tensor underline_coproduct(const QuasiHopfAlgebra& h, const Element& x);

/// Theta(t (x) f) = f(S(t_(2))) t_(1) with the underlined coproduct of t.
/// Throws std::invalid_argument if t is zero or not a left integral.
Element theta(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t, const Functional& f);

/// Theta^{-1}(x) written in the rank-one form t (x) f.
struct ThetaPreimage {
  Element integral;
  Functional functional;
};

/// lambda with P(x) = lambda(x) t for the given generator t of the left integrals.
Functional frobenius_functional(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t);

/// sum_i P(a_i x) (x) f^i = t (x) (y -> lambda(y x)).
ThetaPreimage theta_inv(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t,
                        const Element& x);

/// Frobenius functional phi with dual bases: sum_i x_i phi(y_i a) = a and
/// sum_i phi(a x_i) y_i = a; eta is the Nakayama automorphism, phi(a b) = phi(b eta(a)).
struct FrobeniusSystem {
  Functional phi;
  std::vector<Element> x;
  std::vector<Element> y;
  LinMap eta;
};

/// lambda = Theta^{-1}(1), x_i = Theta(t (x) f^i), y_i = e_i.
FrobeniusSystem frobenius_system(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t);

/// A system for any nondegenerate functional: x_i = e_i, y_i from the inverse
/// Gram matrix. Throws std::domain_error when psi is degenerate.
FrobeniusSystem frobenius_system_for(const Algebra& alg, const Functional& psi);

/// Gram matrix G(i, j) = phi(e_i e_j).
Matrix gram_matrix(const Algebra& alg, const Functional& phi);

/// eta(a) = sum_i x_i phi(a y_i), computed from phi and the dual bases alone.
LinMap nakayama(const Algebra& alg, const FrobeniusSystem& fs);

/// Both dual-bases equations, the Nakayama law and invertibility of eta.
VerificationReport verify_frobenius_system(const Algebra& alg, const FrobeniusSystem& fs);

/// mu with t a = mu(a) t. Throws InconsistentPresentation if t a is not a
/// multiple of t for some basis a.
Functional modular_augmentation(const QuasiHopfAlgebra& h, const Element& t);

bool is_algebra_character(const Algebra& alg, const Functional& mu);

struct DerivativeResult {
  Element d;
  Element d_inv;
  VerificationReport checks;
};

/// d = sum_i psi(x_i) y_i, so psi = phi(d -). Checks psi = phi(d -), the
/// transport sum_j u_j (x) d v_j = sum_i x_i (x) y_i against psi's own
/// system (u, v), and eta^{-1} rho = Ad_d. Throws std::domain_error if d is
/// not invertible.
DerivativeResult derivative(const Algebra& alg, const FrobeniusSystem& fs_old, const Functional& psi_new);

/// (phi, x, y, eta) -> (phi o S^-1, S(y), S(x), S eta^-1 S^-1) for an
/// anti-automorphism S. Throws std::domain_error if S is singular.
FrobeniusSystem antipode_transform(const FrobeniusSystem& fs, const LinMap& S);

/// Left/right multiplication by u composed: x -> u x u^{-1}.
LinMap ad(const Algebra& alg, const Element& u);

/// Everything computed from the left integrals of one algebra.
struct IntegralData {
  QPElements qp;
  IntegralSpace left;
  IntegralSpace right;
  Element t;  // left integral generator
  Element r;  // right integral generator
  Functional lambda;
  FrobeniusSystem fs;
  Functional mu;
};

IntegralData integral_data(const QuasiHopfAlgebra& h);

}  // namespace qhopf
