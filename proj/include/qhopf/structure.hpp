#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/frobenius.hpp"

namespace qhopf {

/// t / eps(t) for the generator of the left (or right) integrals, or nullopt
/// when eps(t) is not invertible in the ground field.
std::optional<Element> normalized_integral(const QuasiHopfAlgebra& h, Side side);

enum class SeparabilityVariant { E1, E2, E3, E4, Custom };
std::string to_string(SeparabilityVariant v);

struct SeparabilityCertificate {
  Tensor element;
  SeparabilityVariant variant = SeparabilityVariant::Custom;
  Element normalized_integral;
  VerificationReport checks;

  bool passed() const { return checks.ok(); }
};

/// e^1 e^2 = 1 and a e^1 (x) e^2 = e^1 (x) e^2 a for every basis a.
VerificationReport verify_separability_element(const Algebra& alg, const Tensor& e);

struct SeparabilityElements {
  std::vector<SeparabilityCertificate> certificates;
  std::string diagnostic;
};

/// e_{1,2} = S(r_(1) p^1) (x) alpha r_(2) p^2 with p = p_L, p_R and
/// e_{3,4} = q^1 t_(1) beta (x) S(q^2 t_(2)) with q = q_L, q_R, built from the
/// normalized right integral r and left integral t. Variants whose integral
/// is missing are omitted; with neither, the list is empty and the
/// diagnostic says so.
SeparabilityElements separability_elements(const QuasiHopfAlgebra& h, const QPElements& qp,
                                           const std::optional<Element>& t,
                                           const std::optional<Element>& r);
SeparabilityElements separability_elements(const QuasiHopfAlgebra& h);

/// From a separability element e: t = e^1 eps(e^2), a normalized left integral.
Element integral_from_separability(const QuasiHopfAlgebra& h, const Tensor& e);

/// s with a s = eps(a) s for all a and eps(s) = 1, i.e. an H-linear splitting
/// k -> H of the counit; nullopt when the sequence does not split.
std::optional<Element> counit_splitting(const QuasiHopfAlgebra& h);

/// True iff the left and right integral spaces coincide.
bool is_unimodular(const QuasiHopfAlgebra& h);

struct StrongSeparability {
  Element u;  // sum_i y_i x_i
  bool strongly_separable = false;
  bool hypotheses = false;  // beta S(alpha) = 1 and S^2 = id
  bool separable = false;
  VerificationReport checks;  // identities implied by strong separability, only when hypotheses and separable
};

/// u = sum_i y_i x_i for the given system. Under beta S(alpha) = 1, S^2 = id
/// and separability, also checks u = 1 (meaningful for the Haar-normalized
/// system), eta = id, phi a trace and the dual-bases tensor symmetric.
StrongSeparability strong_separability_check(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs);

/// The Frobenius system of the Haar integral t / eps(t), if it exists.
std::optional<FrobeniusSystem> haar_frobenius_system(const QuasiHopfAlgebra& h, const QPElements& qp);

/// q^1 t_(1) (x) S^-1(beta) q^2 t_(2) = Delta(t), r_(1) p^1 (x) r_(2) p^2 alpha = Delta(r),
/// beta q^1 t_(1) (x) S(q^2 t_(2)) = t_(1) (x) S(t_(2)) and
/// r_(1) p^1 S^-1(alpha) (x) r_(2) p^2 = Delta(r), with q = q_R and p = p_R.
VerificationReport integral_qp_lemmas(const QuasiHopfAlgebra& h, const QPElements& qp, const Element& t,
                                      const Element& r);

struct RadfordReport {
  Element d_or_u;
  LinMap lhs;
  LinMap rhs;
  bool holds = false;
  VerificationReport checks;
};

/// S eta S^-1 eta = Ad_{d^-1}, with d the derivative from phi to phi o S^-1.
RadfordReport pre_radford_check(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs);

struct Comodulus {
  Element u;
  Element u_inv;
  FrobeniusSystem psi_system;  // psi = lambda o S
};

/// u = sum_i lambda(x~_i) y~_i over the dual bases of psi = lambda o S.
Comodulus comodulus(const QuasiHopfAlgebra& h, const FrobeniusSystem& fs);

/// a <- mu = mu(a_(1)) a_(2) as a matrix.
LinMap right_hit(const QuasiHopfAlgebra& h, const Functional& mu);
/// mu -> a = a_(1) mu(a_(2)) as a matrix.
LinMap left_hit(const QuasiHopfAlgebra& h, const Functional& mu);

/// S^2 S_mu^2 = Ad_{u^-1} with S_mu(a) = S(a) <- mu. Also checks that S S_mu is
/// the Nakayama automorphism of psi = lambda o S, that eta^-1(a) = S^2(a <- mu),
/// and that psi's dual-bases tensor is t_(2) (x) S^-1(t_(1)) (underlined).
RadfordReport hn_fourth_power_check(const QuasiHopfAlgebra& h, const IntegralData& data);

/// E(f) = f o S^-1 P S.
Functional cointegral_projection_E(const QuasiHopfAlgebra& h, const QPElements& qp, const Functional& f);
/// Matrix of E acting on coefficient vectors of functionals.
LinMap cointegral_matrix(const QuasiHopfAlgebra& h, const QPElements& qp);

/// S^4(x) = b (m^-1 -> x <- m) b^-1 for a Hopf algebra, with b the distinguished
/// group-like element and m the modular augmentation of a right integral.
/// Throws std::invalid_argument unless Phi is trivial and alpha = beta = 1.
RadfordReport hopf_radford_check(const QuasiHopfAlgebra& h);

bool is_hopf(const QuasiHopfAlgebra& h);

}  // namespace qhopf
