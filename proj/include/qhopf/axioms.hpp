#pragma once

#include "qhopf/algebra.hpp"
#include "qhopf/presentation.hpp"
#include "qhopf/verification.hpp"

namespace qhopf {

/// Associativity and unit laws at every basis index.
VerificationReport verify_algebra(const AlgebraPresentation& a);

/// Delta multiplicative, counit laws, quasi-coassociativity, the 3-cocycle
/// (pentagon) and normalization of Phi, Phi Phi^{-1} = 1 on both sides, and
/// the counit consequences eps(X^1) X^2 (x) X^3 = 1 (x) 1 = X^1 (x) X^2 eps(X^3).
VerificationReport verify_quasi_bialgebra(const QuasiBialgebra& qb);
VerificationReport verify_quasi_bialgebra(const QuasiBialgebraPresentation& qb);

/// S a bijective anti-homomorphism, the four antipode axioms, eps o S = eps,
/// eps(alpha) eps(beta) = 1.
VerificationReport verify_antipode(const QuasiHopfAlgebra& h);

/// alpha' = eps(beta) alpha, beta' = eps(alpha) beta. Throws
/// InconsistentPresentation if eps(alpha) eps(beta) != 1.
QuasiHopfPresentation rescale_alpha_beta(const QuasiHopfPresentation& p);

struct QPElements {
  Tensor q_R;
  Tensor p_R;
  Tensor q_L;
  Tensor p_L;
};

/// q_R = X^1 (x) S^{-1}(alpha X^3) X^2      q_L = S(x^1) alpha x^2 (x) x^3
/// p_R = x^1 (x) x^2 beta S(x^3)            p_L = X^2 S^{-1}(X^1 beta) (x) X^3
QPElements qp_elements(const QuasiHopfAlgebra& h);

/// The four commutation formulas on every basis element and the four
/// normalization equations Delta(q^1_R) p_R (1 (x) S(q^2_R)) = 1 (x) 1 etc.
VerificationReport verify_qp_identities(const QuasiHopfAlgebra& h, const QPElements& qp);

/// verify_algebra + verify_quasi_bialgebra + verify_antipode + qp identities.
VerificationReport verify_all(const QuasiHopfAlgebra& h);

}  // namespace qhopf
