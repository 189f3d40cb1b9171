#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/builders.hpp"
#include "qhopf/structure.hpp"

namespace qhopf {

/// K inside H: sub_basis holds K's basis vectors in H's coordinates, and
/// sub_presentation is K in its own coordinates with its own associator,
/// alpha and beta.
struct SubalgebraPair {
  QuasiHopfPresentation ambient;
  std::vector<Element> sub_basis;
  QuasiHopfPresentation sub_presentation;

  const Tensor& phi_K() const { return sub_presentation.qb.phi; }
  /// n x m matrix whose columns are the sub_basis vectors.
  Matrix embedding() const;
};

/// K-coordinates of v, or nullopt when v is not in span(sub_basis).
std::optional<Vector> sub_coordinates(const Matrix& embedding, const Vector& v);

/// Closure, unit, Delta- and S-stability (decided by exact solving), agreement of
/// the restricted structure maps with K's own, and K's full verifier under "K.".
VerificationReport verify_subalgebra(const SubalgebraPair& pair);

/// rho_K^-1 o rho_H restricted to K, in K-coordinates. Throws std::domain_error
/// with a witness when rho_H does not map K into K.
LinMap relative_nakayama(const SubalgebraPair& pair, const LinMap& rho_H, const LinMap& rho_K);

/// a -> S(S(a) <- mu): the Nakayama automorphism of psi = lambda o S.
LinMap psi_nakayama(const QuasiHopfAlgebra& h, const Functional& mu);

bool is_algebra_automorphism(const Algebra& alg, const LinMap& m);

/// b_1..b_r with {b_j k_i} a basis of H, chosen greedily from 1 and H's basis.
/// nullopt when the greedy choice does not reach a basis.
std::optional<std::vector<Element>> right_module_basis(const SubalgebraPair& pair);

struct BetaFrobeniusCertificate {
  LinMap F;         // m x n: H -> K in K-coordinates
  LinMap beta_rel;  // m x m
  std::vector<Element> x;  // extension dual bases in H
  std::vector<Element> y;
  std::vector<Element> module_basis;
  VerificationReport checks;

  bool passed() const { return checks.ok(); }
};

/// F(a) = psi(a Lambda_(2)) S^-1(Lambda_(1)) with the underlined coproduct of
/// Lambda taken in H. Lambda is given in H-coordinates. Throws std::domain_error
/// when some F(e_a) is not in K.
LinMap extension_frobenius_matrix(const SubalgebraPair& pair, const Functional& psi, const Element& Lambda);

/// Builds F and the relative Nakayama automorphism, then checks right K-linearity,
/// the twisted bimodule law F(k a k') = beta(k) F(a) k', that beta is an
/// automorphism, freeness of H over K and the extension dual-bases equation.
BetaFrobeniusCertificate extension_frobenius_hom(const SubalgebraPair& pair, const Functional& psi,
                                                 const Element& Lambda);

/// Everything from the presentations: psi = lambda_H o S, Lambda the generator
/// of K's left integrals, rho_H and rho_K from the modular augmentations.
BetaFrobeniusCertificate beta_frobenius_certificate(const SubalgebraPair& pair);

/// K = span(sub_basis) with the restricted multiplication, Delta, eps and S.
/// Phi, alpha and beta are restricted from H when they lie in K and are the
/// units otherwise. Entries that escape K are dropped, so verify_subalgebra
/// reports the failure instead of this function throwing.
SubalgebraPair restricted_pair(const QuasiHopfPresentation& ambient, std::vector<Element> sub_basis);

/// k[G'] inside k[G] for the listed group elements.
SubalgebraPair subgroup_pair(const GroupTable& g, const std::vector<std::size_t>& elements, const FieldSpec& field);

SubalgebraPair whole_pair(const QuasiHopfPresentation& h);
SubalgebraPair scalar_pair(const QuasiHopfPresentation& h);

}  // namespace qhopf
