#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/presentation.hpp"

namespace qhopf {

/// Multiplication table of a finite group: mul[g][h] is the index of gh.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::string> labels;

  std::size_t order() const { return mul.size(); }
  /// Throws std::invalid_argument when the table is not a group.
  void validate() const;
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
/// All permutations of {1..k} in lexicographic order, composed right to left.
GroupTable symmetric_group(std::size_t k);
/// The subgroup on the listed elements, relabelled 0..m-1 in the given order.
GroupTable subgroup_table(const GroupTable& g, const std::vector<std::size_t>& elements);

/// Presentation of dimension n with every structure map zero.
QuasiHopfPresentation empty_presentation(std::size_t n, const FieldSpec& field);

/// k[G] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}, trivial associator.
QuasiHopfPresentation build_group_algebra(const GroupTable& g, const FieldSpec& field);

/// omega(g, h, k) for a 3-cocycle on G, indexed as omega[(g * n + h) * n + k].
using Cocycle = std::vector<Scalar>;

/// omega(a, b, c) = (-1)^{abc} on Z_2.
Cocycle z2_sign_cocycle();
Cocycle trivial_cocycle(std::size_t order);

/// k^G with idempotent basis e_g, Phi = sum omega(g,h,k) e_g (x) e_h (x) e_k,
/// alpha = 1, beta = sum omega(g, g^-1, g)^-1 e_g. Throws std::invalid_argument
/// if omega is not a normalized 3-cocycle with unit values.
QuasiHopfPresentation build_dual_group_algebra_twisted(const GroupTable& g, const Cocycle& omega,
                                                       const FieldSpec& field);

/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
/// Throws std::invalid_argument in characteristic 2.
QuasiHopfPresentation build_sweedler(const FieldSpec& field);

/// Twists Delta by F: Delta_F = F Delta F^{-1}, with the matching associator,
/// alpha and beta. F must be invertible with (eps (x) id)(F) = (id (x) eps)(F) = 1.
/// The result is run through the full axiom verifier; throws
/// InconsistentPresentation if it fails and std::invalid_argument for a bad F.
QuasiHopfPresentation gauge_twist(const QuasiHopfPresentation& h, const Tensor& F);

/// Inverse of an invertible element of H (x) H, or throws std::domain_error.
Tensor invert_tensor2(const Algebra& alg, const Tensor& t);

}  // namespace qhopf
