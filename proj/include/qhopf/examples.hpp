#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhopf/extensions.hpp"
#include "qhopf/io.hpp"

namespace qhopf {

QuasiHopfPresentation example_group_c2(const FieldSpec& field = FieldSpec::rationals());
QuasiHopfPresentation example_group_s3(const FieldSpec& field = FieldSpec::rationals());
QuasiHopfPresentation example_sweedler(const FieldSpec& field = FieldSpec::rationals());
/// Q^{Z_2} with the sign cocycle.
QuasiHopfPresentation example_dual_z2_twisted(const FieldSpec& field = FieldSpec::rationals());

/// Sweedler with S replaced by Ad_u S for u = 1 + x, alpha = u, beta = u^-1.
QuasiHopfPresentation example_sweedler_conjugated(const FieldSpec& field = FieldSpec::rationals());

/// Q[C2], Q[S3], Sweedler, twisted Q^{Z_2}.
std::vector<QuasiHopfPresentation> standard_examples();

/// Gauge twist by F = 1 (x) 1 + c a (x) b.
QuasiHopfPresentation twist_by(const QuasiHopfPresentation& p, const Scalar& c, const Element& a, const Element& b);

/// Ten gauge twists of the standard examples, each re-verified by gauge_twist.
std::vector<QuasiHopfPresentation> twisted_variants();

/// k[C3] inside k[S3].
SubalgebraPair pair_c3_in_s3(const FieldSpec& field = FieldSpec::rationals());
/// span{1, g} inside Sweedler.
SubalgebraPair pair_sweedler_grouplike(const FieldSpec& field = FieldSpec::rationals());

/// The files written by qhopf_export, keyed by file stem. "subalgebra_c3" is K
/// alone with an embedding into group_s3, for use with --sub.
std::vector<std::pair<std::string, PresentationFile>> shipped_files();

}  // namespace qhopf
