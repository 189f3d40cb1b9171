#include "qhopf/examples.hpp"

namespace qhopf {

namespace {

Element vec(std::initializer_list<long> c) {
  Vector v;
  for (long x : c) v.emplace_back(x);
  return Element(v);
}

Element unit_minus(std::size_t n, std::size_t g) {
  Element e = Element::basis(n, 0);
  e[g] -= Scalar{1};
  return e;
}

}  // namespace

QuasiHopfPresentation example_group_c2(const FieldSpec& field) {
  auto p = build_group_algebra(cyclic_group(2), field);
  p.name = "group algebra of C2";
  return p;
}

QuasiHopfPresentation example_group_s3(const FieldSpec& field) {
  auto p = build_group_algebra(symmetric_group(3), field);
  p.name = "group algebra of S3";
  return p;
}

QuasiHopfPresentation example_sweedler(const FieldSpec& field) {
  auto p = build_sweedler(field);
  p.name = "Sweedler algebra";
  return p;
}

QuasiHopfPresentation example_dual_z2_twisted(const FieldSpec& field) {
  auto p = build_dual_group_algebra_twisted(cyclic_group(2), z2_sign_cocycle(), field);
  p.name = "dual of Z2 with the sign cocycle";
  return p;
}

QuasiHopfPresentation example_sweedler_conjugated(const FieldSpec& field) {
  auto p = example_sweedler(field);
  const Algebra alg(p.qb.algebra);
  const Element u = vec({1, 0, 1, 0});
  p.antipode = alg.conjugation(u) * p.antipode;
  p.alpha = alg.mul(u, p.alpha);
  p.beta = alg.mul(p.beta, *alg.inverse(u));
  p.name = "Sweedler algebra with conjugated antipode";
  return p;
}

std::vector<QuasiHopfPresentation> standard_examples() {
  return {example_group_c2(), example_group_s3(), example_sweedler(), example_dual_z2_twisted()};
}

QuasiHopfPresentation twist_by(const QuasiHopfPresentation& p, const Scalar& c, const Element& a, const Element& b) {
  const Algebra alg(p.qb.algebra);
  auto out = gauge_twist(p, alg.one_tensor(2) + c * outer(a, b));
  out.name = p.name + " twisted by 1 + " + c.str() + " " + a.str() + " (x) " + b.str();
  return out;
}

std::vector<QuasiHopfPresentation> twisted_variants() {
  const auto c2 = example_group_c2();
  const auto tz = example_dual_z2_twisted();
  const auto sw = example_sweedler();
  const auto s3 = example_group_s3();
  const Element n2 = vec({1, -1});
  const Element e1 = vec({0, 1});
  const Element x = vec({0, 0, 1, 0});
  const Element ng = unit_minus(4, 1);
  // (23) and the 3-cycle in the lexicographic order of S3
  const Element ns = unit_minus(6, 1);
  const Element nr = unit_minus(6, 3);
  const Scalar third = Scalar::rational(mpq_class(1, 3));
  const Scalar half = Scalar::rational(mpq_class(1, 2));
  return {
      twist_by(c2, Scalar{1}, n2, n2), twist_by(c2, Scalar{2}, n2, n2), twist_by(c2, third, n2, n2),
      twist_by(tz, Scalar{1}, e1, e1), twist_by(tz, Scalar{2}, e1, e1), twist_by(sw, Scalar{1}, x, x),
      twist_by(sw, half, x, x),        twist_by(sw, Scalar{1}, ng, ng), twist_by(s3, Scalar{1}, ns, ns),
      twist_by(s3, Scalar{1}, ns, nr),
  };
}

SubalgebraPair pair_c3_in_s3(const FieldSpec& field) {
  const auto g = symmetric_group(3);
  std::vector<std::size_t> c3{g.identity()};
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a != g.identity() && g.mul[a][a] != g.identity()) c3.push_back(a);
  }
  auto pair = subgroup_pair(g, c3, field);
  pair.ambient.name = "group algebra of S3";
  pair.sub_presentation.name = "group algebra of C3";
  return pair;
}

SubalgebraPair pair_sweedler_grouplike(const FieldSpec& field) {
  auto pair = restricted_pair(example_sweedler(field), {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
  pair.sub_presentation.name = "group-like part of the Sweedler algebra";
  return pair;
}

std::vector<std::pair<std::string, PresentationFile>> shipped_files() {
  auto single = [](QuasiHopfPresentation p, const std::string& builder) {
    p.provenance = builder;
    PresentationFile f;
    f.presentation = std::move(p);
    return f;
  };
  auto c2_f2 = example_group_c2(FieldSpec::prime(2));
  c2_f2.name = "group algebra of C2 over F2";
  auto c3_f3 = build_group_algebra(cyclic_group(3), FieldSpec::prime(3));
  c3_f3.name = "group algebra of C3 over F3";
  auto twisted = twisted_variants()[8];
  twisted.name = "group algebra of S3 twisted by 1 + (1 - s) (x) (1 - s)";

  auto c3s3 = pair_c3_in_s3();
  c3s3.ambient.provenance = "example_group_s3";
  c3s3.sub_presentation.provenance = "subgroup_pair";
  auto sw = pair_sweedler_grouplike();
  sw.ambient.provenance = "example_sweedler";
  sw.sub_presentation.provenance = "restricted_pair";
  PresentationFile k_only;
  k_only.presentation = c3s3.sub_presentation;
  k_only.embedding = c3s3.sub_basis;

  return {
      {"group_c2", single(example_group_c2(), "example_group_c2")},
      {"group_s3", single(example_group_s3(), "example_group_s3")},
      {"sweedler", single(example_sweedler(), "example_sweedler")},
      {"dual_z2_twisted", single(example_dual_z2_twisted(), "example_dual_z2_twisted")},
      {"sweedler_conjugated", single(example_sweedler_conjugated(), "example_sweedler_conjugated")},
      {"group_c2_f2", single(c2_f2, "build_group_algebra")},
      {"group_c3_f3", single(c3_f3, "build_group_algebra")},
      {"group_s3_twisted", single(twisted, "gauge_twist")},
      {"pair_c3_s3", file_for_pair(c3s3)},
      {"pair_sweedler_grouplike", file_for_pair(sw)},
      {"subalgebra_c3", k_only},
  };
}

}  // namespace qhopf
