#include <doctest.h>

#include "qhopf/axioms.hpp"
#include "support.hpp"

using namespace qhopf;
using qtest::el;
using qtest::Rng;

namespace {

bool law_failed(const VerificationReport& rep, const std::string& law) {
  const auto* l = rep.find(law);
  return l != nullptr && !l->passed();
}

QuasiHopfPresentation with_antipode(QuasiHopfPresentation p, const LinMap& s) {
  p.antipode = s;
  return p;
}

}  // namespace

TEST_CASE("verify_algebra") {
  const auto c2 = qtest::c2();
  CHECK(verify_algebra(c2.qb.algebra).ok());

  auto bad = c2.qb.algebra;
  bad.unit = el({0, 1});
  const auto rep = verify_algebra(bad);
  CHECK_FALSE(rep.ok());
  CHECK(law_failed(rep, "unit.left"));
  CHECK(law_failed(rep, "unit.right"));
  CHECK_FALSE(law_failed(rep, "associativity"));
  REQUIRE_FALSE(rep.find("unit.left")->witnesses.empty());

  const auto sw = qtest::sweedler();
  CHECK(verify_algebra(sw.qb.algebra).ok());
  // direct triple loop over the structure constants
  const auto& m = sw.qb.algebra.mult;
  bool assoc = true;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t out = 0; out < 4; ++out) {
          Scalar lhs{0}, rhs{0};
          for (std::size_t s = 0; s < 4; ++s) {
            lhs += m.at({i, j, s}) * m.at({s, k, out});
            rhs += m.at({j, k, s}) * m.at({i, s, out});
          }
          assoc = assoc && lhs == rhs;
        }
      }
    }
  }
  CHECK(assoc);
}

TEST_CASE("verify_quasi_bialgebra") {
  const auto c2 = qtest::c2();
  const auto rep = verify_quasi_bialgebra(c2.qb);
  CHECK(rep.ok());
  CHECK(rep.find("counit.phi.left")->passed());

  const auto tz = qtest::twisted_z2();
  CHECK(verify_quasi_bialgebra(tz.qb).ok());
  CHECK_FALSE(tz.qb.phi == QuasiBialgebra(tz.qb).alg().one_tensor(3));

  auto bad = tz.qb;
  bad.phi_inv = QuasiBialgebra(tz.qb).alg().one_tensor(3);
  const auto rb = verify_quasi_bialgebra(bad);
  CHECK(law_failed(rb, "phi.inverse"));
}

TEST_CASE("verify_antipode") {
  CHECK(verify_antipode(QuasiHopfAlgebra(qtest::c2())).ok());

  const auto tz = qtest::twisted_z2();
  CHECK(tz.antipode == Matrix::identity(2));
  CHECK(tz.alpha == el({1, 1}));
  CHECK(tz.beta == el({1, -1}));
  CHECK(verify_antipode(QuasiHopfAlgebra(tz)).ok());

  auto bad = tz;
  bad.beta = el({1, 1});
  const auto rep = verify_antipode(QuasiHopfAlgebra(bad));
  CHECK(law_failed(rep, "phi-beta-alpha"));
  // the left side evaluates to e0 - e1
  REQUIRE_FALSE(rep.find("phi-beta-alpha")->witnesses.empty());
  CHECK(rep.find("phi-beta-alpha")->witnesses[0].lhs == el({1, -1}).str());
}

TEST_CASE("rescale_alpha_beta") {
  const auto c2 = qtest::c2();
  const auto same = rescale_alpha_beta(c2);
  CHECK(same.alpha == c2.alpha);
  CHECK(same.beta == c2.beta);

  auto scaled = c2;
  scaled.alpha = Scalar{2} * c2.alpha;
  scaled.beta = Scalar::rational(mpq_class(1, 2)) * c2.beta;
  const auto r = rescale_alpha_beta(scaled);
  CHECK(r.alpha == el({1, 0}));
  CHECK(r.beta == el({1, 0}));
  CHECK(verify_antipode(QuasiHopfAlgebra(r)).ok());

  auto zero = c2;
  zero.alpha = el({1, -1});
  CHECK_THROWS_AS(rescale_alpha_beta(zero), InconsistentPresentation);
}

TEST_CASE("qp_elements") {
  const auto c2 = qtest::c2();
  const QuasiHopfAlgebra h(c2);
  const auto qp = qp_elements(h);
  const Tensor one2 = h.alg().one_tensor(2);
  CHECK(qp.q_R == one2);
  CHECK(qp.p_R == one2);
  CHECK(qp.q_L == one2);
  CHECK(qp.p_L == one2);

  // Hopf with nontrivial alpha: q_R = 1 (x) S^-1(alpha), p_R = 1 (x) beta
  auto scaled = c2;
  scaled.alpha = Scalar{2} * c2.alpha;
  scaled.beta = Scalar::rational(mpq_class(1, 2)) * c2.beta;
  const QuasiHopfAlgebra hs(scaled);
  const auto qs = qp_elements(hs);
  CHECK(qs.q_R == outer(hs.alg().one(), hs.S_inv(scaled.alpha)));
  CHECK(qs.p_R == outer(hs.alg().one(), scaled.beta));

  // twisted Z2: p_R = sum_{a,b} (-1)^{ab} beta_b e_a (x) e_b
  const QuasiHopfAlgebra tz(qtest::twisted_z2());
  const auto qt = qp_elements(tz);
  Tensor expect(2, 2);
  const long beta[2] = {1, -1};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) expect.at({a, b}) = Scalar{(a * b == 1 ? -1 : 1) * beta[b]};
  }
  CHECK(qt.p_R == expect);
  CHECK(verify_qp_identities(tz, qt).ok());
}

TEST_CASE("verify_qp_identities") {
  CHECK(verify_qp_identities(QuasiHopfAlgebra(qtest::c2()), qp_elements(QuasiHopfAlgebra(qtest::c2()))).ok());
  const QuasiHopfAlgebra sw(qtest::sweedler());
  CHECK(verify_qp_identities(sw, qp_elements(sw)).ok());

  // Sweedler with the antipode conjugated by u = 1 + x, so that alpha and beta
  // are not scalars and q_R, p_R differ
  const auto base = qtest::sweedler();
  const QuasiHopfAlgebra b(base);
  const Element u = el({1, 0, 1, 0});
  auto moved = with_antipode(base, b.alg().conjugation(u) * base.antipode);
  moved.alpha = b.alg().mul(u, base.alpha);
  moved.beta = b.alg().mul(base.beta, *b.alg().inverse(u));
  const QuasiHopfAlgebra hm(moved);
  auto qp = qp_elements(hm);
  CHECK(verify_qp_identities(hm, qp).ok());
  std::swap(qp.q_R, qp.p_R);
  CHECK(law_failed(verify_qp_identities(hm, qp), "qR-pR.first"));
}

TEST_CASE("full verifier chain on the standard examples") {
  for (const auto& p : {qtest::c2(), qtest::s3(), qtest::sweedler(), qtest::twisted_z2()}) {
    const auto rep = verify_all(QuasiHopfAlgebra(p));
    INFO(p.name << "\n" << rep.summary());
    CHECK(rep.ok());
    CHECK(rep.laws().size() >= 25);
  }
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(verify_all(QuasiHopfAlgebra(build_sweedler(f5))).ok());
  CHECK(verify_all(QuasiHopfAlgebra(build_dual_group_algebra_twisted(cyclic_group(2), z2_sign_cocycle(), f5))).ok());
}

TEST_CASE("dual pairing transport") {
  // sum_i (f^i <- x) (x) a_i = sum_i f^i (x) x a_i with f <- x = f(x -)
  Rng rng(3);
  const QuasiHopfAlgebra h(qtest::sweedler());
  const std::size_t n = h.dim();
  for (int trial = 0; trial < 20; ++trial) {
    const Element x = rng.element(n);
    Matrix lhs(n, n), rhs(n, n);  // (functional coordinate, element coordinate)
    for (std::size_t i = 0; i < n; ++i) {
      const Functional fx = Functional::coordinate(n, i).compose(h.alg().left_mult(x));
      for (std::size_t j = 0; j < n; ++j) lhs(j, i) += fx[j];
      const Element xa = h.alg().mul(x, h.alg().basis(i));
      for (std::size_t k = 0; k < n; ++k) rhs(i, k) += xa[k];
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("antipode changes by a unit keep the axioms") {
  Rng rng(17);
  for (const auto& p : {qtest::sweedler(), qtest::twisted_z2(), qtest::s3()}) {
    const QuasiHopfAlgebra h(p);
    for (int trial = 0; trial < 3; ++trial) {
      const Element u = rng.unit(h.alg());
      auto q = with_antipode(p, h.alg().conjugation(u) * p.antipode);
      q.alpha = h.alg().mul(u, p.alpha);
      q.beta = h.alg().mul(p.beta, *h.alg().inverse(u));
      const auto rep = verify_antipode(QuasiHopfAlgebra(q));
      INFO(rep.summary());
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("builders reject bad input") {
  GroupTable bad;
  bad.mul = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(build_group_algebra(bad, FieldSpec::rationals()), std::invalid_argument);
  auto w = z2_sign_cocycle();
  w[3] = Scalar{-1};  // omega(0,1,1)
  CHECK_THROWS_AS(build_dual_group_algebra_twisted(cyclic_group(2), w, FieldSpec::rationals()),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_sweedler(FieldSpec::prime(2)), std::invalid_argument);

  const auto c1 = build_group_algebra(cyclic_group(1), FieldSpec::rationals());
  CHECK(c1.dim() == 1);
  CHECK(verify_all(QuasiHopfAlgebra(c1)).ok());
  const auto trivial = build_dual_group_algebra_twisted(cyclic_group(2), trivial_cocycle(2), FieldSpec::rationals());
  CHECK(trivial.qb.phi == QuasiBialgebra(trivial.qb).alg().one_tensor(3));
}

namespace {

bool same_structure(const QuasiHopfPresentation& a, const QuasiHopfPresentation& b) {
  return a.qb.delta == b.qb.delta && a.qb.phi == b.qb.phi && a.qb.phi_inv == b.qb.phi_inv && a.alpha == b.alpha &&
         a.beta == b.beta && a.antipode == b.antipode && a.qb.algebra.mult == b.qb.algebra.mult;
}

/// 1 (x) 1 + up to two terms c a_i (x) a_j with a_i = e_i - eps(e_i) 1 in ker eps.
Tensor random_twist(Rng& rng, const QuasiHopfAlgebra& h) {
  auto aug = [&](std::size_t i) { return h.alg().basis(i) - h.eps(h.alg().basis(i)) * h.alg().one(); };
  const long top = static_cast<long>(h.dim()) - 1;
  Tensor f = h.alg().one_tensor(2);
  for (int k = 0; k < 2; ++k) {
    f += rng.rational() * outer(aug(rng.integer(1, top)), aug(rng.integer(1, top)));
  }
  return f;
}

}  // namespace

TEST_CASE("gauge twist: identity, inverse round trip and random twists") {
  Rng rng(23);
  for (const auto& p : {qtest::c2(), qtest::sweedler(), qtest::twisted_z2(), qtest::s3()}) {
    const QuasiHopfAlgebra h(p);
    CHECK(same_structure(gauge_twist(p, h.alg().one_tensor(2)), p));
    int nontrivial = 0;
    int moved_alpha_beta = 0;
    for (int trial = 0; trial < 3; ++trial) {
      const Tensor f = random_twist(rng, h);
      Tensor f_inv;
      try {
        f_inv = invert_tensor2(h.alg(), f);
      } catch (const std::domain_error&) {
        CHECK_THROWS_AS(gauge_twist(p, f), std::invalid_argument);
        continue;
      }
      const auto twisted = gauge_twist(p, f);
      CHECK(verify_all(QuasiHopfAlgebra(twisted)).ok());
      if (!(twisted.qb.phi == p.qb.phi)) ++nontrivial;
      if (!(twisted.alpha == p.alpha && twisted.beta == p.beta)) ++moved_alpha_beta;
      CHECK(same_structure(gauge_twist(twisted, f_inv), p));
    }
    if (p.dim() == 2) {
      // H (x) H is commutative, so Delta_F = Delta and Phi_F is a coboundary on Z_2, hence trivial
      CHECK(nontrivial == 0);
      CHECK(moved_alpha_beta > 0);
    } else {
      CHECK(nontrivial > 0);
    }
  }
}

TEST_CASE("gauge twist rejects unnormalized or singular twists") {
  const auto p = qtest::c2();
  const QuasiHopfAlgebra h(p);
  CHECK_THROWS_AS(gauge_twist(p, Scalar{2} * h.alg().one_tensor(2)), std::invalid_argument);
  const Element n = el({1, -1});
  // (1 - g)^2 = 2 (1 - g), so 1 (x) 1 - 1/4 n (x) n kills e (x) e for e = (1 - g)/2
  const Tensor singular = h.alg().one_tensor(2) + Scalar::rational(mpq_class(-1, 4)) * outer(n, n);
  CHECK_THROWS_AS(gauge_twist(p, singular), std::invalid_argument);
  CHECK_THROWS_AS(gauge_twist(p, h.alg().one_tensor(3)), std::invalid_argument);
}
