#include "qhopf/axioms.hpp"

#include "sums.hpp"

namespace qhopf {

using detail::BasisImages;
using detail::label;
using detail::sum_element;
using detail::sum_pairs;
using detail::sum_tensor;

VerificationReport verify_algebra(const AlgebraPresentation& p) {
  VerificationReport rep;
  const Algebra alg(p);
  const std::size_t n = alg.dim();
  auto& assoc = rep.law("associativity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element ij = alg.mul(alg.basis(i), alg.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Element jk = alg.mul(alg.basis(j), alg.basis(k));
        assoc.expect_equal(alg.mul(ij, alg.basis(k)), alg.mul(alg.basis(i), jk),
                           "(" + label(p, i) + "," + label(p, j) + "," + label(p, k) + ")");
      }
    }
  }
  auto& left = rep.law("unit.left");
  auto& right = rep.law("unit.right");
  for (std::size_t i = 0; i < n; ++i) {
    left.expect_equal(alg.mul(alg.one(), alg.basis(i)), alg.basis(i), label(p, i));
    right.expect_equal(alg.mul(alg.basis(i), alg.one()), alg.basis(i), label(p, i));
  }
  return rep;
}

VerificationReport verify_quasi_bialgebra(const QuasiBialgebraPresentation& qb) {
  return verify_quasi_bialgebra(QuasiBialgebra(qb));
}

VerificationReport verify_quasi_bialgebra(const QuasiBialgebra& qb) {
  VerificationReport rep;
  const Algebra& alg = qb.alg();
  const auto& p = alg.presentation();
  const std::size_t n = qb.dim();
  const Tensor one2 = alg.one_tensor(2);
  const Tensor one3 = alg.one_tensor(3);

  auto& dmul = rep.law("delta.multiplicative");
  auto& emul = rep.law("counit.multiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor di = qb.delta(alg.basis(i));
    for (std::size_t j = 0; j < n; ++j) {
      const Element ij = alg.mul(alg.basis(i), alg.basis(j));
      const std::string where = "(" + label(p, i) + "," + label(p, j) + ")";
      dmul.expect_equal(qb.delta(ij), alg.mul(di, qb.delta(alg.basis(j))), where);
      emul.expect_equal(qb.eps(ij), qb.eps(alg.basis(i)) * qb.eps(alg.basis(j)), where);
    }
  }
  rep.law("delta.unit").expect_equal(qb.delta(alg.one()), one2, "1");
  rep.law("counit.unit").expect_equal(qb.eps(alg.one()), Scalar{1}, "1");

  auto& cl = rep.law("counit.left");
  auto& cr = rep.law("counit.right");
  auto& qc = rep.law("quasi-coassociativity");
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = alg.basis(i);
    const Tensor d = qb.delta(a);
    cl.expect_equal(qb.eps_leg(d, 0), Tensor::from_element(a), label(p, i));
    cr.expect_equal(qb.eps_leg(d, 1), Tensor::from_element(a), label(p, i));
    const Tensor rhs = alg.mul(alg.mul(qb.phi(), qb.delta_left_iterated(a)), qb.phi_inv());
    qc.expect_equal(qb.delta_right_iterated(a), rhs, label(p, i));
  }

  // (1 (x) Phi)(id (x) Delta (x) id)(Phi)(Phi (x) 1) = (id (x) id (x) Delta)(Phi)(Delta (x) id (x) id)(Phi)
  {
    const Tensor lhs = alg.mul(alg.mul(qb.insert_unit(qb.phi(), 0), qb.delta_leg(qb.phi(), 1)),
                               qb.insert_unit(qb.phi(), 3));
    const Tensor rhs = alg.mul(qb.delta_leg(qb.phi(), 2), qb.delta_leg(qb.phi(), 0));
    rep.law("3-cocycle").expect_equal(lhs, rhs, "Phi");
  }
  rep.law("normalization").expect_equal(qb.eps_leg(qb.phi(), 1), one2, "(id e id)(Phi)");

  auto& inv = rep.law("phi.inverse");
  inv.expect_equal(alg.mul(qb.phi(), qb.phi_inv()), one3, "Phi Phi^-1");
  inv.expect_equal(alg.mul(qb.phi_inv(), qb.phi()), one3, "Phi^-1 Phi");

  rep.law("counit.phi.left").expect_equal(qb.eps_leg(qb.phi(), 0), one2, "eps(X1) X2 X3");
  rep.law("counit.phi.right").expect_equal(qb.eps_leg(qb.phi(), 2), one2, "X1 X2 eps(X3)");
  return rep;
}

VerificationReport verify_antipode(const QuasiHopfAlgebra& h) {
  VerificationReport rep;
  const Algebra& alg = h.alg();
  const auto& p = alg.presentation();
  const std::size_t n = h.dim();
  const BasisImages img(h);

  auto& anti = rep.law("antipode.anti-multiplicative");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      anti.expect_equal(h.S(alg.mul(alg.basis(i), alg.basis(j))), alg.mul(img.S(j), img.S(i)),
                        "(" + label(p, i) + "," + label(p, j) + ")");
    }
  }
  rep.law("antipode.unit").expect_equal(h.S(alg.one()), alg.one(), "1");
  rep.law("antipode.bijective").expect(h.antipode_inverse().has_value(), "S", "S is singular");

  auto& la = rep.law("antipode.alpha");
  auto& lb = rep.law("antipode.beta");
  auto& ce = rep.law("counit.antipode");
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor d = h.delta(alg.basis(i));
    const Scalar e = h.eps(alg.basis(i));
    const Element sa = sum_element(d, n, [&](const Tensor::Index& x) {
      return alg.mul({img.S(x[0]), h.alpha(), img.e(x[1])});
    });
    const Element sb = sum_element(d, n, [&](const Tensor::Index& x) {
      return alg.mul({img.e(x[0]), h.beta(), img.S(x[1])});
    });
    la.expect_equal(sa, e * h.alpha(), label(p, i));
    lb.expect_equal(sb, e * h.beta(), label(p, i));
    ce.expect_equal(h.eps(img.S(i)), e, label(p, i));
  }

  const Element pba = sum_element(h.phi(), n, [&](const Tensor::Index& x) {
    return alg.mul({img.e(x[0]), h.beta(), img.S(x[1]), h.alpha(), img.e(x[2])});
  });
  rep.law("phi-beta-alpha").expect_equal(pba, alg.one(), "X1 beta S(X2) alpha X3");
  const Element pab = sum_element(h.phi_inv(), n, [&](const Tensor::Index& x) {
    return alg.mul({img.S(x[0]), h.alpha(), img.e(x[1]), h.beta(), img.S(x[2])});
  });
  rep.law("phi-inverse-alpha-beta").expect_equal(pab, alg.one(), "S(x1) alpha x2 beta S(x3)");
  rep.law("alpha-beta.counit")
      .expect_equal(h.eps(h.alpha()) * h.eps(h.beta()), Scalar{1}, "eps(alpha) eps(beta)");
  return rep;
}

QuasiHopfPresentation rescale_alpha_beta(const QuasiHopfPresentation& p) {
  const QuasiBialgebra qb(p.qb);
  const Scalar ea = qb.eps(p.alpha);
  const Scalar eb = qb.eps(p.beta);
  if (ea * eb != Scalar{1}) {
    throw InconsistentPresentation("eps(alpha) eps(beta) = " + (ea * eb).str() + ", expected 1");
  }
  QuasiHopfPresentation out = p;
  out.alpha = eb * p.alpha;
  out.beta = ea * p.beta;
  return out;
}

QPElements qp_elements(const QuasiHopfAlgebra& h) {
  h.antipode_inverse_or_throw();
  const Algebra& alg = h.alg();
  const std::size_t n = h.dim();
  const BasisImages img(h);
  const Element& a = h.alpha();
  const Element& b = h.beta();
  QPElements qp;
  qp.q_R = sum_tensor(h.phi(), n, 2, [&](const Tensor::Index& x) {
    return outer(img.e(x[0]), alg.mul(h.S_inv(alg.mul(a, img.e(x[2]))), img.e(x[1])));
  });
  qp.q_L = sum_tensor(h.phi_inv(), n, 2, [&](const Tensor::Index& x) {
    return outer(alg.mul({img.S(x[0]), a, img.e(x[1])}), img.e(x[2]));
  });
  qp.p_R = sum_tensor(h.phi_inv(), n, 2, [&](const Tensor::Index& x) {
    return outer(img.e(x[0]), alg.mul({img.e(x[1]), b, img.S(x[2])}));
  });
  qp.p_L = sum_tensor(h.phi(), n, 2, [&](const Tensor::Index& x) {
    return outer(alg.mul(img.e(x[1]), h.S_inv(alg.mul(img.e(x[0]), b))), img.e(x[2]));
  });
  return qp;
}

VerificationReport verify_qp_identities(const QuasiHopfAlgebra& h, const QPElements& qp) {
  VerificationReport rep;
  const Algebra& alg = h.alg();
  const auto& p = alg.presentation();
  const std::size_t n = h.dim();
  const BasisImages img(h);
  h.antipode_inverse_or_throw();

  auto& cr = rep.law("qR.commutation");
  auto& pr = rep.law("pR.commutation");
  auto& cl = rep.law("qL.commutation");
  auto& pl = rep.law("pL.commutation");
  for (std::size_t i = 0; i < n; ++i) {
    const Element& a = img.e(i);
    const Tensor dl = h.delta_left_iterated(a);
    const Tensor dr = h.delta_right_iterated(a);

    // q1 a(1,1) (x) S^-1(a(2)) q2 a(1,2) = a q1 (x) q2
    Tensor lhs = sum_pairs(qp.q_R, dl, n, 2, [&](const Tensor::Index& q, const Tensor::Index& d) {
      return outer(alg.mul(img.e(q[0]), img.e(d[0])), alg.mul({img.S_inv(d[2]), img.e(q[1]), img.e(d[1])}));
    });
    cr.expect_equal(lhs, alg.mul(outer(a, alg.one()), qp.q_R), label(p, i));

    // a(1,1) p1 (x) a(1,2) p2 S(a(2)) = p1 a (x) p2
    lhs = sum_pairs(qp.p_R, dl, n, 2, [&](const Tensor::Index& q, const Tensor::Index& d) {
      return outer(alg.mul(img.e(d[0]), img.e(q[0])), alg.mul({img.e(d[1]), img.e(q[1]), img.S(d[2])}));
    });
    pr.expect_equal(lhs, alg.mul(qp.p_R, outer(a, alg.one())), label(p, i));

    // S(a(1)) q1 a(2,1) (x) q2 a(2,2) = q1 (x) a q2
    lhs = sum_pairs(qp.q_L, dr, n, 2, [&](const Tensor::Index& q, const Tensor::Index& d) {
      return outer(alg.mul({img.S(d[0]), img.e(q[0]), img.e(d[1])}), alg.mul(img.e(q[1]), img.e(d[2])));
    });
    cl.expect_equal(lhs, alg.mul(outer(alg.one(), a), qp.q_L), label(p, i));

    // a(2,1) p1 S^-1(a(1)) (x) a(2,2) p2 = p1 (x) p2 a
    lhs = sum_pairs(qp.p_L, dr, n, 2, [&](const Tensor::Index& q, const Tensor::Index& d) {
      return outer(alg.mul({img.e(d[1]), img.e(q[0]), img.S_inv(d[0])}), alg.mul(img.e(d[2]), img.e(q[1])));
    });
    pl.expect_equal(lhs, alg.mul(qp.p_L, outer(alg.one(), a)), label(p, i));
  }

  const Tensor one2 = alg.one_tensor(2);
  const Element& one = alg.one();
  // Delta(q1_R) p_R (1 (x) S(q2_R))
  Tensor t = sum_tensor(qp.q_R, n, 2, [&](const Tensor::Index& q) {
    return alg.mul(alg.mul(h.delta(img.e(q[0])), qp.p_R), outer(one, img.S(q[1])));
  });
  rep.law("qR-pR.first").expect_equal(t, one2, "Delta(q1) p (1 S(q2))");
  // (1 (x) S^-1(p2_R)) q_R Delta(p1_R)
  t = sum_tensor(qp.p_R, n, 2, [&](const Tensor::Index& q) {
    return alg.mul(alg.mul(outer(one, img.S_inv(q[1])), qp.q_R), h.delta(img.e(q[0])));
  });
  rep.law("qR-pR.second").expect_equal(t, one2, "(1 S^-1(p2)) q Delta(p1)");
  // Delta(q2_L) p_L (S^-1(q1_L) (x) 1)
  t = sum_tensor(qp.q_L, n, 2, [&](const Tensor::Index& q) {
    return alg.mul(alg.mul(h.delta(img.e(q[1])), qp.p_L), outer(img.S_inv(q[0]), one));
  });
  rep.law("qL-pL.first").expect_equal(t, one2, "Delta(q2) p (S^-1(q1) 1)");
  // (S(p1_L) (x) 1) q_L Delta(p2_L)
  t = sum_tensor(qp.p_L, n, 2, [&](const Tensor::Index& q) {
    return alg.mul(alg.mul(outer(img.S(q[0]), one), qp.q_L), h.delta(img.e(q[1])));
  });
  rep.law("qL-pL.second").expect_equal(t, one2, "(S(p1) 1) q Delta(p2)");
  return rep;
}

VerificationReport verify_all(const QuasiHopfAlgebra& h) {
  VerificationReport rep = verify_algebra(h.alg().presentation());
  rep.merge(verify_quasi_bialgebra(static_cast<const QuasiBialgebra&>(h)));
  rep.merge(verify_antipode(h));
  if (h.antipode_inverse()) {
    rep.merge(verify_qp_identities(h, qp_elements(h)));
  }
  return rep;
}

}  // namespace qhopf
