#pragma once

// Shared fixtures and hand-rolled random generators for the unit tests.

#include <random>

#include "qhopf/algebra.hpp"
#include "qhopf/builders.hpp"
#include "qhopf/examples.hpp"

namespace qtest {

using namespace qhopf;

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  /// Small rational n/d with |n| <= 5, 1 <= d <= 4; zero with probability ~1/3.
  Scalar rational() {
    if (integer(0, 2) == 0) return Scalar{0};
    const long n = integer(-5, 5);
    const long d = integer(1, 4);
    return Scalar::rational(mpq_class(n, d));
  }
  Scalar nonzero_rational() {
    for (;;) {
      Scalar s = rational();
      if (!s.is_zero()) return s;
    }
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& s : v) s = rational();
    return v;
  }
  Element element(std::size_t n) { return Element(vector(n)); }
  Functional functional(std::size_t n) { return Functional(vector(n)); }
  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
    }
    return m;
  }
  Tensor tensor(std::size_t n, std::size_t rank) {
    Tensor t(n, rank);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rational();
    return t;
  }

  /// A unit of the algebra: random elements are retried until invertible.
  Element unit(const Algebra& alg) {
    for (;;) {
      Element u = alg.one() + element(alg.dim());
      if (alg.inverse(u)) return u;
    }
  }

 private:
  std::mt19937 gen_;
};

inline QuasiHopfPresentation c2() { return build_group_algebra(cyclic_group(2), FieldSpec::rationals()); }
inline QuasiHopfPresentation s3() { return build_group_algebra(symmetric_group(3), FieldSpec::rationals()); }
inline QuasiHopfPresentation sweedler() { return build_sweedler(FieldSpec::rationals()); }
inline QuasiHopfPresentation twisted_z2() {
  return build_dual_group_algebra_twisted(cyclic_group(2), z2_sign_cocycle(), FieldSpec::rationals());
}

inline Element el(std::initializer_list<long> c) {
  Vector v;
  for (long x : c) v.emplace_back(x);
  return Element(v);
}

inline QuasiHopfPresentation sweedler_moved() { return example_sweedler_conjugated(); }
inline std::vector<QuasiHopfPresentation> twisted_variants() { return qhopf::twisted_variants(); }

}  // namespace qtest
