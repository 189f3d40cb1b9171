#include <doctest.h>

#include "qhopf/algebra.hpp"
#include "support.hpp"

using namespace qhopf;
using qtest::Rng;

namespace {

Vector vec(std::initializer_list<long> c) {
  Vector v;
  for (long x : c) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = rng.nonzero_rational();
    const Scalar b = rng.nonzero_rational();
    CHECK((a / b) * (b / a) == Scalar{1});
    CHECK((a + b) - b == a);
  }
  const Scalar third = Scalar::rational(mpq_class(1, 3));
  CHECK(third * Scalar{3} == Scalar{1});
  CHECK(third.str() == "1/3");
  CHECK_THROWS_AS(Scalar{0}.inverse(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.tag() == "Fp:7");
  const Scalar three = f7.from_int(3);
  CHECK(three * three.inverse() == f7.one());
  CHECK(three.inverse() == f7.from_int(5));
  CHECK(f7.from_fraction(1, 2) == f7.from_int(4));
  CHECK(f7.from_int(-1).str() == "p6");
  CHECK(three + Scalar{4} == f7.zero());
  CHECK_THROWS(FieldSpec::prime(8));
  CHECK_THROWS_AS(three + FieldSpec::prime(5).one(), FieldMismatch);
  CHECK_THROWS_AS(three + Scalar::rational(mpq_class(1, 2)), FieldMismatch);
  CHECK(FieldSpec::parse("Fp:7") == f7);
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(f7.parse_scalar("p3") == three);
  CHECK(FieldSpec::rationals().parse_scalar("-4/6") == Scalar::rational(mpq_class(-2, 3)));
}

TEST_CASE("solve_linear examples") {
  const Matrix id = Matrix::identity(3);
  const Vector b = vec({4, -1, 7});
  REQUIRE(solve_linear(id, b));
  CHECK(*solve_linear(id, b) == b);

  const Matrix ones = Matrix::from_rows({vec({1, 1}), vec({1, 1})}, 2);
  CHECK_FALSE(solve_linear(ones, vec({1, 0})).has_value());

  const Matrix zero(2, 2);
  const auto x = solve_linear(zero, vec({0, 0}));
  REQUIRE(x);
  CHECK(*x == vec({0, 0}));

  CHECK_THROWS_AS(solve_linear(zero, vec({0, 0, 0})), DimensionError);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(4)).empty());

  const auto k = kernel_basis(Matrix(3, 3));
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k[i] == Element::basis(3, i).coeffs());

  const auto k2 = kernel_basis(Matrix::from_rows({vec({1, -1})}, 2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == vec({1, 1}));
}

TEST_CASE("kernel vectors are annihilated and solutions solve") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.integer(1, 5));
    const Matrix a = rng.matrix(r, c);
    const auto ker = kernel_basis(a);
    CHECK(ker.size() + rank(a) == c);
    for (const auto& v : ker) CHECK(is_zero(a.apply(v)));

    const Vector x0 = rng.vector(c);
    const Vector b = a.apply(x0);
    const auto x = solve_linear(a, b);
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("matrix inverse") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = rng.matrix(4, 4);
    const auto inv = inverse(a);
    if (rank(a) == 4) {
      REQUIRE(inv);
      CHECK(a * *inv == Matrix::identity(4));
      CHECK(*inv * a == Matrix::identity(4));
    } else {
      CHECK_FALSE(inv);
    }
  }
}

namespace {

// Naive evaluation of sum t_ijk f(e_j) (e_k * M e_i) straight from the
// structure constants.
Element naive_contract(const Tensor& mult, const Tensor& t, const Matrix& m, const Functional& f) {
  const std::size_t n = t.dim();
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar c = t.at({i, j, k}) * f[j];
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) out[b] += c * m(a, i) * mult.at({k, a, b});
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("tensor_contract agrees with a naive oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    AlgebraPresentation p;
    p.dim = n;
    p.mult = rng.tensor(n, 3);
    p.unit = Element::basis(n, 0);
    const Algebra alg(p);
    const Tensor t = rng.tensor(n, 3);
    const Matrix m = rng.matrix(n, n);
    const Functional f = rng.functional(n);
    const Tensor got = tensor_contract(alg, t, {m, f, KeepLeg{}}, {{2, 0}});
    CHECK(got.to_element() == naive_contract(p.mult, t, m, f));

    // plain leg maps commute with outer products
    const Element a = rng.element(n), b = rng.element(n);
    const Tensor mapped = tensor_contract(alg, outer(a, b), {m, KeepLeg{}}, {{0}, {1}});
    CHECK(mapped == outer(Element(m.apply(a.coeffs())), b));
  }
}

TEST_CASE("tensor_contract with the counit") {
  const auto h = qtest::twisted_z2();
  const QuasiBialgebra qb(h.qb);
  const Tensor one3 = qb.alg().one_tensor(3);
  CHECK(tensor_contract(qb.alg(), one3, {KeepLeg{}, qb.counit(), KeepLeg{}}, {{0}, {2}}) ==
        qb.alg().one_tensor(2));
  CHECK(tensor_contract(qb.alg(), qb.phi(), {KeepLeg{}, qb.counit(), KeepLeg{}}, {{0}, {2}}) ==
        qb.alg().one_tensor(2));
  CHECK(tensor_contract(qb.alg(), qb.phi(), {qb.counit(), KeepLeg{}, KeepLeg{}}, {{1}, {2}}) ==
        qb.alg().one_tensor(2));
  CHECK_THROWS_AS(tensor_contract(qb.alg(), qb.phi(), {KeepLeg{}, KeepLeg{}}, {{0}, {1}}), DimensionError);
  CHECK_THROWS_AS(tensor_contract(qb.alg(), qb.phi(), {KeepLeg{}, KeepLeg{}, KeepLeg{}}, {{0}, {1}}),
                  DimensionError);
}

TEST_CASE("tensor permute and outer") {
  const Element a = qtest::el({1, 2}), b = qtest::el({0, 3});
  const Tensor t = outer(a, b);
  CHECK(t.permute({1, 0}) == outer(b, a));
  CHECK(outer({a, b}) == t);
  CHECK(t.at({0, 1}) == Scalar{3});
}
