#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

/// Element of H in the basis e_0..e_{n-1}.
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : c_(zero_vector(dim)) {}
  explicit Element(Vector coeffs) : c_(std::move(coeffs)) {}
  static Element basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  const Vector& coeffs() const { return c_; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return qhopf::is_zero(c_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const;
  bool operator==(const Element& o) const { return c_ == o.c_; }

  std::string str() const;

 private:
  Vector c_;
};

/// Element of H* in the coordinate functionals f^0..f^{n-1}.
class Functional {
 public:
  Functional() = default;
  explicit Functional(std::size_t dim) : c_(zero_vector(dim)) {}
  explicit Functional(Vector coeffs) : c_(std::move(coeffs)) {}
  static Functional coordinate(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  const Vector& coeffs() const { return c_; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return qhopf::is_zero(c_); }

  Scalar operator()(const Element& a) const;
  /// f o m for a linear map m acting on coefficient vectors.
  Functional compose(const Matrix& m) const;

  Functional& operator+=(const Functional& o);
  Functional& operator-=(const Functional& o);
  Functional& operator*=(const Scalar& s);
  friend Functional operator+(Functional a, const Functional& b) { return a += b; }
  friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
  friend Functional operator*(const Scalar& s, Functional a) { return a *= s; }
  bool operator==(const Functional& o) const { return c_ == o.c_; }

  std::string str() const;

 private:
  Vector c_;
};

using LinMap = Matrix;

/// Dense element of H^{(x) rank}, indices stored row-major (leg 0 slowest).
class Tensor {
 public:
  using Index = std::vector<std::size_t>;

  Tensor() = default;
  Tensor(std::size_t dim, std::size_t rank);
  static Tensor from_element(const Element& a);
  static Tensor scalar(const Scalar& s);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return c_.size(); }

  std::size_t flat(const Index& idx) const;
  Index unflat(std::size_t flat) const;

  Scalar& operator[](std::size_t flat) { return c_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return c_[flat]; }
  Scalar& at(const Index& idx) { return c_[flat(idx)]; }
  const Scalar& at(const Index& idx) const { return c_[flat(idx)]; }

  Element to_element() const;
  bool is_zero() const { return qhopf::is_zero(c_); }

  /// Calls f(index, coefficient) for every nonzero entry in row-major order.
  void for_each_nonzero(const std::function<void(const Index&, const Scalar&)>& f) const;
  std::size_t nonzeros() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
  bool operator==(const Tensor& o) const;

  /// Reorders legs: leg i of the result is leg perm[i] of this tensor.
  Tensor permute(const std::vector<std::size_t>& perm) const;

  /// "{[i,j]: c, ...}" listing nonzeros.
  std::string str() const;

 private:
  void check_same_shape(const Tensor& o) const;

  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  Vector c_;
};

/// a_1 (x) a_2 (x) ... as a tensor of rank sum(ranks).
Tensor outer(const Tensor& a, const Tensor& b);
Tensor outer(const Element& a, const Element& b);
Tensor outer(std::initializer_list<Element> legs);

}  // namespace qhopf
