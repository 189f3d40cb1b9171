#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qhopf {

/// Raised when scalars from two different fields meet in one operation.
class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar;

/// The ground field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(const std::string& tag);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string tag() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_fraction(long num, long den) const;
  /// Converts a rational into this field. Throws if the denominator is not
  /// invertible mod p.
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "num/den" or an integer for Q; "p<residue>" for F_p.
  Scalar parse_scalar(const std::string& text) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. A rational when modulus() == 0, otherwise a residue in
/// [0, p). Integer literals (modulus 0, integral value) promote silently into
/// a prime field on contact; any other cross-field combination throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static Scalar rational(mpq_class q);
  static Scalar residue(const mpz_class& v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// Throws std::domain_error for zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2" for rationals; "p3" for residues.
  std::string str() const;

 private:
  void reduce();
  void unify(Scalar& o);

  mpq_class v_{0};
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qhopf
