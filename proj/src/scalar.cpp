#include "qhopf/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace qhopf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

mpz_class mod_floor(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& tag) {
  if (tag == "Q") return rationals();
  if (tag.rfind("Fp:", 0) == 0) {
    const std::string digits = tag.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 9) {
      throw std::invalid_argument("bad field tag '" + tag + "'");
    }
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw std::invalid_argument("bad field tag '" + tag + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::tag() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long v) const {
  if (p_ == 0) return Scalar::rational(mpq_class(v));
  return Scalar::residue(mpz_class(v), p_);
}

Scalar FieldSpec::from_fraction(long num, long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q);
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar::rational(q);
  if (mod_floor(q.get_den(), p_) == 0) {
    throw std::domain_error("denominator of " + q.get_str() + " vanishes in " + tag());
  }
  return Scalar::residue(q.get_num(), p_) / Scalar::residue(q.get_den(), p_);
}

Scalar FieldSpec::parse_scalar(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text[0] == 'p') {
    if (p_ == 0) {
      throw FieldMismatch("residue '" + text + "' in a field tagged Q");
    }
    const std::string digits = text.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad residue '" + text + "'");
    }
    mpz_class v(digits, 10);
    if (v >= p_) throw std::invalid_argument("residue '" + text + "' not reduced mod " + std::to_string(p_));
    return Scalar::residue(v, p_);
  }
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      throw std::invalid_argument("bad rational '" + text + "'");
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  s.v_ = std::move(q);
  s.v_.canonicalize();
  return s;
}

Scalar Scalar::residue(const mpz_class& v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.v_ = mpq_class(mod_floor(v, p));
  return s;
}

void Scalar::reduce() {
  if (p_ == 0) return;
  v_ = mpq_class(mod_floor(v_.get_num(), p_));
}

void Scalar::unify(Scalar& o) {
  if (p_ == o.p_) return;
  auto promote = [](Scalar& s, std::uint32_t p) {
    if (s.v_.get_den() != 1) {
      throw FieldMismatch("non-integral rational " + s.str() + " cannot enter F_" + std::to_string(p));
    }
    s.p_ = p;
    s.reduce();
  };
  if (p_ == 0) {
    promote(*this, o.p_);
  } else if (o.p_ == 0) {
    promote(o, p_);
  } else {
    throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == o.p_) {
    v_ += o.v_;
  } else {
    Scalar rhs = o;
    unify(rhs);
    v_ += rhs.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == o.p_) {
    v_ -= o.v_;
  } else {
    Scalar rhs = o;
    unify(rhs);
    v_ -= rhs.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == o.p_) {
    v_ *= o.v_;
  } else {
    Scalar rhs = o;
    unify(rhs);
    v_ *= rhs.v_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar rhs = o;
  unify(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return rational(1 / v_);
  mpz_class inv;
  mpz_class mod(p_);
  mpz_invert(inv.get_mpz_t(), v_.get_num_mpz_t(), mod.get_mpz_t());
  return residue(inv, p_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.v_ == b.v_;
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x.v_ == y.v_;
}

std::string Scalar::str() const {
  if (p_ != 0) return "p" + v_.get_num().get_str();
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qhopf
