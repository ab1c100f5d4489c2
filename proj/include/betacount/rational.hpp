#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "betacount/errors.hpp"

namespace betacount {

// Non-negative rational, arbitrary precision, always in lowest terms.
//
// Weights in this solver are never negative (negative weights would break the
// zero-propagation arguments the elimination step relies on), so the type
// admits no subtraction and rejects negative values at every entry point.
// Every arithmetic result is canonicalized immediately.
class Rational {
 public:
  Rational() : v_(0) {}

  Rational(unsigned long num) : v_(num) {}  // NOLINT: implicit by design

  Rational(unsigned long num, unsigned long den) : v_(num, den) {
    if (den == 0) throw InternalError("Rational: zero denominator");
    v_.canonicalize();
  }

  explicit Rational(const mpz_class& num) : v_(num) {
    if (num < 0) throw InternalError("Rational: negative value");
  }

  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den <= 0) throw InternalError("Rational: non-positive denominator");
    if (num < 0) throw InternalError("Rational: negative value");
    v_.canonicalize();
  }

  // Parses "num" or "num/den" with num >= 0 and den > 0.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  // True iff the value is 2^k for some k >= 0; reports k.
  bool is_power_of_two(unsigned long* exponent = nullptr) const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InternalError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend const Rational& max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
  }

  // base^exp as a rational.
  static Rational power(unsigned long base, unsigned long exp) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
    return Rational(p);
  }

  // "num/den", always with the explicit denominator.
  std::string str() const;

 private:
  mpq_class v_;
};

}  // namespace betacount
