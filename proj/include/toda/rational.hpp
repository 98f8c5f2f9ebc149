#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "toda/errors.hpp"

namespace toda {

/// Arbitrary-precision rational, always in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
///
/// Thin value wrapper over GMP's mpq layer; the wrapper exists so the
/// canonical-form invariant holds by construction and so the string
/// encoding ("p/q", or "p" when q = 1) lives next to the type.
class BigRational {
 public:
  BigRational() : q_(0) {}
  BigRational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars embed
  BigRational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p", "p/q".  Throws BadInput on anything else.
  static BigRational parse(const std::string& text) {
    BigRational r;
    if (text.empty() || mpq_set_str(r.q_.get_mpq_t(), text.c_str(), 10) != 0)
      throw BadInput("unparsable rational: '" + text + "'");
    if (mpz_sgn(mpq_denref(r.q_.get_mpq_t())) == 0)
      throw DivisionByZero("rational with zero denominator: '" + text + "'");
    r.q_.canonicalize();
    return r;
  }

  std::string str() const { return q_.get_str(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  bool is_integer() const { return q_.get_den() == 1; }

  /// Fits-in-long integer value; only meaningful for small integers in tests.
  long to_long() const {
    if (!is_integer()) throw BadInput("to_long on non-integer rational");
    return static_cast<long>(q_.get_num().get_si());
  }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.q_ + b.q_);
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.q_ - b.q_);
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.q_ * b.q_);
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw DivisionByZero("rational division by zero");
    return BigRational(a.q_ / b.q_);
  }
  BigRational operator-() const { return BigRational(-q_); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

  BigRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return BigRational(1) / *this;
  }

  BigRational abs() const { return BigRational(::abs(q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.q_ < b.q_;
  }

  /// Exact square root if this is a square of a rational, else nullopt.
  std::optional<BigRational> exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class num = q_.get_num(), den = q_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    BigRational r;
    r.q_ = mpq_class(sn) / mpq_class(sd);
    r.q_.canonicalize();
    return r;
  }

  // Integer content helpers for the primitive-PRS gcd fast path.
  const mpq_class& raw() const { return q_; }
  static BigRational from_raw(mpq_class q) {
    q.canonicalize();
    BigRational r;
    r.q_ = std::move(q);
    return r;
  }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline std::string to_string(const BigRational& r) { return r.str(); }

}  // namespace toda
