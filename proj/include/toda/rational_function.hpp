#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "toda/polynomial.hpp"
#include "toda/rational.hpp"

namespace toda {

/// Element of Q(T): num/den with num, den in Q[T], den monic,
/// gcd(num, den) = 1, zero stored as 0/1.
class RationalFunction {
 public:
  using Poly = Polynomial<BigRational>;

  RationalFunction() : num_(), den_(BigRational(1)) {}
  RationalFunction(long n) : num_(BigRational(n)), den_(BigRational(1)) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(BigRational(1)) {}  // NOLINT

  RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = Poly();
      den_ = Poly(BigRational(1));
      return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
    const BigRational lead = den.leading();
    den_ = lead.inverse() * den;
    num_ = lead.inverse() * num;
  }

  static RationalFunction from_poly(Poly p) {
    RationalFunction r;
    r.num_ = std::move(p);
    return r;
  }

  /// T^k for k >= 0.
  static RationalFunction t_power(int k) {
    return from_poly(Poly::monomial(BigRational(1), k));
  }

  static RationalFunction variable() { return t_power(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
  RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
  RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
  RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  Poly num_;
  Poly den_;  // monic
};

/// +infinity sentinel for the valuation of zero; callers that cannot
/// tolerate it must reject zero inputs first.
inline constexpr std::int64_t kValuationInfinity =
    std::numeric_limits<std::int64_t>::max();

/// T-adic valuation: lowest T-exponent of num minus lowest of den.
inline std::int64_t t_adic_valuation(const RationalFunction& r) {
  if (r.is_zero()) return kValuationInfinity;
  return r.num().order() - r.den().order();
}

inline std::optional<RationalFunction> exact_sqrt_scalar(const RationalFunction& r) {
  auto n = poly_sqrt(r.num());
  if (!n) return std::nullopt;
  auto d = poly_sqrt(r.den());
  if (!d) return std::nullopt;
  return RationalFunction(*n, *d);
}

inline std::string to_string(const RationalFunction& r) {
  if (r.den().is_one()) return "(" + to_string(r.num(), "T") + ")";
  return "(" + to_string(r.num(), "T") + ")/(" + to_string(r.den(), "T") + ")";
}

}  // namespace toda
