#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "toda/errors.hpp"
#include "toda/rational.hpp"

namespace toda {

/// Dense univariate polynomial over an exact field F, coefficients stored
/// ascending in degree.  The zero polynomial is the empty sequence; the
/// leading coefficient of a nonzero polynomial is never zero.
///
/// degree() returns -1 for the zero polynomial.  All comparisons against
/// that sentinel follow the usual deg 0 < deg p convention, which works
/// out with plain ints because real degrees are >= 0.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const F& constant) {  // NOLINT: implicit scalar embedding
    if (!constant.is_zero()) c_.push_back(constant);
  }
  Polynomial(std::initializer_list<F> ascending) : c_(ascending) { trim(); }

  static Polynomial from_coeffs(std::vector<F> ascending) {
    Polynomial p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
  }

  static Polynomial monomial(const F& coeff, int degree) {
    Polynomial p;
    if (!coeff.is_zero()) {
      p.c_.assign(static_cast<size_t>(degree) + 1, F(0));
      p.c_.back() = coeff;
    }
    return p;
  }

  /// The variable itself (x, or T for the inner level of the tower).
  static Polynomial variable() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  const std::vector<F>& coeffs() const { return c_; }

  /// Coefficient of x^i, zero-padded beyond the degree.
  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<size_t>(i)];
  }

  const F& leading() const {
    if (is_zero()) throw BadInput("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !is_zero() && leading().is_one(); }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int order() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
  }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  friend Polynomial operator*(const F& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    Polynomial r = p;
    for (auto& c : r.c_) c = s * c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
  Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
  Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

  Polynomial made_monic() const {
    if (is_zero()) throw DivisionByZero("cannot normalize zero polynomial");
    return leading().inverse() * *this;
  }

  /// Multiply by x^k.
  Polynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Polynomial r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), F(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Exact Euclidean division: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divrem(const Polynomial<F>& a,
                                                    const Polynomial<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial<F> q, r = a;
  const F inv_lead = b.leading().inverse();
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    F c = r.leading() * inv_lead;
    int k = r.degree() - db;
    Polynomial<F> term = Polynomial<F>::monomial(c, k);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

template <class F>
Polynomial<F> operator/(const Polynomial<F>& a, const Polynomial<F>& b) {
  return poly_divrem(a, b).first;
}

template <class F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
  return poly_divrem(a, b).second;
}

/// Division that must be exact; a nonzero remainder is an internal bug.
template <class F>
Polynomial<F> divide_exact(const Polynomial<F>& a, const Polynomial<F>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw IdentityViolation("inexact polynomial division");
  return q;
}

template <class F>
bool divides(const Polynomial<F>& d, const Polynomial<F>& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

/// Monic gcd by the Euclidean algorithm, remainders normalized each
/// round to keep coefficient growth in check.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  if (a.is_zero() && b.is_zero())
    throw BadInput("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial<F> r = a % b;
    a = std::move(b);
    b = r.is_zero() ? r : r.made_monic();
  }
  return a.made_monic();
}

/// gcd over Q[x] via integer primitive PRS: clears denominators and runs
/// pseudo-division over Z with content stripping, which keeps the
/// intermediate numerators far smaller than rational Euclid does.
inline Polynomial<BigRational> poly_gcd(Polynomial<BigRational> a,
                                        Polynomial<BigRational> b) {
  if (a.is_zero() && b.is_zero())
    throw BadInput("gcd of two zero polynomials");
  if (a.is_zero()) return b.made_monic();
  if (b.is_zero()) return a.made_monic();

  auto to_int = [](const Polynomial<BigRational>& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs())
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.raw().get_den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
      z.push_back(c.raw().get_num() * (lcm_den / c.raw().get_den()));
    return z;
  };
  auto strip_content = [](std::vector<mpz_class>& z) {
    mpz_class g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0)
      for (auto& c : z) c /= g;
  };

  std::vector<mpz_class> u = to_int(a), v = to_int(b);
  strip_content(u);
  strip_content(v);
  if (u.size() < v.size()) std::swap(u, v);

  while (!v.empty()) {
    // pseudo-remainder of u by v
    std::vector<mpz_class> r = u;
    const mpz_class& lv = v.back();
    int dv = static_cast<int>(v.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dv && !r.empty()) {
      int k = static_cast<int>(r.size()) - 1 - dv;
      mpz_class c = r.back();
      for (auto& x : r) x *= lv;
      for (int i = 0; i <= dv; ++i) r[static_cast<size_t>(i + k)] -= c * v[static_cast<size_t>(i)];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    strip_content(r);
    u = std::move(v);
    v = std::move(r);
  }

  std::vector<BigRational> out;
  out.reserve(u.size());
  for (const auto& z : u) out.push_back(BigRational::from_raw(mpq_class(z)));
  return Polynomial<BigRational>::from_coeffs(std::move(out)).made_monic();
}

/// Extended gcd: returns (g, c1, c2) with g monic and g = c1*a + c2*b.
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> xgcd2(
    const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero() && b.is_zero())
    throw BadInput("extended gcd of two zero polynomials");
  using P = Polynomial<F>;
  P r0 = a, r1 = b;
  P s0(F(1)), s1(F(0));
  P t0(F(0)), t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = r0.leading().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

/// Three-term extended gcd: s = f1*a + f2*b + f3*c, s monic, via two
/// nested two-term calls.  Cofactors are one valid Bezout triple, not a
/// normal form.
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>, Polynomial<F>> xgcd3(
    const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  using P = Polynomial<F>;
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw BadInput("extended gcd of three zero polynomials");
  if (a.is_zero() && b.is_zero()) {
    const F inv = c.leading().inverse();
    return {inv * c, P(F(0)), P(F(0)), P(inv)};
  }
  auto [g2, alpha, beta] = xgcd2(a, b);
  if (c.is_zero()) return {g2, alpha, beta, P(F(0))};
  auto [g3, gamma, delta] = xgcd2(g2, c);
  return {g3, gamma * alpha, gamma * beta, delta};
}

inline std::optional<BigRational> exact_sqrt_scalar(const BigRational& r) {
  return r.exact_sqrt();
}

/// Polynomial square root, exact or nothing.  Coefficients are solved
/// from the top down: matching x^(m+i) gives a linear equation for q_i.
template <class F>
std::optional<Polynomial<F>> poly_sqrt(const Polynomial<F>& p) {
  if (p.is_zero()) return Polynomial<F>();
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead = exact_sqrt_scalar(p.leading());
  if (!lead) return std::nullopt;
  const int m = p.degree() / 2;
  std::vector<F> q(static_cast<size_t>(m) + 1, F(0));
  q[static_cast<size_t>(m)] = *lead;
  const F two_lead = *lead + *lead;
  for (int i = m - 1; i >= 0; --i) {
    F acc = p.coeff(m + i);
    for (int j = i + 1; j <= m - 1; ++j)
      acc -= q[static_cast<size_t>(j)] * q[static_cast<size_t>(m + i - j)];
    q[static_cast<size_t>(i)] = acc / two_lead;
  }
  Polynomial<F> cand = Polynomial<F>::from_coeffs(std::move(q));
  if (cand * cand == p) return cand;
  return std::nullopt;
}

template <class F>
std::string to_string(const Polynomial<F>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    F c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    if (i == 1) out += "*" + var;
    if (i > 1) out += "*" + var + "^" + std::to_string(i);
  }
  return out;
}

}  // namespace toda
