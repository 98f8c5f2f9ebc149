#pragma once

#include <map>
#include <string>
#include <vector>

#include "toda/polynomial.hpp"

namespace toda {

/// Laurent polynomial in the spectral parameter z whose coefficients are
/// polynomials in x: finitely many z-exponents (possibly negative), no
/// stored zero coefficient.
template <class F>
class Laurent {
 public:
  using Poly = Polynomial<F>;

  Laurent() = default;
  Laurent(const Poly& p) {  // NOLINT: x-polynomials embed at z^0
    if (!p.is_zero()) parts_[0] = p;
  }

  static Laurent z_power(const F& coeff, int zexp) {
    Laurent l;
    if (!coeff.is_zero()) l.parts_[zexp] = Poly(coeff);
    return l;
  }

  static Laurent term(const Poly& p, int zexp) {
    Laurent l;
    if (!p.is_zero()) l.parts_[zexp] = p;
    return l;
  }

  bool is_zero() const { return parts_.empty(); }

  /// Coefficient of z^k (an x-polynomial).
  Poly at(int zexp) const {
    auto it = parts_.find(zexp);
    return it == parts_.end() ? Poly() : it->second;
  }

  const std::map<int, Poly>& parts() const { return parts_; }

  /// Multiply by z^k.
  Laurent shifted_z(int k) const {
    Laurent r;
    for (const auto& [e, p] : parts_) r.parts_[e + k] = p;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, p] : b.parts_) {
      auto it = r.parts_.find(e);
      if (it == r.parts_.end()) {
        r.parts_[e] = p;
      } else {
        it->second += p;
        if (it->second.is_zero()) r.parts_.erase(it);
      }
    }
    return r;
  }

  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, p] : parts_) r.parts_[e] = -p;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, pa] : a.parts_)
      for (const auto& [eb, pb] : b.parts_) {
        Poly prod = pa * pb;
        if (prod.is_zero()) continue;
        auto it = r.parts_.find(ea + eb);
        if (it == r.parts_.end()) {
          r.parts_[ea + eb] = prod;
        } else {
          it->second += prod;
          if (it->second.is_zero()) r.parts_.erase(it);
        }
      }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  std::map<int, Poly> parts_;
};

template <class F>
using LaurentMatrix = std::vector<std::vector<Laurent<F>>>;

template <class F>
LaurentMatrix<F> laurent_mat_mul(const LaurentMatrix<F>& a, const LaurentMatrix<F>& b) {
  const size_t n = a.size(), m = b[0].size(), k = b.size();
  LaurentMatrix<F> r(n, std::vector<Laurent<F>>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < k; ++l) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

/// Exact determinant by cofactor expansion along the first row.  Oracle
/// scale only (n <= 8); the production path for trimmed characteristic
/// matrices is the three-term recurrence in spectral.hpp.
template <class F>
Laurent<F> laurent_det(const LaurentMatrix<F>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw BadInput("laurent_det needs a square matrix");
  if (n > 8) throw BadInput("laurent_det oracle limited to n <= 8");
  if (n == 0) return Laurent<F>(Polynomial<F>(F(1)));
  if (n == 1) return m[0][0];
  Laurent<F> det;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    LaurentMatrix<F> sub(n - 1, std::vector<Laurent<F>>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    Laurent<F> term = m[0][j] * laurent_det(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace toda
