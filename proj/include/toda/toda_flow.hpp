#pragma once

#include <string>
#include <vector>

#include "toda/errors.hpp"
#include "toda/field.hpp"

namespace toda {

/// Phase point (I_1..I_n, V_1..V_n) of the discrete periodic Toda flow.
/// Indices are cyclic: at1/vt1 accept any integer and reduce mod n, which
/// realizes the periodic boundary condition structurally.
template <class F>
struct TodaState {
  int n = 0;
  std::vector<F> I;  // size n, stored 0-based; site i in 1..n is I[i-1]
  std::vector<F> V;

  TodaState() = default;
  TodaState(std::vector<F> i_vals, std::vector<F> v_vals)
      : n(static_cast<int>(i_vals.size())), I(std::move(i_vals)), V(std::move(v_vals)) {
    if (n < 2 || static_cast<int>(V.size()) != n)
      throw BadInput("Toda state needs matching I and V of length >= 2");
  }

  static constexpr FieldTag field = FieldInfo<F>::tag;

  int wrap(int site) const {
    int r = (site - 1) % n;
    if (r < 0) r += n;
    return r;
  }

  /// 1-based cyclic accessors, matching the index conventions of the flow.
  const F& at_I(int site) const { return I[static_cast<size_t>(wrap(site))]; }
  const F& at_V(int site) const { return V[static_cast<size_t>(wrap(site))]; }

  F product_I() const {
    F p(1);
    for (const auto& x : I) p = p * x;
    return p;
  }
  F product_V() const {
    F p(1);
    for (const auto& x : V) p = p * x;
    return p;
  }

  friend bool operator==(const TodaState& a, const TodaState& b) {
    return a.n == b.n && a.I == b.I && a.V == b.V;
  }
};

/// sigma^k: site i picks up the values of site i+k.
template <class F>
TodaState<F> cyclic_shift(const TodaState<F>& s, int k) {
  TodaState<F> r = s;
  for (int i = 1; i <= s.n; ++i) {
    r.I[static_cast<size_t>(i - 1)] = s.at_I(i + k);
    r.V[static_cast<size_t>(i - 1)] = s.at_V(i + k);
  }
  return r;
}

/// One step of the discrete periodic Toda flow, computed by the explicit
/// closed form
///
///   I'_i = V_i + I_i * (1 - prod(V)/prod(I)) / (1 + sum_k prod_{l=1..k} V_{i-l}/I_{i-l})
///   V'_i = I_{i+1} V_i / I'_i
///
/// so the cyclically implicit recursion never has to be unwound.  The
/// recursive update rules serve as the independent oracle
/// (toda_step_recursive_check).  Throws DomainExit, with distinct
/// reasons, when the state has a zero I_i, when a closed-form denominator
/// vanishes, or when some I'_i lands on zero.
template <class F>
TodaState<F> toda_step(const TodaState<F>& s) {
  const int n = s.n;
  for (int i = 1; i <= n; ++i)
    if (s.at_I(i).is_zero())
      throw DomainExit(DomainExit::Reason::zero_entry, i,
                       "I_" + std::to_string(i) + " is zero");

  F ratio = s.product_V() / s.product_I();
  const F one(1);
  const F numerator_factor = one - ratio;

  TodaState<F> out = s;
  for (int i = 1; i <= n; ++i) {
    // denom = 1 + sum_{k=1}^{n-1} prod_{l=1}^{k} V_{i-l}/I_{i-l}
    F denom(1);
    F running(1);
    for (int k = 1; k <= n - 1; ++k) {
      running = running * (s.at_V(i - k) / s.at_I(i - k));
      denom = denom + running;
    }
    if (denom.is_zero())
      throw DomainExit(DomainExit::Reason::vanishing_denominator, i,
                       "closed-form denominator vanishes at site " + std::to_string(i));
    F next_I = s.at_V(i) + s.at_I(i) * numerator_factor / denom;
    if (next_I.is_zero())
      throw DomainExit(DomainExit::Reason::zero_next_entry, i,
                       "flow leaves the domain: I'_" + std::to_string(i) + " = 0");
    out.I[static_cast<size_t>(i - 1)] = next_I;
  }
  for (int i = 1; i <= n; ++i)
    out.V[static_cast<size_t>(i - 1)] =
        s.at_I(i + 1) * s.at_V(i) / out.at_I(i);
  return out;
}

/// Independent oracle for toda_step: checks the defining recursive rules
///   I'_i = I_i + V_i - V'_{i-1}   and   V'_i = I_{i+1} V_i / I'_i
/// cyclically for all i.
template <class F>
bool toda_step_recursive_check(const TodaState<F>& s, const TodaState<F>& s_next) {
  if (s.n != s_next.n) throw BadInput("recursive check on mismatched sizes");
  for (int i = 1; i <= s.n; ++i) {
    if (s_next.at_I(i) != s.at_I(i) + s.at_V(i) - s_next.at_V(i - 1)) return false;
    if (s_next.at_I(i).is_zero()) return false;
    if (s_next.at_V(i) != s.at_I(i + 1) * s.at_V(i) / s_next.at_I(i)) return false;
  }
  return true;
}

}  // namespace toda
