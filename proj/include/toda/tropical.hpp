#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "toda/boxball.hpp"
#include "toda/rational_function.hpp"
#include "toda/toda_flow.hpp"

namespace toda::bbs {

/// Tropical Toda phase point (Q_1..Q_n, W_1..W_n), cyclic indexing.
/// Entries are integers; states produced by eta have all entries >= 1.
struct TropicalState {
  std::vector<std::int64_t> Q, W;

  TropicalState() = default;
  TropicalState(std::vector<std::int64_t> q, std::vector<std::int64_t> w)
      : Q(std::move(q)), W(std::move(w)) {
    if (Q.empty() || Q.size() != W.size())
      throw BadInput("tropical state needs matching nonempty Q and W");
  }

  int n() const { return static_cast<int>(Q.size()); }

  std::int64_t at_Q(int site) const { return Q[wrap(site)]; }
  std::int64_t at_W(int site) const { return W[wrap(site)]; }

  friend bool operator==(const TropicalState& a, const TropicalState& b) {
    return a.Q == b.Q && a.W == b.W;
  }

 private:
  size_t wrap(int site) const {
    int n_ = n();
    int r = (site - 1) % n_;
    if (r < 0) r += n_;
    return static_cast<size_t>(r);
  }
};

/// min-plus Toda update:
///   Q'_i = min(W_i, Q_i + X_i),  W'_i = Q_{i+1} + W_i - Q'_i,
///   X_i  = max over k in {0..n-1} of sum_{l=1..k} (Q_{i-l} - W_{i-l}).
inline TropicalState tropical_step(const TropicalState& s) {
  const int n = s.n();
  TropicalState out = s;
  for (int i = 1; i <= n; ++i) {
    std::int64_t x = 0, partial = 0;
    for (int k = 1; k <= n - 1; ++k) {
      partial += s.at_Q(i - k) - s.at_W(i - k);
      x = std::max(x, partial);
    }
    out.Q[static_cast<size_t>(i - 1)] = std::min(s.at_W(i), s.at_Q(i) + x);
  }
  for (int i = 1; i <= n; ++i)
    out.W[static_cast<size_t>(i - 1)] =
        s.at_Q(i + 1) + s.at_W(i) - out.Q[static_cast<size_t>(i - 1)];
  return out;
}

/// sigma^k on tropical states.
inline TropicalState rotate(const TropicalState& s, int k) {
  const int n = s.n();
  TropicalState out = s;
  for (int i = 1; i <= n; ++i) {
    out.Q[static_cast<size_t>(i - 1)] = s.at_Q(i + k);
    out.W[static_cast<size_t>(i - 1)] = s.at_W(i + k);
  }
  return out;
}

/// Rotation orbit representative: lexicographically least rotation of the
/// interleaved word (Q_1, W_1, ..., Q_n, W_n).
struct CyclicClass {
  TropicalState representative;

  friend bool operator==(const CyclicClass& a, const CyclicClass& b) {
    return a.representative == b.representative;
  }
};

inline std::vector<std::int64_t> interleaved(const TropicalState& s) {
  std::vector<std::int64_t> word;
  word.reserve(2 * s.Q.size());
  for (size_t i = 0; i < s.Q.size(); ++i) {
    word.push_back(s.Q[i]);
    word.push_back(s.W[i]);
  }
  return word;
}

inline CyclicClass cyclic_canonicalize(const TropicalState& s) {
  TropicalState best = s;
  std::vector<std::int64_t> best_word = interleaved(s);
  for (int k = 1; k < s.n(); ++k) {
    TropicalState cand = rotate(s, k);
    std::vector<std::int64_t> word = interleaved(cand);
    if (word < best_word) {
      best = cand;
      best_word = std::move(word);
    }
  }
  return {best};
}

/// Finds k with rotate(a, k) == b, or (false, -1).
inline std::pair<bool, int> equal_mod_sigma(const TropicalState& a,
                                            const TropicalState& b) {
  if (a.n() != b.n()) return {false, -1};
  for (int k = 0; k < a.n(); ++k)
    if (rotate(a, k) == b) return {true, k};
  return {false, -1};
}

/// Soliton embedding eta: box-ball state -> cyclic class of (Q, W).
inline CyclicClass eta(const BoxBallState& s) {
  RunLengths rl = run_lengths(s);
  return cyclic_canonicalize(TropicalState(std::move(rl.Q), std::move(rl.W)));
}

/// Monomial lift into the Q(T)-valued Toda phase space:
/// I_i = T^{Q_i}, V_i = T^{W_i}.  Exponents must be >= 0.
inline TodaState<RationalFunction> t_lift(const TropicalState& s) {
  std::vector<RationalFunction> I, V;
  I.reserve(s.Q.size());
  V.reserve(s.W.size());
  for (std::int64_t q : s.Q) {
    if (q < 0) throw BadInput("t_lift needs nonnegative exponents");
    I.push_back(RationalFunction::t_power(static_cast<int>(q)));
  }
  for (std::int64_t w : s.W) {
    if (w < 0) throw BadInput("t_lift needs nonnegative exponents");
    V.push_back(RationalFunction::t_power(static_cast<int>(w)));
  }
  return TodaState<RationalFunction>(std::move(I), std::move(V));
}

/// Componentwise T-adic valuation of a Q(T)-valued Toda state.  Rejects
/// zero entries before taking valuations, so the +infinity sentinel of
/// t_adic_valuation never leaks out of here.
inline TropicalState tropicalize(const TodaState<RationalFunction>& s) {
  std::vector<std::int64_t> Q, W;
  Q.reserve(s.I.size());
  W.reserve(s.V.size());
  for (const auto& x : s.I) {
    if (x.is_zero()) throw BadInput("tropicalization of a zero entry");
    Q.push_back(t_adic_valuation(x));
  }
  for (const auto& x : s.V) {
    if (x.is_zero()) throw BadInput("tropicalization of a zero entry");
    W.push_back(t_adic_valuation(x));
  }
  return TropicalState(std::move(Q), std::move(W));
}

}  // namespace toda::bbs
