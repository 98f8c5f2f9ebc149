#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toda/errors.hpp"

namespace toda::bbs {

/// Cyclic arrangement of N boxes, each empty (0) or holding a ball (1).
/// The periodic flow is well defined only below density 1/2; the step
/// functions enforce that.
struct BoxBallState {
  std::vector<uint8_t> cells;

  BoxBallState() = default;
  explicit BoxBallState(std::vector<uint8_t> c) : cells(std::move(c)) {}

  static BoxBallState parse(const std::string& bits);
  std::string str() const;

  int size() const { return static_cast<int>(cells.size()); }
  int ball_count() const;
  /// Number of maximal cyclic runs of 1s.
  int soliton_count() const;

  friend bool operator==(const BoxBallState& a, const BoxBallState& b) {
    return a.cells == b.cells;
  }
};

/// One step of the periodic box-ball flow by cyclic 10-elimination:
/// repeatedly pair each ball with the cyclically nearest unpaired empty
/// box to its right among adjacent "10" patterns, remove the pair, and
/// when every ball is paired move each ball into its box.
BoxBallState bbs_step(const BoxBallState& s);

/// Independent oracle: move each ball once, leftmost unmoved first, to
/// the nearest empty box rightward (cyclically).  Must agree with
/// bbs_step on every valid state.
BoxBallState bbs_step_sequential(const BoxBallState& s);

/// Soliton lengths and gaps: Q_i = length of the i-th maximal run of 1s
/// read cyclically from the start of some soliton, W_i = length of the
/// following run of 0s.
struct RunLengths {
  std::vector<std::int64_t> Q, W;
};
RunLengths run_lengths(const BoxBallState& s);

}  // namespace toda::bbs
