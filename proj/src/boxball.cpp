#include "toda/boxball.hpp"

namespace toda::bbs {

BoxBallState BoxBallState::parse(const std::string& bits) {
  BoxBallState s;
  s.cells.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw BadInput("box-ball state must be a string of 0s and 1s");
    s.cells.push_back(ch == '1' ? 1 : 0);
  }
  return s;
}

std::string BoxBallState::str() const {
  std::string out;
  out.reserve(cells.size());
  for (uint8_t c : cells) out.push_back(c ? '1' : '0');
  return out;
}

int BoxBallState::ball_count() const {
  int n = 0;
  for (uint8_t c : cells) n += c;
  return n;
}

int BoxBallState::soliton_count() const {
  const int n = size();
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (cells[i] == 1 && cells[(i + n - 1) % n] == 0) ++count;
  if (count == 0 && n > 0 && cells[0] == 1) return 1;  // all ones
  return count;
}

namespace {

void require_subcritical(const BoxBallState& s) {
  if (2 * s.ball_count() >= s.size())
    throw BadInput("periodic box-ball flow needs fewer balls than N/2");
}

}  // namespace

BoxBallState bbs_step(const BoxBallState& s) {
  require_subcritical(s);
  const int n = s.size();
  std::vector<bool> active(n, true);
  std::vector<int> moves_to(n, -1);
  int unpaired_balls = s.ball_count();

  while (unpaired_balls > 0) {
    // collect the indices still in play, in cyclic order
    std::vector<int> idx;
    idx.reserve(n);
    for (int i = 0; i < n; ++i)
      if (active[i]) idx.push_back(i);
    // pair every adjacent "10" in the reduced cyclic word, simultaneously
    std::vector<std::pair<int, int>> pairs;
    const int m = static_cast<int>(idx.size());
    for (int p = 0; p < m; ++p) {
      int i = idx[p], j = idx[(p + 1) % m];
      if (s.cells[i] == 1 && s.cells[j] == 0) pairs.emplace_back(i, j);
    }
    if (pairs.empty())
      throw IdentityViolation("10-elimination stalled below critical density");
    for (auto [ball, box] : pairs) {
      moves_to[ball] = box;
      active[ball] = active[box] = false;
      --unpaired_balls;
    }
  }

  BoxBallState out;
  out.cells.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (moves_to[i] >= 0) out.cells[moves_to[i]] = 1;
  return out;
}

BoxBallState bbs_step_sequential(const BoxBallState& s) {
  require_subcritical(s);
  const int n = s.size();
  // Each ball moves once, in index order, to the nearest box rightward
  // (cyclically) that was empty in the starting configuration and is not
  // already taken.  Destinations are pre-step empties: every ball moves
  // simultaneously, so a cell vacated in this step is never a target.
  std::vector<bool> taken(static_cast<size_t>(n), false);
  BoxBallState out;
  out.cells.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (s.cells[static_cast<size_t>(i)] != 1) continue;
    for (int step = 1; step < n; ++step) {
      const auto j = static_cast<size_t>((i + step) % n);
      if (s.cells[j] == 0 && !taken[j]) {
        taken[j] = true;
        out.cells[j] = 1;
        break;
      }
    }
  }
  return out;
}

RunLengths run_lengths(const BoxBallState& s) {
  const int n = s.size();
  if (s.ball_count() == 0 || s.ball_count() == n)
    throw BadInput("run-length coordinates need at least one ball and one empty box");
  int start = -1;
  for (int i = 0; i < n; ++i)
    if (s.cells[i] == 1 && s.cells[(i + n - 1) % n] == 0) {
      start = i;
      break;
    }
  RunLengths rl;
  int pos = 0;
  while (pos < n) {
    std::int64_t q = 0, w = 0;
    while (q < n && s.cells[(start + pos + q) % n] == 1) ++q;
    pos += static_cast<int>(q);
    while (w < n && pos + w < n && s.cells[(start + pos + w) % n] == 0) ++w;
    pos += static_cast<int>(w);
    rl.Q.push_back(q);
    rl.W.push_back(w);
  }
  return rl;
}

}  // namespace toda::bbs
