#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/bounds.hpp"
#include "kakeya/kakeya.hpp"

namespace kakeya {

struct SearchResult {
  std::uint32_t q = 0, n = 0;
  std::size_t min_size = 0;
  bool exact = false;  // false means heuristic (budget exhausted or greedy)
  std::vector<std::uint64_t> witness;  // point encodings, sorted
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

namespace detail {

// (size, witness encoding sequence) total order for deterministic reporting
inline bool better_witness(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct BranchState {
  const Field* f;
  std::uint32_t n;
  std::vector<Direction> dirs;
  std::vector<std::vector<std::vector<std::uint64_t>>> lines;  // [dir][base] -> codes
  std::vector<std::uint64_t> best;  // best witness so far
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted_cleanly = true;
};

inline void branch(BranchState& st, std::size_t di, std::vector<std::uint64_t>& cur) {
  if (++st.nodes > st.budget) { st.exhausted_cleanly = false; return; }
  if (cur.size() > st.best.size()) return;  // prune: lines never remove points
  if (di == st.dirs.size()) {
    if (better_witness(cur, st.best)) st.best = cur;
    return;
  }
  for (const auto& line : st.lines[di]) {
    std::vector<std::uint64_t> next = cur;
    for (auto code : line)
      if (!std::binary_search(cur.begin(), cur.end(), code)) next.push_back(code);
    std::sort(next.begin(), next.end());
    branch(st, di + 1, next);
    if (!st.exhausted_cleanly) return;
  }
}

}  // namespace detail

// Exact minimum Kakeya size by branch-and-bound over one line per canonical
// direction; complete because every Kakeya set contains such a union and the
// union itself is Kakeya.
inline SearchResult minimal_kakeya_exact(const Field& f, std::uint32_t n,
                                         const Limits& limits = {}) {
  auto t0 = std::chrono::steady_clock::now();
  detail::BranchState st;
  st.f = &f;
  st.n = n;
  st.dirs = canonical_directions(f, n);
  if (ipow(f.q(), n) > limits.max_points)
    throw resource_error("q^n exceeds the exact-search limit; use the greedy mode");
  st.lines.reserve(st.dirs.size());
  for (const auto& d : st.dirs) {
    std::vector<std::vector<std::uint64_t>> per_dir;
    for (const auto& y : transversal_points(f, n, d)) {
      auto codes = line_codes(f, y, d.v);
      std::sort(codes.begin(), codes.end());
      per_dir.push_back(std::move(codes));
    }
    st.lines.push_back(std::move(per_dir));
  }
  st.best = PointSet::full(f, n).codes();  // full set is always Kakeya
  st.budget = limits.node_budget;
  std::vector<std::uint64_t> cur;
  // seed the incumbent with the first leaf so the size prune has a target
  detail::branch(st, 0, cur);

  SearchResult out;
  out.q = f.q();
  out.n = n;
  out.min_size = st.best.size();
  out.exact = st.exhausted_cleanly;
  out.witness = st.best;
  out.nodes = st.nodes;
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
  PointSet K(f, n, out.witness);
  if (!is_kakeya(K).ok) throw usage_error("internal: search witness is not Kakeya");
  return out;
}

// Exhaustive subset-enumeration oracle, only for q^n <= 16.
inline std::size_t minimal_kakeya_bruteforce(const Field& f, std::uint32_t n) {
  std::uint64_t total = ipow(f.q(), n);
  if (total > 16) throw resource_error("subset enumeration limited to q^n <= 16");
  std::size_t best = static_cast<std::size_t>(total);
  for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
    std::size_t sz = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (sz >= best) continue;
    std::vector<std::uint64_t> codes;
    for (std::uint64_t i = 0; i < total; ++i)
      if (mask & (1ull << i)) codes.push_back(i);
    PointSet K(f, n, std::move(codes));
    if (is_kakeya(K).ok) best = sz;
  }
  return best;
}

// Best-of-restarts greedy: random direction order per restart, per direction
// the line adding fewest new points (smallest base encoding on ties).
inline SearchResult minimal_kakeya_greedy(const Field& f, std::uint32_t n,
                                          std::uint32_t restarts, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  auto dirs = canonical_directions(f, n);
  Rng rng(seed);
  std::vector<std::uint64_t> best = PointSet::full(f, n).codes();
  for (std::uint32_t run = 0; run < restarts; ++run) {
    std::vector<std::size_t> order(dirs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i-- > 1;)
      std::swap(order[i], order[rng.below(i + 1)]);  // Fisher-Yates, portable rng
    PointSet K(f, n);
    for (auto di : order) {
      const auto& d = dirs[di];
      auto bases = transversal_points(f, n, d);
      std::size_t best_new = SIZE_MAX, pick = 0;
      for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        std::size_t added = 0;
        for (auto code : line_codes(f, bases[bi], d.v))
          if (!K.contains(code)) ++added;
        if (added < best_new) { best_new = added; pick = bi; }
      }
      for (auto code : line_codes(f, bases[pick], d.v)) K.insert(code);
    }
    if (detail::better_witness(K.codes(), best)) best = K.codes();
  }
  SearchResult out;
  out.q = f.q();
  out.n = n;
  out.min_size = best.size();
  out.exact = false;
  out.witness = std::move(best);
  out.nodes = restarts;
  out.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
  PointSet K(f, n, out.witness);
  if (!is_kakeya(K).ok) throw usage_error("internal: greedy witness is not Kakeya");
  return out;
}

}  // namespace kakeya
