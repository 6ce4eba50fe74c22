#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/pointset.hpp"
#include "kakeya/util.hpp"

namespace kakeya {

// Canonical projective direction: first nonzero coordinate equals 1.
// There are (q^n - 1)/(q - 1) of them. The line family {L_{y,x} : y} is the
// same for x and c*x, so canonical representatives carry all the information.
struct Direction {
  std::vector<std::uint32_t> v;
  std::uint32_t pivot = 0;  // index of the first nonzero coordinate (value 1)
};

inline bool is_canonical_direction(const std::vector<std::uint32_t>& v) {
  for (auto c : v) {
    if (c == 0) continue;
    return c == 1;
  }
  return false;  // zero vector is not a direction
}

// All canonical directions in increasing point-encoding order.
inline std::vector<Direction> canonical_directions(const Field& f, std::uint32_t n) {
  std::vector<Direction> out;
  std::uint64_t total = ipow(f.q(), n);
  out.reserve((total - 1) / (f.q() - 1));
  for (std::uint64_t code = 1; code < total; ++code) {
    auto v = decode_point(code, f.q(), n);
    if (!is_canonical_direction(v)) continue;
    std::uint32_t pivot = 0;
    while (v[pivot] == 0) ++pivot;
    out.push_back(Direction{std::move(v), pivot});
  }
  return out;
}

// Canonical representative of a nonzero vector: scale so the first nonzero
// coordinate becomes 1.
inline std::vector<std::uint32_t> canonicalize_direction(
    const Field& f, const std::vector<std::uint32_t>& x) {
  std::uint32_t lead = 0;
  for (auto c : x)
    if (c != 0) { lead = c; break; }
  if (lead == 0) throw usage_error("zero vector has no direction");
  std::uint32_t s = f.inv(lead);
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(s, x[i]);
  return out;
}

// The q points of the line y + a*x, as encodings in parameter order a = 0..q-1.
inline std::vector<std::uint64_t> line_codes(const Field& f,
                                             const std::vector<std::uint32_t>& y,
                                             const std::vector<std::uint32_t>& x) {
  std::uint32_t n = static_cast<std::uint32_t>(y.size());
  std::vector<std::uint64_t> out;
  out.reserve(f.q());
  std::vector<std::uint32_t> pt(n);
  for (std::uint32_t a = 0; a < f.q(); ++a) {
    for (std::uint32_t i = 0; i < n; ++i) pt[i] = f.add(y[i], f.mul(a, x[i]));
    out.push_back(encode_point(pt, f.q()));
  }
  return out;
}

// One base point per parallel class of lines in direction d: points whose
// pivot coordinate is zero (each line crosses the hyperplane x_pivot = 0
// exactly once since d_pivot = 1). q^{n-1} representatives, encoding order.
inline std::vector<std::vector<std::uint32_t>> transversal_points(
    const Field& f, std::uint32_t n, const Direction& d) {
  std::uint64_t count = ipow(f.q(), n - 1);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(count);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    std::vector<std::uint32_t> y(n, 0);
    std::uint64_t r = rank;
    for (std::uint32_t i = n; i-- > 0;) {
      if (i == d.pivot) continue;
      y[i] = static_cast<std::uint32_t>(r % f.q());
      r /= f.q();
    }
    out.push_back(std::move(y));
  }
  return out;
}

struct KakeyaCheck {
  bool ok = false;
  // canonical direction encoding -> witness base point encoding
  std::map<std::uint64_t, std::uint64_t> witnesses;
  std::optional<std::vector<std::uint32_t>> failing_direction;
};

// K is Kakeya iff every canonical direction has a full line inside K.
// The zero direction is excluded: its "line" is a singleton.
inline KakeyaCheck is_kakeya(const PointSet& K, unsigned threads = 1) {
  const Field& f = K.field();
  auto dirs = canonical_directions(f, K.dim());
  std::vector<std::optional<std::uint64_t>> found(dirs.size());
  parallel_for(dirs.size(), threads, [&](std::size_t di) {
    const Direction& d = dirs[di];
    for (const auto& y : transversal_points(f, K.dim(), d)) {
      bool all_in = true;
      for (auto code : line_codes(f, y, d.v)) {
        if (!K.contains(code)) { all_in = false; break; }
      }
      if (all_in) {
        found[di] = encode_point(y, f.q());
        break;  // smallest-encoding witness
      }
    }
  });
  KakeyaCheck out;
  out.ok = true;
  for (std::size_t di = 0; di < dirs.size(); ++di) {
    if (found[di]) {
      out.witnesses[encode_point(dirs[di].v, f.q())] = *found[di];
    } else if (out.ok) {
      out.ok = false;
      out.failing_direction = dirs[di].v;
    }
  }
  return out;
}

struct ProfileEntry {
  std::vector<std::uint32_t> direction;  // canonical
  std::uint64_t best_base = 0;           // encoding of an achieving base point
  std::uint32_t count = 0;               // max over lines of |L ∩ K|, in [0, q]
};

// Per canonical direction: the maximum line intersection with K and an
// achieving base point (smallest encoding on ties).
inline std::vector<ProfileEntry> direction_profile(const PointSet& K,
                                                   unsigned threads = 1) {
  const Field& f = K.field();
  auto dirs = canonical_directions(f, K.dim());
  std::vector<ProfileEntry> out(dirs.size());
  parallel_for(dirs.size(), threads, [&](std::size_t di) {
    const Direction& d = dirs[di];
    ProfileEntry e;
    e.direction = d.v;
    bool first = true;
    for (const auto& y : transversal_points(f, K.dim(), d)) {
      std::uint32_t hits = 0;
      for (auto code : line_codes(f, y, d.v))
        if (K.contains(code)) ++hits;
      if (first || hits > e.count) {
        e.count = hits;
        e.best_base = encode_point(y, f.q());
        first = false;
      }
      if (e.count == f.q()) break;  // cannot improve
    }
    out[di] = std::move(e);
  });
  return out;
}

struct DeltaGammaCheck {
  bool ok = false;
  std::uint32_t threshold = 0;       // ceil(gamma * q)
  std::uint64_t line_set_size = 0;   // |L|: qualifying nonzero vectors
  std::uint64_t required = 0;        // ceil(delta * q^n)
  Ratio delta_max;                   // (q^n - 1)/q^n, the attainable maximum
  std::vector<ProfileEntry> profile;
};

// (δ,γ)-Kakeya test. L counts all nonzero vectors (scalar multiples of a
// canonical direction share the same max intersection, so each qualifying
// class contributes q-1 vectors). The zero vector can never qualify when
// the threshold exceeds 1, so |L| <= q^n - 1.
inline DeltaGammaCheck check_delta_gamma(const PointSet& K, const Ratio& delta,
                                         const Ratio& gamma, unsigned threads = 1) {
  if (delta.num <= 0 || gamma.num <= 0 || delta.num > delta.den || gamma.num > gamma.den)
    throw usage_error("delta and gamma must lie in (0, 1]");
  const Field& f = K.field();
  DeltaGammaCheck out;
  out.threshold = static_cast<std::uint32_t>(ceil_mul(f.q(), gamma));
  out.profile = direction_profile(K, threads);
  std::uint64_t qualifying = 0;
  for (const auto& e : out.profile)
    if (e.count >= out.threshold) ++qualifying;
  out.line_set_size = qualifying * (f.q() - 1);
  std::uint64_t space = ipow(f.q(), K.dim());
  out.required = static_cast<std::uint64_t>(ceil_mul(space, delta));
  out.delta_max = Ratio(static_cast<long long>(space) - 1, static_cast<long long>(space));
  out.ok = out.line_set_size >= out.required;
  return out;
}

// K' = { c*x : x in K, c in F }: the union of lines through the origin
// meeting K. Contains 0 whenever K is nonempty.
inline PointSet cone_closure(const PointSet& K) {
  const Field& f = K.field();
  std::vector<std::uint64_t> codes;
  codes.reserve(K.size() * f.q());
  for (std::size_t i = 0; i < K.size(); ++i) {
    auto x = K.point(i);
    std::vector<std::uint32_t> cx(K.dim());
    for (std::uint32_t c = 0; c < f.q(); ++c) {
      for (std::uint32_t j = 0; j < K.dim(); ++j) cx[j] = f.mul(c, x[j]);
      codes.push_back(encode_point(cx, f.q()));
    }
  }
  return PointSet(f, K.dim(), std::move(codes));
}

// Cartesian power K^r in dimension n*r.
inline PointSet product_set(const PointSet& K, std::uint32_t r,
                            const Limits& limits = {}) {
  if (r < 1) throw usage_error("product power must be >= 1");
  const Field& f = K.field();
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    cells *= K.size();
    if (cells * (K.dim() * std::uint64_t(r)) > limits.max_points)
      throw resource_error("product set exceeds the configured point limit");
  }
  std::uint32_t n = K.dim() * r;
  std::vector<std::uint64_t> codes;
  codes.reserve(cells);
  std::vector<std::size_t> idx(r, 0);
  std::vector<std::uint32_t> pt(n);
  if (K.empty() && r >= 1) return PointSet(f, n);
  while (true) {
    for (std::uint32_t blk = 0; blk < r; ++blk) {
      auto coords = K.point(idx[blk]);
      std::copy(coords.begin(), coords.end(), pt.begin() + blk * K.dim());
    }
    codes.push_back(encode_point(pt, f.q()));
    std::uint32_t carry = r;
    while (carry > 0) {
      if (++idx[carry - 1] < K.size()) break;
      idx[carry - 1] = 0;
      --carry;
    }
    if (carry == 0) break;
  }
  return PointSet(f, n, std::move(codes));
}

enum class ConstructKind { full, greedy_lines, union_random_lines };

inline ConstructKind parse_construct_kind(const std::string& s) {
  if (s == "full") return ConstructKind::full;
  if (s == "greedy" || s == "greedy_lines") return ConstructKind::greedy_lines;
  if (s == "random" || s == "union_random_lines") return ConstructKind::union_random_lines;
  throw usage_error("unknown construction kind: " + s);
}

// greedy_lines: canonical direction order, pick the base point adding fewest
// new points (smallest encoding on ties). union_random_lines: one seeded
// random line per direction. Both are Kakeya by construction.
inline PointSet construct(ConstructKind kind, const Field& f, std::uint32_t n,
                          std::uint64_t seed = 0) {
  if (kind == ConstructKind::full) return PointSet::full(f, n);
  PointSet K(f, n);
  auto dirs = canonical_directions(f, n);
  Rng rng(seed);
  for (const auto& d : dirs) {
    auto bases = transversal_points(f, n, d);
    std::size_t pick = 0;
    if (kind == ConstructKind::union_random_lines) {
      pick = static_cast<std::size_t>(rng.below(bases.size()));
    } else {
      std::size_t best_new = SIZE_MAX;
      for (std::size_t bi = 0; bi < bases.size(); ++bi) {
        std::size_t added = 0;
        for (auto code : line_codes(f, bases[bi], d.v))
          if (!K.contains(code)) ++added;
        if (added < best_new) { best_new = added; pick = bi; }
      }
    }
    for (auto code : line_codes(f, bases[pick], d.v)) K.insert(code);
  }
  return K;
}

}  // namespace kakeya
