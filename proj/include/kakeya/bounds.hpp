#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kakeya/pointset.hpp"
#include "kakeya/poly.hpp"
#include "kakeya/util.hpp"

namespace kakeya {

struct BoundReport {
  std::uint32_t q = 0, n = 0;
  std::optional<Ratio> delta, gamma;
  std::optional<std::uint32_t> r;
  int d = 0;                    // effective degree; negative means vacuous
  std::uint64_t bound = 0;
  std::string formula;          // "thm2" | "alon_tao" | "corollary_scheme"
};

// |K| >= C(d + n - 1, n - 1) with d = floor(q * min(delta, gamma)) - 2;
// d < 0 reports bound 0 (vacuous).
inline BoundReport thm2_bound(std::uint32_t q, std::uint32_t n, const Ratio& delta,
                              const Ratio& gamma) {
  if (delta.num <= 0 || gamma.num <= 0 || delta.num > delta.den || gamma.num > gamma.den)
    throw usage_error("delta and gamma must lie in (0, 1]");
  BoundReport rep;
  rep.q = q; rep.n = n; rep.delta = delta; rep.gamma = gamma;
  rep.formula = "thm2";
  bool delta_smaller = static_cast<long long>(delta.num) * gamma.den <=
                       static_cast<long long>(gamma.num) * delta.den;
  const Ratio& m = delta_smaller ? delta : gamma;
  rep.d = static_cast<int>(floor_mul(q, m)) - 2;
  rep.bound = rep.d >= 0 ? binomial(rep.d + n - 1, n - 1) : 0;
  return rep;
}

// Every Kakeya set in F_q^n has at least C(q + n - 2, n) points.
inline BoundReport alon_tao_bound(std::uint32_t q, std::uint32_t n) {
  if (q < 2 || n < 1) throw usage_error("need q >= 2, n >= 1");
  BoundReport rep;
  rep.q = q; rep.n = n;
  rep.d = static_cast<int>(q) - 1;
  rep.bound = binomial(q + n - 2, n);
  rep.formula = "alon_tao";
  return rep;
}

// smallest m with m^r >= v
inline std::uint64_t ceil_root(std::uint64_t v, std::uint32_t r) {
  if (v <= 1 || r == 1) return v;
  std::uint64_t m = 1;
  while (true) {
    std::uint64_t pw = 1;
    bool over = false;
    for (std::uint32_t i = 0; i < r; ++i) {
      pw *= m;
      if (pw >= v) { over = true; break; }
    }
    if (over) return m;
    ++m;
  }
}

// Product scheme: the base bound applied to K^r in dimension n*r at
// delta = gamma = 1, then an r-th root; r = 1 reduces to the base bound.
inline BoundReport corollary_bound(std::uint32_t q, std::uint32_t n, std::uint32_t r) {
  if (r < 1) throw usage_error("product power must be >= 1");
  BoundReport rep;
  rep.q = q; rep.n = n; rep.r = r;
  rep.formula = "corollary_scheme";
  rep.d = static_cast<int>(q) - 2;
  if (rep.d < 0) { rep.bound = 0; return rep; }
  std::uint32_t nr = n * r;
  std::uint64_t product_bound = binomial(rep.d + nr - 1, nr - 1);
  rep.bound = ceil_root(product_bound, r);
  return rep;
}

// Brute-force zero count of f over all q^n points.
inline std::uint64_t count_zeros(const Polynomial& f, const Limits& limits = {}) {
  const Field& F = f.field();
  std::uint64_t total = ipow(F.q(), f.nvars());
  if (total > limits.max_points)
    throw resource_error("zero count over " + std::to_string(total) +
                         " points exceeds the configured limit");
  std::uint64_t zeros = 0;
  for (std::uint64_t code = 0; code < total; ++code)
    if (f.evaluate(decode_point(code, F.q(), f.nvars())) == 0) ++zeros;
  return zeros;
}

}  // namespace kakeya
