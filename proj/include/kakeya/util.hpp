#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace kakeya {

// Caller misuse: mismatched fields, bad dimensions, malformed input.
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because it exceeds a configured desk-scale limit.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
  std::uint64_t max_points = 1u << 20;   // cap on q^n style enumerations
  std::uint64_t node_budget = 50'000'000;  // branch-and-bound nodes
};

// Exact rational in lowest terms, den > 0.
struct Ratio {
  long long num = 0;
  long long den = 1;

  Ratio() = default;
  Ratio(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw usage_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = gcd_ll(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static long long gcd_ll(long long a, long long b) {
    while (b != 0) { long long t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  // Accepts "a/b", an integer, or a finite decimal like "0.5".
  static Ratio parse(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      long long n = std::stoll(s.substr(0, slash));
      long long d = std::stoll(s.substr(slash + 1));
      return Ratio(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Ratio(std::stoll(s), 1);
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.size() > 18) throw usage_error("decimal too long: " + s);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long n = std::stoll(whole.empty() ? "0" : whole) * den +
                  (frac.empty() ? 0 : std::stoll(frac));
    return Ratio(n, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// floor(q * r), exact.
inline long long floor_mul(std::uint64_t q, const Ratio& r) {
  long long prod = static_cast<long long>(q) * r.num;
  long long d = r.den;
  long long fl = prod / d;
  if (prod % d != 0 && (prod < 0) != (d < 0)) --fl;
  return fl;
}

// ceil(q * r), exact.
inline long long ceil_mul(std::uint64_t q, const Ratio& r) {
  long long prod = static_cast<long long>(q) * r.num;
  long long d = r.den;
  long long c = prod / d;
  if (prod % d != 0 && (prod < 0) == (d < 0)) ++c;
  return c;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // product of i consecutive integers is divisible by i!
  }
  return r;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) { h ^= c; h *= 1099511628211ull; }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) { s[i] = digits[v & 0xf]; v >>= 4; }
  return s;
}

// Deterministic parallel map over [0, total): results land at their index
// regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t total, unsigned threads, Fn&& fn) {
  if (threads <= 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < total; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// splitmix64: portable seeded stream, stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform over [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace kakeya
