#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kakeya/util.hpp"

namespace kakeya {

// Exact arithmetic in GF(q), q = p^k. Elements are integers in [0, q) whose
// base-p digits are the polynomial-basis coordinates (digit 0 = constant term).
class Field {
 public:
  // Prime field GF(p).
  explicit Field(std::uint32_t p) : Field(p, 1, {}) {}

  // Extension field GF(p^k) with a monic degree-k modulus over GF(p),
  // coefficients low-to-high (size k+1, last entry 1).
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw usage_error("characteristic " + std::to_string(p_) + " is not prime");
    if (k_ < 1) throw usage_error("extension degree must be >= 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
    if (q_ < 2) throw usage_error("field order must be >= 2");
    if (k_ == 1) {
      if (!modulus_.empty()) throw usage_error("prime field takes no modulus");
    } else {
      validate_modulus();
    }
  }

  // "p" or "p^k", optionally followed by " mod=c0,c1,...,ck" (low-to-high).
  static Field parse(const std::string& text) {
    std::string spec = text, mod_part;
    auto sp = text.find(" mod=");
    if (sp != std::string::npos) {
      spec = text.substr(0, sp);
      mod_part = text.substr(sp + 5);
    }
    std::uint32_t p = 0, k = 1;
    auto caret = spec.find('^');
    try {
      if (caret == std::string::npos) {
        p = static_cast<std::uint32_t>(std::stoul(spec));
      } else {
        p = static_cast<std::uint32_t>(std::stoul(spec.substr(0, caret)));
        k = static_cast<std::uint32_t>(std::stoul(spec.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw usage_error("bad field spec: " + text);
    }
    if (k == 1) {
      if (!mod_part.empty()) throw usage_error("prime field takes no modulus: " + text);
      return Field(p);
    }
    if (mod_part.empty())
      throw usage_error("extension field " + spec + " needs an explicit mod=... modulus");
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(mod_part);
    std::string tok;
    while (std::getline(ss, tok, ','))
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return Field(p, k, std::move(coeffs));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // Spec string that parse() accepts, e.g. "3" or "2^2 mod=1,1,1".
  std::string spec_string() const {
    std::string s = std::to_string(p_);
    if (k_ > 1) {
      s += "^" + std::to_string(k_) + " mod=";
      for (std::uint32_t i = 0; i <= k_; ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
      }
    }
    return s;
  }

  std::string order_string() const {
    return k_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(k_);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    check_range(a); check_range(b);
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t da = a % p_, db = b % p_;
      a /= p_; b /= p_;
      r += ((da + db) % p_) * place;
      place *= p_;
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    check_range(a);
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t d = a % p_;
      a /= p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
    }
    return r;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    check_range(a); check_range(b);
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    std::vector<std::uint32_t> pa = digits(a), pb = digits(b);
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    reduce(prod);
    return pack(prod);
  }

  std::uint32_t inv(std::uint32_t a) const {
    check_range(a);
    if (a == 0) throw usage_error("division by zero in GF(" + order_string() + ")");
    if (k_ == 1) {
      // extended Euclid on integers
      long long t = 0, nt = 1, r = p_, nr = a;
      while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
      }
      if (t < 0) t += p_;
      return static_cast<std::uint32_t>(t);
    }
    // extended Euclid on polynomials over GF(p)
    std::vector<std::uint32_t> r0 = modulus_, r1 = digits(a);
    trim(r1);
    std::vector<std::uint32_t> t0, t1 = {1};
    while (!r1.empty()) {
      auto [quo, rem] = poly_divmod(r0, r1);
      r0 = std::move(r1); r1 = std::move(rem);
      auto nt = poly_sub(t0, poly_mul_mod(quo, t1));
      t0 = std::move(t1); t1 = std::move(nt);
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible
    std::uint32_t c = mod_inverse_prime(r0[0]);
    for (auto& x : t0) x = (x * c) % p_;
    t0.resize(k_, 0);
    return pack(t0);
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  // square-and-multiply; pow(0, 0) = 1 by convention
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    check_range(a);
    std::uint32_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // all q elements in increasing integer encoding
  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> v(q_);
    for (std::uint32_t i = 0; i < q_; ++i) v[i] = i;
    return v;
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  void check_range(std::uint32_t a) const {
    if (a >= q_) throw usage_error("element encoding " + std::to_string(a) +
                                   " out of range for GF(" + order_string() + ")");
  }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
  }

  std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t r = 0;
    for (std::uint32_t i = std::min<std::size_t>(d.size(), k_); i-- > 0;)
      r = r * p_ + d[i];
    return r;
  }

  static void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  std::uint32_t mod_inverse_prime(std::uint32_t a) const {
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
      long long qq = r / nr;
      std::swap(t -= qq * nt, nt);
      std::swap(r -= qq * nr, nr);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
  }

  std::vector<std::uint32_t> poly_sub(std::vector<std::uint32_t> a,
                                      const std::vector<std::uint32_t>& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p_ - b[i]) % p_;
    trim(a);
    return a;
  }

  std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    trim(r);
    return r;
  }

  // divide a by b over GF(p), b nonzero; returns (quotient, remainder)
  std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> poly_divmod(
      std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) const {
    trim(a);
    if (b.empty()) throw usage_error("polynomial division by zero");
    std::vector<std::uint32_t> quo;
    std::uint32_t lead_inv = mod_inverse_prime(b.back());
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      std::uint32_t c = (a.back() * lead_inv) % p_;
      quo[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + p_ - (c * b[i]) % p_) % p_;
      trim(a);
    }
    return {quo, a};
  }

  // reduce a coefficient vector of degree < 2k-1 modulo the monic modulus
  void reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t i = v.size(); i-- > k_;) {
      std::uint32_t c = v[i];
      if (c == 0) continue;
      v[i] = 0;
      for (std::uint32_t j = 0; j < k_; ++j)
        v[i - k_ + j] = (v[i - k_ + j] + (p_ - 1) * c % p_ * modulus_[j]) % p_;
    }
    v.resize(k_);
  }

  // monic, degree k, and irreducible over GF(p) by trial division against
  // every monic polynomial of degree 1..k/2
  void validate_modulus() {
    if (modulus_.size() != k_ + 1)
      throw usage_error("modulus must have degree " + std::to_string(k_));
    if (modulus_.back() != 1) throw usage_error("modulus must be monic");
    for (auto c : modulus_)
      if (c >= p_) throw usage_error("modulus coefficient out of range");
    for (std::uint32_t deg = 1; deg <= k_ / 2; ++deg) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i) count *= p_;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> cand(deg + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < deg; ++i) { cand[i] = c % p_; c /= p_; }
        cand[deg] = 1;
        auto [quo, rem] = poly_divmod(modulus_, cand);
        if (rem.empty())
          throw usage_error("modulus is reducible over GF(" + std::to_string(p_) + ")");
      }
    }
  }

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
};

// Field element bound to its field; mixing fields is a usage error.
struct Fe {
  std::uint32_t v = 0;
  const Field* f = nullptr;

  Fe() = default;
  Fe(std::uint32_t value, const Field& field) : v(value), f(&field) {
    if (value >= field.q()) throw usage_error("element encoding out of range");
  }

  friend const Field& common(const Fe& a, const Fe& b) {
    if (!a.f || !b.f || *a.f != *b.f)
      throw usage_error("field elements from mismatched fields");
    return *a.f;
  }

  friend Fe operator+(const Fe& a, const Fe& b) { const Field& F = common(a, b); return Fe(F.add(a.v, b.v), *a.f); }
  friend Fe operator-(const Fe& a, const Fe& b) { const Field& F = common(a, b); return Fe(F.sub(a.v, b.v), *a.f); }
  friend Fe operator*(const Fe& a, const Fe& b) { const Field& F = common(a, b); return Fe(F.mul(a.v, b.v), *a.f); }
  friend Fe operator/(const Fe& a, const Fe& b) { const Field& F = common(a, b); return Fe(F.div(a.v, b.v), *a.f); }
  friend bool operator==(const Fe& a, const Fe& b) { common(a, b); return a.v == b.v; }
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  Fe inverse() const { return Fe(f->inv(v), *f); }
  Fe pow(std::uint64_t e) const { return Fe(f->pow(v, e), *f); }
};

}  // namespace kakeya
