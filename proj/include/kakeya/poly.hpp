#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kakeya/field.hpp"

namespace kakeya {

// Exponent vector of a monomial in n variables.
struct Monomial {
  std::vector<std::uint32_t> e;

  std::uint32_t degree() const {
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic order: lower total degree first, then lex ascending on
// the exponent vector. Fixed library-wide; certificates tag it "grlex-v1".
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

// All monomials in n variables of degree exactly d (or at most d),
// in grlex order.
enum class DegreeMode { exactly, at_most };

inline void monomials_rec(std::uint32_t n, std::uint32_t d, bool exact,
                          std::vector<std::uint32_t>& cur,
                          std::vector<Monomial>& out) {
  if (cur.size() == n) {
    std::uint32_t deg = std::accumulate(cur.begin(), cur.end(), 0u);
    if (!exact || deg == d) out.push_back(Monomial{cur});
    return;
  }
  for (std::uint32_t e = 0; e <= d; ++e) {
    std::uint32_t used = std::accumulate(cur.begin(), cur.end(), 0u);
    if (used + e > d) break;
    cur.push_back(e);
    monomials_rec(n, d, exact, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Monomial> monomials_of_degree(std::uint32_t n, std::uint32_t d,
                                                 DegreeMode mode) {
  if (n < 1) throw usage_error("need at least one variable");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur;
  monomials_rec(n, d, mode == DegreeMode::exactly, cur, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

// Univariate polynomial in the line parameter, coefficients indexed by degree.
// Trailing zeros are trimmed; the zero polynomial has an empty vector.
struct UniPoly {
  const Field* f = nullptr;
  std::vector<std::uint32_t> c;

  explicit UniPoly(const Field& field) : f(&field) {}
  UniPoly(const Field& field, std::vector<std::uint32_t> coeffs)
      : f(&field), c(std::move(coeffs)) {
    trim();
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero

  std::uint32_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

  std::uint32_t eval(std::uint32_t a) const {
    std::uint32_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = f->add(f->mul(r, a), c[i]);
    return r;
  }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r(*f);
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
      r.c[i] = f->add(coeff(i), o.coeff(i));
    r.trim();
    return r;
  }

  UniPoly operator*(const UniPoly& o) const {
    UniPoly r(*f);
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = f->add(r.c[i + j], f->mul(c[i], o.c[j]));
    r.trim();
    return r;
  }

  UniPoly scaled(std::uint32_t s) const {
    UniPoly r(*f);
    r.c.reserve(c.size());
    for (auto x : c) r.c.push_back(f->mul(x, s));
    r.trim();
    return r;
  }

  UniPoly powed(std::uint32_t e) const {
    UniPoly r(*f);
    r.c = {1};
    UniPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }
};

// Sparse multivariate polynomial over GF(q). Formal object: exponents are
// never reduced via x^q = x, so formal degree is meaningful up to q-1 and
// beyond. Stored coefficients are always nonzero.
class Polynomial {
 public:
  Polynomial(const Field& field, std::uint32_t n) : f_(&field), n_(n) {
    if (n < 1) throw usage_error("need at least one variable");
  }

  static Polynomial zero(const Field& field, std::uint32_t n) {
    return Polynomial(field, n);
  }

  static Polynomial constant(const Field& field, std::uint32_t n, std::uint32_t c) {
    Polynomial p(field, n);
    p.set_coeff(Monomial{std::vector<std::uint32_t>(n, 0)}, c);
    return p;
  }

  const Field& field() const { return *f_; }
  std::uint32_t nvars() const { return n_; }
  const std::map<Monomial, std::uint32_t, GrlexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  // -1 stands in for the zero polynomial's "minus infinity" degree
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  void set_coeff(const Monomial& m, std::uint32_t c) {
    if (m.e.size() != n_) throw usage_error("monomial arity mismatch");
    if (c == 0) terms_.erase(m);
    else terms_[m] = c;
  }

  std::uint32_t coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_compatible(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) {
      std::uint32_t s = f_->add(r.coeff(m), c);
      r.set_coeff(m, s);
    }
    return r;
  }

  Polynomial scaled(std::uint32_t s) const {
    Polynomial r(*f_, n_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.set_coeff(m, f_->mul(c, s));
    return r;
  }

  std::uint32_t evaluate(const std::vector<std::uint32_t>& x) const {
    if (x.size() != n_) throw usage_error("evaluation point has wrong dimension");
    std::uint32_t acc = 0;
    for (const auto& [m, c] : terms_) {
      std::uint32_t t = c;
      for (std::uint32_t i = 0; i < n_; ++i)
        if (m.e[i]) t = f_->mul(t, f_->pow(x[i], m.e[i]));
      acc = f_->add(acc, t);
    }
    return acc;
  }

  // the sub-polynomial of total-degree-i terms
  Polynomial homogeneous_part(std::uint32_t i) const {
    Polynomial r(*f_, n_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == i) r.set_coeff(m, c);
    return r;
  }

  // a |-> f(y + a*x), by per-term expansion of prod (y_i + a*x_i)^{e_i}
  UniPoly restrict_to_line(const std::vector<std::uint32_t>& y,
                           const std::vector<std::uint32_t>& x) const {
    if (y.size() != n_ || x.size() != n_)
      throw usage_error("line point/direction has wrong dimension");
    UniPoly acc(*f_);
    for (const auto& [m, c] : terms_) {
      UniPoly term(*f_);
      term.c = {c};
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (m.e[i] == 0) continue;
        UniPoly lin(*f_, {y[i], x[i]});
        term = term * lin.powed(m.e[i]);
      }
      acc = acc + term;
    }
    return acc;
  }

  // coefficient of a^e in the restriction of f to the line b + a*y
  std::uint32_t top_coefficient_on_line(const std::vector<std::uint32_t>& y,
                                        const std::vector<std::uint32_t>& b,
                                        std::uint32_t e) const {
    return restrict_to_line(b, y).coeff(e);
  }

  // verifies g(c*x) = c^d * g(x) at the given point; g must be homogeneous
  bool scale_argument_holds(std::uint32_t c, const std::vector<std::uint32_t>& x) const {
    if (!is_homogeneous()) throw usage_error("scale check needs a homogeneous polynomial");
    if (is_zero()) return true;
    std::uint32_t d = static_cast<std::uint32_t>(degree());
    std::vector<std::uint32_t> cx(n_);
    for (std::uint32_t i = 0; i < n_; ++i) cx[i] = f_->mul(c, x[i]);
    return evaluate(cx) == f_->mul(f_->pow(c, d), evaluate(x));
  }

  bool operator==(const Polynomial& o) const {
    return *f_ == *o.f_ && n_ == o.n_ && terms_ == o.terms_;
  }

  // "c*x1^e1*...*xn^en" terms joined by "+" in grlex order; "0" when zero.
  // Zero exponents are omitted; a pure constant term is just "c".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out << "+";
      first = false;
      out << c;
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (m.e[i] == 0) continue;
        out << "*x" << (i + 1) << "^" << m.e[i];
      }
    }
    return out.str();
  }

  static Polynomial parse(const std::string& text, const Field& field, std::uint32_t n) {
    Polynomial p(field, n);
    if (text == "0") return p;
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
      if (term.empty()) throw usage_error("empty term in polynomial: " + text);
      std::stringstream ts(term);
      std::string factor;
      Monomial m{std::vector<std::uint32_t>(n, 0)};
      std::uint32_t c = 0;
      bool have_coeff = false;
      while (std::getline(ts, factor, '*')) {
        if (!factor.empty() && (factor[0] == 'x' || factor[0] == 'X')) {
          auto caret = factor.find('^');
          std::uint32_t var, exp = 1;
          try {
            var = static_cast<std::uint32_t>(
                std::stoul(factor.substr(1, caret == std::string::npos
                                                ? std::string::npos : caret - 1)));
            if (caret != std::string::npos)
              exp = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
          } catch (const std::exception&) {
            throw usage_error("bad factor '" + factor + "' in polynomial");
          }
          if (var < 1 || var > n) throw usage_error("variable index out of range: " + factor);
          m.e[var - 1] += exp;
        } else {
          try {
            c = static_cast<std::uint32_t>(std::stoul(factor));
          } catch (const std::exception&) {
            throw usage_error("bad coefficient '" + factor + "' in polynomial");
          }
          have_coeff = true;
        }
      }
      if (!have_coeff) throw usage_error("term without coefficient: " + term);
      if (c >= field.q()) throw usage_error("coefficient out of field range: " + term);
      std::uint32_t prev = p.coeff(m);
      p.set_coeff(m, field.add(prev, c));
    }
    return p;
  }

 private:
  void require_compatible(const Polynomial& o) const {
    if (*f_ != *o.f_ || n_ != o.n_)
      throw usage_error("polynomials from mismatched rings");
  }

  const Field* f_;
  std::uint32_t n_;
  std::map<Monomial, std::uint32_t, GrlexLess> terms_;
};

}  // namespace kakeya
