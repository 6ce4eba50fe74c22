#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kakeya/poly.hpp"
#include "kakeya/pointset.hpp"

namespace kakeya {

// Dense matrix over GF(q), row-major element encodings.
struct MatrixGF {
  const Field* f = nullptr;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  MatrixGF(const Field& field, std::size_t r, std::size_t c)
      : f(&field), rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  std::vector<std::uint32_t> mul_vec(const std::vector<std::uint32_t>& v) const {
    if (v.size() != cols) throw usage_error("matrix-vector dimension mismatch");
    std::vector<std::uint32_t> out(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        out[r] = f->add(out[r], f->mul(at(r, c), v[c]));
    return out;
  }
};

struct RrefResult {
  MatrixGF m;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(MatrixGF m) {
  const Field& F = *m.f;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(sel, c), m.at(row, c));
    std::uint32_t inv = F.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      std::uint32_t factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Canonical nonzero kernel vector: smallest-index free column set to 1, all
// other free columns 0, pivot entries back-substituted. nullopt when the
// kernel is trivial. Fixed so certificates are byte-reproducible.
inline std::optional<std::vector<std::uint32_t>> nullspace_vector(const MatrixGF& m) {
  auto [r, pivots] = rref(m);
  if (pivots.size() == m.cols) return std::nullopt;
  const Field& F = *m.f;
  std::size_t free_col = 0;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (pi < pivots.size() && pivots[pi] == c) { ++pi; continue; }
      free_col = c;
      break;
    }
  }
  std::vector<std::uint32_t> v(m.cols, 0);
  v[free_col] = 1;
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    v[pivots[pi]] = F.neg(r.at(pi, free_col));
  return v;
}

// The nonzero polynomial of the requested degree class (grlex monomial
// columns) vanishing on K, or nullopt when only the zero polynomial does.
inline std::optional<Polynomial> vanishing_polynomial(const PointSet& K,
                                                      std::uint32_t d, DegreeMode mode) {
  const Field& F = K.field();
  auto mons = monomials_of_degree(K.dim(), d, mode);
  MatrixGF m(F, K.size(), mons.size());
  for (std::size_t r = 0; r < K.size(); ++r) {
    auto pt = K.point(r);
    for (std::size_t c = 0; c < mons.size(); ++c) {
      std::uint32_t val = 1;
      for (std::uint32_t i = 0; i < K.dim(); ++i)
        if (mons[c].e[i]) val = F.mul(val, F.pow(pt[i], mons[c].e[i]));
      m.at(r, c) = val;
    }
  }
  auto kernel = nullspace_vector(m);
  if (!kernel) return std::nullopt;
  Polynomial g(F, K.dim());
  for (std::size_t c = 0; c < mons.size(); ++c)
    if ((*kernel)[c]) g.set_coeff(mons[c], (*kernel)[c]);
  return g;
}

}  // namespace kakeya
