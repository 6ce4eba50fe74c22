#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kakeya/field.hpp"

namespace kakeya {

// Mixed-radix point encoding, base q, coordinate 1 most significant.
inline std::uint64_t encode_point(const std::vector<std::uint32_t>& coords,
                                  std::uint32_t q) {
  std::uint64_t r = 0;
  for (auto c : coords) {
    if (c >= q) throw usage_error("coordinate out of field range");
    r = r * q + c;
  }
  return r;
}

inline std::vector<std::uint32_t> decode_point(std::uint64_t code, std::uint32_t q,
                                               std::uint32_t n) {
  std::vector<std::uint32_t> coords(n);
  for (std::uint32_t i = n; i-- > 0;) {
    coords[i] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  return coords;
}

// Finite subset of F_q^n: sorted, duplicate-free encodings.
class PointSet {
 public:
  PointSet(const Field& field, std::uint32_t n) : f_(&field), n_(n) {
    if (n < 1) throw usage_error("dimension must be >= 1");
  }

  PointSet(const Field& field, std::uint32_t n, std::vector<std::uint64_t> codes)
      : PointSet(field, n) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::uint64_t total = ipow(field.q(), n);
    for (auto c : codes)
      if (c >= total) throw usage_error("point encoding out of range");
    pts_ = std::move(codes);
  }

  static PointSet from_points(const Field& field, std::uint32_t n,
                              const std::vector<std::vector<std::uint32_t>>& points) {
    std::vector<std::uint64_t> codes;
    codes.reserve(points.size());
    for (const auto& p : points) {
      if (p.size() != n) throw usage_error("point has wrong dimension");
      codes.push_back(encode_point(p, field.q()));
    }
    return PointSet(field, n, std::move(codes));
  }

  static PointSet full(const Field& field, std::uint32_t n) {
    std::uint64_t total = ipow(field.q(), n);
    std::vector<std::uint64_t> codes(total);
    for (std::uint64_t i = 0; i < total; ++i) codes[i] = i;
    return PointSet(field, n, std::move(codes));
  }

  const Field& field() const { return *f_; }
  std::uint32_t dim() const { return n_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<std::uint64_t>& codes() const { return pts_; }

  bool contains(std::uint64_t code) const {
    return std::binary_search(pts_.begin(), pts_.end(), code);
  }

  bool contains_point(const std::vector<std::uint32_t>& p) const {
    return contains(encode_point(p, f_->q()));
  }

  void insert(std::uint64_t code) {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), code);
    if (it == pts_.end() || *it != code) pts_.insert(it, code);
  }

  std::vector<std::uint32_t> point(std::size_t i) const {
    return decode_point(pts_[i], f_->q(), n_);
  }

  bool operator==(const PointSet& o) const {
    return *f_ == *o.f_ && n_ == o.n_ && pts_ == o.pts_;
  }

  // Text format: header "q=<spec> n=<dim>" (modulus folded into the spec via
  // a "mod=..." continuation line), then one point per line as comma-separated
  // element encodings. Round-trips bit-exact.
  std::string serialize() const {
    std::ostringstream out;
    out << "q=" << f_->order_string() << " n=" << n_ << "\n";
    if (f_->k() > 1) {
      out << "mod=";
      const auto& m = f_->modulus();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out << ",";
        out << m[i];
      }
      out << "\n";
    }
    for (auto code : pts_) {
      auto coords = decode_point(code, f_->q(), n_);
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (i) out << ",";
        out << coords[i];
      }
      out << "\n";
    }
    return out.str();
  }

  std::uint64_t digest() const { return fnv1a(serialize()); }

 private:
  const Field* f_;
  std::uint32_t n_;
  std::vector<std::uint64_t> pts_;
};

// Parsed set file plus its owning Field (PointSet holds a pointer).
struct LoadedSet {
  std::unique_ptr<Field> field;
  std::unique_ptr<PointSet> set;
};

inline LoadedSet parse_set_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> usage_error {
    return usage_error("set file line " + std::to_string(lineno) + ": " + msg);
  };
  ++lineno;
  if (!std::getline(in, line)) throw fail("missing header");
  std::string spec;
  std::uint32_t n = 0;
  {
    std::istringstream hs(line);
    std::string qpart, npart;
    if (!(hs >> qpart >> npart) || qpart.rfind("q=", 0) != 0 || npart.rfind("n=", 0) != 0)
      throw fail("header must be 'q=<spec> n=<dim>'");
    spec = qpart.substr(2);
    try {
      n = static_cast<std::uint32_t>(std::stoul(npart.substr(2)));
    } catch (const std::exception&) {
      throw fail("bad dimension");
    }
  }
  std::vector<std::vector<std::uint32_t>> points;
  std::string mod;
  bool first_body = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first_body && line.rfind("mod=", 0) == 0) {
      mod = line.substr(4);
      first_body = false;
      continue;
    }
    first_body = false;
    std::vector<std::uint32_t> coords;
    std::stringstream ps(line);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      try {
        coords.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw fail("bad coordinate '" + tok + "'");
      }
    }
    if (coords.size() != n) throw fail("expected " + std::to_string(n) + " coordinates");
    points.push_back(std::move(coords));
  }
  LoadedSet out;
  std::string full_spec = mod.empty() ? spec : spec + " mod=" + mod;
  try {
    out.field = std::make_unique<Field>(Field::parse(full_spec));
  } catch (const usage_error& e) {
    throw usage_error(std::string("set file header: ") + e.what());
  }
  try {
    out.set = std::make_unique<PointSet>(PointSet::from_points(*out.field, n, points));
  } catch (const usage_error& e) {
    throw usage_error(std::string("set file body: ") + e.what());
  }
  return out;
}

inline LoadedSet load_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open set file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_text(buf.str());
}

}  // namespace kakeya
