#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kakeya/bounds.hpp"
#include "kakeya/kakeya.hpp"
#include "kakeya/linalg.hpp"

namespace kakeya {

using Json = nlohmann::ordered_json;

// Machine-checkable trace of a bound check or proof-pipeline run. The
// document embeds the field, the point set, the polynomial, and per-step
// values, so verification needs nothing but the serialization itself.
struct Certificate {
  Json doc;

  bool is_refutation() const { return doc.at("kind") == "refutation"; }
  std::string dump() const { return doc.dump(2) + "\n"; }
};

namespace detail {

inline Json point_json(const std::vector<std::uint32_t>& p) {
  return Json(p);
}

inline std::vector<std::uint32_t> point_from_json(const Json& j) {
  return j.get<std::vector<std::uint32_t>>();
}

inline Json cert_header(const char* kind, const char* pipeline, const Field& f,
                        const PointSet& K) {
  Json doc;
  doc["kind"] = kind;
  doc["pipeline"] = pipeline;
  doc["field"] = f.spec_string();
  doc["n"] = K.dim();
  doc["monomial_order"] = "grlex-v1";
  doc["input_digest"] = hex64(K.digest());
  doc["points"] = K.codes();
  doc["steps"] = Json::array();
  return doc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorem-2 pipeline: if |K| is below the (delta, gamma) bound, replay the
// proof and certify that the claimed (delta, gamma) profile cannot hold.
// ---------------------------------------------------------------------------
inline Certificate certify_refutation_thm2(const PointSet& K, const Ratio& delta,
                                           const Ratio& gamma, unsigned threads = 1,
                                           const Limits& limits = {}) {
  const Field& F = K.field();
  std::uint32_t q = F.q(), n = K.dim();
  BoundReport rep = thm2_bound(q, n, delta, gamma);

  if (K.size() >= rep.bound || rep.d < 0) {
    Json doc = detail::cert_header("consistency", "thm2", F, K);
    doc["params"] = {{"delta", delta.str()}, {"gamma", gamma.str()},
                     {"d", rep.d}, {"bound", rep.bound}};
    Json step;
    step["name"] = "size_at_least_bound";
    step["size"] = K.size();
    step["bound"] = rep.bound;
    step["ok"] = true;
    doc["steps"].push_back(step);
    return Certificate{std::move(doc)};
  }

  std::uint32_t d = static_cast<std::uint32_t>(rep.d);
  Json doc = detail::cert_header("refutation", "thm2", F, K);
  doc["params"] = {{"delta", delta.str()}, {"gamma", gamma.str()},
                   {"d", rep.d}, {"bound", rep.bound}};

  {
    Json step;
    step["name"] = "size_below_bound";
    step["size"] = K.size();
    step["bound"] = rep.bound;
    step["ok"] = K.size() < rep.bound;
    doc["steps"].push_back(step);
  }

  // (1) homogeneous degree-d g vanishing on K; guaranteed since
  // |K| < C(d+n-1, n-1) = number of degree-d monomials
  auto g_opt = vanishing_polynomial(K, d, DegreeMode::exactly);
  if (!g_opt) throw usage_error("internal: pigeonhole guarantee violated");
  const Polynomial& g = *g_opt;
  doc["polynomial"] = g.str();
  {
    Json step;
    step["name"] = "vanishing_homogeneous";
    step["degree"] = d;
    bool ok = !g.is_zero() && g.is_homogeneous() && g.degree() == static_cast<int>(d);
    for (std::size_t i = 0; ok && i < K.size(); ++i)
      ok = g.evaluate(K.point(i)) == 0;
    step["ok"] = ok;
    doc["steps"].push_back(step);
  }

  // (2) g vanishes on the cone closure K'
  PointSet cone = cone_closure(K);
  {
    Json step;
    step["name"] = "cone_vanishing";
    step["cone_size"] = cone.size();
    bool ok = true;
    for (std::size_t i = 0; ok && i < cone.size(); ++i)
      ok = g.evaluate(cone.point(i)) == 0;
    step["ok"] = ok;
    doc["steps"].push_back(step);
  }

  // (3) the Claim, per qualifying canonical direction y: pick d+2 parameters
  // on the witness line, invert, land in K', and conclude g(y) = 0
  std::uint32_t threshold = static_cast<std::uint32_t>(ceil_mul(q, gamma));
  auto profile = direction_profile(K, threads);
  std::uint64_t qualifying = 0;
  for (const auto& entry : profile) {
    if (entry.count < threshold) continue;
    ++qualifying;
    const auto& y = entry.direction;
    auto z = decode_point(entry.best_base, q, n);

    Json step;
    step["name"] = "line_claim";
    step["y"] = detail::point_json(y);
    step["z"] = detail::point_json(z);

    auto line = line_codes(F, z, y);
    std::vector<std::uint32_t> params;  // a with z + a*y in K, encoding order
    for (std::uint32_t a = 0; a < q && params.size() < d + 2; ++a)
      if (K.contains(line[a])) params.push_back(a);
    step["params"] = params;

    bool z_zero = std::all_of(z.begin(), z.end(), [](std::uint32_t c) { return c == 0; });
    step["degenerate"] = z_zero;
    bool ok = params.size() == d + 2;
    if (z_zero) {
      // all w_i collapse to y; y is in K' via any nonzero parameter
      ok = ok && g.evaluate(y) == 0;
    } else {
      std::vector<std::uint32_t> nz;
      for (auto a : params)
        if (a != 0) nz.push_back(a);
      if (nz.size() > d + 1) nz.resize(d + 1);
      ok = ok && nz.size() == d + 1;
      Json inv_params = Json::array(), witness_pts = Json::array();
      for (auto a : nz) {
        std::uint32_t b = F.inv(a);
        inv_params.push_back(b);
        std::vector<std::uint32_t> w(n);
        for (std::uint32_t i = 0; i < n; ++i)
          w[i] = F.add(F.mul(b, z[i]), y[i]);
        witness_pts.push_back(detail::point_json(w));
        ok = ok && cone.contains_point(w) && g.evaluate(w) == 0;
      }
      step["inv_params"] = inv_params;
      step["witness_points"] = witness_pts;
      // d+1 zeros of a degree-<=d restriction force it to vanish identically
      UniPoly restr = g.restrict_to_line(y, z);
      step["restriction"] = restr.c;
      ok = ok && restr.is_zero() && g.evaluate(y) == 0;
    }
    // scalar multiples of y inherit the zero via homogeneity
    for (std::uint32_t c = 1; ok && c < q; ++c) {
      std::vector<std::uint32_t> cy(n);
      for (std::uint32_t i = 0; i < n; ++i) cy[i] = F.mul(c, y[i]);
      ok = g.evaluate(cy) == 0;
    }
    step["ok"] = ok;
    doc["steps"].push_back(step);
  }

  // (4) Schwartz-Zippel caps the zeros of g; the claimed |L| cannot fit
  {
    std::uint64_t zeros = count_zeros(g, limits);
    std::uint64_t cap = std::uint64_t(d) * ipow(q, n - 1);
    std::uint64_t line_set = qualifying * (q - 1);
    std::uint64_t required = static_cast<std::uint64_t>(ceil_mul(ipow(q, n), delta));
    Json step;
    step["name"] = "schwartz_zippel_contradiction";
    step["zeros"] = zeros;
    step["sz_cap"] = cap;
    step["line_set_size"] = line_set;
    step["required_line_set"] = required;
    step["ok"] = zeros <= cap && line_set <= zeros && line_set < required;
    doc["steps"].push_back(step);
  }
  return Certificate{std::move(doc)};
}

// ---------------------------------------------------------------------------
// Homogeneous cascade: verify K is Kakeya, then either certify
// |K| >= C(q+n-2, n) or replay the coefficient-cascade contradiction.
// ---------------------------------------------------------------------------
inline Certificate certify_cascade(const PointSet& K, unsigned threads = 1,
                                   bool bypass_kakeya_check = false) {
  const Field& F = K.field();
  std::uint32_t q = F.q(), n = K.dim();
  KakeyaCheck check = is_kakeya(K, threads);
  if (!check.ok && !bypass_kakeya_check) {
    std::string dir;
    for (std::size_t i = 0; i < check.failing_direction->size(); ++i)
      dir += (i ? "," : "") + std::to_string((*check.failing_direction)[i]);
    throw usage_error("set is not Kakeya: no full line in direction (" + dir + ")");
  }
  BoundReport rep = alon_tao_bound(q, n);

  if (K.size() >= rep.bound) {
    Json doc = detail::cert_header("consistency", "cascade", F, K);
    doc["params"] = {{"bound", rep.bound}};
    Json wmap = Json::object();
    for (const auto& [dcode, ycode] : check.witnesses)
      wmap[std::to_string(dcode)] = ycode;
    doc["witnesses"] = wmap;
    Json kstep;
    kstep["name"] = "kakeya_witnesses";
    kstep["ok"] = check.ok;
    doc["steps"].push_back(kstep);
    Json step;
    step["name"] = "size_at_least_bound";
    step["size"] = K.size();
    step["bound"] = rep.bound;
    step["ok"] = true;
    doc["steps"].push_back(step);
    return Certificate{std::move(doc)};
  }

  // Small branch: a nonzero P of degree <= q-1 vanishing on K leads to a
  // contradiction, so a genuine Kakeya set never lands here.
  Json doc = detail::cert_header("refutation", "cascade", F, K);
  doc["params"] = {{"bound", rep.bound}};
  {
    Json step;
    step["name"] = "size_below_bound";
    step["size"] = K.size();
    step["bound"] = rep.bound;
    step["ok"] = K.size() < rep.bound;
    doc["steps"].push_back(step);
  }
  auto P_opt = vanishing_polynomial(K, q - 1, DegreeMode::at_most);
  if (!P_opt) throw usage_error("internal: pigeonhole guarantee violated");
  Polynomial P = *P_opt;
  doc["polynomial"] = P.str();
  {
    Json step;
    step["name"] = "vanishing_poly";
    step["max_degree"] = q - 1;
    bool ok = !P.is_zero() && P.degree() <= static_cast<int>(q) - 1;
    for (std::size_t i = 0; ok && i < K.size(); ++i)
      ok = P.evaluate(K.point(i)) == 0;
    step["ok"] = ok;
    doc["steps"].push_back(step);
  }

  auto dirs = canonical_directions(F, n);
  Polynomial current = P;
  for (std::uint32_t j = q - 1; j >= 1; --j) {
    Polynomial Pj = P.homogeneous_part(j);
    for (const auto& dir : dirs) {
      std::uint64_t dcode = encode_point(dir.v, q);
      auto wit = check.witnesses.find(dcode);
      if (wit == check.witnesses.end()) {
        std::string ds;
        for (std::size_t i = 0; i < dir.v.size(); ++i)
          ds += (i ? "," : "") + std::to_string(dir.v[i]);
        throw usage_error("cascade halted: no witness line in direction (" + ds + ")");
      }
      auto b = decode_point(wit->second, q, n);
      UniPoly restr = current.restrict_to_line(b, dir.v);
      std::uint32_t top = restr.coeff(j);
      std::uint32_t pj_at_y = Pj.evaluate(dir.v);
      Json step;
      step["name"] = "cascade_direction";
      step["j"] = j;
      step["y"] = detail::point_json(dir.v);
      step["b"] = detail::point_json(b);
      step["restriction"] = restr.c;
      step["top_coeff"] = top;
      step["ok"] = restr.is_zero() && top == 0 && pj_at_y == 0;
      doc["steps"].push_back(step);
    }
    {
      Json step;
      step["name"] = "homogeneous_zero";
      step["j"] = j;
      bool everywhere_zero = true;
      std::uint64_t total = ipow(q, n);
      for (std::uint64_t code = 0; code < total && everywhere_zero; ++code)
        everywhere_zero = Pj.evaluate(decode_point(code, q, n)) == 0;
      // degree <= q-1 and zero everywhere forces the formal zero polynomial
      step["formally_zero"] = Pj.is_zero();
      step["ok"] = everywhere_zero && Pj.is_zero();
      doc["steps"].push_back(step);
    }
    current = current + Pj.scaled(F.neg(1));  // subtract Pj
  }
  {
    Polynomial P0 = P.homogeneous_part(0);
    Json step;
    step["name"] = "constant_zero_contradiction";
    bool ok = !K.empty() && P.evaluate(K.point(0)) == 0;
    step["ok"] = ok && P0.is_zero();
    doc["steps"].push_back(step);
  }
  return Certificate{std::move(doc)};
}

// ---------------------------------------------------------------------------
// Independent re-verification from the serialized document alone.
// ---------------------------------------------------------------------------
struct VerifyReport {
  bool ok = false;
  std::vector<std::pair<std::string, bool>> steps;
  std::string message;
};

inline VerifyReport verify_certificate(const Json& doc) {
  VerifyReport out;
  try {
    if (doc.at("monomial_order") != "grlex-v1") {
      out.message = "unknown monomial order";
      return out;
    }
    Field F = Field::parse(doc.at("field").get<std::string>());
    std::uint32_t q = F.q();
    std::uint32_t n = doc.at("n").get<std::uint32_t>();
    PointSet K(F, n, doc.at("points").get<std::vector<std::uint64_t>>());
    if (hex64(K.digest()) != doc.at("input_digest").get<std::string>()) {
      out.message = "input digest mismatch";
      return out;
    }
    Polynomial poly = doc.contains("polynomial")
        ? Polynomial::parse(doc.at("polynomial").get<std::string>(), F, n)
        : Polynomial::zero(F, n);
    std::string pipeline = doc.at("pipeline").get<std::string>();

    std::uint64_t bound = doc.at("params").at("bound").get<std::uint64_t>();
    int d = doc.at("params").contains("d") ? doc.at("params").at("d").get<int>() : -1;

    bool all_ok = true;
    for (const auto& step : doc.at("steps")) {
      std::string name = step.at("name").get<std::string>();
      bool ok = false;
      if (name == "size_at_least_bound") {
        ok = K.size() == step.at("size").get<std::size_t>() && K.size() >= bound;
      } else if (name == "size_below_bound") {
        ok = K.size() == step.at("size").get<std::size_t>() && K.size() < bound;
      } else if (name == "kakeya_witnesses") {
        ok = true;
        for (const auto& [dstr, yj] : doc.at("witnesses").items()) {
          auto dv = decode_point(std::stoull(dstr), q, n);
          auto yv = decode_point(yj.get<std::uint64_t>(), q, n);
          for (auto code : line_codes(F, yv, dv))
            if (!K.contains(code)) { ok = false; break; }
          if (!ok) break;
        }
        // coverage: one witness per canonical direction
        ok = ok && doc.at("witnesses").size() == (ipow(q, n) - 1) / (q - 1);
      } else if (name == "vanishing_homogeneous") {
        std::uint32_t deg = step.at("degree").get<std::uint32_t>();
        ok = !poly.is_zero() && poly.is_homogeneous() &&
             poly.degree() == static_cast<int>(deg);
        for (std::size_t i = 0; ok && i < K.size(); ++i)
          ok = poly.evaluate(K.point(i)) == 0;
      } else if (name == "vanishing_poly") {
        std::uint32_t maxd = step.at("max_degree").get<std::uint32_t>();
        ok = !poly.is_zero() && poly.degree() <= static_cast<int>(maxd);
        for (std::size_t i = 0; ok && i < K.size(); ++i)
          ok = poly.evaluate(K.point(i)) == 0;
      } else if (name == "cone_vanishing") {
        PointSet cone = cone_closure(K);
        ok = cone.size() == step.at("cone_size").get<std::size_t>();
        for (std::size_t i = 0; ok && i < cone.size(); ++i)
          ok = poly.evaluate(cone.point(i)) == 0;
      } else if (name == "line_claim") {
        auto y = detail::point_from_json(step.at("y"));
        auto z = detail::point_from_json(step.at("z"));
        auto params = step.at("params").get<std::vector<std::uint32_t>>();
        ok = d >= 0 && params.size() == static_cast<std::size_t>(d) + 2;
        // every claimed parameter lands on a point of K
        for (auto a : params) {
          std::vector<std::uint32_t> pt(n);
          for (std::uint32_t i = 0; i < n; ++i)
            pt[i] = F.add(z[i], F.mul(a, y[i]));
          ok = ok && K.contains_point(pt);
        }
        if (step.at("degenerate").get<bool>()) {
          ok = ok && poly.evaluate(y) == 0;
        } else {
          auto bs = step.at("inv_params").get<std::vector<std::uint32_t>>();
          ok = ok && bs.size() == static_cast<std::size_t>(d) + 1;
          for (std::size_t bi = 0; ok && bi < bs.size(); ++bi) {
            auto w = detail::point_from_json(step.at("witness_points").at(bi));
            std::vector<std::uint32_t> expect(n);
            for (std::uint32_t i = 0; i < n; ++i)
              expect[i] = F.add(F.mul(bs[bi], z[i]), y[i]);
            ok = w == expect && poly.evaluate(w) == 0;
          }
          UniPoly restr = poly.restrict_to_line(y, z);
          ok = ok && restr.c == step.at("restriction").get<std::vector<std::uint32_t>>() &&
               restr.is_zero();
        }
        ok = ok && poly.evaluate(y) == 0;
      } else if (name == "schwartz_zippel_contradiction") {
        std::uint64_t zeros = count_zeros(poly);
        std::uint64_t cap = step.at("sz_cap").get<std::uint64_t>();
        std::uint64_t line_set = step.at("line_set_size").get<std::uint64_t>();
        std::uint64_t required = step.at("required_line_set").get<std::uint64_t>();
        ok = zeros == step.at("zeros").get<std::uint64_t>() &&
             cap == std::uint64_t(d) * ipow(q, n - 1) &&
             zeros <= cap && line_set <= zeros && line_set < required;
      } else if (name == "cascade_direction") {
        std::uint32_t j = step.at("j").get<std::uint32_t>();
        auto y = detail::point_from_json(step.at("y"));
        auto b = detail::point_from_json(step.at("b"));
        // the witness line must lie in K
        ok = true;
        for (auto code : line_codes(F, b, y)) ok = ok && K.contains(code);
        // rebuild the partial sum P - sum_{i>j} P_i
        Polynomial cur = Polynomial::zero(F, n);
        for (std::uint32_t i = 0; i <= j; ++i) cur = cur + poly.homogeneous_part(i);
        UniPoly restr = cur.restrict_to_line(b, y);
        ok = ok && restr.is_zero() &&
             poly.top_coefficient_on_line(y, b, j) ==
                 poly.homogeneous_part(j).evaluate(y) &&
             poly.homogeneous_part(j).evaluate(y) == 0;
      } else if (name == "homogeneous_zero") {
        std::uint32_t j = step.at("j").get<std::uint32_t>();
        Polynomial pj = poly.homogeneous_part(j);
        ok = true;
        std::uint64_t total = ipow(q, n);
        for (std::uint64_t code = 0; code < total && ok; ++code)
          ok = pj.evaluate(decode_point(code, q, n)) == 0;
        ok = ok && pj.is_zero() == step.at("formally_zero").get<bool>() && pj.is_zero();
      } else if (name == "constant_zero_contradiction") {
        ok = !K.empty() && poly.evaluate(K.point(0)) == 0 &&
             poly.homogeneous_part(0).is_zero();
      } else {
        out.message = "unknown step: " + name;
        return out;
      }
      ok = ok && step.at("ok").get<bool>();
      out.steps.emplace_back(name, ok);
      all_ok = all_ok && ok;
    }
    (void)pipeline;
    out.ok = all_ok;
    if (!all_ok) out.message = "one or more steps failed re-verification";
  } catch (const std::exception& e) {
    out.ok = false;
    out.message = std::string("malformed certificate: ") + e.what();
  }
  return out;
}

}  // namespace kakeya
