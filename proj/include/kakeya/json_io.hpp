#pragma once

#include <json.hpp>

#include "kakeya/pointset.hpp"

namespace kakeya {

// JSON mirror of the set file format: same fields, same encodings.
inline nlohmann::ordered_json set_to_json(const PointSet& K) {
  nlohmann::ordered_json j;
  j["q"] = K.field().order_string();
  if (K.field().k() > 1) j["mod"] = K.field().modulus();
  j["n"] = K.dim();
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < K.size(); ++i) pts.push_back(K.point(i));
  j["points"] = pts;
  return j;
}

inline LoadedSet set_from_json(const nlohmann::ordered_json& j) {
  std::string spec = j.at("q").get<std::string>();
  if (j.contains("mod")) {
    spec += " mod=";
    auto mod = j.at("mod").get<std::vector<std::uint32_t>>();
    for (std::size_t i = 0; i < mod.size(); ++i)
      spec += (i ? "," : "") + std::to_string(mod[i]);
  }
  LoadedSet out;
  out.field = std::make_unique<Field>(Field::parse(spec));
  out.set = std::make_unique<PointSet>(PointSet::from_points(
      *out.field, j.at("n").get<std::uint32_t>(),
      j.at("points").get<std::vector<std::vector<std::uint32_t>>>()));
  return out;
}

}  // namespace kakeya
