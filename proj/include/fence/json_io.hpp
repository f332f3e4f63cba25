// JSON schemas shared by the library and the CLI, plus the generator-string
// grammar for naming ideals on the command line.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fence/element.hpp"
#include "fence/ideals.hpp"
#include "fence/maxsub.hpp"
#include "fence/pointset.hpp"

namespace fence {

inline void to_json(nlohmann::json& j, const PointSet& s) {
  j = s.elements();
}

inline void from_json(const nlohmann::json& j, PointSet& s) {
  s = PointSet::from_elements(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const PartialInjection& a) {
  j = nlohmann::json{{"dom", a.dom()}, {"img", a.img()}};
}

inline void from_json(const nlohmann::json& j, PartialInjection& a) {
  a = PartialInjection(j.at("dom").get<PointSet>(),
                       j.at("img").get<PointSet>());
}

inline void to_json(nlohmann::json& j, const IdealFamily& f) {
  j = nlohmann::json{{"n", f.chain().value()}, {"members", f.members()}};
}

inline IdealFamily ideal_family_from_json(const nlohmann::json& j) {
  return IdealFamily(ChainSize(j.at("n").get<int>()),
                     j.at("members").get<std::vector<PointSet>>());
}

inline void to_json(nlohmann::json& j, const MaxSubDescriptor& d) {
  j = nlohmann::json{{"type", static_cast<int>(d.type)},
                     {"removed", d.removed}};
  switch (d.type) {
    case MaxSubType::singleton_block:
      j["g"] = d.g;
      break;
    case MaxSubType::class_removal_block:
      j["y1"] = d.y1;
      break;
    case MaxSubType::block_bipartition: {
      nlohmann::json blocks = nlohmann::json::array();
      for (const BlockFamily& b : d.blocks) blocks.push_back(b.members);
      j["blocks"] = std::move(blocks);
      j["q1_indices"] = d.q1;
      j["q2_indices"] = d.q2;
      break;
    }
  }
}

inline void from_json(const nlohmann::json& j, MaxSubDescriptor& d) {
  d = MaxSubDescriptor{};
  switch (j.at("type").get<int>()) {
    case 1:
      d.type = MaxSubType::singleton_block;
      d.g = j.at("g").get<PointSet>();
      break;
    case 2:
      d.type = MaxSubType::class_removal_block;
      d.y1 = j.at("y1").get<PointSet>();
      break;
    case 3: {
      d.type = MaxSubType::block_bipartition;
      for (const nlohmann::json& members : j.at("blocks")) {
        BlockFamily b;
        b.members = members.get<std::vector<PointSet>>();
        // Singleton blocks have exactly one member; removal families never
        // fewer than two.
        b.kind = b.members.size() == 1 ? BlockKind::singleton
                                       : BlockKind::class_removals;
        b.origin = b.members.front();
        d.blocks.push_back(std::move(b));
      }
      d.q1 = j.at("q1_indices").get<std::vector<int>>();
      d.q2 = j.at("q2_indices").get<std::vector<int>>();
      break;
    }
    default:
      throw std::invalid_argument("descriptor type must be 1, 2 or 3");
  }
  d.removed = j.at("removed").get<std::vector<PartialInjection>>();
}

// Generator grammar for naming an ideal: generators separated by ';', each
// a comma-list of points, e.g. "1,3;2" for {{1,3},{2}}. The empty string
// names the trivial ideal. Points may come in any order; duplicates and
// out-of-range points are rejected with the offending generator named.
inline std::vector<PointSet> parse_ideal_spec(const std::string& spec,
                                              ChainSize n) {
  std::vector<PointSet> out;
  if (spec.empty()) return out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(';', start), spec.size());
    const std::string token = spec.substr(start, end - start);
    const auto fail = [&](const std::string& why) {
      throw std::invalid_argument("bad generator \"" + token + "\": " + why);
    };
    std::vector<int> points;
    std::size_t pos = 0;
    while (pos <= token.size()) {
      const std::size_t comma = std::min(token.find(',', pos), token.size());
      std::string item = token.substr(pos, comma - pos);
      const std::size_t first = item.find_first_not_of(" \t");
      const std::size_t last = item.find_last_not_of(" \t");
      item = first == std::string::npos
                 ? std::string{}
                 : item.substr(first, last - first + 1);
      if (item.empty()) fail("empty point");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        fail("\"" + item + "\" is not an integer");
      }
      if (used != item.size()) fail("\"" + item + "\" is not an integer");
      if (value < 1 || value > n.value()) {
        fail("point " + std::to_string(value) + " outside [1, " +
             std::to_string(n.value()) + "]");
      }
      points.push_back(value);
      pos = comma + 1;
      if (comma == token.size()) break;
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
      fail("duplicate point");
    }
    out.push_back(PointSet::from_elements(points));
    start = end + 1;
    if (end == spec.size()) break;
  }
  return out;
}

}  // namespace fence
