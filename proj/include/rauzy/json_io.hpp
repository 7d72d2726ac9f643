#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "rauzy/words.hpp"

namespace rauzy {

// {"d": 3, "rules": [[0,1],[0,2],[0]]} — rule i is the image of letter i.
inline Substitution substitution_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  std::vector<Word> rules;
  for (const auto& r : j.at("rules")) {
    std::vector<std::uint8_t> letters;
    for (const auto& c : r) letters.push_back(c.get<std::uint8_t>());
    rules.emplace_back(d, std::move(letters));
  }
  return Substitution(d, std::move(rules));
}

inline Substitution load_substitution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open substitution file: " + path);
  nlohmann::json j;
  in >> j;
  return substitution_from_json(j);
}

}  // namespace rauzy
