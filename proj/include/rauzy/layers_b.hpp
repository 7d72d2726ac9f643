#pragma once

#include <array>
#include <vector>

#include "rauzy/layers.hpp"
#include "rauzy/layers_a.hpp"
#include "rauzy/types.hpp"

namespace rauzy {

// The seven-slot vector table of construction B.  Level 0 places the unit
// vector of each letter of 0102010 in its slot; level i+1 sums the previous
// level's slots with the right end trimmed by (0,1,0,3,0,1,0) entries — the
// letters of 0102010 except that letter 2 trims 3.
struct STable {
  std::vector<std::array<LatticeVec, 7>> levels;

  const LatticeVec& s(int i, int j) const {
    return levels.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  int max_level() const { return static_cast<int>(levels.size()) - 1; }
};

inline constexpr std::array<int, 7> kTribonacciPattern = {0, 1, 0, 2, 0, 1, 0};
inline constexpr std::array<int, 7> kTribonacciTrims = {0, 1, 0, 3, 0, 1, 0};

inline STable s_table(int max_level) {
  if (max_level < 0) throw std::invalid_argument("s_table: max level must be >= 0");
  STable table;
  table.levels.resize(static_cast<std::size_t>(max_level) + 1);
  for (int j = 0; j < 7; ++j) table.levels[0][j] = unit_lattice(3, kTribonacciPattern[j]);
  for (int i = 0; i < max_level; ++i) {
    for (int j = 0; j < 7; ++j) {
      LatticeVec sum = LatticeVec::Zero(3);
      for (int k = 0; k <= 6 - kTribonacciTrims[j]; ++k) sum += table.levels[i][k];
      table.levels[static_cast<std::size_t>(i) + 1][j] = sum;
    }
  }
  return table;
}

// The seven children offsets at a level are the prefix sums of the slots.
inline ChildRule children_rule_b(int level, const STable& table) {
  ChildRule rule;
  rule.offsets.reserve(7);
  rule.tags.reserve(7);
  LatticeVec acc = LatticeVec::Zero(3);
  for (int j = 0; j < 7; ++j) {
    acc += table.s(level, j);
    rule.offsets.push_back(acc);
    rule.tags.push_back(j);
  }
  return rule;
}

inline std::vector<LayerPoint> children_b(const LayerPoint& x, int level, const STable& table) {
  if (x.level >= level) throw std::invalid_argument("children_b: source level must be below target");
  const auto rule = children_rule_b(level, table);
  std::vector<LayerPoint> out;
  out.reserve(7);
  for (std::size_t k = 0; k < 7; ++k) {
    LayerPoint p;
    p.lattice = x.lattice + rule.offsets[k];
    p.level = level;
    p.tag = rule.tags[k];
    p.length = p.lattice.sum();
    out.push_back(std::move(p));
  }
  return out;
}

// Slots 0..5 span the same hexagon as the six-children rule; the slot-6
// child is the far corner of the level and sits inside its parent's cell.
inline std::array<LatticeVec, 6> cell_offsets_b(int level, const STable& table) {
  const auto rule = children_rule_b(level, table);
  std::array<LatticeVec, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = rule.offsets[k];
  return out;
}

inline LayerSet build_layers_b(int max_level, const BuildOptions& opts = {}) {
  const STable table = s_table(std::max(max_level, 0));
  return build_layers(3, max_level, [&table](int level) { return children_rule_b(level, table); },
                      opts);
}

inline LayerSet build_boundary_b(int max_level, const Frame& frame,
                                 const BoundaryOptions& opts = {}) {
  const STable table = s_table(std::max(max_level, 0));
  return build_boundary_layers(
      3, max_level, [&table](int level) { return children_rule_b(level, table); },
      [&table](int level) { return cell_offsets_b(level, table); }, frame, opts);
}

}  // namespace rauzy
