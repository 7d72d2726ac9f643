#pragma once

#include <array>
#include <vector>

#include "rauzy/layers.hpp"
#include "rauzy/types.hpp"

namespace rauzy {

// Word vectors of the tribonacci words a_0, a_1, ..., generated directly on
// the lattice by b_{n+3} = b_{n+2} + b_{n+1} + b_n.  b(i, j) = b_{3i+j}.
struct BPoints {
  std::vector<LatticeVec> b;

  const LatticeVec& operator()(int i, int j) const {
    return b.at(static_cast<std::size_t>(3 * i + j));
  }
  const LatticeVec& at(int n) const { return b.at(static_cast<std::size_t>(n)); }
  int max_index() const { return static_cast<int>(b.size()) - 1; }
};

inline BPoints b_points(int max_index) {
  if (max_index < 0) throw std::invalid_argument("b_points: max index must be >= 0");
  BPoints out;
  out.b.reserve(static_cast<std::size_t>(max_index) + 1);
  LatticeVec b0(3), b1(3), b2(3);
  b0 << 1, 0, 0;
  b1 << 1, 1, 0;
  b2 << 2, 1, 1;
  out.b.push_back(b0);
  if (max_index >= 1) out.b.push_back(b1);
  if (max_index >= 2) out.b.push_back(b2);
  for (int n = 3; n <= max_index; ++n) {
    out.b.push_back(out.b[n - 1] + out.b[n - 2] + out.b[n - 3]);
  }
  return out;
}

// The six children offsets at a level, in slot order; sublevels 0,1,1,2,2,2.
inline ChildRule children_rule_a(int level, const BPoints& b) {
  const LatticeVec& b0 = b(level, 0);
  const LatticeVec& b1 = b(level, 1);
  const LatticeVec& b2 = b(level, 2);
  ChildRule rule;
  rule.offsets = {b0, b1, b0 + b1, b2, b0 + b2, b1 + b2};
  rule.tags = {0, 1, 1, 2, 2, 2};
  return rule;
}

// A cell's hexagon is spanned by the same six offsets.
inline std::array<LatticeVec, 6> cell_offsets_a(int level, const BPoints& b) {
  const auto rule = children_rule_a(level, b);
  std::array<LatticeVec, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = rule.offsets[k];
  return out;
}

// The six children of x in the layer at `level`.
inline std::vector<LayerPoint> children_a(const LayerPoint& x, int level, const BPoints& b) {
  if (x.level >= level) throw std::invalid_argument("children_a: source level must be below target");
  const auto rule = children_rule_a(level, b);
  std::vector<LayerPoint> out;
  out.reserve(6);
  for (std::size_t k = 0; k < 6; ++k) {
    LayerPoint p;
    p.lattice = x.lattice + rule.offsets[k];
    p.level = level;
    p.tag = rule.tags[k];
    p.length = p.lattice.sum();
    out.push_back(std::move(p));
  }
  return out;
}

inline void require_b_range(int max_level, const BPoints& b) {
  if (max_level >= 0 && b.max_index() < 3 * max_level + 2) {
    throw std::invalid_argument("layers A: b points table too short for requested level");
  }
}

inline LayerSet build_layers_a(int max_level, const BPoints& b, const BuildOptions& opts = {}) {
  require_b_range(max_level, b);
  return build_layers(3, max_level, [&b](int level) { return children_rule_a(level, b); }, opts);
}

inline LayerSet build_boundary_a(int max_level, const BPoints& b, const Frame& frame,
                                 const BoundaryOptions& opts = {}) {
  require_b_range(max_level, b);
  return build_boundary_layers(
      3, max_level, [&b](int level) { return children_rule_a(level, b); },
      [&b](int level) { return cell_offsets_a(level, b); }, frame, opts);
}

}  // namespace rauzy
