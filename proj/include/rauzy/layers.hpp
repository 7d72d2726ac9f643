#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/frame.hpp"
#include "rauzy/types.hpp"

namespace rauzy {

// One lattice point of a layered construction, with its genealogy.  `tag`
// records the rule slot that produced the point (sublevel for the six-child
// rule, prefix-sum slot otherwise); the seed origin has level, tag and
// parent all set to -1.
struct LayerPoint {
  LatticeVec lattice;
  int level = -1;
  int tag = -1;
  std::int64_t parent = -1;  // index into LayerSet::points
  std::int64_t length = 0;   // sum of lattice entries
};

struct LevelStats {
  int level = 0;
  std::size_t candidates = 0;  // children emitted before dedup
  std::size_t unique = 0;      // new points that survived dedup
};

// Level-indexed family of lattice points.  Points are stored in canonical
// order (level, length, lattice), which every emitter relies on.
struct LayerSet {
  Index dim = 0;
  std::vector<LayerPoint> points;
  std::vector<LevelStats> stats;

  std::vector<const LayerPoint*> at_level(int level) const {
    std::vector<const LayerPoint*> out;
    for (const auto& p : points) {
      if (p.level == level) out.push_back(&p);
    }
    return out;
  }
};

// Child offsets for one level: child = source + offsets[k], tagged tags[k].
struct ChildRule {
  std::vector<LatticeVec> offsets;
  std::vector<int> tags;
};

using ChildRuleFn = std::function<ChildRule(int level)>;
// The six offsets spanning a parent's hexagon at a given level.
using CellRuleFn = std::function<std::array<LatticeVec, 6>(int level)>;

struct BuildOptions {
  int workers = 1;
};

namespace detail {

struct Candidate {
  LatticeVec lattice;
  int tag;
  std::int64_t parent;
};

// Children of all sources in stored order; the emitted sequence does not
// depend on the worker count.
inline std::vector<Candidate> emit_children(const std::vector<LayerPoint>& points,
                                            const std::vector<std::int64_t>& sources,
                                            const ChildRule& rule, int workers) {
  return ordered_parallel_emit<Candidate>(
      sources.size(), workers, [&](std::size_t i, std::vector<Candidate>& out) {
        const std::int64_t src = sources[i];
        const LatticeVec& base = points[static_cast<std::size_t>(src)].lattice;
        for (std::size_t k = 0; k < rule.offsets.size(); ++k) {
          out.push_back({base + rule.offsets[k], rule.tags[k], src});
        }
      });
}

// First-writer-wins dedup in candidate order, then canonical (length,
// lattice) ordering of the new level.  Returns indices of the new points.
template <typename Keep>
std::vector<std::int64_t> absorb_level(LayerSet& set,
                                       std::map<LatticeVec, std::int64_t, LatticeLess>& seen,
                                       std::vector<Candidate>&& candidates, int level,
                                       const Keep& keep) {
  std::vector<LayerPoint> fresh;
  std::map<LatticeVec, bool, LatticeLess> claimed;
  for (auto& c : candidates) {
    if (seen.count(c.lattice) || claimed.count(c.lattice)) continue;
    claimed.emplace(c.lattice, true);
    LayerPoint p;
    p.lattice = std::move(c.lattice);
    p.level = level;
    p.tag = c.tag;
    p.parent = c.parent;
    p.length = p.lattice.sum();
    if (keep(p)) fresh.push_back(std::move(p));
  }
  std::stable_sort(fresh.begin(), fresh.end(), [](const LayerPoint& a, const LayerPoint& b) {
    if (a.length != b.length) return a.length < b.length;
    return LatticeLess{}(a.lattice, b.lattice);
  });
  std::vector<std::int64_t> indices;
  indices.reserve(fresh.size());
  for (auto& p : fresh) {
    const auto idx = static_cast<std::int64_t>(set.points.size());
    seen.emplace(p.lattice, idx);
    set.points.push_back(std::move(p));
    indices.push_back(idx);
  }
  return indices;
}

}  // namespace detail

// Builds the union of all layers up to max_level: level i children are
// generated from every point of the levels below, deduplicated on lattice
// keys (a point keeps its first, lowest level).
inline LayerSet build_layers(Index dim, int max_level, const ChildRuleFn& rule,
                             const BuildOptions& opts = {}) {
  if (max_level < -1) throw std::invalid_argument("build_layers: max_level must be >= -1");
  LayerSet set;
  set.dim = dim;
  set.points.push_back({LatticeVec::Zero(dim), -1, -1, -1, 0});
  std::map<LatticeVec, std::int64_t, LatticeLess> seen;
  seen.emplace(set.points[0].lattice, 0);

  for (int level = 0; level <= max_level; ++level) {
    std::vector<std::int64_t> sources(set.points.size());
    for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = static_cast<std::int64_t>(i);
    auto candidates = detail::emit_children(set.points, sources, rule(level), opts.workers);
    const std::size_t emitted = candidates.size();
    auto fresh = detail::absorb_level(set, seen, std::move(candidates), level,
                                      [](const LayerPoint&) { return true; });
    set.stats.push_back({level, emitted, fresh.size()});
  }
  return set;
}

// Hexagonal cell spanned by a point's six children, vertices sorted
// counterclockwise around the projected parent.
struct Cell {
  PlaneVec parent;
  std::array<PlaneVec, 6> vertices;
};

inline Cell cell_of(const PlaneVec& parent, std::array<PlaneVec, 6> children) {
  std::array<double, 6> angle{};
  for (std::size_t i = 0; i < 6; ++i) {
    const PlaneVec d = children[i] - parent;
    angle[i] = std::atan2(d.y(), d.x());
  }
  std::array<int, 6> order{0, 1, 2, 3, 4, 5};
  std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
  Cell cell;
  cell.parent = parent;
  for (std::size_t i = 0; i < 6; ++i) cell.vertices[i] = children[order[i]];
  for (std::size_t i = 0; i < 6; ++i) {
    const PlaneVec d = cell.vertices[i] - cell.vertices[(i + 1) % 6];
    if (d.norm() < 1e-12) throw DegenerateCellError("cell_of: coincident vertices");
  }
  return cell;
}

// Even-odd test; points within boundary_tol of an edge count as inside.
inline bool point_in_cell(const PlaneVec& p, const Cell& cell, double boundary_tol = 1e-9) {
  for (std::size_t i = 0; i < 6; ++i) {
    const PlaneVec a = cell.vertices[i];
    const PlaneVec b = cell.vertices[(i + 1) % 6];
    const PlaneVec ab = b - a;
    const double t = std::clamp(ab.dot(p - a) / ab.squaredNorm(), 0.0, 1.0);
    if ((a + t * ab - p).norm() <= boundary_tol) return true;
  }
  bool inside = false;
  for (std::size_t i = 0; i < 6; ++i) {
    const PlaneVec a = cell.vertices[i];
    const PlaneVec b = cell.vertices[(i + 1) % 6];
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double xcross = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (p.x() < xcross) inside = !inside;
    }
  }
  return inside;
}

struct BoundaryOptions {
  bool strict_ancestors = false;  // check all ancestor cells, not just the grandparent's
  int workers = 1;
  double boundary_tol = 1e-9;
};

// Boundary variant of build_layers: only surviving points produce children,
// and a new point survives only if it lies outside the hexagon its
// grandparent spans at the parent's level (points with no grandparent always
// survive).  Strict mode walks the whole ancestor chain the same way.
inline LayerSet build_boundary_layers(Index dim, int max_level, const ChildRuleFn& rule,
                                      const CellRuleFn& cell_rule, const Frame& frame,
                                      const BoundaryOptions& opts = {}) {
  if (max_level < -1) throw std::invalid_argument("build_boundary_layers: max_level must be >= -1");
  LayerSet set;
  set.dim = dim;
  set.points.push_back({LatticeVec::Zero(dim), -1, -1, -1, 0});
  std::map<LatticeVec, std::int64_t, LatticeLess> seen;
  seen.emplace(set.points[0].lattice, 0);

  auto ancestor_cell = [&](std::int64_t ancestor, int child_level) {
    const LayerPoint& g = set.points[static_cast<std::size_t>(ancestor)];
    const auto offsets = cell_rule(child_level);
    std::array<PlaneVec, 6> verts;
    for (std::size_t k = 0; k < 6; ++k) verts[k] = project2(frame, LatticeVec(g.lattice + offsets[k]));
    return cell_of(project2(frame, g.lattice), verts);
  };

  auto survives = [&](const LayerPoint& p) {
    if (p.parent < 0) return true;
    const PlaneVec pos = project2(frame, p.lattice);
    std::int64_t child = p.parent;  // walk: test against the cell of each ancestor above the parent
    std::int64_t ancestor = set.points[static_cast<std::size_t>(child)].parent;
    while (ancestor >= 0) {
      const int child_level = set.points[static_cast<std::size_t>(child)].level;
      if (point_in_cell(pos, ancestor_cell(ancestor, child_level), opts.boundary_tol)) return false;
      if (!opts.strict_ancestors) return true;
      child = ancestor;
      ancestor = set.points[static_cast<std::size_t>(child)].parent;
    }
    return true;
  };

  for (int level = 0; level <= max_level; ++level) {
    std::vector<std::int64_t> sources(set.points.size());
    for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = static_cast<std::int64_t>(i);
    auto candidates = detail::emit_children(set.points, sources, rule(level), opts.workers);
    const std::size_t emitted = candidates.size();
    auto fresh = detail::absorb_level(set, seen, std::move(candidates), level, survives);
    set.stats.push_back({level, emitted, fresh.size()});
  }
  return set;
}

}  // namespace rauzy
