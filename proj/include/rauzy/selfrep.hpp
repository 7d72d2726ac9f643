#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "rauzy/errors.hpp"
#include "rauzy/frame.hpp"
#include "rauzy/layers.hpp"
#include "rauzy/types.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// Number of trailing components dropped when the slot for letter `c` is
// rebuilt.  The exception trims 3 instead of 2, which turns the pure rule
// into the one that reproduces the tribonacci words.
inline int trim_count(int letter, bool letter2_exception) {
  return (letter2_exception && letter == 2) ? 3 : letter;
}

struct ReplicateOptions {
  bool letter2_exception = false;
  std::int64_t max_length = 100'000'000;
};

// String engine: the n-th replicate built literally from component words.
// Slot i of generation n concatenates slots 0..l-trim(w_i) of generation
// n-1; the word is the concatenation of all l+1 slots.
inline Word replicate(const Word& w, int n, const ReplicateOptions& opts = {}) {
  if (n < 0) throw std::invalid_argument("replicate: depth must be >= 0");
  if (w.empty()) throw std::invalid_argument("replicate: word must be nonempty");
  const std::int64_t l = w.length() - 1;
  std::vector<Word> comps;
  comps.reserve(static_cast<std::size_t>(l) + 1);
  for (std::int64_t i = 0; i <= l; ++i) {
    comps.emplace_back(w.alphabet_size(), std::vector<std::uint8_t>{w.letter(i)});
  }
  for (int step = 0; step < n; ++step) {
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= l; ++i) {
      const std::int64_t upper = l - trim_count(w.letter(i), opts.letter2_exception);
      for (std::int64_t k = 0; k <= upper; ++k) total += comps[k].length();
    }
    if (total > opts.max_length) throw ResourceLimitError("replicate: word length would exceed cap");
    std::vector<Word> next;
    next.reserve(comps.size());
    for (std::int64_t i = 0; i <= l; ++i) {
      const std::int64_t upper = l - trim_count(w.letter(i), opts.letter2_exception);
      Word piece(w.alphabet_size());
      for (std::int64_t k = 0; k <= upper; ++k) piece = concat(piece, comps[k]);
      next.push_back(std::move(piece));
    }
    comps = std::move(next);
  }
  Word out(w.alphabet_size());
  for (const Word& c : comps) out = concat(out, c);
  return out;
}

// Vector engine state: the exact word vectors of the current components.
struct SelfRepSystem {
  Word word;
  bool letter2_exception = false;
  std::vector<LatticeVec> component_vectors;  // one per character of `word`
  int n = 0;
};

inline SelfRepSystem make_selfrep_system(const Word& w, bool letter2_exception = false) {
  if (w.empty()) throw std::invalid_argument("make_selfrep_system: word must be nonempty");
  SelfRepSystem sys;
  sys.word = w;
  sys.letter2_exception = letter2_exception;
  sys.component_vectors.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t i = 0; i < w.length(); ++i) {
    sys.component_vectors.push_back(unit_lattice(w.alphabet_size(), w.letter(i)));
  }
  return sys;
}

inline LatticeVec total_vector(const SelfRepSystem& sys) {
  LatticeVec total = LatticeVec::Zero(sys.word.alphabet_size());
  for (const auto& c : sys.component_vectors) total += c;
  return total;
}

// One exact step of the component recursion, without building words.
inline SelfRepSystem replicate_vectors(const SelfRepSystem& sys) {
  const std::int64_t l = sys.word.length() - 1;
  std::int64_t max_entry = 0;
  for (const auto& c : sys.component_vectors) max_entry = std::max(max_entry, c.maxCoeff());
  if (max_entry > std::numeric_limits<std::int64_t>::max() / (l + 2)) {
    throw ResourceLimitError("replicate_vectors: component entries exceed integer range");
  }
  // prefix sums over slots; slot i of the next generation reads slots
  // 0..l-trim(w_i) only
  std::vector<LatticeVec> prefix(sys.component_vectors.size());
  LatticeVec acc = LatticeVec::Zero(sys.word.alphabet_size());
  for (std::size_t k = 0; k < sys.component_vectors.size(); ++k) {
    acc += sys.component_vectors[k];
    prefix[k] = acc;
  }
  SelfRepSystem next = sys;
  next.n = sys.n + 1;
  for (std::int64_t i = 0; i <= l; ++i) {
    const std::int64_t upper = l - trim_count(sys.word.letter(i), sys.letter2_exception);
    next.component_vectors[static_cast<std::size_t>(i)] =
        upper < 0 ? LatticeVec::Zero(sys.word.alphabet_size())
                  : prefix[static_cast<std::size_t>(upper)];
  }
  return next;
}

struct LimitOptions {
  double tol = 1e-9;
  int max_steps = 200;
  bool letter2_exception = false;
};

// Direction of the replicate word vectors, iterated in floating point with
// per-step normalization (the recursion is linear, so rescaling is free).
inline RealVec limit_direction(const Word& w, const LimitOptions& opts = {}) {
  if (opts.tol <= 0.0) throw std::invalid_argument("limit_direction: tolerance must be positive");
  if (w.empty()) throw std::invalid_argument("limit_direction: word must be nonempty");
  const std::int64_t l = w.length() - 1;
  const Index d = w.alphabet_size();
  RealMat comps = RealMat::Zero(l + 1, d);
  for (std::int64_t i = 0; i <= l; ++i) comps(i, w.letter(i)) = 1.0;

  RealVec direction = word_vector(w).cast<double>().normalized();
  for (int step = 0; step < opts.max_steps; ++step) {
    RealMat prefix(l + 1, d);
    RealVec acc = RealVec::Zero(d);
    for (std::int64_t k = 0; k <= l; ++k) {
      acc += comps.row(k).transpose();
      prefix.row(k) = acc.transpose();
    }
    for (std::int64_t i = 0; i <= l; ++i) {
      const std::int64_t upper = l - trim_count(w.letter(i), opts.letter2_exception);
      if (upper < 0) {
        comps.row(i).setZero();
      } else {
        comps.row(i) = prefix.row(upper);
      }
    }
    RealVec total = comps.colwise().sum().transpose();
    const double norm = total.norm();
    if (norm == 0.0) throw NotSelfReplicatingError("limit_direction: replicates vanished");
    comps /= norm;
    total /= norm;
    if ((total - direction).cwiseAbs().maxCoeff() < opts.tol) return total;
    direction = total;
  }
  throw NotSelfReplicatingError("limit_direction: no convergence within step budget");
}

// The s-vector table of a word: slot j starts as the unit vector of letter
// w_j and each level sums the previous level's slots up to l - trim(w_j).
struct WordSTable {
  Word word;
  bool letter2_exception = false;
  std::vector<std::vector<LatticeVec>> levels;

  const LatticeVec& s(int i, int j) const {
    return levels.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  }
  std::int64_t width() const { return word.length(); }
  int max_level() const { return static_cast<int>(levels.size()) - 1; }
};

inline WordSTable selfrep_s_table(const Word& w, int max_level, bool letter2_exception = false) {
  if (max_level < 0) throw std::invalid_argument("selfrep_s_table: max level must be >= 0");
  if (w.empty()) throw std::invalid_argument("selfrep_s_table: word must be nonempty");
  const std::int64_t l = w.length() - 1;
  WordSTable table;
  table.word = w;
  table.letter2_exception = letter2_exception;
  table.levels.resize(static_cast<std::size_t>(max_level) + 1);
  auto& base = table.levels[0];
  base.reserve(static_cast<std::size_t>(l) + 1);
  for (std::int64_t j = 0; j <= l; ++j) base.push_back(unit_lattice(w.alphabet_size(), w.letter(j)));
  for (int i = 0; i < max_level; ++i) {
    auto& next = table.levels[static_cast<std::size_t>(i) + 1];
    next.reserve(static_cast<std::size_t>(l) + 1);
    for (std::int64_t j = 0; j <= l; ++j) {
      const std::int64_t upper = l - trim_count(w.letter(j), letter2_exception);
      LatticeVec sum = LatticeVec::Zero(w.alphabet_size());
      for (std::int64_t k = 0; k <= upper; ++k) sum += table.levels[static_cast<std::size_t>(i)][k];
      next.push_back(std::move(sum));
    }
  }
  return table;
}

inline ChildRule children_rule_w(int level, const WordSTable& table) {
  ChildRule rule;
  const std::int64_t width = table.width();
  rule.offsets.reserve(static_cast<std::size_t>(width));
  rule.tags.reserve(static_cast<std::size_t>(width));
  LatticeVec acc = LatticeVec::Zero(table.word.alphabet_size());
  for (std::int64_t j = 0; j < width; ++j) {
    acc += table.s(level, static_cast<int>(j));
    rule.offsets.push_back(acc);
    rule.tags.push_back(static_cast<int>(j));
  }
  return rule;
}

// The domain of a self-replicating word: layers of prefix-sum children,
// width l+1, accumulated from all previous layers.
inline LayerSet build_domain_w(const Word& w, int max_level, bool letter2_exception = false,
                               const BuildOptions& opts = {}) {
  const WordSTable table = selfrep_s_table(w, std::max(max_level, 0), letter2_exception);
  return build_layers(w.alphabet_size(), max_level,
                      [&table](int level) { return children_rule_w(level, table); }, opts);
}

struct TilingOffsets {
  PlaneVec u01, u12, u02;
};

// The three in-plane translations u_0 - u_1, u_1 - u_2, u_0 - u_2.
inline TilingOffsets tiling_offsets(const Frame& frame) {
  if (frame.dim() != 3) throw std::invalid_argument("tiling_offsets: frame must be 3-dimensional");
  TilingOffsets t;
  t.u01 = PlaneVec(frame.u(0) - frame.u(1));
  t.u12 = PlaneVec(frame.u(1) - frame.u(2));
  t.u02 = PlaneVec(frame.u(0) - frame.u(2));
  return t;
}

struct TilingOptions {
  double min_separation = 1e-6;
  double neighbor_radius = 0.05;   // grid search radius for near pairs
  double window_half_width = 1.25; // central coverage window
  int window_grid = 64;
  int workers = 1;
  bool letter2_exception = false;
  LimitOptions limit;
};

struct TilingCollision {
  std::array<int, 3> c1, c2;
  double distance;
};

struct TilingReport {
  int level = 0;
  int radius = 0;
  std::size_t points_per_copy = 0;
  std::size_t offsets_enumerated = 0;
  std::size_t distinct_translations = 0;
  std::vector<TilingCollision> collisions;
  double min_distance = std::numeric_limits<double>::infinity();  // over distinct-copy pairs
  double coverage = 0.0;

  bool disjoint() const { return collisions.empty(); }
};

namespace detail {

struct PlaneGrid {
  double cell;
  std::unordered_map<std::int64_t, std::vector<std::int32_t>> bins;
  const std::vector<PlaneVec>* pts = nullptr;

  static std::int64_t key(std::int64_t ix, std::int64_t iy) { return (ix << 32) ^ (iy & 0xffffffff); }

  void build(const std::vector<PlaneVec>& points, double cell_size) {
    cell = cell_size;
    pts = &points;
    bins.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto ix = static_cast<std::int64_t>(std::floor(points[i].x() / cell));
      const auto iy = static_cast<std::int64_t>(std::floor(points[i].y() / cell));
      bins[key(ix, iy)].push_back(static_cast<std::int32_t>(i));
    }
  }

  // nearest squared distance to q among points within one cell ring
  double nearest_sq(const PlaneVec& q) const {
    const auto ix = static_cast<std::int64_t>(std::floor(q.x() / cell));
    const auto iy = static_cast<std::int64_t>(std::floor(q.y() / cell));
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = bins.find(key(ix + dx, iy + dy));
        if (it == bins.end()) continue;
        for (std::int32_t i : it->second) best = std::min(best, ((*pts)[i] - q).squaredNorm());
      }
    }
    return best;
  }
};

}  // namespace detail

// Desk-scale evidence for the discrete-tiling conjecture: all radius-bounded
// integer combinations of the three translations are applied to the level
// point cloud, distinct copies are tested for pairwise separation, and the
// occupancy of a central window is measured.  Failures are reported, never
// thrown.
inline TilingReport tiling_check(const Word& w, int level, int radius,
                                 const TilingOptions& opts = {}) {
  if (radius < 0) throw std::invalid_argument("tiling_check: radius must be >= 0");
  LimitOptions limit = opts.limit;
  limit.letter2_exception = opts.letter2_exception;
  const Frame frame = build_frame(limit_direction(w, limit));
  const TilingOffsets offs = tiling_offsets(frame);
  const LayerSet set = build_domain_w(w, level, opts.letter2_exception);

  std::vector<PlaneVec> cloud;
  cloud.reserve(set.points.size());
  for (const auto& p : set.points) cloud.push_back(project2(frame, p.lattice));

  TilingReport report;
  report.level = level;
  report.radius = radius;
  report.points_per_copy = cloud.size();

  // translations are rank-2: group the offset triples by net translation
  std::vector<std::pair<PlaneVec, std::array<int, 3>>> translations;
  for (int c01 = -radius; c01 <= radius; ++c01) {
    for (int c12 = -radius; c12 <= radius; ++c12) {
      for (int c02 = -radius; c02 <= radius; ++c02) {
        ++report.offsets_enumerated;
        const PlaneVec t = static_cast<double>(c01) * offs.u01 +
                           static_cast<double>(c12) * offs.u12 +
                           static_cast<double>(c02) * offs.u02;
        bool duplicate = false;
        for (const auto& [seen, c] : translations) duplicate = duplicate || (seen - t).norm() < 1e-9;
        if (!duplicate) translations.push_back({t, {c01, c12, c02}});
      }
    }
  }
  report.distinct_translations = translations.size();

  detail::PlaneGrid grid;
  grid.build(cloud, opts.neighbor_radius);

  struct PairResult {
    std::size_t i, j;
    double distance;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < translations.size(); ++i) {
    for (std::size_t j = i + 1; j < translations.size(); ++j) pairs.push_back({i, j});
  }
  auto results = ordered_parallel_emit<PairResult>(
      pairs.size(), opts.workers, [&](std::size_t k, std::vector<PairResult>& out) {
        const auto [i, j] = pairs[k];
        const PlaneVec delta = translations[i].first - translations[j].first;
        double best = std::numeric_limits<double>::infinity();
        for (const PlaneVec& q : cloud) {
          best = std::min(best, grid.nearest_sq(q + delta));
          if (best == 0.0) break;
        }
        out.push_back({i, j, std::sqrt(best)});
      });

  for (const auto& r : results) {
    report.min_distance = std::min(report.min_distance, r.distance);
    if (r.distance <= opts.min_separation) {
      report.collisions.push_back({translations[r.i].second, translations[r.j].second, r.distance});
    }
  }

  // occupancy of the central window by all copies together
  const int g = opts.window_grid;
  std::vector<char> hit(static_cast<std::size_t>(g) * g, 0);
  const double w2 = opts.window_half_width;
  for (const auto& [t, c] : translations) {
    for (const PlaneVec& p : cloud) {
      const double x = (p.x() + t.x() + w2) / (2.0 * w2);
      const double y = (p.y() + t.y() + w2) / (2.0 * w2);
      if (x < 0.0 || x >= 1.0 || y < 0.0 || y >= 1.0) continue;
      hit[static_cast<std::size_t>(y * g) * g + static_cast<std::size_t>(x * g)] = 1;
    }
  }
  std::size_t occupied = 0;
  for (char h : hit) occupied += h;
  report.coverage = static_cast<double>(occupied) / static_cast<double>(hit.size());
  return report;
}

}  // namespace rauzy
