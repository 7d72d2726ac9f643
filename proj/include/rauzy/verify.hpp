#pragma once

#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rauzy/frame.hpp"
#include "rauzy/layers_a.hpp"
#include "rauzy/layers_b.hpp"
#include "rauzy/oracle.hpp"
#include "rauzy/render.hpp"
#include "rauzy/selfrep.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/words.hpp"

namespace rauzy {

// Self-contained acceptance checks; every tolerance is pinned here.  The
// same runner backs the `acceptance` test binary and the `verify` CLI
// subcommand.  No network, no external data.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify_detail {

inline LatticeMat mat3(std::initializer_list<std::int64_t> entries) {
  LatticeMat m(3, 3);
  int i = 0;
  for (std::int64_t v : entries) {
    m(i / 3, i % 3) = v;
    ++i;
  }
  return m;
}

inline LatticeVec lat3(std::int64_t a, std::int64_t b, std::int64_t c) {
  LatticeVec v(3);
  v << a, b, c;
  return v;
}

// Reference data: Pisot numbers and matrices of the four built-in
// substitutions, as printed in the source table (rows 1..3 are written in
// the transposed orientation there).
inline const std::array<double, 4>& reference_pisot_numbers() {
  static const std::array<double, 4> k = {1.8393, 1.3247, 2.5468, 1.4656};
  return k;
}

inline const std::array<LatticeMat, 4>& reference_matrices() {
  static const std::array<LatticeMat, 4> k = {
      mat3({1, 1, 1, 1, 0, 0, 0, 1, 0}),
      mat3({0, 1, 1, 0, 0, 1, 1, 0, 0}),
      mat3({2, 1, 1, 0, 0, 1, 1, 0, 0}),
      mat3({1, 1, 0, 0, 0, 1, 1, 0, 0}),
  };
  return k;
}

struct LimitRow {
  const char* word;
  std::array<double, 3> v;
};

inline const std::array<LimitRow, 6>& reference_limits() {
  static const std::array<LimitRow, 6> k = {{
      {"0120", {0.756, 0.521, 0.397}},
      {"0102", {0.850, 0.462, 0.251}},
      {"0201", {0.831, 0.259, 0.492}},
      {"0102010", {0.861, 0.447, 0.242}},
      {"1201", {0.381, 0.717, 0.584}},
      {"2010", {0.771, 0.359, 0.526}},
  }};
  return k;
}

inline std::set<LatticeVec, LatticeLess> lattice_set(const LayerSet& set) {
  std::set<LatticeVec, LatticeLess> out;
  for (const auto& p : set.points) out.insert(p.lattice);
  return out;
}

inline std::set<LatticeVec, LatticeLess> oracle_prefix_set(int n, std::int64_t count) {
  const Domain d = enumerate_domain(presets::sigma(0), n);
  std::set<LatticeVec, LatticeLess> out;
  for (const auto& p : d.points) {
    if (p.length < count) out.insert(p.lattice);
  }
  return out;
}

inline std::string fmt(double v, int digits = 5) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

inline std::string fmt(const PlaneVec& v) {
  return "(" + fmt(v.x(), 4) + ", " + fmt(v.y(), 4) + ")";
}

inline Frame rauzy_frame() { return build_frame(spectrum(presets::sigma(0)).v_inf); }

// canonical CSV+SVG bytes of a layer set, colored by the letter stepping
// into each point of the generating word
inline std::string render_bytes(const LayerSet& set, const Frame& frame, const Word& coloring) {
  std::vector<RenderPoint> pts;
  pts.reserve(set.points.size());
  for (const auto& p : set.points) {
    const PlaneVec xy = project2(frame, p.lattice);
    const int letter = p.length <= coloring.length() ? color_of(coloring, p.length) : p.tag;
    pts.push_back({xy.x(), xy.y(), letter, p.length, p.level});
  }
  return to_csv(pts) + to_svg(pts, {});
}

}  // namespace verify_detail

inline CriterionResult criterion_1_table1() {
  using namespace verify_detail;
  CriterionResult r{1, "Pisot numbers within 5e-4 and matrices matching the reference table", false, ""};
  std::ostringstream detail;
  bool ok = true;
  for (int k = 0; k < 4; ++k) {
    const Substitution sigma = presets::sigma(k);
    const LatticeMat m = substitution_matrix(sigma);
    const PisotSpectrum spec = spectrum(m);
    const double ref = reference_pisot_numbers()[static_cast<std::size_t>(k)];
    const bool lambda_ok = spec.is_pisot && std::abs(spec.lambda - ref) < 5e-4;
    const LatticeMat& printed = reference_matrices()[static_cast<std::size_t>(k)];
    const bool direct = m == printed;
    const bool transposed = LatticeMat(m.transpose()) == printed;
    // the reference table mixes orientations: entries must match in the
    // orientation the table itself uses for that row
    const bool matrix_ok = direct || transposed;
    ok = ok && lambda_ok && matrix_ok;
    detail << "s" << k << ": lambda=" << fmt(spec.lambda) << " (ref " << fmt(ref, 4) << ") "
           << (lambda_ok ? "ok" : "MISMATCH") << ", matrix "
           << (direct ? "matches" : transposed ? "matches (table row printed transposed)" : "MISMATCH")
           << "; ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_2_word_vectors() {
  using namespace verify_detail;
  CriterionResult r{2, "word vectors of the first five iterates are exact", false, ""};
  const std::array<LatticeVec, 5> expected = {lat3(1, 0, 0), lat3(1, 1, 0), lat3(2, 1, 1),
                                              lat3(4, 2, 1), lat3(7, 4, 2)};
  bool ok = true;
  for (int n = 0; n <= 4; ++n) {
    ok = ok && word_vector(iterate(presets::sigma(0), n)) == expected[static_cast<std::size_t>(n)];
  }
  r.pass = ok;
  r.detail = ok ? "levels 0..4 exact" : "mismatch in levels 0..4";
  return r;
}

inline CriterionResult criterion_3_recursion() {
  CriterionResult r{3, "three-term concatenation identity for n <= 12", false, ""};
  const Substitution s0 = presets::sigma(0);
  std::vector<Word> a;
  for (int n = 0; n <= 15; ++n) a.push_back(iterate(s0, n));
  bool ok = true;
  for (int n = 0; n <= 12; ++n) {
    ok = ok && a[static_cast<std::size_t>(n + 3)] ==
                   concat(concat(a[static_cast<std::size_t>(n + 2)], a[static_cast<std::size_t>(n + 1)]),
                          a[static_cast<std::size_t>(n)]);
  }
  r.pass = ok;
  r.detail = ok ? "string identity holds for n = 0..12" : "string identity failed";
  return r;
}

inline CriterionResult criterion_4_layers_a(int workers) {
  using namespace verify_detail;
  CriterionResult r{4, "construction A equals the oracle prefix sets for i = -1..3", false, ""};
  const BPoints b = b_points(14);
  std::ostringstream detail;
  bool ok = true;
  for (int i = -1; i <= 3; ++i) {
    const LayerSet set = build_layers_a(i, b, {.workers = workers});
    const std::int64_t bound = i >= 0 ? b.at(3 * i + 3).sum() : 1;
    const auto oracle = oracle_prefix_set(i >= 0 ? 3 * i + 3 : 0, bound);
    const bool equal = lattice_set(set) == oracle;
    ok = ok && equal;
    detail << "i=" << i << ": " << set.points.size() << " points "
           << (equal ? "== oracle" : "!= oracle") << "; ";
    if (i == 2) ok = ok && set.points.size() == 274;
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_5_identities() {
  using namespace verify_detail;
  CriterionResult r{5, "seven-slot identities for i <= 12 and the trimming identity", false, ""};
  const STable t = s_table(13);
  const BPoints b = b_points(3 * 14);
  bool ok = true;
  for (int i = 0; i <= 12; ++i) {
    ok = ok && t.s(i, 0) == b(i, 0) && t.s(i, 2) == b(i, 0) && t.s(i, 4) == b(i, 0) &&
         t.s(i, 6) == b(i, 0);
    ok = ok && t.s(i, 1) == LatticeVec(b(i, 1) - b(i, 0)) &&
         t.s(i, 5) == LatticeVec(b(i, 1) - b(i, 0));
    ok = ok && t.s(i, 3) == LatticeVec(b(i, 2) - b(i, 0) - b(i, 1));
    const ChildRule rule = children_rule_b(i, t);
    ok = ok && rule.offsets[0] == b(i, 0) && rule.offsets[1] == b(i, 1) &&
         rule.offsets[2] == LatticeVec(b(i, 0) + b(i, 1)) && rule.offsets[3] == b(i, 2) &&
         rule.offsets[4] == LatticeVec(b(i, 0) + b(i, 2)) &&
         rule.offsets[5] == LatticeVec(b(i, 1) + b(i, 2)) && rule.offsets[6] == b(i + 1, 0);
  }
  const Word a3 = Word::from_digits("0102010", 3);
  Word rebuilt(3);
  for (int j = 0; j < 7; ++j) rebuilt = concat(rebuilt, prefix(a3, a3.length() - kTribonacciTrims[j]));
  const bool trimming = rebuilt == iterate(presets::sigma(0), 6);
  ok = ok && trimming;
  r.pass = ok;
  r.detail = std::string("slot and prefix-sum identities i = 0..12 ") + (ok ? "hold" : "FAILED") +
             "; trimming identity " + (trimming ? "holds" : "FAILED");
  return r;
}

inline CriterionResult criterion_6_sandwich(int workers) {
  using namespace verify_detail;
  CriterionResult r{6, "construction B contains A and stays inside the oracle", false, ""};
  const BPoints b = b_points(14);
  std::ostringstream detail;
  bool ok = true;
  for (int i = 0; i <= 3; ++i) {
    const auto v = lattice_set(build_layers_a(i, b, {.workers = workers}));
    const LayerSet wset = build_layers_b(i, {.workers = workers});
    const auto w = lattice_set(wset);
    bool contains_a = true;
    for (const auto& key : v) contains_a = contains_a && w.count(key) > 0;
    const Domain oracle = enumerate_domain(presets::sigma(0), 3 * i + 6);
    const auto keys = sorted_lattice_points(oracle);
    bool inside = true;
    for (const auto& p : wset.points) inside = inside && contains(keys, p.lattice);
    ok = ok && contains_a && inside;
    detail << "i=" << i << ": |W|=" << w.size() << (contains_a ? " >= A" : " MISSES A")
           << (inside ? ", inside oracle" : ", ESCAPES oracle") << "; ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_7_boundary(int workers) {
  using namespace verify_detail;
  CriterionResult r{7, "boundary points are sound and fewer than the full level", false, ""};
  const BPoints b = b_points(18);
  const Frame frame = rauzy_frame();
  const LayerSet boundary = build_boundary_a(5, b, frame, {.workers = workers});
  const Domain oracle = enumerate_domain(presets::sigma(0), 18);
  const auto keys = sorted_lattice_points(oracle);
  bool sound = true;
  for (const auto& p : boundary.points) sound = sound && contains(keys, p.lattice);

  const LayerSet full = build_layers_a(5, b, {.workers = workers});
  auto level_count = [](const LayerSet& s, int level) {
    std::size_t n = 0;
    for (const auto& p : s.points) n += p.level == level;
    return n;
  };
  const std::size_t bn = level_count(boundary, 5);
  const std::size_t fn = level_count(full, 5);
  r.pass = sound && bn < fn && bn > 0;
  std::ostringstream detail;
  detail << "all " << boundary.points.size() << " boundary points are oracle points: "
         << (sound ? "yes" : "NO") << "; level-5 boundary count " << bn << " < full " << fn << ": "
         << (bn < fn ? "yes" : "NO");
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_8_limits() {
  using namespace verify_detail;
  CriterionResult r{8, "limit directions match the reference rows within 1e-3", false, ""};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& row : reference_limits()) {
    const RealVec v = limit_direction(Word::from_digits(row.word, 3));
    double err = 0.0;
    for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(v[i] - row.v[static_cast<std::size_t>(i)]));
    ok = ok && err < 1e-3;
    detail << row.word << ": err=" << fmt(err) << (err < 1e-3 ? " ok" : " MISMATCH") << "; ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_9_offsets() {
  using namespace verify_detail;
  CriterionResult r{9, "0120 translation offsets match the reference triple within 2e-2", false, ""};
  const Frame frame = build_frame(limit_direction(Word::from_digits("0120", 3)));
  const TilingOffsets t = tiling_offsets(frame);
  const std::array<PlaneVec, 3> computed = {t.u01, t.u12, t.u02};
  const std::array<PlaneVec, 3> reference = {PlaneVec(1.27, -0.48), PlaneVec(-0.34, 1.36),
                                             PlaneVec(0.93, 0.88)};
  // unordered match, each vector up to a global sign
  std::array<int, 3> perm = {0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  std::sort(perm.begin(), perm.end());
  do {
    for (int signs = 0; signs < 8; ++signs) {
      double err = 0.0;
      for (int i = 0; i < 3; ++i) {
        const double s = (signs >> i) & 1 ? -1.0 : 1.0;
        err = std::max(err, (s * computed[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] -
                             reference[static_cast<std::size_t>(i)])
                                .lpNorm<Eigen::Infinity>());
      }
      best = std::min(best, err);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.pass = best < 2e-2;

  // diagnostic: the same reference triple against the 0102 frame
  const TilingOffsets q = tiling_offsets(build_frame(limit_direction(Word::from_digits("0102", 3))));
  const double diag = std::max({(q.u01 - reference[0]).lpNorm<Eigen::Infinity>(),
                                (q.u12 - reference[1]).lpNorm<Eigen::Infinity>(),
                                (q.u02 - reference[2]).lpNorm<Eigen::Infinity>()});
  std::ostringstream detail;
  detail << "computed u01=" << fmt(t.u01) << " u12=" << fmt(t.u12) << " u02=" << fmt(t.u02)
         << "; best assignment error " << fmt(best, 4) << " vs tolerance 0.02"
         << ". Note: the reference triple is reproduced by the 0102 frame instead (error "
         << fmt(diag, 4) << "), so the published values appear to belong to 0102, not 0120.";
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_10_tiling(int workers) {
  using namespace verify_detail;
  CriterionResult r{10, "level-4 radius-1 translated copies are pairwise disjoint", false, ""};
  std::ostringstream detail;
  bool ok = true;
  for (const char* word : {"0120", "1201"}) {
    TilingOptions opts;
    opts.workers = workers;
    const TilingReport report = tiling_check(Word::from_digits(word, 3), 4, 1, opts);
    ok = ok && report.disjoint();
    detail << word << ": " << report.distinct_translations << " copies of "
           << report.points_per_copy << " points, collisions=" << report.collisions.size()
           << ", min pair distance=" << fmt(report.min_distance) << ", coverage="
           << fmt(report.coverage, 3) << " (reported, no threshold); ";
  }
  r.pass = ok;
  r.detail = detail.str();
  return r;
}

inline CriterionResult criterion_11_determinism() {
  using namespace verify_detail;
  CriterionResult r{11, "outputs are byte-identical across 1 and N workers", false, ""};
  const int many = 4;
  const Frame frame = rauzy_frame();
  const BPoints b = b_points(14);
  const Word a14 = iterate(presets::sigma(0), 14);

  const std::string a_one = render_bytes(build_layers_a(4, b, {.workers = 1}), frame, a14);
  const std::string a_many = render_bytes(build_layers_a(4, b, {.workers = many}), frame, a14);

  const std::string bnd_one =
      render_bytes(build_boundary_a(4, b, frame, {.workers = 1}), frame, a14);
  const std::string bnd_many =
      render_bytes(build_boundary_a(4, b, frame, {.workers = many}), frame, a14);

  const std::string b_one = render_bytes(build_layers_b(3, {.workers = 1}), frame, a14);
  const std::string b_many = render_bytes(build_layers_b(3, {.workers = many}), frame, a14);

  const Word fish = Word::from_digits("0120", 3);
  const Frame fish_frame = build_frame(limit_direction(fish));
  const Word fish_word = replicate(fish, 5);
  const std::string w_one =
      render_bytes(build_domain_w(fish, 4, false, {.workers = 1}), fish_frame, fish_word);
  const std::string w_many =
      render_bytes(build_domain_w(fish, 4, false, {.workers = many}), fish_frame, fish_word);

  const bool ok = a_one == a_many && bnd_one == bnd_many && b_one == b_many && w_one == w_many;
  r.pass = ok;
  r.detail = std::string("layers-a ") + (a_one == a_many ? "ok" : "DIFFERS") + ", boundary " +
             (bnd_one == bnd_many ? "ok" : "DIFFERS") + ", layers-b " +
             (b_one == b_many ? "ok" : "DIFFERS") + ", selfrep " +
             (w_one == w_many ? "ok" : "DIFFERS") + " (1 vs 4 workers)";
  return r;
}

inline CriterionResult run_criterion(int id, int workers = 1) {
  switch (id) {
    case 1: return criterion_1_table1();
    case 2: return criterion_2_word_vectors();
    case 3: return criterion_3_recursion();
    case 4: return criterion_4_layers_a(workers);
    case 5: return criterion_5_identities();
    case 6: return criterion_6_sandwich(workers);
    case 7: return criterion_7_boundary(workers);
    case 8: return criterion_8_limits();
    case 9: return criterion_9_offsets();
    case 10: return criterion_10_tiling(workers);
    case 11: return criterion_11_determinism();
    default: throw std::invalid_argument("run_criterion: id must be 1..11");
  }
}

inline std::vector<CriterionResult> run_acceptance(int workers = 1) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 11; ++id) results.push_back(run_criterion(id, workers));
  return results;
}

inline void print_results(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << "\n";
    if (!r.detail.empty()) out << "       " << r.detail << "\n";
  }
}

inline void print_table1(std::ostream& out) {
  using namespace verify_detail;
  out << "Pisot data of the built-in substitutions (computed vs reference):\n";
  for (int k = 0; k < 4; ++k) {
    const LatticeMat m = substitution_matrix(presets::sigma(k));
    const PisotSpectrum spec = spectrum(m);
    out << "  s" << k << ": lambda = " << fmt(spec.lambda) << " (ref "
        << fmt(reference_pisot_numbers()[static_cast<std::size_t>(k)], 4) << ")  M =";
    for (Index i = 0; i < 3; ++i) {
      out << " [";
      for (Index j = 0; j < 3; ++j) out << (j ? " " : "") << m(i, j);
      out << "]";
    }
    out << "\n";
  }
}

inline void print_table2(std::ostream& out) {
  using namespace verify_detail;
  out << "Limit directions of the built-in self-replicating words (computed vs reference):\n";
  for (const auto& row : reference_limits()) {
    const RealVec v = limit_direction(Word::from_digits(row.word, 3));
    out << "  " << std::setw(8) << row.word << ": (" << fmt(v[0], 3) << ", " << fmt(v[1], 3) << ", "
        << fmt(v[2], 3) << ")  ref (" << fmt(row.v[0], 3) << ", " << fmt(row.v[1], 3) << ", "
        << fmt(row.v[2], 3) << ")\n";
  }
}

}  // namespace rauzy
