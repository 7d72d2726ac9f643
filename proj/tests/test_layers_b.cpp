#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rauzy/layers_b.hpp"
#include "rauzy/oracle.hpp"
#include "rauzy/spectral.hpp"

using namespace rauzy;

namespace {

LatticeVec lattice(std::int64_t a, std::int64_t b, std::int64_t c) {
  LatticeVec v(3);
  v << a, b, c;
  return v;
}

std::set<LatticeVec, LatticeLess> lattice_set(const LayerSet& set) {
  std::set<LatticeVec, LatticeLess> out;
  for (const auto& p : set.points) out.insert(p.lattice);
  return out;
}

}  // namespace

TEST_CASE("base slots follow the letters of 0102010") {
  const STable t = s_table(1);
  CHECK(t.s(0, 0) == lattice(1, 0, 0));
  CHECK(t.s(0, 1) == lattice(0, 1, 0));
  CHECK(t.s(0, 2) == lattice(1, 0, 0));
  CHECK(t.s(0, 3) == lattice(0, 0, 1));
  CHECK(t.s(0, 4) == lattice(1, 0, 0));
  CHECK(t.s(0, 5) == lattice(0, 1, 0));
  CHECK(t.s(0, 6) == lattice(1, 0, 0));
}

TEST_CASE("level-one slots") {
  const STable t = s_table(1);
  CHECK(t.s(1, 0) == lattice(4, 2, 1));
  CHECK(t.s(1, 1) == lattice(3, 2, 1));
  CHECK(t.s(1, 3) == lattice(2, 1, 1));
}

TEST_CASE("slot identities against the b points") {
  const STable t = s_table(12);
  const BPoints b = b_points(3 * 12 + 2);
  for (int i = 0; i <= 12; ++i) {
    CHECK(t.s(i, 0) == b(i, 0));
    CHECK(t.s(i, 2) == b(i, 0));
    CHECK(t.s(i, 4) == b(i, 0));
    CHECK(t.s(i, 6) == b(i, 0));
    CHECK(t.s(i, 1) == LatticeVec(b(i, 1) - b(i, 0)));
    CHECK(t.s(i, 5) == LatticeVec(b(i, 1) - b(i, 0)));
    CHECK(t.s(i, 3) == LatticeVec(b(i, 2) - b(i, 0) - b(i, 1)));
  }
}

TEST_CASE("prefix sums reproduce the six-children offsets plus the far corner") {
  const STable t = s_table(12);
  const BPoints b = b_points(3 * 13);
  for (int i = 0; i <= 12; ++i) {
    const ChildRule rule = children_rule_b(i, t);
    REQUIRE(rule.offsets.size() == 7);
    CHECK(rule.offsets[0] == b(i, 0));
    CHECK(rule.offsets[1] == b(i, 1));
    CHECK(rule.offsets[2] == LatticeVec(b(i, 0) + b(i, 1)));
    CHECK(rule.offsets[3] == b(i, 2));
    CHECK(rule.offsets[4] == LatticeVec(b(i, 0) + b(i, 2)));
    CHECK(rule.offsets[5] == LatticeVec(b(i, 1) + b(i, 2)));
    CHECK(rule.offsets[6] == b(i + 1, 0));
  }
}

TEST_CASE("children of the origin are the seven prefix vectors of 0102010") {
  const STable t = s_table(3);
  LayerPoint origin;
  origin.lattice = LatticeVec::Zero(3);
  origin.level = -1;
  const auto kids = children_b(origin, 0, t);
  REQUIRE(kids.size() == 7);
  const Word a3 = Word::from_digits("0102010", 3);
  for (int j = 0; j < 7; ++j) {
    CHECK(kids[static_cast<std::size_t>(j)].lattice == word_vector(prefix(a3, j + 1)));
    CHECK(kids[static_cast<std::size_t>(j)].tag == j);
  }
  // slot 6 jumps a full level ahead, slot 3 is the middle corner
  const BPoints b = b_points(9);
  for (int i = 1; i <= 2; ++i) {
    const auto deeper = children_b(origin, i, t);
    CHECK(deeper[6].lattice == b(i + 1, 0));
    CHECK(deeper[3].lattice == b(i, 2));
  }
}

TEST_CASE("layer builds: counts, nesting into the oracle, sandwich over construction A") {
  CHECK(build_layers_b(-1).points.size() == 1);

  const LayerSet w0 = build_layers_b(0);
  CHECK(w0.points.size() == 8);
  bool has_far_corner = false;
  for (const auto& p : w0.points) {
    has_far_corner = has_far_corner || (p.lattice == lattice(4, 2, 1) && p.level == 0);
  }
  CHECK(has_far_corner);

  const Domain oracle = enumerate_domain(presets::sigma(0), 12);
  const auto keys = sorted_lattice_points(oracle);
  const LayerSet w2 = build_layers_b(2);
  for (const auto& p : w2.points) CHECK(contains(keys, p.lattice));

  const BPoints b = b_points(12);
  for (int i = 0; i <= 2; ++i) {
    const auto v = lattice_set(build_layers_a(i, b));
    const auto w = lattice_set(build_layers_b(i));
    for (const auto& key : v) CHECK(w.count(key));
  }
}

TEST_CASE("trimming pattern rebuilds the sixth tribonacci word") {
  const Word a3 = Word::from_digits("0102010", 3);
  Word rebuilt(3);
  for (int j = 0; j < 7; ++j) {
    rebuilt = concat(rebuilt, prefix(a3, a3.length() - kTribonacciTrims[j]));
  }
  CHECK(rebuilt == iterate(presets::sigma(0), 6));
}

TEST_CASE("boundary variant stays inside the oracle set") {
  const Frame frame = build_frame(spectrum(presets::sigma(0)).v_inf);
  const LayerSet boundary = build_boundary_b(2, frame);
  const LayerSet full = build_layers_b(2);
  CHECK(boundary.points.size() < full.points.size());
  const Domain oracle = enumerate_domain(presets::sigma(0), 12);
  const auto keys = sorted_lattice_points(oracle);
  for (const auto& p : boundary.points) CHECK(contains(keys, p.lattice));
}

TEST_CASE("worker count does not change the built sequence") {
  const LayerSet one = build_layers_b(2, {.workers = 1});
  const LayerSet four = build_layers_b(2, {.workers = 4});
  REQUIRE(one.points.size() == four.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].lattice == four.points[i].lattice);
    CHECK(one.points[i].parent == four.points[i].parent);
  }
}
