#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "rauzy/oracle.hpp"

using namespace rauzy;

namespace {

LatticeVec lattice(std::int64_t a, std::int64_t b, std::int64_t c) {
  LatticeVec v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("domain enumeration for small levels") {
  const Domain d3 = enumerate_domain(presets::sigma(0), 3);
  CHECK(d3.points.size() == 8);
  CHECK(d3.points.front().length == 0);
  CHECK(d3.points.back().length == 7);
  CHECK(d3.points[4].lattice == lattice(2, 1, 1));

  const Domain d0 = enumerate_domain(presets::sigma(0), 0);
  CHECK(d0.points.size() == 2);
  CHECK(d0.points[0].lattice == lattice(0, 0, 0));
  CHECK(d0.points[1].lattice == lattice(1, 0, 0));
}

TEST_CASE("level nine has 275 points") {
  const Domain d9 = enumerate_domain(presets::sigma(0), 9);
  CHECK(d9.points.size() == 275);
  CHECK(d9.word.length() == 274);
}

TEST_CASE("coloring conventions") {
  const Word w = Word::from_digits("0102010", 3);
  CHECK(color_of(w, 1) == 0);
  CHECK(color_of(w, 4) == 2);
  CHECK(color_of(w, 7) == 0);
  CHECK(color_of(w, 0) == kNoLetter);
  // the flipped convention reads the letter ahead of the point
  CHECK(color_of(w, 0, ColorConvention::next_letter) == 0);
  CHECK(color_of(w, 3, ColorConvention::next_letter) == 2);
  CHECK(color_of(w, 7, ColorConvention::next_letter) == kNoLetter);
}

TEST_CASE("monotone nesting of levels") {
  const Domain small = enumerate_domain(presets::sigma(0), 5);
  const Domain large = enumerate_domain(presets::sigma(0), 6);
  for (std::size_t i = 0; i < small.points.size(); ++i) {
    CHECK(small.points[i].lattice == large.points[i].lattice);
  }
}

TEST_CASE("length keys the point set bijectively") {
  const Domain d = enumerate_domain(presets::sigma(0), 7);
  std::map<std::int64_t, LatticeVec> by_length;
  for (const auto& p : d.points) {
    CHECK(p.lattice.sum() == p.length);
    CHECK(by_length.emplace(p.length, p.lattice).second);
  }
}

TEST_CASE("consecutive points differ by one basis step") {
  const Domain d = enumerate_domain(presets::sigma(0), 6);
  for (std::size_t i = 1; i < d.points.size(); ++i) {
    const LatticeVec step = d.points[i].lattice - d.points[i - 1].lattice;
    CHECK(step.sum() == 1);
    CHECK(step.maxCoeff() == 1);
    CHECK(step.minCoeff() == 0);
    CHECK(step[d.points[i].letter] == 1);
  }
}

TEST_CASE("non-Pisot input is rejected unless forced") {
  // 0 -> 1, 1 -> 0 swaps forever; its matrix is a permutation
  const Substitution swap(2, {Word::from_digits("1", 2), Word::from_digits("0", 2)});
  CHECK_THROWS_AS(enumerate_domain(swap, 3), NotPisotError);
  OracleOptions opts;
  opts.force_non_pisot = true;
  CHECK(enumerate_domain(swap, 3, opts).points.size() == 2);
}

TEST_CASE("point cap") {
  OracleOptions opts;
  opts.max_points = 100;
  CHECK_THROWS_AS(enumerate_domain(presets::sigma(0), 12, opts), ResourceLimitError);
}

TEST_CASE("sorted membership lookup") {
  const Domain d = enumerate_domain(presets::sigma(0), 5);
  const auto keys = sorted_lattice_points(d);
  CHECK(contains(keys, lattice(2, 1, 1)));
  CHECK_FALSE(contains(keys, lattice(50, 1, 1)));
}
