#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "rauzy/layers_b.hpp"
#include "rauzy/selfrep.hpp"
#include "rauzy/spectral.hpp"

using namespace rauzy;

namespace {

Word w3(const char* digits) { return Word::from_digits(digits, 3); }

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

// published limit directions for six words on three letters
struct LimitRow {
  const char* word;
  double v[3];
};
const LimitRow kLimitRows[] = {
    {"0120", {0.756, 0.521, 0.397}},    {"0102", {0.850, 0.462, 0.251}},
    {"0201", {0.831, 0.259, 0.492}},    {"0102010", {0.861, 0.447, 0.242}},
    {"1201", {0.381, 0.717, 0.584}},    {"2010", {0.771, 0.359, 0.526}},
};

}  // namespace

TEST_CASE("string replicates") {
  CHECK(replicate(w3("0120"), 0) == w3("0120"));
  // components of the first replicate have lengths 4, 3, 2, 4
  CHECK(replicate(w3("0120"), 1) == w3("0120012010120"));
}

TEST_CASE("the letter-2 exception turns 0102010 into the tribonacci rule") {
  const Word a3 = w3("0102010");
  ReplicateOptions with;
  with.letter2_exception = true;
  CHECK(replicate(a3, 1, with) == iterate(presets::sigma(0), 6));
  CHECK(replicate(a3, 2, with) == iterate(presets::sigma(0), 9));
  CHECK(replicate(a3, 1) != iterate(presets::sigma(0), 6));
}

TEST_CASE("replicate honors the length cap") {
  ReplicateOptions opts;
  opts.max_length = 1000;
  CHECK_THROWS_AS(replicate(w3("0120"), 12, opts), ResourceLimitError);
}

TEST_CASE("vector engine steps") {
  SelfRepSystem sys = make_selfrep_system(w3("0120"));
  CHECK(total_vector(sys) == word_vector(w3("0120")));
  sys = replicate_vectors(sys);
  CHECK(sys.n == 1);
  CHECK(total_vector(sys) == lattice(6, 4, 3));
}

TEST_CASE("string and vector engines agree for small depths") {
  for (const char* digits : {"0120", "1201", "2010", "0102010"}) {
    for (bool exception : {false, true}) {
      SelfRepSystem sys = make_selfrep_system(w3(digits), exception);
      ReplicateOptions opts;
      opts.letter2_exception = exception;
      for (int n = 0; n <= 3; ++n) {
        CHECK(total_vector(sys) == word_vector(replicate(w3(digits), n, opts)));
        sys = replicate_vectors(sys);
      }
    }
  }
}

TEST_CASE("component recursion guards against integer overflow") {
  SelfRepSystem sys = make_selfrep_system(w3("0120"));
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 100; ++i) sys = replicate_vectors(sys);
      }(),
      ResourceLimitError);
}

TEST_CASE("limit directions match the published table to 1e-3") {
  for (const auto& row : kLimitRows) {
    const RealVec v = limit_direction(w3(row.word));
    REQUIRE(v.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(v[i] - row.v[i]) < 1e-3);
  }
}

TEST_CASE("the 0102 limit is the Rauzy eigenvector direction") {
  const RealVec limit = limit_direction(w3("0102"));
  const RealVec eigen = spectrum(presets::sigma(0)).v_inf;
  CHECK((limit - eigen).lpNorm<Eigen::Infinity>() < 1e-3);
}

TEST_CASE("non-convergence surfaces as an error") {
  LimitOptions opts;
  opts.max_steps = 1;
  opts.tol = 1e-15;
  CHECK_THROWS_AS(limit_direction(w3("0120"), opts), NotSelfReplicatingError);
}

TEST_CASE("normalized totals: convergence is detected by successive steps") {
  LimitOptions opts;
  opts.tol = 1e-9;
  const RealVec v = limit_direction(w3("0120"), opts);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
}

TEST_CASE("word s-table basics") {
  const WordSTable t = selfrep_s_table(w3("0120"), 2);
  CHECK(t.width() == 4);
  CHECK(t.s(0, 0) == lattice(1, 0, 0));
  CHECK(t.s(0, 1) == lattice(0, 1, 0));
  CHECK(t.s(0, 2) == lattice(0, 0, 1));
  CHECK(t.s(0, 3) == lattice(1, 0, 0));
  CHECK(t.s(1, 0) == word_vector(w3("0120")));

  // slots depend only on their letter
  const WordSTable deep = selfrep_s_table(w3("0120"), 6);
  for (int i = 0; i <= 6; ++i) CHECK(deep.s(i, 0) == deep.s(i, 3));
}

TEST_CASE("the excepted 0102010 table reproduces the seven-slot table") {
  const WordSTable general = selfrep_s_table(w3("0102010"), 8, true);
  const STable direct = s_table(8);
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j < 7; ++j) CHECK(general.s(i, j) == direct.s(i, j));
  }
}

TEST_CASE("domain of the excepted 0102010 equals the B-layer set") {
  for (int level = -1; level <= 2; ++level) {
    CHECK(lattice_set(build_domain_w(w3("0102010"), level, true)) ==
          lattice_set(build_layers_b(level)));
  }
}

TEST_CASE("domain growth bookkeeping") {
  CHECK(build_domain_w(w3("0120"), -1).points.size() == 1);
  const LayerSet set = build_domain_w(w3("0120"), 4);
  REQUIRE(set.stats.size() == 5);
  std::size_t sources = 1;
  for (const auto& s : set.stats) {
    CHECK(s.candidates == sources * 4);  // width l+1 children per source
    sources += s.unique;
  }
}

TEST_CASE("tiling offsets") {
  const Frame f = build_frame(limit_direction(w3("0120")));
  const TilingOffsets t = tiling_offsets(f);
  CHECK((t.u01 + t.u12 - t.u02).norm() < 1e-12);

  RealVec ones(3);
  ones << 1, 1, 1;
  const TilingOffsets sym = tiling_offsets(build_frame(ones));
  CHECK(std::abs(sym.u01.norm() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(sym.u12.norm() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(sym.u02.norm() - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("the published translation triple belongs to the 0102 frame") {
  // the reference triple (1.27,-0.48), (-0.34,1.36), (0.93,0.88) is
  // reproduced by the frame of 0102, pairing directly with u01, u12, u02
  const Frame f = build_frame(limit_direction(w3("0102")));
  const TilingOffsets t = tiling_offsets(f);
  CHECK((t.u01 - PlaneVec(1.27, -0.48)).lpNorm<Eigen::Infinity>() < 5e-3);
  CHECK((t.u12 - PlaneVec(-0.34, 1.36)).lpNorm<Eigen::Infinity>() < 5e-3);
  CHECK((t.u02 - PlaneVec(0.93, 0.88)).lpNorm<Eigen::Infinity>() < 5e-3);
}

TEST_CASE("tiling check at desk scale") {
  TilingOptions opts;
  const TilingReport r2 = tiling_check(w3("0120"), 2, 1, opts);
  CHECK(r2.offsets_enumerated == 27);
  CHECK(r2.distinct_translations == 19);
  CHECK(r2.disjoint());
  CHECK(r2.coverage > 0.0);
  CHECK(r2.coverage <= 1.0);

  const TilingReport r3 = tiling_check(w3("0120"), 3, 1, opts);
  CHECK(r3.coverage >= r2.coverage);  // nested point sets, same window
}
