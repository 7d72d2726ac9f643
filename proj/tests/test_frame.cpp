#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rauzy/frame.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/words.hpp"

using namespace rauzy;

namespace {

RealVec real3(double a, double b, double c) {
  RealVec v(3);
  v << a, b, c;
  return v;
}

LatticeVec lattice(std::int64_t a, std::int64_t b, std::int64_t c) {
  LatticeVec v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("frame invariants: orthonormal rows orthogonal to the direction") {
  const Frame f = build_frame(spectrum(presets::sigma(0)).v_inf);
  for (Index i = 0; i < 2; ++i) {
    CHECK(std::abs(f.basis.row(i).norm() - 1.0) < 1e-12);
    CHECK(std::abs(f.basis.row(i).dot(f.v_inf)) < 1e-12);
  }
  CHECK(std::abs(f.basis.row(0).dot(f.basis.row(1))) < 1e-12);

  // the expanding direction projects to zero: sum of (v_inf)_i u_i vanishes
  RealVec weighted = RealVec::Zero(2);
  for (Index i = 0; i < 3; ++i) weighted += f.v_inf[i] * f.u(i);
  CHECK(weighted.norm() < 1e-9);
}

TEST_CASE("axis-aligned direction gives the remaining axes") {
  const Frame f = build_frame(real3(0, 0, 1));
  CHECK((f.basis.row(0).transpose() - real3(1, 0, 0)).norm() < 1e-12);
  CHECK((f.basis.row(1).transpose() - real3(0, 1, 0)).norm() < 1e-12);
}

TEST_CASE("hand Gram-Schmidt oracle for the symmetric direction") {
  const Frame f = build_frame(real3(1, 1, 1) / std::sqrt(3.0));
  // orthogonalizing e0 against (1,1,1)/sqrt(3) gives (2,-1,-1)/sqrt(6)
  const RealVec r0 = real3(2, -1, -1) / std::sqrt(6.0);
  CHECK((f.basis.row(0).transpose() - r0).norm() < 1e-12);
  CHECK(std::abs(f.basis.row(0).dot(f.basis.row(1))) < 1e-12);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(build_frame(real3(0, 0, 0)), DegenerateInputError);
  // e0 is parallel to the first Gram-Schmidt input
  CHECK_THROWS_AS(build_frame(real3(1, 0, 0)), DegenerateInputError);
}

TEST_CASE("projection basics") {
  const Frame f = build_frame(spectrum(presets::sigma(0)).v_inf);
  CHECK(project(f, RealVec(2.5 * f.v_inf)).norm() < 1e-9);
  for (Index i = 0; i < 3; ++i) {
    CHECK((project(f, unit_lattice(3, i)) - f.u(i)).norm() == 0.0);
  }
  const RealVec direct = 4.0 * f.u(0) + 2.0 * f.u(1) + 1.0 * f.u(2);
  CHECK((project(f, lattice(4, 2, 1)) - direct).norm() < 1e-12);
}

TEST_CASE("projection is linear and matches the explicit two-step route") {
  const Frame f = build_frame(spectrum(presets::sigma(0)).v_inf);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const LatticeVec a = lattice(entry(rng), entry(rng), entry(rng));
    const LatticeVec b = lattice(entry(rng), entry(rng), entry(rng));
    CHECK((project(f, LatticeVec(a + b)) - (project(f, a) + project(f, b))).norm() < 1e-12);

    // pi(v) = v - (v . v_inf) v_inf first, then dot against the basis rows
    const RealVec v = a.cast<double>();
    const RealVec pi_v = v - v.dot(f.v_inf) * f.v_inf;
    CHECK((project(f, a) - RealVec(f.basis * pi_v)).norm() < 1e-12);
  }
}

TEST_CASE("general dimension frames") {
  RealVec dir(4);
  dir << 3, 1, 2, 5;
  const Frame f = build_frame(dir);
  CHECK(f.basis.rows() == 3);
  for (Index i = 0; i < 3; ++i) {
    CHECK(std::abs(f.basis.row(i).dot(f.v_inf)) < 1e-12);
    for (Index j = i + 1; j < 3; ++j) CHECK(std::abs(f.basis.row(i).dot(f.basis.row(j))) < 1e-12);
  }
}
