#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rauzy/render.hpp"

using namespace rauzy;

namespace {

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<RenderPoint> sample_points() {
  return {
      {0.0, 0.0, -1, 0, -1},
      {0.25, -0.1, 0, 1, 0},
      {-0.4, 0.3, 1, 2, 0},
      {0.1, 0.5, 2, 3, 1},
  };
}

}  // namespace

TEST_CASE("identical inputs give identical bytes") {
  const auto pts = sample_points();
  CHECK(to_svg(pts, {}) == to_svg(pts, {}));
  CHECK(to_csv(pts) == to_csv(pts));
}

TEST_CASE("emission does not depend on input order") {
  auto pts = sample_points();
  const std::string svg = to_svg(pts, {});
  const std::string csv = to_csv(pts);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(to_svg(pts, {}) == svg);
    CHECK(to_csv(pts) == csv);
  }
}

TEST_CASE("csv format") {
  const std::string csv = to_csv({{0.0, 0.0, -1, 0, -1}});
  CHECK(csv == "x,y,letter,length,level\n0.000000000,0.000000000,-1,0,-1\n");

  const std::string more = to_csv(sample_points());
  // rows sorted by length ascending
  CHECK(more.find(",0,-1\n") < more.find(",1,0\n"));
  CHECK(more.find(",1,0\n") < more.find(",3,1\n"));
}

TEST_CASE("csv round trip") {
  const auto pts = sample_points();
  const auto parsed = parse_csv(to_csv(pts));
  REQUIRE(parsed.size() == pts.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].length == pts[i].length);
    CHECK(parsed[i].letter == pts[i].letter);
    CHECK(parsed[i].level == pts[i].level);
    CHECK(std::abs(parsed[i].x - pts[i].x) < 1e-9);
    CHECK(std::abs(parsed[i].y - pts[i].y) < 1e-9);
  }
  CHECK_THROWS_AS(parse_csv("x,y\nnot,a,row\n"), std::invalid_argument);
}

TEST_CASE("svg structure") {
  RenderSpec spec;
  const std::string svg = to_svg(sample_points(), {}, spec);
  CHECK(count_substr(svg, "<circle") == 4);
  // letters 0,1,2 pick the first three palette colors; the origin is black
  CHECK(count_substr(svg, spec.palette[0]) == 1);
  CHECK(count_substr(svg, spec.palette[1]) == 1);
  CHECK(count_substr(svg, spec.palette[2]) == 1);
  CHECK(count_substr(svg, spec.origin_color) == 1);
  CHECK(svg.find("timestamp") == std::string::npos);

  RenderPolygon hexagon;
  hexagon.vertices = {PlaneVec(1, 0), PlaneVec(0.5, 0.9), PlaneVec(-0.5, 0.9),
                      PlaneVec(-1, 0), PlaneVec(-0.5, -0.9), PlaneVec(0.5, -0.9)};
  const std::string with_cells = to_svg(sample_points(), {hexagon}, spec);
  CHECK(count_substr(with_cells, "<polygon") == 1);
}

TEST_CASE("empty input still yields a valid canvas") {
  const std::string svg = to_svg({}, {});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(to_csv({}) == "x,y,letter,length,level\n");
}

TEST_CASE("labels are emitted on demand") {
  const std::string svg = to_svg(sample_points(), {}, {}, {{0.0, 0.0, "7"}});
  CHECK(count_substr(svg, "<text") == 1);
  CHECK(svg.find(">7</text>") != std::string::npos);
}
