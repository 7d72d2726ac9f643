#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/types.hpp"

namespace rauzy {

struct RenderPoint {
  double x = 0.0;
  double y = 0.0;
  int letter = -1;  // -1 is the origin sentinel
  std::int64_t length = 0;
  int level = -1;
};

struct RenderPolygon {
  std::array<PlaneVec, 6> vertices;
};

struct RenderLabel {
  double x = 0.0;
  double y = 0.0;
  std::string text;
};

struct BoundingBox {
  double min_x, min_y, max_x, max_y;
};

struct RenderSpec {
  double point_radius = 0.004;  // plot units
  std::vector<std::string> palette = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00"};
  std::string origin_color = "#000000";
  std::string cell_color = "#777777";
  double scale = 1000.0;  // svg units per plot unit; x and y equally scaled
  std::optional<BoundingBox> viewport;
  bool draw_points = true;
  bool draw_cells = true;
};

namespace detail {

inline std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

inline const std::string& fill_for(const RenderSpec& spec, int letter) {
  if (letter < 0 || spec.palette.empty()) return spec.origin_color;
  return spec.palette[static_cast<std::size_t>(letter) % spec.palette.size()];
}

// total order on rows so emission never depends on input order
inline bool render_less(const RenderPoint& a, const RenderPoint& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.level != b.level) return a.level < b.level;
  if (a.letter != b.letter) return a.letter < b.letter;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace detail

// Deterministic SVG document: canonical row order, fixed decimal
// formatting, no timestamps; identical inputs give identical bytes.  The
// y axis is flipped so the plot reads with y up.
inline std::string to_svg(std::vector<RenderPoint> points, std::vector<RenderPolygon> cells,
                          const RenderSpec& spec = {}, std::vector<RenderLabel> labels = {}) {
  std::sort(points.begin(), points.end(), detail::render_less);

  BoundingBox box{0.0, 0.0, 1.0, 1.0};
  bool have_box = false;
  if (spec.viewport) {
    box = *spec.viewport;
    have_box = true;
  } else {
    auto grow = [&](double x, double y) {
      if (!have_box) {
        box = {x, y, x, y};
        have_box = true;
        return;
      }
      box.min_x = std::min(box.min_x, x);
      box.min_y = std::min(box.min_y, y);
      box.max_x = std::max(box.max_x, x);
      box.max_y = std::max(box.max_y, y);
    };
    for (const auto& p : points) grow(p.x, p.y);
    for (const auto& c : cells) {
      for (const auto& v : c.vertices) grow(v.x(), v.y());
    }
    if (have_box) {  // 5% margin
      const double mx = 0.05 * std::max(box.max_x - box.min_x, 1e-9);
      const double my = 0.05 * std::max(box.max_y - box.min_y, 1e-9);
      box = {box.min_x - mx, box.min_y - my, box.max_x + mx, box.max_y + my};
    } else {
      box = {0.0, 0.0, 1.0, 1.0};
    }
  }

  const double s = spec.scale;
  auto sx = [&](double x) { return detail::fixed9(x * s); };
  auto sy = [&](double y) { return detail::fixed9(-y * s); };  // svg y grows downward

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << detail::fixed9(box.min_x * s) << ' ' << detail::fixed9(-box.max_y * s) << ' '
      << detail::fixed9((box.max_x - box.min_x) * s) << ' '
      << detail::fixed9((box.max_y - box.min_y) * s) << "\">\n";
  if (spec.draw_cells) {
    for (const auto& c : cells) {
      svg << "<polygon fill=\"none\" stroke=\"" << spec.cell_color << "\" stroke-width=\""
          << detail::fixed9(0.25 * spec.point_radius * s) << "\" points=\"";
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i > 0) svg << ' ';
        svg << sx(c.vertices[i].x()) << ',' << sy(c.vertices[i].y());
      }
      svg << "\"/>\n";
    }
  }
  if (spec.draw_points) {
    for (const auto& p : points) {
      svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\""
          << detail::fixed9(spec.point_radius * s) << "\" fill=\"" << detail::fill_for(spec, p.letter)
          << "\"/>\n";
    }
  }
  for (const auto& t : labels) {
    svg << "<text x=\"" << sx(t.x) << "\" y=\"" << sy(t.y) << "\" font-size=\""
        << detail::fixed9(3.0 * spec.point_radius * s) << "\">" << t.text << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

// CSV with header x,y,letter,length,level, LF endings, rows sorted by
// length ascending.
inline std::string to_csv(std::vector<RenderPoint> points) {
  std::sort(points.begin(), points.end(), detail::render_less);
  std::ostringstream csv;
  csv << "x,y,letter,length,level\n";
  for (const auto& p : points) {
    csv << detail::fixed9(p.x) << ',' << detail::fixed9(p.y) << ',' << p.letter << ',' << p.length
        << ',' << p.level << '\n';
  }
  return csv.str();
}

inline std::vector<RenderPoint> parse_csv(std::string_view text) {
  std::vector<RenderPoint> out;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    RenderPoint p;
    long long length = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%d,%lld,%d", &p.x, &p.y, &p.letter, &length, &p.level) != 5) {
      throw std::invalid_argument("parse_csv: malformed row: " + line);
    }
    p.length = length;
    out.push_back(p);
  }
  return out;
}

}  // namespace rauzy
