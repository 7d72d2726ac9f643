// Command-line front end: domains, layered constructions, boundaries,
// self-replicating domains, tilings, and the acceptance suite.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rauzy/json_io.hpp"
#include "rauzy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitAcceptance = 3;
constexpr int kExitResourceCap = 4;

struct CommonOutput {
  std::string csv_path;
  std::string svg_path;
};

int default_workers() {
  if (const char* env = std::getenv("RAUZY_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return rauzy::hardware_workers();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

rauzy::Substitution resolve_substitution(const std::string& name, const std::string& json_path) {
  if (!json_path.empty()) return rauzy::load_substitution(json_path);
  if (name.size() == 2 && (name[0] == 's' || name[0] == 'S') && name[1] >= '0' && name[1] <= '3') {
    return rauzy::presets::sigma(name[1] - '0');
  }
  throw std::invalid_argument("unknown substitution '" + name + "' (expected s0..s3 or --sub-json)");
}

// letter coloring for layered sets of the Rauzy substitution: the letter
// stepping into each point of the generating word
rauzy::Word tribonacci_cover(std::int64_t max_length) {
  const rauzy::Substitution s0 = rauzy::presets::sigma(0);
  rauzy::Word w = rauzy::iterate(s0, 0);
  while (w.length() < max_length) w = rauzy::apply(s0, w);
  return w;
}

std::vector<rauzy::RenderPoint> layer_render_points(const rauzy::LayerSet& set,
                                                    const rauzy::Frame& frame,
                                                    const rauzy::Word& coloring) {
  std::vector<rauzy::RenderPoint> pts;
  pts.reserve(set.points.size());
  for (const auto& p : set.points) {
    const rauzy::PlaneVec xy = rauzy::project2(frame, p.lattice);
    const int letter =
        p.length <= coloring.length() ? rauzy::color_of(coloring, p.length) : p.tag;
    pts.push_back({xy.x(), xy.y(), letter, p.length, p.level});
  }
  return pts;
}

void emit_outputs(const std::vector<rauzy::RenderPoint>& pts,
                  const std::vector<rauzy::RenderPolygon>& cells, const CommonOutput& out,
                  const rauzy::RenderSpec& spec, const std::vector<rauzy::RenderLabel>& labels = {}) {
  if (!out.csv_path.empty()) write_file(out.csv_path, rauzy::to_csv(pts));
  if (!out.svg_path.empty()) write_file(out.svg_path, rauzy::to_svg(pts, cells, spec, labels));
}

std::vector<rauzy::RenderPolygon> cells_for(const rauzy::LayerSet& set, const rauzy::Frame& frame,
                                            const rauzy::CellRuleFn& cell_rule, int max_level,
                                            bool next_level_of_point) {
  std::vector<rauzy::RenderPolygon> cells;
  for (const auto& p : set.points) {
    if (p.level >= max_level) continue;
    const int cell_level = next_level_of_point ? p.level + 1 : max_level;
    if (cell_level > max_level) continue;
    const auto offsets = cell_rule(cell_level);
    std::array<rauzy::PlaneVec, 6> verts;
    for (std::size_t k = 0; k < 6; ++k) {
      verts[k] = rauzy::project2(frame, rauzy::LatticeVec(p.lattice + offsets[k]));
    }
    const rauzy::Cell cell = rauzy::cell_of(rauzy::project2(frame, p.lattice), verts);
    rauzy::RenderPolygon poly;
    poly.vertices = cell.vertices;
    cells.push_back(poly);
  }
  return cells;
}

int run(int argc, char** argv) {
  CLI::App app{"Pisot substitution domains, layered constructions and tilings"};
  app.require_subcommand(1);
  int workers = default_workers();
  app.add_option("--workers", workers, "worker thread count (env RAUZY_WORKERS overrides the default)")
      ->check(CLI::PositiveNumber);

  // domain
  auto* domain = app.add_subcommand("domain", "brute-force domain of a substitution");
  std::string sub_name = "s0", sub_json;
  int domain_level = 9;
  bool domain_force = false;
  int approx_vinf = -1;
  std::string color_convention = "step";
  CommonOutput domain_out;
  domain->add_option("--sub", sub_name, "built-in substitution s0..s3");
  domain->add_option("--sub-json", sub_json, "substitution JSON file");
  domain->add_option("--level", domain_level, "iteration level")->check(CLI::Range(0, 40));
  domain->add_flag("--force", domain_force, "allow non-Pisot substitutions");
  domain->add_option("--approx-vinf", approx_vinf,
                     "build the plane from the level-N word vector instead of the eigenvector");
  domain->add_option("--color-convention", color_convention, "step|next letter coloring")
      ->check(CLI::IsMember({"step", "next"}));
  domain->add_option("--csv", domain_out.csv_path, "CSV output path");
  domain->add_option("--svg", domain_out.svg_path, "SVG output path");

  // layers-a / layers-b
  auto* layers_a = app.add_subcommand("layers-a", "construction A layers");
  auto* layers_b = app.add_subcommand("layers-b", "construction B layers");
  int level_a = 3, level_b = 3;
  bool boundary_a = false, boundary_b = false;
  bool strict_a = false, strict_b = false;
  bool cells_a = false, cells_b = false;
  bool labels_a = false;
  CommonOutput out_a, out_b;
  layers_a->add_option("--level", level_a, "maximum layer level")->check(CLI::Range(-1, 14));
  layers_a->add_flag("--boundary", boundary_a, "keep only boundary survivors");
  layers_a->add_flag("--strict-ancestors", strict_a, "boundary filter checks all ancestor cells");
  layers_a->add_flag("--cells", cells_a, "draw hexagonal cells");
  layers_a->add_flag("--labels", labels_a, "label points with their prefix lengths");
  layers_a->add_option("--csv", out_a.csv_path, "CSV output path");
  layers_a->add_option("--svg", out_a.svg_path, "SVG output path");
  layers_b->add_option("--level", level_b, "maximum layer level")->check(CLI::Range(-1, 14));
  layers_b->add_flag("--boundary", boundary_b, "keep only boundary survivors");
  layers_b->add_flag("--strict-ancestors", strict_b, "boundary filter checks all ancestor cells");
  layers_b->add_flag("--cells", cells_b, "draw hexagonal cells");
  layers_b->add_option("--csv", out_b.csv_path, "CSV output path");
  layers_b->add_option("--svg", out_b.svg_path, "SVG output path");

  // boundary pipeline (construction A by default, full-domain underlay optional)
  auto* boundary = app.add_subcommand("boundary", "boundary pipeline with cells");
  int boundary_level = 4;
  std::string boundary_of = "a";
  bool boundary_strict = false, boundary_cells = true, boundary_interior = false;
  CommonOutput boundary_out;
  boundary->add_option("--level", boundary_level, "maximum layer level")->check(CLI::Range(-1, 14));
  boundary->add_option("--construction", boundary_of, "a|b")->check(CLI::IsMember({"a", "b"}));
  boundary->add_flag("--strict-ancestors", boundary_strict, "check all ancestor cells");
  boundary->add_flag("--interior,!--no-interior", boundary_interior, "underlay the full point set");
  boundary->add_flag("--cells,!--no-cells", boundary_cells, "draw survivor cells");
  boundary->add_option("--csv", boundary_out.csv_path, "CSV output path");
  boundary->add_option("--svg", boundary_out.svg_path, "SVG output path");

  // selfrep
  auto* selfrep = app.add_subcommand("selfrep", "domain of a self-replicating word");
  std::string selfrep_word = "0120";
  int selfrep_level = 4;
  bool selfrep_exception = false;
  CommonOutput selfrep_out;
  selfrep->add_option("--word", selfrep_word, "word on letters 0..2")->required();
  selfrep->add_option("--level", selfrep_level, "maximum layer level")->check(CLI::Range(-1, 14));
  selfrep->add_flag("--exception", selfrep_exception, "trim 3 instead of 2 at letter 2");
  selfrep->add_option("--csv", selfrep_out.csv_path, "CSV output path");
  selfrep->add_option("--svg", selfrep_out.svg_path, "SVG output path");

  // tile
  auto* tile = app.add_subcommand("tile", "translated copies of a self-replicating domain");
  std::string tile_word = "0120";
  int tile_level = 4, tile_radius = 1;
  bool tile_exception = false;
  CommonOutput tile_out;
  tile->add_option("--word", tile_word, "word on letters 0..2")->required();
  tile->add_option("--level", tile_level, "maximum layer level")->check(CLI::Range(-1, 14));
  tile->add_option("--radius", tile_radius, "offset coefficient bound")->check(CLI::Range(0, 4));
  tile->add_flag("--exception", tile_exception, "trim 3 instead of 2 at letter 2");
  tile->add_option("--csv", tile_out.csv_path, "CSV output path");
  tile->add_option("--svg", tile_out.svg_path, "SVG output path");

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const rauzy::RenderSpec spec;

  if (domain->parsed()) {
    const rauzy::Substitution sigma = resolve_substitution(sub_name, sub_json);
    rauzy::OracleOptions opts;
    opts.force_non_pisot = domain_force;
    opts.color = color_convention == "step" ? rauzy::ColorConvention::step_letter
                                            : rauzy::ColorConvention::next_letter;
    const rauzy::Domain dom = rauzy::enumerate_domain(sigma, domain_level, opts);

    rauzy::RealVec direction;
    if (approx_vinf >= 0) {
      direction = rauzy::word_vector(rauzy::iterate(sigma, approx_vinf)).cast<double>();
    } else if (domain_force) {
      direction = rauzy::word_vector(dom.word).cast<double>();
    } else {
      direction = rauzy::spectrum(sigma).v_inf;
    }
    const rauzy::Frame frame = rauzy::build_frame(direction);

    std::vector<rauzy::RenderPoint> pts;
    pts.reserve(dom.points.size());
    for (const auto& p : dom.points) {
      const rauzy::PlaneVec xy = rauzy::project2(frame, p.lattice);
      pts.push_back({xy.x(), xy.y(), p.letter, p.length, -1});
    }
    emit_outputs(pts, {}, domain_out, spec);
    std::cout << "points: " << pts.size() << "\n";
    return kExitOk;
  }

  if (layers_a->parsed() || layers_b->parsed()) {
    const bool is_a = layers_a->parsed();
    const int level = is_a ? level_a : level_b;
    const bool want_boundary = is_a ? boundary_a : boundary_b;
    const bool strict = is_a ? strict_a : strict_b;
    const bool want_cells = is_a ? cells_a : cells_b;
    const CommonOutput& out = is_a ? out_a : out_b;

    const rauzy::Frame frame = rauzy::build_frame(rauzy::spectrum(rauzy::presets::sigma(0)).v_inf);
    const rauzy::BPoints b = rauzy::b_points(3 * std::max(level, 0) + 3);
    const rauzy::STable table = rauzy::s_table(std::max(level, 0));
    const rauzy::ChildRuleFn child_rule =
        is_a ? rauzy::ChildRuleFn([&b](int l) { return rauzy::children_rule_a(l, b); })
             : rauzy::ChildRuleFn([&table](int l) { return rauzy::children_rule_b(l, table); });
    const rauzy::CellRuleFn cell_rule =
        is_a ? rauzy::CellRuleFn([&b](int l) { return rauzy::cell_offsets_a(l, b); })
             : rauzy::CellRuleFn([&table](int l) { return rauzy::cell_offsets_b(l, table); });

    const rauzy::LayerSet set =
        want_boundary
            ? rauzy::build_boundary_layers(3, level, child_rule, cell_rule, frame,
                                           {.strict_ancestors = strict, .workers = workers})
            : rauzy::build_layers(3, level, child_rule, {.workers = workers});

    std::int64_t max_len = 0;
    for (const auto& p : set.points) max_len = std::max(max_len, p.length);
    const rauzy::Word coloring = tribonacci_cover(max_len);
    const auto pts = layer_render_points(set, frame, coloring);

    std::vector<rauzy::RenderPolygon> cells;
    if (want_cells && level >= 0) cells = cells_for(set, frame, cell_rule, level, want_boundary);

    std::vector<rauzy::RenderLabel> labels;
    if (is_a && labels_a) {
      for (const auto& p : pts) {
        labels.push_back({p.x, p.y, std::to_string(p.length)});
      }
    }
    emit_outputs(pts, cells, out, spec, labels);
    std::cout << "points: " << set.points.size() << "\n";
    for (const auto& s : set.stats) {
      std::cout << "level " << s.level << ": candidates " << s.candidates << ", kept " << s.unique
                << "\n";
    }
    return kExitOk;
  }

  if (boundary->parsed()) {
    const rauzy::Frame frame = rauzy::build_frame(rauzy::spectrum(rauzy::presets::sigma(0)).v_inf);
    const int level = boundary_level;
    const rauzy::BPoints b = rauzy::b_points(3 * std::max(level, 0) + 3);
    const rauzy::STable table = rauzy::s_table(std::max(level, 0));
    const bool is_a = boundary_of == "a";
    const rauzy::ChildRuleFn child_rule =
        is_a ? rauzy::ChildRuleFn([&b](int l) { return rauzy::children_rule_a(l, b); })
             : rauzy::ChildRuleFn([&table](int l) { return rauzy::children_rule_b(l, table); });
    const rauzy::CellRuleFn cell_rule =
        is_a ? rauzy::CellRuleFn([&b](int l) { return rauzy::cell_offsets_a(l, b); })
             : rauzy::CellRuleFn([&table](int l) { return rauzy::cell_offsets_b(l, table); });

    const rauzy::LayerSet survivors = rauzy::build_boundary_layers(
        3, level, child_rule, cell_rule, frame,
        {.strict_ancestors = boundary_strict, .workers = workers});

    std::int64_t max_len = 0;
    for (const auto& p : survivors.points) max_len = std::max(max_len, p.length);
    std::vector<rauzy::RenderPoint> pts;
    if (boundary_interior) {
      const rauzy::LayerSet full = rauzy::build_layers(3, level, child_rule, {.workers = workers});
      for (const auto& p : full.points) max_len = std::max(max_len, p.length);
      const rauzy::Word coloring = tribonacci_cover(max_len);
      pts = layer_render_points(full, frame, coloring);
    } else {
      const rauzy::Word coloring = tribonacci_cover(max_len);
      pts = layer_render_points(survivors, frame, coloring);
    }
    std::vector<rauzy::RenderPolygon> cells;
    if (boundary_cells && level >= 0) cells = cells_for(survivors, frame, cell_rule, level, true);

    emit_outputs(pts, cells, boundary_out, spec);
    std::cout << "boundary points: " << survivors.points.size() << "\n";
    return kExitOk;
  }

  if (selfrep->parsed()) {
    const rauzy::Word word = rauzy::Word::from_digits(selfrep_word, 3);
    rauzy::LimitOptions limit;
    limit.letter2_exception = selfrep_exception;
    const rauzy::Frame frame = rauzy::build_frame(rauzy::limit_direction(word, limit));
    const rauzy::LayerSet set =
        rauzy::build_domain_w(word, selfrep_level, selfrep_exception, {.workers = workers});

    std::int64_t max_len = 0;
    for (const auto& p : set.points) max_len = std::max(max_len, p.length);
    // color by the replicate word where lengths are covered, slot tags beyond
    rauzy::ReplicateOptions rep;
    rep.letter2_exception = selfrep_exception;
    rauzy::Word coloring = word;
    int steps = 0;
    while (coloring.length() < max_len && steps < 12) {
      coloring = rauzy::replicate(word, ++steps, rep);
    }
    const auto pts = layer_render_points(set, frame, coloring);
    emit_outputs(pts, {}, selfrep_out, spec);
    std::cout << "points: " << set.points.size() << "\n";
    for (const auto& s : set.stats) {
      std::cout << "level " << s.level << ": candidates " << s.candidates << ", kept " << s.unique
                << "\n";
    }
    return kExitOk;
  }

  if (tile->parsed()) {
    const rauzy::Word word = rauzy::Word::from_digits(tile_word, 3);
    rauzy::TilingOptions opts;
    opts.workers = workers;
    opts.letter2_exception = tile_exception;
    const rauzy::TilingReport report = rauzy::tiling_check(word, tile_level, tile_radius, opts);

    std::cout << "copies: " << report.distinct_translations << " (of "
              << report.offsets_enumerated << " offsets), points per copy: "
              << report.points_per_copy << "\n";
    std::cout << "collisions: " << report.collisions.size()
              << ", min pair distance: " << report.min_distance << "\n";
    std::cout << "coverage: " << report.coverage << "\n";

    if (!tile_out.svg_path.empty() || !tile_out.csv_path.empty()) {
      rauzy::LimitOptions limit;
      limit.letter2_exception = tile_exception;
      const rauzy::Frame frame = rauzy::build_frame(rauzy::limit_direction(word, limit));
      const rauzy::TilingOffsets offs = rauzy::tiling_offsets(frame);
      const rauzy::LayerSet set =
          rauzy::build_domain_w(word, tile_level, tile_exception, {.workers = workers});
      std::vector<rauzy::RenderPoint> pts;
      for (int c01 = -tile_radius; c01 <= tile_radius; ++c01) {
        for (int c12 = -tile_radius; c12 <= tile_radius; ++c12) {
          for (int c02 = -tile_radius; c02 <= tile_radius; ++c02) {
            const rauzy::PlaneVec t = static_cast<double>(c01) * offs.u01 +
                                      static_cast<double>(c12) * offs.u12 +
                                      static_cast<double>(c02) * offs.u02;
            for (const auto& p : set.points) {
              const rauzy::PlaneVec xy = rauzy::project2(frame, p.lattice) + t;
              pts.push_back({xy.x(), xy.y(), p.tag % 3, p.length, p.level});
            }
          }
        }
      }
      emit_outputs(pts, {}, tile_out, spec);
    }
    return report.disjoint() ? kExitOk : kExitAcceptance;
  }

  if (verify->parsed()) {
    rauzy::print_table1(std::cout);
    rauzy::print_table2(std::cout);
    const auto results = rauzy::run_acceptance(workers);
    rauzy::print_results(std::cout, results);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return all ? kExitOk : kExitAcceptance;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rauzy::ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
