// Command-line front end over the hypmetric C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypmetric/hypmetric.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;

struct Failure {
  hm_status status;
  std::string message;
};

void check(hm_status status) {
  if (status != HM_OK) throw Failure{status, hm_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) {
  throw Failure{HM_INVALID_ARGUMENT, message};
}

struct SpaceDeleter {
  void operator()(hm_space* s) const { hm_space_free(s); }
};
struct RegionDeleter {
  void operator()(hm_region* r) const { hm_region_free(r); }
};
struct PathDeleter {
  void operator()(hm_path* p) const { hm_path_free(p); }
};
struct TableDeleter {
  void operator()(hm_table* t) const { hm_table_free(t); }
};
using Space = std::unique_ptr<hm_space, SpaceDeleter>;
using RegionPtr = std::unique_ptr<hm_region, RegionDeleter>;
using Path = std::unique_ptr<hm_path, PathDeleter>;
using TablePtr = std::unique_ptr<hm_table, TableDeleter>;

// Rows are built cell by cell; column names come with the first row.
class Rows {
 public:
  Rows& num(const char* name, double v) { return add(name, {HM_CELL_NUMBER, v, 0, nullptr}); }
  Rows& integer(const char* name, std::int64_t v) {
    return add(name, {HM_CELL_INTEGER, 0.0, v, nullptr});
  }
  Rows& text(const char* name, std::string v) {
    texts_.push_back(std::make_unique<std::string>(std::move(v)));
    return add(name, {HM_CELL_TEXT, 0.0, 0, texts_.back()->c_str()});
  }
  void end_row() {
    if (!table_) {
      std::vector<const char*> cols;
      for (const auto& n : names_) cols.push_back(n.c_str());
      hm_table* t = nullptr;
      check(hm_table_create(cols.data(), cols.size(), &t));
      table_.reset(t);
    }
    check(hm_table_add_row(table_.get(), cells_.data(), cells_.size()));
    cells_.clear();
    texts_.clear();
    header_done_ = true;
  }
  TablePtr take() { return std::move(table_); }

 private:
  Rows& add(const char* name, hm_cell cell) {
    if (!header_done_) names_.emplace_back(name);
    cells_.push_back(cell);
    return *this;
  }

  std::vector<std::string> names_;
  std::vector<hm_cell> cells_;
  std::vector<std::unique_ptr<std::string>> texts_;
  TablePtr table_;
  bool header_done_ = false;
};

struct Common {
  std::string input;
  std::string matrix;
  bool log = false;
  std::string output;
  std::string format = "csv";
  unsigned threads = 1;
};

std::string cell_text(const hm_table* t, size_t r, size_t c) {
  size_t needed = 0;
  check(hm_table_cell_text(t, r, c, nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  check(hm_table_cell_text(t, r, c, text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

void emit(const Common& common, const std::string& command, hm_table* table) {
  const hm_format format = common.format == "json" ? HM_FORMAT_JSON : HM_FORMAT_CSV;
  if (common.output.empty() || common.output == "-") {
    check(hm_table_write(table, "-", format));
    return;
  }
  check(hm_table_write(table, common.output.c_str(), format));
  for (size_t r = 0; r < hm_table_rows(table); ++r) {
    std::cout << command << ':';
    for (size_t c = 0; c < hm_table_columns(table); ++c) {
      std::cout << ' ' << hm_table_column_name(table, c) << '=' << cell_text(table, r, c);
    }
    std::cout << '\n';
  }
  std::cout << "wrote " << hm_table_rows(table) << " row(s) to " << common.output << '\n';
}

Space load_space(const Common& common) {
  if (common.input.empty() == common.matrix.empty()) {
    usage_error("give exactly one of --input (point CSV) or --matrix (distance CSV)");
  }
  hm_space* raw = nullptr;
  if (!common.input.empty()) {
    check(hm_space_load_points(common.input.c_str(), HM_EUCLIDEAN, &raw));
  } else {
    check(hm_space_load_matrix(common.matrix.c_str(), &raw));
  }
  Space space(raw);
  if (common.log) {
    hm_space* logged = nullptr;
    check(hm_space_log_transform(space.get(), &logged));
    space.reset(logged);
  }
  return space;
}

struct BallArg {
  std::size_t center = 0;
  double radius = 0.0;
};

BallArg parse_ball(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) usage_error("ball must be given as center,radius: " + text);
  BallArg b;
  try {
    std::size_t used = 0;
    const std::string c = text.substr(0, comma);
    const std::string r = text.substr(comma + 1);
    b.center = std::stoul(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
    b.radius = std::stod(r, &used);
    if (used != r.size()) throw std::invalid_argument(r);
  } catch (const std::exception&) {
    usage_error("ball must be given as center,radius: " + text);
  }
  return b;
}

struct RegionArgs {
  std::string region;
  std::string ball1;
  std::string ball2;
};

RegionPtr load_region(const hm_space* space, const RegionArgs& args) {
  hm_region* raw = nullptr;
  if (!args.region.empty()) {
    if (!args.ball1.empty() || !args.ball2.empty()) {
      usage_error("give either --region or --ball1/--ball2, not both");
    }
    check(hm_region_load(space, args.region.c_str(), &raw));
  } else if (!args.ball1.empty() && !args.ball2.empty()) {
    const auto b1 = parse_ball(args.ball1);
    const auto b2 = parse_ball(args.ball2);
    check(hm_region_intersect_balls(space, b1.center, b1.radius, b2.center, b2.radius, &raw));
  } else {
    usage_error("a region needs --region FILE or both --ball1 c,r and --ball2 c,r");
  }
  return RegionPtr(raw);
}

void add_region_options(CLI::App* cmd, RegionArgs& args) {
  cmd->add_option("--region", args.region, "File with one point index per line");
  cmd->add_option("--ball1", args.ball1, "First ball as center,radius");
  cmd->add_option("--ball2", args.ball2, "Second ball as center,radius");
}

void add_space_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--input,--points", common.input, "Point cloud CSV (header x0,x1,...)");
  cmd->add_option("--matrix", common.matrix, "Distance matrix CSV");
  cmd->add_flag("--log", common.log, "Use d' = ln(1 + d)");
}

unsigned default_threads() {
  if (const char* env = std::getenv("HYPMETRIC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

TablePtr path_table_from_lengths(const hm_lengths_result& r) {
  Rows rows;
  rows.integer("segments", static_cast<std::int64_t>(r.segments))
      .num("length_d", r.length_d)
      .num("length_dprime", r.length_dprime)
      .num("chord_d", r.chord_d)
      .num("chord_dprime", r.chord_dprime);
  rows.end_row();
  return rows.take();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric-geometry toolkit: hyperbolicity, ball geometry and quasi-geodesics"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  common.threads = default_threads();
  app.add_option("--output,-o", common.output, "Result path ('-' for standard output)");
  app.add_option("--format", common.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", common.threads, "Worker threads (default $HYPMETRIC_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  double tolerance = 1e-9;
  std::optional<std::size_t> base;
  RegionArgs region_args;
  double lambda = 2.0;
  std::vector<int> n_list;
  double h = 0.05;
  std::vector<int> sides;
  double spacing = 1.0;
  bool fixed_base = false;
  bool force = false;
  std::vector<int> line_n;
  double L = 1.0, C = 0.0;
  std::string path_input;
  double probe_spacing = 0.1;
  double refine_tol = 1e-6;
  std::string tamed_output;

  auto* validate = app.add_subcommand("validate", "Check the metric axioms");
  add_space_options(validate, common);
  validate->add_option("--tolerance", tolerance, "Triangle inequality tolerance");

  auto* transform = app.add_subcommand("transform", "Write the d' = ln(1 + d) distance matrix");
  add_space_options(transform, common);

  auto* delta = app.add_subcommand("delta", "Four-point hyperbolicity constant");
  add_space_options(delta, common);
  delta->add_option("--base", base, "Scan only quadruples with this basepoint");

  auto* ultra = app.add_subcommand("ultra", "Ultrametric defect");
  add_space_options(ultra, common);

  auto* ecc = app.add_subcommand("ecc", "Eccentricity of a region");
  add_space_options(ecc, common);
  add_region_options(ecc, region_args);

  auto* quasiball = app.add_subcommand("quasiball", "Quasi-ball defect of a region");
  add_space_options(quasiball, common);
  add_region_options(quasiball, region_args);

  auto* weakecc = app.add_subcommand("weakecc", "Weak eccentricity defect of a region");
  add_space_options(weakecc, common);
  add_region_options(weakecc, region_args);
  weakecc->add_option("--lambda", lambda, "Inner radius factor (>= 1)")->required();

  auto* lens = app.add_subcommand("lens", "Lens family eccentricity growth experiment");
  lens->set_help_flag("--help", "Print this help message and exit");
  lens->add_option("--n-list", n_list, "Lens indices, e.g. 4,12,40")->required()->delimiter(',');
  lens->add_option("--h", h, "Lattice spacing")->required();
  lens->add_option("--lambda", lambda, "Weak eccentricity factor");

  auto* grid = app.add_subcommand("grid", "Square grid four-point experiment");
  grid->add_option("--sides", sides, "Grid sides, e.g. 4,8,16")->required()->delimiter(',');
  grid->add_option("--spacing", spacing, "Grid spacing");
  grid->add_flag("--fixed-base", fixed_base, "Scan only quadruples based at a corner");
  grid->add_flag("--force", force, "Allow full scans above the size guard");

  auto* lineultra = app.add_subcommand("lineultra", "Ultrametric defect of {0..N} under d'");
  lineultra->add_option("--N", line_n, "Line lengths")->required()->delimiter(',');

  auto* horizon = app.add_subcommand("horizon", "Root of exp(D) - 1 = k1 D + k2");
  horizon->add_option("--L", L, "Multiplicative constant")->required();
  horizon->add_option("--C", C, "Additive constant")->required();
  horizon->add_option("--tolerance", tolerance, "Bisection tolerance");

  auto* tame = app.add_subcommand("tame", "Tame a sampled quasi-geodesic and check the result");
  tame->add_option("--input", path_input, "Path CSV with rows t,x,y")->required();
  tame->add_option("--L", L, "Multiplicative constant")->required();
  tame->add_option("--C", C, "Additive constant")->required();
  tame->add_option("--probe-spacing", probe_spacing, "Parameter spacing of the checks");
  tame->add_option("--refine-tol", refine_tol, "Length refinement tolerance");
  tame->add_option("--tamed-output", tamed_output, "Write the tamed path as t,x,y CSV");

  auto* lengths = app.add_subcommand("lengths", "Path length under d and d'");
  lengths->add_option("--input", path_input, "Path CSV with rows t,x,y")->required();
  lengths->add_option("--refine-tol", refine_tol, "Length refinement tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    TablePtr table;
    if (command == "validate") {
      hm_validation v{};
      std::size_t n = 0;
      if (!common.matrix.empty() && common.input.empty()) {
        check(hm_matrix_file_validate(common.matrix.c_str(), tolerance, &v, &n));
        if (common.log && v.violated == HM_AXIOM_NONE) {
          auto space = load_space(common);
          check(hm_space_validate(space.get(), tolerance, &v));
        }
      } else {
        auto space = load_space(common);
        n = hm_space_size(space.get());
        check(hm_space_validate(space.get(), tolerance, &v));
      }
      Rows rows;
      rows.text("status", v.violated == HM_AXIOM_NONE ? "pass" : "fail")
          .text("axiom", hm_axiom_name(v.violated))
          .integer("points", static_cast<std::int64_t>(n))
          .integer("witness_i", static_cast<std::int64_t>(v.witness[0]))
          .integer("witness_j", static_cast<std::int64_t>(v.witness[1]))
          .integer("witness_k", static_cast<std::int64_t>(v.witness[2]))
          .num("excess", v.excess)
          .integer("coincident_pairs", static_cast<std::int64_t>(v.coincident_pairs));
      rows.end_row();
      table = rows.take();
      emit(common, command, table.get());
      if (v.coincident_pairs > 0) {
        std::cerr << "warning: pseudometric: " << v.coincident_pairs
                  << " coincident pair(s), first (" << v.first_coincident[0] << ','
                  << v.first_coincident[1] << ")\n";
      }
      if (v.violated != HM_AXIOM_NONE) {
        std::cerr << "error: metric: " << hm_axiom_name(v.violated) << " failure at ("
                  << v.witness[0] << ',' << v.witness[1] << ',' << v.witness[2]
                  << ") excess=" << v.excess << '\n';
        return kExitInput;
      }
      return 0;
    }
    if (command == "transform") {
      auto space = load_space(common);
      hm_space* logged = nullptr;
      check(hm_space_log_transform(space.get(), &logged));
      Space out(logged);
      const std::string target = common.output.empty() ? "-" : common.output;
      check(hm_space_write_matrix(out.get(), target.c_str()));
      if (target != "-") {
        std::cout << "transform: wrote " << hm_space_size(out.get()) << "x"
                  << hm_space_size(out.get()) << " d' matrix to " << target << '\n';
      }
      return 0;
    }
    if (command == "delta") {
      auto space = load_space(common);
      hm_delta_result r{};
      if (base) {
        check(hm_four_point_delta_fixed_base(space.get(), *base, common.threads, &r));
      } else {
        check(hm_four_point_delta(space.get(), common.threads, &r));
      }
      Rows rows;
      rows.text("method", base ? "fixed-base" : "full")
          .num("delta", r.delta)
          .integer("p", static_cast<std::int64_t>(r.witness[0]))
          .integer("x", static_cast<std::int64_t>(r.witness[1]))
          .integer("y", static_cast<std::int64_t>(r.witness[2]))
          .integer("z", static_cast<std::int64_t>(r.witness[3]))
          .integer("quadruples", static_cast<std::int64_t>(r.scanned));
      rows.end_row();
      table = rows.take();
    } else if (command == "ultra") {
      auto space = load_space(common);
      hm_ultra_result r{};
      check(hm_ultrametric_delta(space.get(), common.threads, &r));
      Rows rows;
      rows.num("delta_u", r.delta_u)
          .integer("x", static_cast<std::int64_t>(r.witness[0]))
          .integer("y", static_cast<std::int64_t>(r.witness[1]))
          .integer("z", static_cast<std::int64_t>(r.witness[2]))
          .integer("triples", static_cast<std::int64_t>(r.scanned));
      rows.end_row();
      table = rows.take();
    } else if (command == "ecc" || command == "quasiball" || command == "weakecc") {
      auto space = load_space(common);
      auto region = load_region(space.get(), region_args);
      Rows rows;
      rows.integer("region_size", static_cast<std::int64_t>(hm_region_size(region.get())));
      if (command == "ecc") {
        hm_ecc_result r{};
        check(hm_eccentricity(space.get(), region.get(), common.threads, &r));
        rows.num("ecc", r.ecc);
        if (r.has_balls) {
          rows.integer("inner_center", static_cast<std::int64_t>(r.inner_center))
              .num("inner_radius", r.inner_radius)
              .integer("outer_center", static_cast<std::int64_t>(r.outer_center))
              .num("outer_radius", r.outer_radius);
        }
      } else if (command == "quasiball") {
        hm_quasi_ball_result r{};
        check(hm_quasi_ball_defect(space.get(), region.get(), common.threads, &r));
        rows.num("defect", r.defect)
            .integer("center", static_cast<std::int64_t>(r.center))
            .num("radius", r.radius);
      } else {
        double v = 0.0;
        check(hm_weak_ecc_defect(space.get(), region.get(), lambda, common.threads, &v));
        rows.num("lambda", lambda).num("weak_ecc_defect", v);
      }
      rows.end_row();
      table = rows.take();
    } else if (command == "lens") {
      hm_table* raw = nullptr;
      check(hm_lens_experiment(n_list.data(), n_list.size(), h, lambda, common.threads, &raw));
      table.reset(raw);
    } else if (command == "grid") {
      hm_table* raw = nullptr;
      check(hm_grid_experiment(sides.data(), sides.size(), spacing, fixed_base, force,
                               common.threads, &raw));
      table.reset(raw);
    } else if (command == "lineultra") {
      hm_table* raw = nullptr;
      check(hm_line_ultra_experiment(line_n.data(), line_n.size(), common.threads, &raw));
      table.reset(raw);
    } else if (command == "horizon") {
      hm_tame_constants k{};
      check(hm_tame_constants_for(L, C, &k));
      double d = 0.0;
      check(hm_horizon(L, C, tolerance, &d));
      Rows rows;
      rows.num("L", L).num("C", C).num("k1", k.k1).num("k2", k.k2).num("D_star", d);
      rows.end_row();
      table = rows.take();
    } else if (command == "tame") {
      hm_path* raw = nullptr;
      check(hm_path_load(path_input.c_str(), &raw));
      Path input(raw);
      hm_tame_result r{};
      hm_path* tamed_raw = nullptr;
      check(hm_tame(input.get(), L, C, probe_spacing, refine_tol, &r,
                    tamed_output.empty() ? nullptr : &tamed_raw));
      Path tamed(tamed_raw);
      if (tamed) {
        Rows path_rows;
        for (size_t i = 0; i < hm_path_size(tamed.get()); ++i) {
          double t = 0, x = 0, y = 0;
          check(hm_path_sample(tamed.get(), i, &t, &x, &y));
          path_rows.num("t", t).num("x", x).num("y", y);
          path_rows.end_row();
        }
        auto path_table = path_rows.take();
        check(hm_table_write(path_table.get(), tamed_output.c_str(), HM_FORMAT_CSV));
      }
      Rows rows;
      rows.num("L", L)
          .num("C", C)
          .num("c_prime", r.constants.c_prime)
          .num("k1", r.constants.k1)
          .num("k2", r.constants.k2)
          .integer("probes", static_cast<std::int64_t>(r.probe_count))
          .integer("endpoints_preserved", r.conclusion[0])
          .num("qg_defect", r.qg_defect_probe)
          .integer("quasi_geodesic", r.conclusion[1])
          .num("chord_arc_excess", r.chord_arc_excess)
          .num("chord_arc_excess_euclidean", r.chord_arc_excess_euclidean)
          .integer("chord_arc", r.conclusion[2])
          .num("hausdorff", r.hausdorff)
          .num("hausdorff_bound", r.hausdorff_bound)
          .integer("hausdorff_ok", r.conclusion[3])
          .integer("passed", r.passed);
      rows.end_row();
      table = rows.take();
    } else if (command == "lengths") {
      hm_path* raw = nullptr;
      check(hm_path_load(path_input.c_str(), &raw));
      Path input(raw);
      hm_lengths_result r{};
      check(hm_path_lengths(input.get(), refine_tol, &r));
      table = path_table_from_lengths(r);
    }
    emit(common, command, table.get());
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << hm_status_name(f.status) << ": " << f.message << '\n';
    return f.status == HM_GUARD ? kExitGuard : kExitInput;
  }
}
