// arps: command-line front end for the fractional series solver.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arps/ara.hpp"
#include "arps/bench.hpp"
#include "arps/examples.hpp"
#include "arps/spec_io.hpp"
#include "arps/validation.hpp"

namespace {

using namespace arps;

constexpr int kUsageError = 2;
constexpr int kFailure = 1;

struct ParamFlags {
  std::optional<double> v, w, lambda, gamma;

  void attach(CLI::App* cmd) {
    cmd->add_option("--v", v, "Example 1: coefficient v > 0");
    cmd->add_option("--w", w, "Example 1: coefficient w > 0");
    cmd->add_option("--lambda", lambda, "Example 1: wave parameter lambda");
    cmd->add_option("--gamma", gamma, "Example 2: wave speed gamma");
  }

  ExampleParams resolve(int id) const {
    if (id != 1 && (v || w || lambda)) {
      throw std::invalid_argument("--v/--w/--lambda only apply to example 1");
    }
    if (id != 2 && gamma) throw std::invalid_argument("--gamma only applies to example 2");
    ExampleParams p = default_params(id);
    if (auto* kg = std::get_if<KleinGordonParams>(&p)) {
      kg->v = v.value_or(kg->v);
      kg->w = w.value_or(kg->w);
      kg->lambda = lambda.value_or(kg->lambda);
    } else if (auto* b = std::get_if<BoussinesqParams>(&p)) {
      b->gamma = gamma.value_or(b->gamma);
    }
    return p;
  }
};

std::pair<double, double> parse_point(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected x:t, got " + text);
  std::size_t used = 0;
  const double x = std::stod(text.substr(0, colon), &used);
  if (used != colon) throw std::invalid_argument("bad x in " + text);
  const std::string rest = text.substr(colon + 1);
  const double t = std::stod(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad t in " + text);
  return {x, t};
}

// Accepts "1", "t" and "t^p".
double parse_power(const std::string& fn) {
  if (fn == "1") return 0.0;
  if (fn == "t") return 1.0;
  if (fn.rfind("t^", 0) == 0) {
    std::size_t used = 0;
    const std::string tail = fn.substr(2);
    const double p = std::stod(tail, &used);
    if (used == tail.size() && p >= 0.0) return p;
  }
  throw std::invalid_argument("--fn must be 1, t or t^p with p >= 0, got " + fn);
}

std::string resolve_output(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(output_dir()) / p).string();
}

struct SolveCmd {
  std::string spec_file;
  std::optional<int> example;
  double alpha = 1.0;
  int order = 6;
  std::vector<std::string> points;
  bool dump_spec = false;
  ParamFlags params;

  int run() const {
    if (spec_file.empty() == !example) {
      throw std::invalid_argument("give exactly one of --spec or --example");
    }
    PdeSpec spec;
    ExampleParams p;
    if (example) {
      p = params.resolve(*example);
      spec = builtin_example(*example, p, alpha);
    } else {
      spec = load_spec_file(spec_file);
    }
    if (dump_spec) std::printf("%s\n", spec_to_json(spec).c_str());

    const SolveResult r = solve(spec, order);
    std::printf("time_order %d  alpha %g  order %d\n", spec.time_order, spec.alpha, order);
    std::printf("rhs = %s\n", spec.rhs.to_string().c_str());
    for (int n = 0; n <= order; ++n) {
      std::printf("c_%d = %s\n", n, r.series[n].to_string().c_str());
    }
    double worst = 0.0;
    for (double v : r.residual_leading) worst = std::max(worst, v);
    std::printf("residual max %.3e (tolerance %.3e) %s\n", worst, r.tolerance,
                r.verified() ? "verified" : "NOT VERIFIED");
    for (const auto& text : points) {
      const auto [x, t] = parse_point(text);
      const double y = series_eval(r.series, x, t);
      if (example) {
        const ExactValue e = exact_solution(*example, p, spec.alpha, x, t);
        std::printf("y(%g, %g) = %.9f  exact %.9f  abs_error %.3e%s\n", x, t, y, e.value,
                    std::abs(y - e.value), e.tail_warning ? "  (exact tail warning)" : "");
      } else {
        std::printf("y(%g, %g) = %.9f\n", x, t, y);
      }
    }
    return r.verified() ? 0 : kFailure;
  }
};

struct TableCmd {
  std::optional<int> example;
  std::optional<int> table;
  double alpha = 1.0;
  std::optional<int> order;
  std::string out;
  ParamFlags params;

  int run() const {
    if (example.has_value() == table.has_value()) {
      throw std::invalid_argument("give exactly one of --example or --table");
    }
    TablePreset preset;
    if (table) {
      preset = table_preset(*table);
    } else {
      preset = preset_for(*example, params.resolve(*example));
    }
    const int k = order.value_or(preset.order);
    const auto rows = make_table(preset.example, preset.params, alpha, k, Grid::standard_table());
    if (out.empty()) {
      std::cout << format_csv(rows);
    } else {
      const std::string path = resolve_output(out);
      emit_csv(rows, path);
      std::fprintf(stderr, "wrote %zu rows to %s (order %d)\n", rows.size(), path.c_str(), k);
    }
    return 0;
  }
};

struct TransformCmd {
  std::string fn = "t";
  int n = 2;
  double s = 1.0;

  int run() const {
    const double p = parse_power(fn);
    const auto f = [p](double t) { return std::pow(t, p); };
    const AraNumericResult num = ara_numeric(f, n, s);
    const double exact = ara_monomial(p, n, s);
    std::printf("G_%d[%s](s = %g)\n", n, fn.c_str(), s);
    std::printf("numeric   %.15g  (error estimate %.2e, tail %.2e%s)\n", num.value,
                num.error_estimate, num.tail_bound, num.tail_warning ? ", TAIL WARNING" : "");
    std::printf("exact     %.15g\n", exact);
    std::printf("rel_error %.3e\n", std::abs(num.value - exact) / std::abs(exact));
    return 0;
  }
};

struct ValidateCmd {
  std::uint64_t seed = 0x5eed;
  bool quiet = false;

  int run() const {
    const ValidationReport r = run_validation(seed);
    for (const auto& c : r.checks) {
      if (quiet && c.passed) continue;
      std::printf("%-4s %-9s %-40s %.3e (limit %.1e)\n", c.passed ? "ok" : "FAIL", c.suite.c_str(),
                  c.name.c_str(), c.measured, c.limit);
    }
    std::printf("%zu checks, %d failed\n", r.checks.size(), r.failures());
    return r.passed() ? 0 : kFailure;
  }
};

struct SurfaceCmd {
  int example = 1;
  std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
  std::optional<int> order;
  std::string x_range = "-1:1";
  std::string t_range = "0:1";
  int nx = 21;
  int nt = 11;
  std::string dir;
  std::string stem;
  ParamFlags params;

  int run() const {
    const ExampleParams p = params.resolve(example);
    const TablePreset preset = preset_for(example, p);
    const auto [x0, x1] = parse_point(x_range);
    const auto [t0, t1] = parse_point(t_range);
    const Grid grid = Grid::uniform(x0, x1, nx, t0, t1, nt);
    const std::string target = dir.empty() ? output_dir() : dir;
    const std::string name = stem.empty() ? "example" + std::to_string(example) : stem;
    for (const auto& path :
         emit_surface(example, p, alphas, order.value_or(preset.order), grid, target, name)) {
      std::printf("%s\n", path.c_str());
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional power series solver for time-fractional PDEs"};
  app.require_subcommand(1);

  SolveCmd solve_cmd;
  auto* solve = app.add_subcommand("solve", "Solve a PDE spec and print the series");
  solve->add_option("--spec", solve_cmd.spec_file, "JSON spec file")->check(CLI::ExistingFile);
  solve->add_option("--example", solve_cmd.example, "Builtin example 1-4")->check(CLI::Range(1, 4));
  solve->add_option("--alpha", solve_cmd.alpha, "Fractional order in (0, 1]");
  solve->add_option("--order", solve_cmd.order, "Truncation order K")->check(CLI::NonNegativeNumber);
  solve->add_option("--at", solve_cmd.points, "Evaluation point x:t (repeatable)");
  solve->add_flag("--dump-spec", solve_cmd.dump_spec, "Print the spec as JSON");
  solve_cmd.params.attach(solve);

  TableCmd table_cmd;
  auto* table = app.add_subcommand("table", "Regenerate an error table as CSV");
  table->add_option("--example", table_cmd.example, "Builtin example 1-4")->check(CLI::Range(1, 4));
  table->add_option("--table", table_cmd.table, "Published table 1-5")->check(CLI::Range(1, 5));
  table->add_option("--alpha", table_cmd.alpha, "Fractional order in (0, 1]");
  table->add_option("--order", table_cmd.order, "Truncation order (default: table preset)");
  table->add_option("--out", table_cmd.out, "Output CSV (default: stdout)");
  table_cmd.params.attach(table);

  TransformCmd transform_cmd;
  auto* transform = app.add_subcommand("transform", "Numeric vs exact transform of t^p");
  transform->add_option("--fn", transform_cmd.fn, "1, t or t^p")->required();
  transform->add_option("--n", transform_cmd.n, "Transform order")->check(CLI::IsMember({1, 2}));
  transform->add_option("--s", transform_cmd.s, "Transform variable s > 0")->required();

  ValidateCmd validate_cmd;
  auto* validate = app.add_subcommand("validate", "Run the invariant suites");
  validate->add_option("--seed", validate_cmd.seed, "RNG seed");
  validate->add_flag("--quiet", validate_cmd.quiet, "Only print failures");

  SurfaceCmd surface_cmd;
  auto* surface = app.add_subcommand("surface", "Write surface data files");
  surface->add_option("--example", surface_cmd.example, "Builtin example 1-4")
      ->check(CLI::Range(1, 4));
  surface->add_option("--alpha", surface_cmd.alphas, "Alpha values")->delimiter(',');
  surface->add_option("--order", surface_cmd.order, "Truncation order (default: table preset)");
  surface->add_option("--x-range", surface_cmd.x_range, "x0:x1");
  surface->add_option("--t-range", surface_cmd.t_range, "t0:t1");
  surface->add_option("--nx", surface_cmd.nx, "Points along x")->check(CLI::PositiveNumber);
  surface->add_option("--nt", surface_cmd.nt, "Points along t")->check(CLI::PositiveNumber);
  surface->add_option("--dir", surface_cmd.dir, "Output directory");
  surface->add_option("--stem", surface_cmd.stem, "File name prefix");
  surface_cmd.params.attach(surface);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*solve) return solve_cmd.run();
    if (*table) return table_cmd.run();
    if (*transform) return transform_cmd.run();
    if (*validate) return validate_cmd.run();
    if (*surface) return surface_cmd.run();
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
  return kUsageError;
}
