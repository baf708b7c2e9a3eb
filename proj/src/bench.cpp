#include "arps/bench.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace arps {

double TableRow::abs_error() const { return std::abs(exact - numeric); }

Grid Grid::standard_table() { return {{0, 2, 4, 6, 8, 10}, {0.25, 0.5, 0.75, 1.0}}; }

Grid Grid::uniform(double x0, double x1, int nx, double t0, double t1, int nt) {
  if (nx < 1 || nt < 1) throw std::invalid_argument("Grid::uniform: need at least one point");
  auto axis = [](double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return v;
  };
  return {axis(x0, x1, nx), axis(t0, t1, nt)};
}

void Grid::validate() const {
  if (xs.empty() || ts.empty()) throw std::invalid_argument("Grid: empty axis");
  for (double t : ts) {
    if (!(t >= 0.0)) throw std::invalid_argument("Grid: t must be >= 0");
  }
}

std::vector<TableRow> make_table(int id, const ExampleParams& params, double alpha, int order,
                                 const Grid& grid) {
  grid.validate();
  const SolveResult sol = solve(builtin_example(id, params, alpha), order);
  std::vector<TableRow> rows;
  rows.reserve(grid.size());
  for (double t : grid.ts) {
    for (double x : grid.xs) {
      rows.push_back({x, t, exact_solution(id, params, alpha, x, t).value,
                      series_eval(sol.series, x, t)});
    }
  }
  return rows;
}

std::string format_csv(const std::vector<TableRow>& rows) {
  std::string out = "x,t,exact,numeric,abs_error\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g,%.15g\n", r.x, r.t, r.exact,
                  r.numeric, r.abs_error());
    out += buf;
  }
  return out;
}

void emit_csv(const std::vector<TableRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << format_csv(rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TableRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "x,t,exact,numeric,abs_error") {
    throw std::invalid_argument("parse_csv: missing header");
  }
  std::vector<TableRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    TableRow r;
    double err = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf%c", &r.x, &r.t, &r.exact, &r.numeric,
                    &err, &tail) != 5) {
      throw std::invalid_argument("parse_csv: bad row at line " + std::to_string(lineno));
    }
    if (std::abs(err - r.abs_error()) > 1e-14 * std::max(1.0, std::abs(r.exact))) {
      throw std::invalid_argument("parse_csv: inconsistent abs_error at line " +
                                  std::to_string(lineno));
    }
    rows.push_back(r);
  }
  return rows;
}

namespace {

void write_triples(const std::string& path, const Grid& grid,
                   const std::function<double(double, double)>& y) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  char buf[96];
  for (double t : grid.ts) {
    for (double x : grid.xs) {
      std::snprintf(buf, sizeof buf, "%.15g %.15g %.15g\n", x, t, y(x, t) + 0.0);
      out << buf;
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::vector<std::string> emit_surface(int id, const ExampleParams& params,
                                      const std::vector<double>& alphas, int order,
                                      const Grid& grid, const std::string& dir,
                                      const std::string& stem) {
  grid.validate();
  if (alphas.empty()) throw std::invalid_argument("emit_surface: no alpha values");
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  char name[64];
  for (double alpha : alphas) {
    const SolveResult sol = solve(builtin_example(id, params, alpha), order);
    std::snprintf(name, sizeof name, "_alpha%g.dat", alpha);
    const std::string path = (std::filesystem::path(dir) / (stem + name)).string();
    write_triples(path, grid, [&sol](double x, double t) { return series_eval(sol.series, x, t); });
    paths.push_back(path);
  }
  const std::string path = (std::filesystem::path(dir) / (stem + "_exact.dat")).string();
  write_triples(path, grid, [&](double x, double t) {
    return exact_solution(id, params, 1.0, x, t).value;
  });
  paths.push_back(path);
  return paths;
}

TablePreset table_preset(int table) {
  switch (table) {
    case 1:
      return {1, 1, KleinGordonParams{1.0, 1.0, 1.0}, 13,
              "Example 1, v = w = lambda = 1, alpha = 1"};
    case 2:
      return {2, 2, BoussinesqParams{2.0}, 30, "Example 2, gamma = 2, alpha = 1"};
    case 3:
      return {3, 2, BoussinesqParams{0.5}, 13, "Example 2, gamma = 0.5, alpha = 1"};
    case 4:
      return {4, 3, std::monostate{}, 13, "Example 3, alpha = 1"};
    case 5:
      return {5, 4, std::monostate{}, 6, "Example 4, alpha = 1"};
    default:
      throw std::invalid_argument("unknown table " + std::to_string(table));
  }
}

namespace {

bool same_params(const ExampleParams& a, const ExampleParams& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<KleinGordonParams>(&a)) {
    const auto& q = std::get<KleinGordonParams>(b);
    return p->v == q.v && p->w == q.w && p->lambda == q.lambda;
  }
  if (const auto* p = std::get_if<BoussinesqParams>(&a)) {
    return p->gamma == std::get<BoussinesqParams>(b).gamma;
  }
  return true;
}

}  // namespace

TablePreset preset_for(int example, const ExampleParams& params) {
  for (int table = 1; table <= 5; ++table) {
    TablePreset p = table_preset(table);
    if (p.example == example && same_params(p.params, params)) return p;
  }
  return {0, example, params, 6, "custom parameters"};
}

std::string output_dir() {
  const char* env = std::getenv("ARPS_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? std::string(env) : std::string(".");
}

void RunConfig::check() const {
  grid.validate();
  if (alphas.empty()) throw std::invalid_argument("RunConfig: no alpha values");
  const int k = builtin_example(example, params, alphas.front()).time_order;
  if (order < k) throw std::invalid_argument("RunConfig: order below the time order");
}

}  // namespace arps
