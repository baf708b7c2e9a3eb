#pragma once

#include <string>
#include <vector>

#include "arps/examples.hpp"

namespace arps {

struct TableRow {
  double x = 0.0;
  double t = 0.0;
  double exact = 0.0;
  double numeric = 0.0;

  double abs_error() const;
};

struct Grid {
  std::vector<double> xs;
  std::vector<double> ts;

  /// x in {0, 2, ..., 10}, t in {0.25, 0.5, 0.75, 1}.
  static Grid standard_table();
  /// n points per axis, endpoints included.
  static Grid uniform(double x0, double x1, int nx, double t0, double t1, int nt);

  std::size_t size() const { return xs.size() * ts.size(); }
  /// Throws std::invalid_argument when either axis is empty.
  void validate() const;
};

/// One row per grid point, t-major with x ascending inside each block.
std::vector<TableRow> make_table(int id, const ExampleParams& params, double alpha, int order,
                                 const Grid& grid);

/// Header `x,t,exact,numeric,abs_error`, 15 significant digits.
std::string format_csv(const std::vector<TableRow>& rows);
void emit_csv(const std::vector<TableRow>& rows, const std::string& path);
/// Inverse of format_csv; the abs_error column is checked, not stored.
std::vector<TableRow> parse_csv(const std::string& text);

/// Writes `<stem>_alpha<a>.dat` per alpha and `<stem>_exact.dat` (alpha = 1),
/// each a list of `x t y` lines in grid order. Returns the written paths.
std::vector<std::string> emit_surface(int id, const ExampleParams& params,
                                      const std::vector<double>& alphas, int order,
                                      const Grid& grid, const std::string& dir,
                                      const std::string& stem);

/// Settings that regenerate one of the five published tables.
struct TablePreset {
  int table = 0;
  int example = 0;
  ExampleParams params;
  /// Truncation order that reproduces the published error column.
  int order = 6;
  std::string caption;
};

TablePreset table_preset(int table);
/// The preset whose example and parameters match, or table 0 with order 6.
TablePreset preset_for(int example, const ExampleParams& params);

/// $ARPS_OUTPUT_DIR, or "." when unset.
std::string output_dir();

struct RunConfig {
  int example = 1;
  ExampleParams params = KleinGordonParams{};
  std::vector<double> alphas{1.0};
  int order = 6;
  Grid grid = Grid::standard_table();
  std::string output_dir = ".";
  bool validate = false;

  void check() const;
};

}  // namespace arps
