#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hyperlap/kernel.hpp"

namespace hyperlap {

// One grid point of a cross-route comparison table.
struct TableRow {
    double rho = 0.0;
    // Keyed by route_name(); a route outside its validity region is absent.
    std::map<std::string, double> value_per_route;
    // Max over route pairs of |a-b| / max(|a|,|b|) among present routes.
    double max_rel_diff = 0.0;
};

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// steps points, log-spaced from lo to hi inclusive (steps >= 2, 0 < lo < hi).
std::vector<double> log_spaced_grid(double lo, double hi, int steps);

// Evaluates every admissible route at each grid point.  The radial profile
// does not involve R, so none is taken.
std::vector<TableRow> compute_table(int d, double rho_min, double rho_max,
                                    int steps, double tol);

// CSV with the fixed header
// rho,I_quadrature,I_sum,I_hyp,I_hyp_euler,I_legendre,max_rel_diff
// and one row per grid point; absent routes leave their cell empty.
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

// Self-contained SVG line chart of log10 I_d(rho) against rho, one polyline
// per route present in the rows.
void write_plot_svg(std::ostream& os, int d, const std::vector<TableRow>& rows);

// Subcommand bodies; each returns a process exit code.
int cmd_eval(int d, double R, double rho, EvalRoute route, double tol);
int cmd_table(int d, double R, double rho_min, double rho_max, int steps,
              const std::string& out_path, double tol);
int cmd_verify(int d_min, int d_max, double tol);
int cmd_plot(int d, const std::string& out_path, double tol);

// Full argument parsing and dispatch.  Exit codes: 0 success, 1 failed
// checks or evaluation error, 2 usage error, 3 output I/O error.
int run_cli(int argc, char** argv);

}  // namespace hyperlap
