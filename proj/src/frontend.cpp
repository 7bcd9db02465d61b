#include "hyperlap/frontend.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "hyperlap/errors.hpp"
#include "hyperlap/verify.hpp"

namespace hyperlap {

namespace {

constexpr EvalRoute kTableRoutes[] = {
    EvalRoute::Quadrature, EvalRoute::FiniteSum, EvalRoute::Hyp2F1,
    EvalRoute::Hyp2F1Euler, EvalRoute::LegendreQ};

std::string sci17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string px(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::pair<int, int> parse_dims(const std::string& spec) {
    const auto sep = spec.find("..");
    int lo = 0;
    int hi = 0;
    bool ok = sep != std::string::npos && sep > 0;
    if (ok) {
        const char* data = spec.data();
        const auto r1 = std::from_chars(data, data + sep, lo);
        const auto r2 = std::from_chars(data + sep + 2, data + spec.size(), hi);
        ok = r1.ec == std::errc{} && r1.ptr == data + sep &&
             r2.ec == std::errc{} && r2.ptr == data + spec.size();
    }
    if (!ok) throw DomainError("verify: --dims expects a range like 2..9");
    return {lo, hi};
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<double> log_spaced_grid(double lo, double hi, int steps) {
    if (!(steps >= 2) || !(lo > 0.0) || !(hi > lo))
        throw DomainError("log_spaced_grid: need 0 < lo < hi and steps >= 2");
    std::vector<double> grid(steps);
    const double ratio = hi / lo;
    for (int i = 0; i < steps; ++i)
        grid[i] = lo * std::pow(ratio, static_cast<double>(i) / (steps - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<TableRow> compute_table(int d, double rho_min, double rho_max,
                                    int steps, double tol) {
    validate_params({d, 1.0, tol, kQuadratureRhoMin});
    const auto grid = log_spaced_grid(rho_min, rho_max, steps);
    std::vector<TableRow> rows;
    rows.reserve(grid.size());
    for (double rho : grid) {
        TableRow row;
        row.rho = rho;
        for (EvalRoute route : kTableRoutes) {
            if (!route_available(route, d, rho)) continue;
            row.value_per_route[route_name(route)] = i_eval(d, rho, route, tol).value;
        }
        for (auto it = row.value_per_route.begin(); it != row.value_per_route.end();
             ++it) {
            for (auto jt = std::next(it); jt != row.value_per_route.end(); ++jt) {
                const double scale =
                    std::max(std::abs(it->second), std::abs(jt->second));
                if (scale > 0.0)
                    row.max_rel_diff = std::max(
                        row.max_rel_diff, std::abs(it->second - jt->second) / scale);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    static constexpr const char* kColumns[] = {"quadrature", "sum", "hyp",
                                               "hyp_euler", "legendre"};
    os << "rho,I_quadrature,I_sum,I_hyp,I_hyp_euler,I_legendre,max_rel_diff\n";
    for (const auto& row : rows) {
        os << format_double(row.rho);
        for (const char* column : kColumns) {
            os << ',';
            const auto it = row.value_per_route.find(column);
            if (it != row.value_per_route.end()) os << format_double(it->second);
        }
        os << ',' << format_double(row.max_rel_diff) << '\n';
    }
}

void write_plot_svg(std::ostream& os, int d, const std::vector<TableRow>& rows) {
    if (rows.empty()) throw DomainError("write_plot_svg: empty table");

    struct RouteStyle {
        const char* name;
        const char* color;
        const char* width;
        const char* extra;  // dash pattern / opacity attributes
    };
    // The wide translucent quadrature stroke sits underneath; the dashed
    // overlays make the (numerically coincident) curves distinguishable.
    static constexpr RouteStyle kStyles[] = {
        {"quadrature", "#1f77b4", "3.5", " stroke-opacity=\"0.35\""},
        {"sum", "#d62728", "1.6", ""},
        {"hyp", "#2ca02c", "1.6", " stroke-dasharray=\"7 4\""},
        {"hyp_euler", "#9467bd", "1.6", " stroke-dasharray=\"2 4\""},
        {"legendre", "#ff7f0e", "1.6", " stroke-dasharray=\"11 5\""},
    };

    constexpr double kWidth = 800.0, kHeight = 520.0;
    constexpr double kLeft = 72.0, kRight = 24.0, kTop = 48.0, kBottom = 56.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    const double x_lo = rows.front().rho;
    const double x_hi = rows.back().rho;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -y_lo;
    for (const auto& row : rows) {
        for (const auto& [name, value] : row.value_per_route) {
            if (!(value > 0.0)) continue;
            const double y = std::log10(value);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (!(y_hi > y_lo)) {
        y_lo = (y_lo < y_hi) ? y_lo : -1.0;
        y_hi = y_lo + 2.0;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    const auto x_of = [&](double rho) {
        return kLeft + (rho - x_lo) / (x_hi - x_lo) * plot_w;
    };
    const auto y_of = [&](double y) {
        return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h;
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"520\" "
          "viewBox=\"0 0 800 520\" font-family=\"Helvetica, Arial, sans-serif\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"520\" fill=\"#ffffff\"/>\n"
       << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
       << "log10 of the radial profile I(rho) across evaluation routes, d = " << d
       << "</text>\n";

    // Grid, ticks, labels.
    for (int k = 0; k <= 4; ++k) {
        const double rho = x_lo + (x_hi - x_lo) * k / 4.0;
        const double x = x_of(rho);
        char label[40];
        std::snprintf(label, sizeof label, "%.3g", rho);
        os << "<line x1=\"" << px(x) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(x)
           << "\" y2=\"" << px(kTop + plot_h)
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
           << "<text x=\"" << px(x) << "\" y=\"" << px(kTop + plot_h + 20)
           << "\" text-anchor=\"middle\" font-size=\"12\">" << label << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double y = y_lo + (y_hi - y_lo) * k / 4.0;
        const double ypx = y_of(y);
        char label[40];
        std::snprintf(label, sizeof label, "%.1f", y);
        os << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(ypx) << "\" x2=\""
           << px(kLeft + plot_w) << "\" y2=\"" << px(ypx)
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n"
           << "<text x=\"" << px(kLeft - 8) << "\" y=\"" << px(ypx + 4)
           << "\" text-anchor=\"end\" font-size=\"12\">" << label << "</text>\n";
    }
    os << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\""
       << px(plot_w) << "\" height=\"" << px(plot_h)
       << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
       << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 14)
       << "\" text-anchor=\"middle\" font-size=\"13\">rho</text>\n"
       << "<text transform=\"translate(20," << px(kTop + plot_h / 2)
       << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">log10 I</text>\n";

    // One polyline per route that appears anywhere in the table.
    int legend_slot = 0;
    for (const auto& style : kStyles) {
        std::string points;
        for (const auto& row : rows) {
            const auto it = row.value_per_route.find(style.name);
            if (it == row.value_per_route.end() || !(it->second > 0.0)) continue;
            points += px(x_of(row.rho));
            points += ',';
            points += px(y_of(std::log10(it->second)));
            points += ' ';
        }
        if (points.empty()) continue;
        points.pop_back();
        os << "<polyline fill=\"none\" stroke=\"" << style.color
           << "\" stroke-width=\"" << style.width << "\"" << style.extra
           << " points=\"" << points << "\"/>\n";

        const double ly = kTop + 16.0 + 18.0 * legend_slot;
        const double lx = kLeft + plot_w - 150.0;
        os << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\""
           << px(lx + 28.0) << "\" y2=\"" << px(ly) << "\" stroke=\"" << style.color
           << "\" stroke-width=\"" << style.width << "\"" << style.extra << "/>\n"
           << "<text x=\"" << px(lx + 36.0) << "\" y=\"" << px(ly + 4)
           << "\" font-size=\"12\">" << style.name << "</text>\n";
        ++legend_slot;
    }
    os << "</svg>\n";
}

int cmd_eval(int d, double R, double rho, EvalRoute route, double tol) {
    validate_params({d, R, tol, kQuadratureRhoMin});
    if (!(std::isfinite(rho) && rho > 0.0))
        throw DomainError("eval: rho must be positive and finite");

    const EvalResult result = i_eval(d, rho, route, tol);
    const double scale = normalization_constant(d) / std::pow(R, d - 2);
    std::cout << "I = " << sci17(result.value) << "\n"
              << "H = " << sci17(result.value * scale) << "\n"
              << "route = " << route_name(result.route) << "\n"
              << "est_error = " << sci17(result.est_error) << "\n";
    if (result.route == EvalRoute::LegendreQ)
        std::cout << "imag_residue = " << sci17(result.imag_residue) << "\n";
    return 0;
}

int cmd_table(int d, double R, double rho_min, double rho_max, int steps,
              const std::string& out_path, double tol) {
    validate_params({d, R, tol, kQuadratureRhoMin});
    if (!(rho_min >= 10.0 * kQuadratureRhoMin))
        throw DomainError("table: --rho-min must be at least 1e-5");
    if (!(rho_max > rho_min))
        throw DomainError("table: --rho-max must exceed --rho-min");
    if (steps < 2) throw DomainError("table: --steps must be at least 2");

    const auto rows = compute_table(d, rho_min, rho_max, steps, tol);
    if (out_path.empty()) {
        write_table_csv(std::cout, rows);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 3;
    }
    write_table_csv(out, rows);
    out.flush();
    if (!out) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return 3;
    }
    return 0;
}

int cmd_verify(int d_min, int d_max, double tol) {
    if (d_min < kMinDim || d_max > kMaxDim || d_min > d_max)
        throw DomainError("verify: --dims range must lie inside 2..12");
    if (!(tol > 0.0)) throw DomainError("verify: --tol must be positive");

    static constexpr double kRadii[] = {0.5, 1.0, 2.0};
    std::vector<std::string> failing;
    std::cout << "check,d,R,max_residual,tolerance,pass\n";
    for (int d = d_min; d <= d_max; ++d) {
        for (double R : kRadii) {
            for (const auto& report : run_all_checks(d, R, tol)) {
                const std::string line = report_line(report);
                std::cout << line << "\n";
                if (!report.pass) failing.push_back(line);
            }
        }
    }
    if (failing.empty()) return 0;
    std::cout << "FAILED checks:\n";
    for (const auto& line : failing) std::cout << line << "\n";
    return 1;
}

int cmd_plot(int d, const std::string& out_path, double tol) {
    validate_params({d, 1.0, tol, kQuadratureRhoMin});
    const auto rows = compute_table(d, 0.05, 10.0, 40, tol);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 3;
    }
    write_plot_svg(out, d, rows);
    out.flush();
    if (!out) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return 3;
    }
    return 0;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Fundamental solution of the Laplacian on the d-dimensional "
                 "hyperboloid of radius R"};
    app.require_subcommand(1);

    int dim = 0;
    double radius = 1.0;
    double rho = 0.0;
    std::string method = "auto";
    double tol = kDefaultTol;
    double rho_min = 0.05;
    double rho_max = 10.0;
    int steps = 40;
    std::string out_path;
    std::string dims = "2..9";
    double verify_tol = 1e-6;

    const char* kDimHelp = "Dimension d of the hyperboloid";
    const char* kTolHelp = "Relative tolerance for route evaluation";

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate the kernel at one point");
    eval_cmd->add_option("--dim", dim, kDimHelp)
        ->required()
        ->check(CLI::Range(kMinDim, kMaxDim));
    eval_cmd->add_option("--radius", radius, "Radius R of the hyperboloid")
        ->capture_default_str();
    eval_cmd->add_option("--rho", rho, "Scaled geodesic separation distance/R")
        ->required();
    eval_cmd
        ->add_option("--method", method,
                     "Route: quadrature, sum, hyp, hyp_euler, legendre, auto")
        ->capture_default_str();
    eval_cmd->add_option("--tol", tol, kTolHelp)
        ->envname("HYPERLAP_TOL")
        ->capture_default_str();

    CLI::App* table_cmd =
        app.add_subcommand("table", "Cross-route comparison table as CSV");
    table_cmd->add_option("--dim", dim, kDimHelp)
        ->required()
        ->check(CLI::Range(kMinDim, kMaxDim));
    table_cmd->add_option("--radius", radius, "Radius R (the profile I ignores it)")
        ->capture_default_str();
    table_cmd->add_option("--rho-min", rho_min, "Smallest rho")->capture_default_str();
    table_cmd->add_option("--rho-max", rho_max, "Largest rho")->capture_default_str();
    table_cmd->add_option("--steps", steps, "Number of log-spaced grid points")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    table_cmd->add_option("--tol", tol, kTolHelp)
        ->envname("HYPERLAP_TOL")
        ->capture_default_str();
    table_cmd->add_option("--out", out_path, "Output file (stdout when absent)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_option("--dims", dims, "Dimension range A..B")
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify_tol, "Tolerance for the checks")
        ->envname("HYPERLAP_TOL")
        ->capture_default_str();

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "SVG chart of the radial profile");
    plot_cmd->add_option("--dim", dim, kDimHelp)
        ->required()
        ->check(CLI::Range(kMinDim, kMaxDim));
    plot_cmd->add_option("--out", out_path, "Output SVG file")->required();
    plot_cmd->add_option("--tol", tol, kTolHelp)
        ->envname("HYPERLAP_TOL")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed())
            return cmd_eval(dim, radius, rho, route_from_name(method), tol);
        if (table_cmd->parsed())
            return cmd_table(dim, radius, rho_min, rho_max, steps, out_path, tol);
        if (verify_cmd->parsed()) {
            const auto [d_min, d_max] = parse_dims(dims);
            return cmd_verify(d_min, d_max, verify_tol);
        }
        if (plot_cmd->parsed()) return cmd_plot(dim, out_path, tol);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hyperlap
