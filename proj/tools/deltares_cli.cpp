// Command-line front end: resonances, bound certification and figure data.

#include "deltares/errors.hpp"
#include "deltares/figures.hpp"
#include "deltares/lambert_w.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace deltares;

namespace {

struct Common {
  double h = 0.1;
  double alpha = 0.7;
  double eps = 0.3;
  std::vector<double> window;
  std::vector<int> grid;
  Format format = Format::csv;
  std::string out;
};

void add_params(CLI::App* cmd, Common& c) {
  cmd->add_option("--h", c.h, "semiclassical parameter h > 0");
  cmd->add_option("--alpha", c.alpha, "barrier exponent alpha > 0");
  cmd->add_option("--eps", c.eps, "annulus parameter, 0 < eps < 1");
}

void add_output(CLI::App* cmd, Common& c) {
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  cmd->add_option("--format", c.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--out", c.out, "output path (default stdout)");
}

ModelParams params_of(const Common& c) {
  ModelParams p{c.h, c.alpha, c.eps};
  p.validate();
  return p;
}

// Runs body with an output stream bound to --out or stdout.
template <typename Body>
int with_output(const std::string& path, Body body) {
  if (path.empty()) return body(std::cout);
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  return body(os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonances of the half-line delta barrier via multi-branch Lambert W"};
  // --h is the semiclassical parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  Common c;

  auto* compute = app.add_subcommand("compute", "compute resonances for all branches in the widened range");
  add_params(compute, c);
  add_output(compute, c);
  bool annulus_only = false;
  compute->add_flag("--annulus-only", annulus_only, "keep only in-annulus resonances");

  auto* verify = app.add_subcommand("verify", "certify the width bounds for in-annulus resonances");
  add_params(verify, c);
  add_output(verify, c);

  auto* figure = app.add_subcommand("figure", "write contour, resonance and approximation-curve data for a figure");
  int figure_id = 1;
  figure->add_option("--id", figure_id, "figure number")->check(CLI::Range(1, 3));
  std::optional<double> fh, falpha, feps;
  figure->add_option("--h", fh, "override h");
  figure->add_option("--alpha", falpha, "override alpha");
  figure->add_option("--eps", feps, "override eps");
  figure->add_option("--window", c.window, "re_min,re_max,im_min,im_max")->delimiter(',')->expected(4);
  figure->add_option("--grid", c.grid, "nx,ny")->delimiter(',')->expected(2);
  std::string out_dir = ".";
  figure->add_option("--out", out_dir, "output directory");

  auto* wdump = app.add_subcommand("wdump", "dump Lambert W branch values for (h, alpha)");
  add_params(wdump, c);
  std::optional<long> k_min, k_max;
  wdump->add_option("--k-min", k_min, "first branch (default: -k_max of the branch range)");
  wdump->add_option("--k-max", k_max, "last branch (default: k_max of the branch range)");
  wdump->add_option("--out", c.out, "output path (default stdout)");

  auto* coeffs = app.add_subcommand("coeffs", "dump the series coefficient triangle c_{j,m}");
  int max_weight = 10;
  coeffs->add_option("--max-weight", max_weight, "largest j + m")->check(CLI::Range(1, 128));
  coeffs->add_option("--out", c.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArguments;
  }

  try {
    if (*compute) {
      const ModelParams p = params_of(c);
      const auto rows = annulus_only ? annulus_resonances(p) : scan_resonances(p);
      return with_output(c.out, [&](std::ostream& os) {
        write_resonances(os, p, rows, c.format);
        return int(kPass);
      });
    }
    if (*verify) {
      const ModelParams p = params_of(c);
      return with_output(c.out, [&](std::ostream& os) { return run_verify(p, os, c.format); });
    }
    if (*figure) {
      FigureOverrides ov{fh, falpha, feps, std::nullopt};
      if (!c.window.empty() || !c.grid.empty()) {
        Window w = figure_defaults(figure_id).window;
        if (!c.window.empty()) {
          w.re_min = c.window[0];
          w.re_max = c.window[1];
          w.im_min = c.window[2];
          w.im_max = c.window[3];
        }
        if (!c.grid.empty()) {
          w.nx = c.grid[0];
          w.ny = c.grid[1];
        }
        ov.window = w;
      }
      const FigureResult r = figure_data(figure_id, ov, out_dir);
      std::cerr << "figure " << figure_id << ": " << r.contours.intersections.size() << " intersections, "
                << r.resonances.size() << " branch resonances, max distance "
                << format_double(r.match.max_distance) << (r.match.complete ? " (matched)" : " (MISMATCH)")
                << '\n';
      for (const auto& f : r.files) std::cerr << "  wrote " << f.string() << '\n';
      return r.match.complete ? kPass : kNumericalFailure;
    }
    if (*wdump) {
      const ModelParams p = params_of(c);
      long lo = 0, hi = 0;
      if (!k_min || !k_max) {
        const BranchRange range = branch_range(p);
        lo = -range.k_max;
        hi = range.k_max;
      }
      if (k_min) lo = *k_min;
      if (k_max) hi = *k_max;
      return with_output(c.out, [&](std::ostream& os) {
        write_branch_values(os, p, lo, hi);
        return int(kPass);
      });
    }
    if (*coeffs) {
      return with_output(c.out, [&](std::ostream& os) {
        write_coefficients(os, max_weight);
        return int(kPass);
      });
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInvalidArguments;
}
