#include "deltares/figures.hpp"

#include "deltares/errors.hpp"
#include "deltares/stirling.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace deltares {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

const char* to_bool(bool b) { return b ? "true" : "false"; }

json params_header(const ModelParams& p) {
  return {{"h", p.h}, {"alpha", p.alpha}, {"eps", p.eps}, {"regime", std::string(to_string(regime_of(p.alpha)))}};
}

std::vector<Resonance> by_k(std::span<const Resonance> rows) {
  std::vector<Resonance> sorted(rows.begin(), rows.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const Resonance& a, const Resonance& b) {
    return a.k < b.k || (a.k == b.k && a.z_refined.real() < b.z_refined.real());
  });
  return sorted;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

void write_resonances(std::ostream& os, const ModelParams& params, std::span<const Resonance> rows, Format f) {
  const auto sorted = by_k(rows);
  if (f == Format::json) {
    json doc{{"params", params_header(params)}, {"rows", json::array()}};
    for (const auto& r : sorted) {
      doc["rows"].push_back({{"k", r.k},
                             {"re_z_series", r.z_series.real()},
                             {"im_z_series", r.z_series.imag()},
                             {"re_z_refined", r.z_refined.real()},
                             {"im_z_refined", r.z_refined.imag()},
                             {"residual_refined", r.residual_refined},
                             {"in_annulus", r.in_annulus}});
    }
    os << doc.dump(2) << '\n';
    return;
  }
  os << "k,re_z_series,im_z_series,re_z_refined,im_z_refined,residual_refined,in_annulus\n";
  for (const auto& r : sorted) {
    os << r.k << ',' << format_double(r.z_series.real()) << ',' << format_double(r.z_series.imag()) << ','
       << format_double(r.z_refined.real()) << ',' << format_double(r.z_refined.imag()) << ','
       << format_double(r.residual_refined) << ',' << to_bool(r.in_annulus) << '\n';
  }
}

void write_report(std::ostream& os, const CertifyReport& report, Format f) {
  if (f == Format::json) {
    json doc{{"params", params_header(report.params)}, {"rows", json::array()}};
    for (const auto& row : report.rows) {
      doc["rows"].push_back({{"k", row.k},
                             {"re_z", row.z.real()},
                             {"im_z", row.z.imag()},
                             {"curve", std::string(to_string(row.curve))},
                             {"predicted_width", row.predicted_width},
                             {"deviation", row.deviation},
                             {"bound", finite_or_null(row.bound)},
                             {"pass", std::string(to_string(row.verdict))}});
    }
    doc["violations"] = report.violations;
    os << doc.dump(2) << '\n';
    return;
  }
  os << "k,re_z,im_z,predicted_width,deviation,bound,pass\n";
  for (const auto& row : report.rows) {
    os << row.k << ',' << format_double(row.z.real()) << ',' << format_double(row.z.imag()) << ','
       << format_double(row.predicted_width) << ',' << format_double(row.deviation) << ','
       << format_double(row.bound) << ',' << to_string(row.verdict) << '\n';
  }
}

void write_contours(std::ostream& os, const ContourSet& contours) {
  os << "curve_id,field,point_index,re_z,im_z\n";
  auto emit = [&](const std::vector<Polyline>& lines, const char* field) {
    for (std::size_t c = 0; c < lines.size(); ++c) {
      for (std::size_t p = 0; p < lines[c].size(); ++p) {
        os << c << ',' << field << ',' << p << ',' << format_double(lines[c][p].real()) << ','
           << format_double(lines[c][p].imag()) << '\n';
      }
    }
  };
  emit(contours.real_part_curves, "re");
  emit(contours.imag_part_curves, "im");
}

void write_branch_values(std::ostream& os, const ModelParams& params, long k_min, long k_max) {
  const LogArgument arg = params.log_argument();
  os << "k,re_w,im_w,abs_remainder,tail_bound,max_j,max_m\n";
  for (long k = k_min; k <= k_max; ++k) {
    const BranchValue bv = w_series(arg, k);
    os << k << ',' << format_double(bv.w.real()) << ',' << format_double(bv.w.imag()) << ','
       << format_double(std::abs(bv.remainder)) << ',' << format_double(bv.tail_bound) << ','
       << bv.terms_used.first << ',' << bv.terms_used.second << '\n';
  }
}

void write_coefficients(std::ostream& os, int max_weight) {
  os << "j,m,numerator,denominator,double_value\n";
  for (int n = 1; n <= max_weight; ++n) {
    for (int m = 1; m <= n; ++m) {
      const SeriesCoefficient c = series_coefficient(n - m, m);
      os << c.j << ',' << c.m << ',' << boost::multiprecision::numerator(c.value) << ','
         << boost::multiprecision::denominator(c.value) << ',' << format_double(c.approx) << '\n';
    }
  }
}

std::vector<ApproximationSample> approximation_curves(const ModelParams& params, const Window& window,
                                                      int samples) {
  std::vector<ApproximationSample> out;
  const Regime regime = regime_of(params.alpha);
  const bool want_log = regime != Regime::big_alpha;
  const bool want_quad = regime != Regime::small_alpha;
  const double step = (window.re_max - window.re_min) / (samples - 1);
  if (want_log) {
    for (int i = 0; i < samples; ++i) {
      const double x = window.re_min + i * step;
      if (x == 0.0) continue;
      out.push_back({Curve::log_width, x, width_small_alpha(params, x)});
    }
  }
  if (want_quad) {
    for (int i = 0; i < samples; ++i) {
      const double x = window.re_min + i * step;
      out.push_back({Curve::quad_width, x, width_big_alpha(params, x)});
    }
  }
  return out;
}

void write_curves(std::ostream& os, std::span<const ApproximationSample> samples) {
  os << "curve_id,re_z,neg_im_z\n";
  for (const auto& s : samples) {
    os << to_string(s.curve) << ',' << format_double(s.re_z) << ',' << format_double(s.neg_im_z) << '\n';
  }
}

FigureSpec figure_defaults(int id) {
  FigureSpec spec;
  spec.id = id;
  switch (id) {
    case 1: spec.params = {0.1, 0.7, 0.3}; break;
    case 2: spec.params = {0.1, 2.0, 0.3}; break;
    case 3: spec.params = {0.1, 1.0, 0.3}; break;
    default: throw DomainError("figure id must be 1, 2 or 3");
  }
  spec.window.re_min = 0.2;
  spec.window.re_max = 2.0;
  spec.window.im_max = 0.0;
  double widest = 0.0;
  const Regime regime = regime_of(spec.params.alpha);
  if (regime != Regime::big_alpha) widest = std::max(widest, width_small_alpha(spec.params, spec.window.re_max));
  if (regime != Regime::small_alpha) widest = std::max(widest, width_big_alpha(spec.params, spec.window.re_max));
  spec.window.im_min = -4.0 * widest;
  spec.window.nx = 1600;
  spec.window.ny = 800;
  return spec;
}

FigureResult figure_data(int id, const FigureOverrides& overrides, const std::filesystem::path& out_dir) {
  FigureResult result;
  result.spec = figure_defaults(id);
  auto& spec = result.spec;
  if (overrides.h) spec.params.h = *overrides.h;
  if (overrides.alpha) spec.params.alpha = *overrides.alpha;
  if (overrides.eps) spec.params.eps = *overrides.eps;
  if (overrides.window) spec.window = *overrides.window;
  spec.params.validate();
  spec.window.validate();

  result.contours = contour_scan(spec.params, spec.window);
  result.resonances = resonances_in_window(spec.params, spec.window);
  result.match = match_intersections(result.contours.intersections, result.resonances, spec.window.cell_diagonal());

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::string prefix = "figure" + std::to_string(id);
    auto open = [&](const std::string& suffix) {
      const auto path = out_dir / (prefix + suffix);
      std::ofstream os(path);
      if (!os) throw Error("cannot open " + path.string() + " for writing");
      result.files.push_back(path);
      return os;
    };
    {
      auto os = open("_contours.csv");
      write_contours(os, result.contours);
    }
    {
      auto os = open("_resonances.csv");
      write_resonances(os, spec.params, result.resonances, Format::csv);
    }
    {
      auto os = open("_curves.csv");
      const auto curves = approximation_curves(spec.params, spec.window);
      write_curves(os, curves);
    }
  }
  return result;
}

int run_verify(const ModelParams& params, std::ostream& os, Format f) {
  params.validate();
  const auto resonances = annulus_resonances(params);
  const CertifyReport report = certify_bounds(params, resonances);
  write_report(os, report, f);
  return verify_exit_code(report);
}

int verify_exit_code(const CertifyReport& report) {
  if (report.regime == Regime::transitional) return kPass;
  return report.all_pass() ? kPass : kViolation;
}

}  // namespace deltares
