#include "deltares/asymptotics.hpp"

#include "deltares/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace deltares {

Regime regime_of(double alpha) {
  if (alpha < 1.0) return Regime::small_alpha;
  if (alpha > 1.0) return Regime::big_alpha;
  return Regime::transitional;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::small_alpha: return "small_alpha";
    case Regime::big_alpha: return "big_alpha";
    case Regime::transitional: return "transitional";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "na";
  }
  return "unknown";
}

std::string_view to_string(Curve c) {
  return c == Curve::log_width ? "log_width" : "quad_width";
}

double width_small_alpha(const ModelParams& params, double re_z) {
  if (re_z == 0.0) throw DomainError("width_small_alpha: Re z = 0");
  return 0.5 * params.h * std::log(std::abs(2.0 * std::pow(params.h, params.alpha - 1.0) * re_z));
}

double width_big_alpha(const ModelParams& params, double re_z) {
  return re_z * re_z * std::pow(params.h, 2.0 * params.alpha - 1.0);
}

double small_alpha_bound(const ModelParams& p) {
  return 1.25 * std::pow(p.h, 3.0 - 2.0 * p.alpha) / (p.eps * p.eps);
}

double big_alpha_bound(const ModelParams& p) {
  const double log_barrier = p.alpha * std::log(1.0 / p.h);
  return 7.0 * std::pow(p.h, 2.0 * p.alpha + 1.0) * log_barrier * log_barrier +
         34.0 * std::pow(p.eps, -4.0) * std::pow(p.h, 4.0 * p.alpha - 3.0);
}

double WidthApproximation::log_width(double re_z) const { return width_small_alpha(params, re_z); }
double WidthApproximation::quad_width(double re_z) const { return width_big_alpha(params, re_z); }

double WidthApproximation::approx_width(double re_z) const {
  return regime == Regime::big_alpha ? quad_width(re_z) : log_width(re_z);
}

std::optional<double> WidthApproximation::bound() const {
  switch (regime) {
    case Regime::small_alpha: return small_alpha_bound(params);
    case Regime::big_alpha: return big_alpha_bound(params);
    case Regime::transitional: return std::nullopt;
  }
  return std::nullopt;
}

WidthApproximation width_approximation(const ModelParams& params) {
  return {regime_of(params.alpha), params};
}

CertifyReport certify_bounds(const ModelParams& params, std::span<const Resonance> resonances,
                             const CertifyOptions& options) {
  CertifyReport report;
  report.params = params;
  report.regime = regime_of(params.alpha);
  const WidthApproximation approx = width_approximation(params);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (const Resonance& r : resonances) {
    const cplx z = r.z_refined;
    const double width = -z.imag();
    switch (report.regime) {
      case Regime::small_alpha: {
        CertifyRow row{r.k, z, Curve::log_width};
        row.predicted_width = approx.log_width(z.real());
        row.deviation = width - row.predicted_width;
        row.bound = *approx.bound();
        row.slack = std::min(row.deviation + options.lower_slack, row.bound - row.deviation);
        row.verdict = row.slack >= 0.0 ? Verdict::pass : Verdict::fail;
        report.rows.push_back(row);
        break;
      }
      case Regime::big_alpha: {
        CertifyRow row{r.k, z, Curve::quad_width};
        row.predicted_width = approx.quad_width(z.real());
        row.deviation = std::abs(width - row.predicted_width);
        row.bound = *approx.bound();
        row.slack = row.bound - row.deviation;
        row.verdict = row.slack >= 0.0 ? Verdict::pass : Verdict::fail;
        report.rows.push_back(row);
        break;
      }
      case Regime::transitional: {
        CertifyRow log_row{r.k, z, Curve::log_width};
        log_row.predicted_width = approx.log_width(z.real());
        log_row.deviation = width - log_row.predicted_width;
        log_row.bound = nan;
        log_row.slack = nan;
        CertifyRow quad_row{r.k, z, Curve::quad_width};
        quad_row.predicted_width = approx.quad_width(z.real());
        quad_row.deviation = std::abs(width - quad_row.predicted_width);
        quad_row.bound = nan;
        quad_row.slack = nan;
        report.rows.push_back(log_row);
        report.rows.push_back(quad_row);
        break;
      }
    }
  }
  report.violations = static_cast<std::size_t>(
      std::count_if(report.rows.begin(), report.rows.end(),
                    [](const CertifyRow& row) { return row.verdict == Verdict::fail; }));
  return report;
}

std::optional<double> empirical_threshold(double alpha, double eps, std::span<const double> h_grid) {
  std::vector<double> hs(h_grid.begin(), h_grid.end());
  std::sort(hs.begin(), hs.end());
  std::optional<double> threshold;
  for (double h : hs) {
    const ModelParams p{h, alpha, eps};
    const auto res = annulus_resonances(p);
    if (!certify_bounds(p, res).all_pass()) break;
    threshold = h;
  }
  return threshold;
}

cplx reflection_coefficient(double h, double alpha, cplx z) {
  const double s = std::pow(h, 2.0 - 2.0 * alpha);
  const cplx den = 4.0 * z * z + s;
  if (std::abs(den) <= 1e-14 * (4.0 * std::norm(z) + s)) {
    throw PoleError("reflection_coefficient: 4 z^2 = -h^{2-2 alpha}");
  }
  return s / den;
}

}  // namespace deltares
