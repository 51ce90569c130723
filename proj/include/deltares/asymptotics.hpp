#pragma once

#include "deltares/resonance.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace deltares {

enum class Regime { small_alpha, big_alpha, transitional };

Regime regime_of(double alpha);
std::string_view to_string(Regime r);

/// Leading-order width -Im z as a function of Re z plus the uniform error
/// bound over the annulus. The transitional regime carries both curves and no bound.
struct WidthApproximation {
  Regime regime;
  ModelParams params;

  double log_width(double re_z) const;   ///< (h/2) ln|2 h^{alpha-1} re_z|
  double quad_width(double re_z) const;  ///< re_z^2 h^{2 alpha - 1}
  double approx_width(double re_z) const;
  std::optional<double> bound() const;
};

WidthApproximation width_approximation(const ModelParams& params);

/// Throws DomainError for re_z = 0.
double width_small_alpha(const ModelParams& params, double re_z);
double width_big_alpha(const ModelParams& params, double re_z);

/// (5/4) h^{3-2 alpha} eps^{-2}
double small_alpha_bound(const ModelParams& params);
/// 7 h^{2 alpha+1} ln^2(h^{-alpha}) + 34 eps^{-4} h^{4 alpha-3}
double big_alpha_bound(const ModelParams& params);

enum class Verdict { pass, fail, not_applicable };
std::string_view to_string(Verdict v);

enum class Curve { log_width, quad_width };
std::string_view to_string(Curve c);

struct CertifyRow {
  long k = 0;
  cplx z;
  Curve curve = Curve::log_width;
  double predicted_width = 0.0;
  /// small_alpha: -Im z - predicted; big_alpha and transitional quad rows: |Im z + predicted|;
  /// transitional log rows: -Im z - predicted.
  double deviation = 0.0;
  /// NaN when no bound applies.
  double bound = 0.0;
  Verdict verdict = Verdict::not_applicable;
  /// Distance to the nearest violated inequality; negative on failure.
  double slack = 0.0;
};

struct CertifyReport {
  ModelParams params;
  Regime regime = Regime::small_alpha;
  std::vector<CertifyRow> rows;
  std::size_t violations = 0;

  bool all_pass() const { return violations == 0; }
};

struct CertifyOptions {
  /// Allowed undershoot of the lower inequality 0 <= deviation (small alpha).
  double lower_slack = 1e-8;
};

/// Checks each in-annulus resonance against the width theorem for the regime.
/// Transitional reports carry two rows per resonance (log then quad) without verdicts.
CertifyReport certify_bounds(const ModelParams& params, std::span<const Resonance> resonances,
                             const CertifyOptions& options = {});

/// Largest h in the grid such that certification passes at it and at every
/// smaller grid value; empty if the smallest grid value already fails.
std::optional<double> empirical_threshold(double alpha, double eps, std::span<const double> h_grid);

/// R = h^{2-2 alpha} / (4 z^2 + h^{2-2 alpha}), reflection by h^{2-alpha} delta_0 on the line.
/// Throws PoleError at 4 z^2 = -h^{2-2 alpha}.
cplx reflection_coefficient(double h, double alpha, cplx z);

}  // namespace deltares
