#pragma once

#include "deltares/lambert_w.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace deltares {

/// Parameters of -h^2 d^2/dx^2 + h^{2-alpha} delta_1 on the half line and the
/// annulus eps <= |z| <= 1/eps.
struct ModelParams {
  double h = 0.1;
  double alpha = 0.7;
  double eps = 0.3;

  /// Throws DomainError unless h > 0, alpha > 0 and 0 < eps < 1.
  void validate() const;
  double barrier() const { return std::pow(h, -alpha); }
  LogArgument log_argument() const { return LogArgument::from_params(h, alpha); }
};

struct Resonance {
  long k = 0;
  cplx z_series;
  cplx z_refined;
  double residual_series = 0.0;
  double residual_refined = 0.0;
  bool in_annulus = false;
  /// Tail bound of the Lambert W value behind z_series (0 on the Halley fallback).
  double tail_bound = 0.0;
};

struct ResonantState {
  cplx z;
  cplx matching_constant;
  std::vector<double> xs;
  std::vector<cplx> us;
  /// |sin(z/h) - C e^{iz/h}|
  double continuity_residual = 0.0;
  /// |u'(1-) - u'(1+) + h^{-alpha} u(1)|
  double jump_residual = 0.0;
};

/// Inclusive range of |k|.
struct BranchRange {
  long k_min = 1;
  long k_max = 0;
};

/// F(z) = h^{-alpha} e^{2iz/h} - h^{-alpha} + 2iz/h.
/// Throws OverflowError when |Im z| / h > 300.
cplx residual(const ModelParams& params, cplx z);

/// h^{-alpha} + 2|z|/h, the magnitude scale of the terms of F.
double residual_scale(const ModelParams& params, cplx z);

/// ceil(eps / (2 pi h)) <= |k| <= floor(2 / (eps pi h)), never including 0.
/// Throws DomainError when the range is empty.
BranchRange branch_range(const ModelParams& params);

/// branch_range widened by a factor 2 on both ends.
BranchRange widened_branch_range(const ModelParams& params);

struct NewtonOptions {
  int max_iterations = 50;
  /// Relative to residual_scale.
  double tolerance = 1e-10;
};

cplx newton_refine(const ModelParams& params, cplx z0, const NewtonOptions& options = {});

/// z_k = (ih/2)(2 pi i k + ln h^{-alpha} - ln(L + 2 pi i k) + R_k), refined by Newton.
/// The policy controls the truncation of the remainder series behind z_series.
Resonance resonance_from_branch(const ModelParams& params, long k, const TruncationPolicy& policy = {});

/// All branches in the widened range of both signs, ordered by k.
std::vector<Resonance> scan_resonances(const ModelParams& params);

/// The in-annulus subset of scan_resonances.
std::vector<Resonance> annulus_resonances(const ModelParams& params);

ResonantState resonant_state(const ModelParams& params, cplx z, std::span<const double> xs);

/// 512 uniform samples on [0, x_max].
std::vector<double> default_state_grid(double x_max = 3.0, int samples = 512);

}  // namespace deltares
