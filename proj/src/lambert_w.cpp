#include "deltares/lambert_w.hpp"

#include "deltares/errors.hpp"
#include "deltares/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace deltares {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool in_branch_strip(long k, double im_w) {
  const double pi = std::numbers::pi;
  if (k == 0) return std::abs(im_w) < pi;
  const double lo = (2.0 * static_cast<double>(std::labs(k)) - 2.0) * pi;
  const double hi = (2.0 * static_cast<double>(std::labs(k)) + 1.0) * pi;
  const double v = k > 0 ? im_w : -im_w;
  return v > lo && v < hi;
}

}  // namespace

LogArgument LogArgument::from_log(double L) {
  if (!(L >= 1.0) || !std::isfinite(L)) {
    throw DomainError("LogArgument: ln y must be finite and >= 1, got " + std::to_string(L));
  }
  return LogArgument(L, Provenance::explicit_y, 0.0, 0.0);
}

LogArgument LogArgument::from_params(double h, double alpha) {
  if (!(h > 0.0) || !(alpha > 0.0) || !std::isfinite(h) || !std::isfinite(alpha)) {
    throw DomainError("LogArgument: need h > 0 and alpha > 0");
  }
  const double barrier = std::pow(h, -alpha);
  const double L = barrier + std::log(barrier);
  if (!(L >= 1.0) || !std::isfinite(L)) {
    throw DomainError("LogArgument: h^{-alpha} + ln h^{-alpha} must be finite and >= 1 (needs h <= 1)");
  }
  return LogArgument(L, Provenance::from_params, h, alpha);
}

cplx LogArgument::shifted(long k) const noexcept {
  return {L_, kTwoPi * static_cast<double>(k)};
}

double series_ratio(double L, long k) {
  const cplx a(L, kTwoPi * static_cast<double>(k));
  return std::abs(std::log(a) / a);
}

BranchValue w_series(const LogArgument& arg, long k, const TruncationPolicy& policy) {
  const cplx a = arg.shifted(k);
  const cplx log_a = std::log(a);
  const cplx tau = log_a / a;
  const cplx sigma = 1.0 / a;
  const double ratio = std::abs(tau);
  if (ratio > 0.5) {
    throw DomainError("w_series: |ln(a)/a| = " + std::to_string(ratio) +
                      " > 1/2 for k = " + std::to_string(k) + "; outside the series regime");
  }

  const CoefficientTable& coeff = default_coefficient_table();
  const int tail_weight = std::min(policy.tail_weight, coeff.max_weight());
  const int max_weight = std::clamp(policy.max_weight, 1, tail_weight);

  BranchValue out;
  out.k = k;

  if (tau == cplx(0.0)) {
    // L = 1, k = 0: every term carries a factor ln(a) = 0.
    out.w = a;
    out.winding = winding_of(out.w);
    return out;
  }

  std::vector<cplx> tau_pow(tail_weight + 1), sigma_pow(tail_weight + 1);
  std::vector<double> tau_abs(tail_weight + 1), sigma_abs(tail_weight + 1);
  tau_pow[0] = sigma_pow[0] = 1.0;
  tau_abs[0] = sigma_abs[0] = 1.0;
  for (int i = 1; i <= tail_weight; ++i) {
    tau_pow[i] = tau_pow[i - 1] * tau;
    sigma_pow[i] = sigma_pow[i - 1] * sigma;
    tau_abs[i] = tau_abs[i - 1] * std::abs(tau);
    sigma_abs[i] = sigma_abs[i - 1] * std::abs(sigma);
  }

  cplx partial = 0.0;
  for (int n = 1; n <= max_weight; ++n) {
    cplx layer = 0.0;
    for (int m = 1; m <= n; ++m) {
      layer += coeff(n - m, m) * tau_pow[m] * sigma_pow[n - m];
    }
    partial += layer;
  }
  out.remainder = partial;
  out.terms_used = {max_weight - 1, max_weight};

  // Omitted layers: exact absolute sums while the table lasts, then the
  // majorant |c_{j,m}| <= C(n-1, m-1)^2 / m, which bounds layer n by
  // |tau| q^{n-1} with q = (sqrt|tau| + sqrt|sigma|)^2.
  double tail = 0.0;
  double last_layer = 0.0;
  double prev_layer = 0.0;
  for (int n = max_weight + 1; n <= tail_weight; ++n) {
    double layer = 0.0;
    for (int m = 1; m <= n; ++m) {
      layer += std::abs(coeff(n - m, m)) * tau_abs[m] * sigma_abs[n - m];
    }
    tail += layer;
    prev_layer = last_layer;
    last_layer = layer;
  }
  const double q = std::pow(std::sqrt(std::abs(tau)) + std::sqrt(std::abs(sigma)), 2);
  if (q < 1.0) {
    tail += std::abs(tau) * std::pow(q, tail_weight) / (1.0 - q);
  } else {
    if (prev_layer > 0.0 && !(last_layer < prev_layer)) {
      throw ConvergenceError("w_series: remainder layers do not decrease for k = " + std::to_string(k),
                             last_layer);
    }
    // Layers still shrink, but nothing certifies the rest.
    tail = std::numeric_limits<double>::infinity();
  }
  out.tail_bound = tail;

  out.w = a - log_a + partial;
  out.winding = winding_of(out.w);
  return out;
}

cplx default_seed(const LogArgument& arg, long k) {
  const cplx a = arg.shifted(k);
  const cplx log_a = std::log(a);
  return a - log_a + log_a / a;
}

long winding_of(cplx w) {
  return std::lround((w.imag() + std::arg(w)) / kTwoPi);
}

cplx log_residual(const LogArgument& arg, cplx w, long winding) {
  return w + std::log(w) - arg.shifted(winding);
}

cplx w_halley(const LogArgument& arg, long k, cplx seed, const HalleyOptions& options) {
  if (seed == cplx(0.0)) throw DomainError("w_halley: zero seed");
  const long winding = winding_of(seed);
  const cplx target = arg.shifted(winding);

  cplx w = seed;
  double residual = 0.0;
  for (int it = 0; it <= options.max_iterations; ++it) {
    const cplx g = w + std::log(w) - target;
    residual = std::abs(g);
    if (residual <= options.tolerance * (1.0 + std::abs(w))) {
      // One polishing step, kept only if it helps.
      const cplx inv = 1.0 / w;
      const cplx d1 = 1.0 + inv;
      const cplx polished = w - 2.0 * g * d1 / (2.0 * d1 * d1 + g * inv * inv);
      if (std::abs(polished + std::log(polished) - target) < residual) w = polished;
      if (!in_branch_strip(k, w.imag())) {
        throw BranchJumpError("w_halley: converged to Im w = " + std::to_string(w.imag()) +
                              ", outside the strip of branch " + std::to_string(k));
      }
      return w;
    }
    if (it == options.max_iterations) break;
    const cplx inv = 1.0 / w;
    const cplx d1 = 1.0 + inv;
    const cplx d2 = -inv * inv;
    w -= 2.0 * g * d1 / (2.0 * d1 * d1 - g * d2);
    if (w == cplx(0.0) || !std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw ConvergenceError("w_halley: iterate left the domain of ln", residual);
    }
  }
  throw ConvergenceError("w_halley: no convergence in " + std::to_string(options.max_iterations) +
                             " iterations, last residual " + std::to_string(residual),
                         residual);
}

cplx w_halley(const LogArgument& arg, long k, const HalleyOptions& options) {
  return w_halley(arg, k, default_seed(arg, k), options);
}

TailCheck remainder_tail_check(const LogArgument& arg, long k, const TruncationPolicy& policy) {
  const BranchValue bv = w_series(arg, k, policy);
  const cplx a = arg.shifted(k);
  const cplx tau = std::log(a) / a;
  TailCheck out;
  out.lhs = std::abs(bv.remainder - tau);
  out.rhs = 2.0 * std::norm(tau);
  out.tail_bound = bv.tail_bound;
  out.ok = out.lhs <= out.rhs + out.tail_bound;
  return out;
}

}  // namespace deltares
