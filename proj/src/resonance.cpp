#include "deltares/resonance.hpp"

#include "deltares/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace deltares {

namespace {

constexpr double kExponentGuard = 300.0;
constexpr cplx kI(0.0, 1.0);

void guard_exponent(double im_z, double h, const char* who) {
  if (!(std::abs(im_z) / h <= kExponentGuard)) {
    throw OverflowError(std::string(who) + ": |Im z|/h = " + std::to_string(std::abs(im_z) / h) +
                        " exceeds the exponent guard 300");
  }
}

}  // namespace

void ModelParams::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("h must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
}

cplx residual(const ModelParams& params, cplx z) {
  guard_exponent(z.imag(), params.h, "residual");
  const double b = params.barrier();
  const cplx phase = 2.0 * kI * z / params.h;
  return b * std::exp(phase) - b + phase;
}

double residual_scale(const ModelParams& params, cplx z) {
  return params.barrier() + 2.0 * std::abs(z) / params.h;
}

BranchRange branch_range(const ModelParams& params) {
  params.validate();
  const double pi = std::numbers::pi;
  BranchRange r;
  r.k_min = std::max(1L, static_cast<long>(std::ceil(params.eps / (2.0 * pi * params.h))));
  r.k_max = static_cast<long>(std::floor(2.0 / (params.eps * pi * params.h)));
  if (r.k_min > r.k_max) {
    throw DomainError("branch_range: empty for h = " + std::to_string(params.h) +
                      ", eps = " + std::to_string(params.eps));
  }
  return r;
}

BranchRange widened_branch_range(const ModelParams& params) {
  params.validate();
  const double pi = std::numbers::pi;
  BranchRange r;
  r.k_min = std::max(1L, static_cast<long>(std::floor(params.eps / (4.0 * pi * params.h))));
  r.k_max = std::max(r.k_min, static_cast<long>(std::ceil(4.0 / (params.eps * pi * params.h))));
  return r;
}

cplx newton_refine(const ModelParams& params, cplx z0, const NewtonOptions& options) {
  const double b = params.barrier();
  const double h = params.h;
  cplx z = z0;
  double res = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    const cplx f = residual(params, z);
    res = std::abs(f);
    if (res <= options.tolerance * residual_scale(params, z)) {
      // Polish while it still helps.
      for (int extra = 0; extra < 2; ++extra) {
        const cplx e = std::exp(2.0 * kI * z / h);
        const cplx next = z - f / ((2.0 * kI / h) * (b * e + 1.0));
        if (!(std::abs(residual(params, next)) < res)) break;
        res = std::abs(residual(params, next));
        z = next;
      }
      return z;
    }
    const cplx e = std::exp(2.0 * kI * z / h);
    const cplx df = (2.0 * kI / h) * (b * e + 1.0);
    if (std::abs(df) <= 1e-14 * (2.0 / h) * (b * std::abs(e) + 1.0)) {
      throw ConvergenceError("newton_refine: derivative near zero at z = (" + std::to_string(z.real()) +
                                 ", " + std::to_string(z.imag()) + ")",
                             res);
    }
    z -= f / df;
  }
  throw ConvergenceError("newton_refine: no convergence in " + std::to_string(options.max_iterations) +
                             " iterations, last |F| = " + std::to_string(res),
                         res);
}

Resonance resonance_from_branch(const ModelParams& params, long k, const TruncationPolicy& policy) {
  params.validate();
  if (k == 0) throw DomainError("resonance_from_branch: k = 0 gives z = 0, which is not a resonance");
  const LogArgument arg = params.log_argument();
  const cplx a = arg.shifted(k);
  const cplx log_a = std::log(a);

  Resonance out;
  out.k = k;
  cplx remainder;
  if (series_ratio(arg.log_y(), k) <= 0.5) {
    const BranchValue bv = w_series(arg, k, policy);
    remainder = bv.remainder;
    out.tail_bound = bv.tail_bound;
  } else {
    remainder = w_halley(arg, k) - a + log_a;
  }
  // W_k - h^{-alpha} with the two large terms cancelled analytically.
  const double log_barrier = std::log(params.barrier());
  const cplx shifted_w = cplx(log_barrier, 2.0 * std::numbers::pi * static_cast<double>(k)) - log_a + remainder;
  out.z_series = 0.5 * kI * params.h * shifted_w;
  out.residual_series = std::abs(residual(params, out.z_series));
  out.z_refined = newton_refine(params, out.z_series);
  out.residual_refined = std::abs(residual(params, out.z_refined));
  const double modulus = std::abs(out.z_refined);
  out.in_annulus = params.eps <= modulus && modulus <= 1.0 / params.eps;
  return out;
}

std::vector<Resonance> scan_resonances(const ModelParams& params) {
  const BranchRange range = widened_branch_range(params);
  std::vector<Resonance> out;
  out.reserve(static_cast<std::size_t>(2 * (range.k_max - range.k_min + 1)));
  for (long k = -range.k_max; k <= -range.k_min; ++k) out.push_back(resonance_from_branch(params, k));
  for (long k = range.k_min; k <= range.k_max; ++k) out.push_back(resonance_from_branch(params, k));
  return out;
}

std::vector<Resonance> annulus_resonances(const ModelParams& params) {
  std::vector<Resonance> out;
  for (auto& r : scan_resonances(params)) {
    if (r.in_annulus) out.push_back(r);
  }
  return out;
}

ResonantState resonant_state(const ModelParams& params, cplx z, std::span<const double> xs) {
  const double h = params.h;
  ResonantState st;
  st.z = z;
  double x_max = 1.0;
  for (double x : xs) {
    if (x < 0.0) throw DomainError("resonant_state: sample points must be nonnegative");
    x_max = std::max(x_max, x);
  }
  guard_exponent(z.imag() * x_max, h, "resonant_state");

  const cplx s1 = std::sin(z / h);
  const cplx e1 = std::exp(kI * z / h);
  st.matching_constant = s1 * std::exp(-kI * z / h);
  const cplx& c = st.matching_constant;

  st.xs.assign(xs.begin(), xs.end());
  st.us.reserve(xs.size());
  for (double x : xs) {
    st.us.push_back(x <= 1.0 ? std::sin(z * x / h) : c * std::exp(kI * z * x / h));
  }
  st.continuity_residual = std::abs(s1 - c * e1);
  const cplx left = (z / h) * std::cos(z / h);
  const cplx right = (kI * z / h) * c * e1;
  st.jump_residual = std::abs(left - right + params.barrier() * s1);
  return st;
}

std::vector<double> default_state_grid(double x_max, int samples) {
  std::vector<double> xs(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) xs[i] = x_max * i / (samples - 1);
  return xs;
}

}  // namespace deltares
