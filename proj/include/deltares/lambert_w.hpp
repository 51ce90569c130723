#pragma once

#include <complex>
#include <utility>

namespace deltares {

using cplx = std::complex<double>;

/// ln y for the Lambert W argument y. The argument itself is never formed,
/// since h^{-alpha} e^{h^{-alpha}} overflows double already near h^{-alpha} = 709.
class LogArgument {
 public:
  enum class Provenance { explicit_y, from_params };

  /// Requires L >= 1 (y >= e).
  static LogArgument from_log(double L);
  /// L = h^{-alpha} + alpha ln(1/h).
  static LogArgument from_params(double h, double alpha);

  double log_y() const noexcept { return L_; }
  Provenance provenance() const noexcept { return provenance_; }
  double h() const noexcept { return h_; }
  double alpha() const noexcept { return alpha_; }

  /// L + 2 pi i k
  cplx shifted(long k) const noexcept;

 private:
  LogArgument(double L, Provenance p, double h, double alpha)
      : L_(L), provenance_(p), h_(h), alpha_(alpha) {}

  double L_;
  Provenance provenance_;
  double h_;
  double alpha_;
};

struct TruncationPolicy {
  /// Largest total weight j + m summed into R_k.
  int max_weight = 40;
  /// Layers past max_weight that are summed in absolute value into the tail
  /// bound before the analytic majorant takes over; capped by the table.
  int tail_weight = 127;
};

struct BranchValue {
  long k = 0;
  cplx w;
  /// Partial sum of the remainder series R_k.
  cplx remainder;
  /// Bound on |R_k - remainder|.
  double tail_bound = 0.0;
  /// Largest j and m that entered the partial sum.
  std::pair<int, int> terms_used{0, 0};
  /// Integer k' with w + ln w = L + 2 pi i k'.
  long winding = 0;
};

/// |ln(L + 2 pi i k) / (L + 2 pi i k)|. The series is used only where this is <= 1/2.
double series_ratio(double L, long k);

/// Branch W_k of the Lambert function via the convergent large-argument
/// double series, with a certified bound on the omitted terms.
///
/// Throws DomainError when series_ratio > 1/2 and ConvergenceError when the
/// last tabulated layers stop decreasing. tail_bound is +inf when the layers
/// decrease but the majorant ratio is >= 1 (only near L = 1, small |k|).
BranchValue w_series(const LogArgument& arg, long k, const TruncationPolicy& policy = {});

/// L + 2 pi i k - ln(L + 2 pi i k) + ln(..)/(..)
cplx default_seed(const LogArgument& arg, long k);

/// round((Im w + arg w) / 2 pi)
long winding_of(cplx w);

/// w + ln w - (L + 2 pi i k'), principal log.
cplx log_residual(const LogArgument& arg, cplx w, long winding);

struct HalleyOptions {
  int max_iterations = 50;
  double tolerance = 1e-13;
};

/// Halley iteration on g(w) = w + ln w - (L + 2 pi i k'), with k' fixed from
/// the seed. Converges to |g| <= tolerance (1 + |w|).
///
/// Throws ConvergenceError (carrying the last residual) after max_iterations
/// and BranchJumpError if the result leaves the imaginary strip of branch k.
cplx w_halley(const LogArgument& arg, long k, cplx seed, const HalleyOptions& options = {});
cplx w_halley(const LogArgument& arg, long k, const HalleyOptions& options = {});

struct TailCheck {
  double lhs = 0.0;  ///< |R_k - ln(a)/a|
  double rhs = 0.0;  ///< 2 |ln(a)/a|^2
  double tail_bound = 0.0;
  bool ok = false;
};

TailCheck remainder_tail_check(const LogArgument& arg, long k, const TruncationPolicy& policy = {});

}  // namespace deltares
