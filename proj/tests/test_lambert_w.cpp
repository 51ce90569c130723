#include "deltares/errors.hpp"
#include "deltares/lambert_w.hpp"
#include "deltares/resonance.hpp"

#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <random>

using namespace deltares;

namespace {

double log_form_residual(const LogArgument& arg, cplx w, long winding) {
  return std::abs(log_residual(arg, w, winding));
}

}  // namespace

TEST_CASE("LogArgument") {
  const auto arg = LogArgument::from_params(0.1, 2.0);
  CHECK(arg.provenance() == LogArgument::Provenance::from_params);
  CHECK(arg.log_y() == doctest::Approx(100.0 + std::log(100.0)).epsilon(1e-15));
  // alpha ln(1/h) form agrees to rounding.
  const auto a2 = LogArgument::from_params(0.02, 0.7);
  const double alt = std::pow(0.02, -0.7) + 0.7 * std::log(1.0 / 0.02);
  CHECK(std::abs(a2.log_y() - alt) <= 4 * std::numeric_limits<double>::epsilon() * alt);

  CHECK(LogArgument::from_log(1.0).log_y() == 1.0);
  CHECK_THROWS_AS(LogArgument::from_log(0.5), DomainError);
  CHECK_THROWS_AS(LogArgument::from_params(-0.1, 1.0), DomainError);
  CHECK_THROWS_AS(LogArgument::from_params(2.0, 1.0), DomainError);
}

TEST_CASE("W_0(e) = 1 via Halley") {
  const auto arg = LogArgument::from_log(1.0);
  CHECK(std::abs(w_halley(arg, 0, cplx(1.2)) - 1.0) < 1e-13);
  CHECK(std::abs(w_halley(arg, 0) - 1.0) < 1e-13);
}

TEST_CASE("k = 0 at y = h^-alpha e^{h^-alpha} recovers h^-alpha") {
  const auto arg = LogArgument::from_params(0.1, 2.0);
  const BranchValue bv = w_series(arg, 0);
  CHECK(std::abs(bv.w - 100.0) <= 1e-12 * 100.0);
  CHECK(std::abs(w_halley(arg, 0) - 100.0) <= 1e-13 * 100.0);
}

TEST_CASE("series value at (h=0.1, alpha=0.7, k=5)") {
  const auto arg = LogArgument::from_params(0.1, 0.7);
  const BranchValue bv = w_series(arg, 5);
  CHECK(bv.winding == 5);
  CHECK(log_form_residual(arg, bv.w, bv.winding) < 1e-10);
  // mpmath lambertw at 40 digits.
  const cplx ref(3.218340553108682299, 29.952168869020906714);
  CHECK(std::abs(bv.w - ref) <= bv.tail_bound + 1e-12);
  CHECK(bv.terms_used == std::pair<int, int>{39, 40});
}

TEST_CASE("series and Halley agree") {
  const auto arg = LogArgument::from_params(0.1, 0.7);
  const BranchValue bv = w_series(arg, 7);
  const cplx wh = w_halley(arg, 7);
  CHECK(std::abs(bv.w - wh) <= bv.tail_bound + 1e-12);
  const cplx ref(2.872390705623548228, 42.47901709450734072);
  CHECK(std::abs(wh - ref) < 1e-12);
}

TEST_CASE("functional equation and oracle agreement over a parameter grid") {
  for (double h : {0.1, 0.05, 0.02, 0.01}) {
    for (double alpha : {0.5, 0.7, 1.0, 1.5, 2.0}) {
      const auto arg = LogArgument::from_params(h, alpha);
      const BranchRange range = branch_range({h, alpha, 0.3});
      for (long k = -range.k_max; k <= range.k_max; k += std::max(1L, range.k_max / 7)) {
        CAPTURE(h);
        CAPTURE(alpha);
        CAPTURE(k);
        const BranchValue bv = w_series(arg, k);
        CHECK(series_ratio(arg.log_y(), k) <= 0.5);
        CHECK(log_form_residual(arg, bv.w, bv.winding) <= 1e-10 * (1.0 + std::abs(bv.w)));
        const cplx wh = w_halley(arg, k);
        CHECK(log_form_residual(arg, wh, winding_of(wh)) <= 1e-13 * (1.0 + std::abs(wh)));
        // Allow a few ulps of |w|, which exceed 1e-12 once |w| is in the thousands.
        CHECK(std::abs(bv.w - wh) <= bv.tail_bound + 1e-12 + 4.0 * DBL_EPSILON * std::abs(wh));
      }
    }
  }
}

TEST_CASE("conjugate symmetry across branches") {
  const auto arg = LogArgument::from_params(0.05, 1.5);
  for (long k = 1; k <= 40; ++k) {
    const BranchValue plus = w_series(arg, k);
    const BranchValue minus = w_series(arg, -k);
    CHECK(std::abs(minus.w - std::conj(plus.w)) <= 2.0 * (plus.tail_bound + minus.tail_bound) + 1e-15 * std::abs(plus.w));
    CHECK(minus.winding == -plus.winding);
  }
}

TEST_CASE("tail bound is non-increasing in L") {
  for (long k : {1L, 3L, 10L, -25L}) {
    double previous = std::numeric_limits<double>::infinity();
    for (double L = 1.0; L <= 400.0; L *= 1.07) {
      const BranchValue bv = w_series(LogArgument::from_log(L), k);
      CAPTURE(k);
      CAPTURE(L);
      CHECK(bv.tail_bound <= previous);
      previous = bv.tail_bound;
    }
  }
}

TEST_CASE("remainder magnitude within the series regime") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> L_dist(1.0, 1000.0);
  std::uniform_int_distribution<long> k_dist(-500, 500);
  for (int trial = 0; trial < 300; ++trial) {
    const double L = L_dist(rng);
    const long k = k_dist(rng);
    if (series_ratio(L, k) > 0.5) continue;
    const BranchValue bv = w_series(LogArgument::from_log(L), k);
    CAPTURE(L);
    CAPTURE(k);
    CHECK(std::abs(bv.remainder) <= 1.0);
    CHECK(bv.tail_bound >= 0.0);
  }
}

TEST_CASE("tail estimate examples") {
  CHECK(remainder_tail_check(LogArgument::from_params(0.05, 2.0), 1).ok);
  CHECK(remainder_tail_check(LogArgument::from_params(0.02, 0.5), 10).ok);
  const ModelParams p{0.05, 1.5, 0.3};
  const BranchRange range = branch_range(p);
  for (long k = range.k_min; k <= range.k_max; ++k) {
    CHECK(remainder_tail_check(p.log_argument(), k).ok);
    CHECK(remainder_tail_check(p.log_argument(), -k).ok);
  }
}

TEST_CASE("regime ratio") {
  CHECK(series_ratio(0.5, 0) > 0.5);
  CHECK(series_ratio(1.0, 0) == 0.0);
  CHECK(series_ratio(std::exp(1.0), 0) == doctest::Approx(std::exp(-1.0)));
  // L = 1, k = 0 sits on the boundary of the log domain; the series degenerates to w = 1.
  CHECK(w_series(LogArgument::from_log(1.0), 0).w == cplx(1.0));
}

TEST_CASE("Halley error paths") {
  const auto arg = LogArgument::from_params(0.1, 0.7);
  // Seeded in the basin of W_3 but asked for W_1.
  CHECK_THROWS_AS(w_halley(arg, 1, default_seed(arg, 3)), BranchJumpError);

  HalleyOptions one_step;
  one_step.max_iterations = 1;
  try {
    w_halley(arg, 2, cplx(50.0, 3.0), one_step);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_residual() > 0.0);
  }
  CHECK_THROWS_AS(w_halley(arg, 0, cplx(0.0)), DomainError);
}
