#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace deltares {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultStirlingLimit = 128;

/// Unsigned Stirling numbers of the first kind [p, q] (permutations of p
/// objects with exactly q cycles), memoized for 0 <= q <= p <= max_p.
class StirlingTable {
 public:
  explicit StirlingTable(int max_p = kDefaultStirlingLimit);

  int max_p() const noexcept { return max_p_; }

  /// Throws CapacityError when p > max_p. Returns 0 for q > p.
  const BigInt& at(int p, int q) const;

 private:
  std::size_t index(int p, int q) const noexcept {
    return static_cast<std::size_t>(p) * (p + 1) / 2 + q;
  }

  int max_p_;
  std::vector<BigInt> entries_;
};

/// Process-wide table with the default limit; built on first use.
const StirlingTable& default_stirling_table();

BigInt stirling_cycle(int p, int q);
BigInt stirling_cycle(const StirlingTable& table, int p, int q);

/// c_{j,m} = (-1)^j [j+m, j+1] / m!
struct SeriesCoefficient {
  int j = 0;
  int m = 1;
  BigRational value;
  double approx = 0.0;
};

SeriesCoefficient series_coefficient(int j, int m);
SeriesCoefficient series_coefficient(const StirlingTable& table, int j, int m);

/// Double renderings of c_{j,m} for all j >= 0, m >= 1 with j + m <= max_weight,
/// laid out by weight so the Lambert W evaluator can walk one layer at a time.
class CoefficientTable {
 public:
  explicit CoefficientTable(const StirlingTable& table);

  int max_weight() const noexcept { return max_weight_; }

  double operator()(int j, int m) const noexcept {
    const int n = j + m;
    return values_[static_cast<std::size_t>(n) * (n - 1) / 2 + (m - 1)];
  }

 private:
  int max_weight_;
  std::vector<double> values_;
};

const CoefficientTable& default_coefficient_table();

}  // namespace deltares
