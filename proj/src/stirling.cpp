#include "deltares/stirling.hpp"

#include "deltares/errors.hpp"

#include <string>

namespace deltares {

StirlingTable::StirlingTable(int max_p) : max_p_(max_p) {
  if (max_p < 0) throw DomainError("StirlingTable: max_p must be nonnegative");
  entries_.resize(index(max_p, max_p) + 1);
  entries_[index(0, 0)] = 1;
  // [p+1, q] = p [p, q] + [p, q-1]
  for (int p = 0; p < max_p; ++p) {
    const int next = p + 1;
    entries_[index(next, 0)] = 0;
    for (int q = 1; q <= next; ++q) {
      BigInt v = (q <= p) ? BigInt(p) * entries_[index(p, q)] : BigInt(0);
      v += entries_[index(p, q - 1)];
      entries_[index(next, q)] = std::move(v);
    }
  }
}

const BigInt& StirlingTable::at(int p, int q) const {
  static const BigInt zero = 0;
  if (p < 0 || q < 0) throw DomainError("stirling_cycle: negative index");
  if (p > max_p_) {
    throw CapacityError("stirling_cycle: p = " + std::to_string(p) +
                        " exceeds table limit " + std::to_string(max_p_));
  }
  if (q > p) return zero;
  return entries_[index(p, q)];
}

const StirlingTable& default_stirling_table() {
  static const StirlingTable table(kDefaultStirlingLimit);
  return table;
}

BigInt stirling_cycle(const StirlingTable& table, int p, int q) {
  return table.at(p, q);
}

BigInt stirling_cycle(int p, int q) { return stirling_cycle(default_stirling_table(), p, q); }

SeriesCoefficient series_coefficient(const StirlingTable& table, int j, int m) {
  if (j < 0 || m < 1) throw DomainError("series_coefficient: need j >= 0 and m >= 1");
  if (j + m > table.max_p()) {
    throw CapacityError("series_coefficient: j + m = " + std::to_string(j + m) +
                        " exceeds table limit " + std::to_string(table.max_p()));
  }
  BigInt factorial = 1;
  for (int i = 2; i <= m; ++i) factorial *= i;
  BigInt numerator = table.at(j + m, j + 1);
  if (j % 2 == 1) numerator = -numerator;

  SeriesCoefficient c;
  c.j = j;
  c.m = m;
  c.value = BigRational(numerator, factorial);
  c.approx = c.value.convert_to<double>();
  return c;
}

SeriesCoefficient series_coefficient(int j, int m) {
  return series_coefficient(default_stirling_table(), j, m);
}

CoefficientTable::CoefficientTable(const StirlingTable& table) : max_weight_(table.max_p()) {
  values_.resize(static_cast<std::size_t>(max_weight_) * (max_weight_ + 1) / 2);
  for (int n = 1; n <= max_weight_; ++n) {
    for (int m = 1; m <= n; ++m) {
      values_[static_cast<std::size_t>(n) * (n - 1) / 2 + (m - 1)] =
          series_coefficient(table, n - m, m).approx;
    }
  }
}

const CoefficientTable& default_coefficient_table() {
  static const CoefficientTable table(default_stirling_table());
  return table;
}

}  // namespace deltares
