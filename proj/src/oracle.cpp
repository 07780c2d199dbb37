#include "pivotlab/oracle.hpp"

#include <stdexcept>

namespace pivotlab {

BigInt binomial(long long n, long long j) {
  if (n < 0 || j < 0 || j > n) {
    return 0;
  }
  if (j > n - j) {
    j = n - j;
  }
  BigInt out = 1;
  for (long long i = 0; i < j; ++i) {
    out *= n - i;
    out /= i + 1;  // exact: out is always a binomial prefix
  }
  return out;
}

long ExactCostTable::n_max() const {
  const std::size_t size =
      arithmetic == Arithmetic::rational ? exact.size() : approx.size();
  return static_cast<long>(size) - 1;
}

const Rational& ExactCostTable::at(long n) const {
  if (arithmetic != Arithmetic::rational) {
    throw std::logic_error("ExactCostTable::at: table has a float backend");
  }
  return exact.at(static_cast<std::size_t>(n));
}

double ExactCostTable::at_f(long n) const {
  if (arithmetic == Arithmetic::rational) {
    return exact.at(static_cast<std::size_t>(n)).convert_to<double>();
  }
  return approx.at(static_cast<std::size_t>(n));
}

namespace {

template <class Scalar>
std::vector<Scalar> build_table(int k, Scalar a_bar, Scalar b_bar, long n_max,
                                Convention convention) {
  std::vector<Scalar> f(static_cast<std::size_t>(n_max) + 1, Scalar(0));
  const long start = convention == Convention::paper ? k : k + 1;
  for (long n = start; n <= n_max; ++n) {
    // weight w_i = C(n-i, k-1) / C(n, k); w_1 = k/n, then
    // w_{i+1} = w_i * (n-i-k+1)/(n-i).
    Scalar sum = Scalar(0);
    Scalar w = Scalar(k) / Scalar(n);
    for (long i = 1; i <= n - k + 1; ++i) {
      sum += w * f[static_cast<std::size_t>(i - 1)];
      if (i < n - k + 1) {
        w = w * Scalar(n - i - k + 1) / Scalar(n - i);
      }
    }
    f[static_cast<std::size_t>(n)] =
        a_bar * Scalar(n) + b_bar + Scalar(k + 1) * sum;
  }
  return f;
}

}  // namespace

ExactCostTable exact_cost_table(int k, const TollModel& toll, long n_max,
                                Arithmetic arithmetic, Convention convention) {
  if (k < 1) {
    throw std::invalid_argument("exact_cost_table: k must be positive");
  }
  if (n_max < k) {
    throw std::invalid_argument("exact_cost_table: n_max must be at least k");
  }
  if (arithmetic == Arithmetic::rational && n_max > kRationalOracleCap) {
    throw std::invalid_argument(
        "exact_cost_table: rational backend capped at n_max = " +
        std::to_string(kRationalOracleCap) + "; use the float backend");
  }

  ExactCostTable table;
  table.k = k;
  table.toll = toll;
  table.convention = convention;
  table.arithmetic = arithmetic;
  if (arithmetic == Arithmetic::rational) {
    table.exact = build_table<Rational>(k, toll.a_bar, toll.b_bar, n_max, convention);
  } else {
    table.approx = build_table<double>(k, toll.a_bar.convert_to<double>(),
                                       toll.b_bar.convert_to<double>(), n_max,
                                       convention);
  }
  return table;
}

}  // namespace pivotlab
