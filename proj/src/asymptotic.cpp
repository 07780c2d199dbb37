#include "pivotlab/asymptotic.hpp"

#include "pivotlab/num_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pivotlab {

namespace {
constexpr double kImagResidueTol = 1e-8;
}

AsymptoticEstimate asymptotic_estimate(int k, const TollModel& toll) {
  if (k < 1) {
    throw std::invalid_argument("asymptotic_estimate: k must be positive");
  }
  AsymptoticEstimate est;
  est.k = k;
  est.toll = toll;
  est.leading_coeff = toll.a_bar / (harmonic(k + 1) - 1);
  est.linear_coeff = closed_form_s_minus2(k, toll);
  est.constant_term = (toll.a_bar - toll.b_bar) / k;
  return est;
}

Rational theorem_estimate(long n, int k, const TollModel& toll) {
  if (n <= k) {
    throw std::invalid_argument("theorem_estimate: requires n > k");
  }
  const auto est = asymptotic_estimate(k, toll);
  const Rational hn = harmonic(static_cast<int>(n));
  return est.leading_coeff * ((n + 1) * hn - n) + est.linear_coeff * (n + 1);
}

std::complex<double> binom_complex(std::complex<double> r, long n) {
  std::complex<double> out = 1.0;
  for (long j = 0; j < n; ++j) {
    out *= (double(j) - r) / double(j + 1);
  }
  return out;
}

SeriesReconstruction series_reconstruct(long n_max, int k, const TollModel& toll,
                                        const std::vector<std::complex<double>>& roots,
                                        const IntegrationConstants& constants) {
  if (n_max < 0) {
    throw std::invalid_argument("series_reconstruct: n_max must be nonnegative");
  }
  if (roots.size() != static_cast<std::size_t>(k) ||
      constants.entries.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("series_reconstruct: constants do not match k roots");
  }

  SeriesReconstruction series;
  series.k = k;
  series.toll = toll;
  series.roots = roots;
  series.constants = constants;
  series.values.resize(static_cast<std::size_t>(n_max) + 1);

  const double leading = to_double(toll.a_bar / (harmonic(k + 1) - 1));
  const double constant = to_double((toll.a_bar - toll.b_bar) / k);

  // Per-root running (-1)^n C(r, n) factors, advanced once per n.
  std::vector<std::complex<double>> factors(constants.entries.size(), 1.0);

  double hn = 0.0;
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) {
      hn += 1.0 / double(n);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factors[i] *= (double(n - 1) - constants.entries[i].first) / double(n);
      }
    }
    std::complex<double> root_sum = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      root_sum += constants.entries[i].second * factors[i];
    }
    series.max_imag_residue = std::max(series.max_imag_residue,
                                       std::abs(root_sum.imag()));
    series.values[static_cast<std::size_t>(n)] =
        leading * (double(n + 1) * hn - double(n)) + constant + root_sum.real();
  }

  if (series.max_imag_residue >= kImagResidueTol) {
    throw std::runtime_error(
        "series_reconstruct: imaginary residue " +
        std::to_string(series.max_imag_residue) +
        " exceeds tolerance (constants inconsistent with roots)");
  }
  return series;
}

std::vector<ConvergenceRow> convergence_table(int k, const TollModel& toll,
                                              std::vector<long> sample_points,
                                              Convention convention) {
  std::sort(sample_points.begin(), sample_points.end());
  if (sample_points.empty()) {
    return {};
  }
  if (sample_points.front() <= k) {
    throw std::invalid_argument("convergence_table: sample points must exceed k");
  }
  const auto table = exact_cost_table(k, toll, sample_points.back(),
                                      Arithmetic::floating, convention);
  std::vector<ConvergenceRow> rows;
  rows.reserve(sample_points.size());
  for (long n : sample_points) {
    ConvergenceRow row;
    row.n = n;
    row.oracle_value = table.at_f(n);
    row.theorem_value = to_double(theorem_estimate(n, k, toll));
    row.gap = row.oracle_value - row.theorem_value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pivotlab
