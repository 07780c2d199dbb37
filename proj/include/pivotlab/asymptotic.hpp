#pragma once

#include "pivotlab/constants.hpp"

namespace pivotlab {

struct AsymptoticEstimate {
  int k = 0;
  TollModel toll;
  Rational leading_coeff;  // a / (H_{k+1} - 1), multiplies (n+1)H_n - n
  Rational linear_coeff;   // closed_form_s_minus2, multiplies (n+1)
  Rational constant_term;  // (a - b)/k, absorbed into o(n) by the estimate
};

AsymptoticEstimate asymptotic_estimate(int k, const TollModel& toll);

// leading*((n+1)H_n - n) + linear*(n+1), exact; the o(n) remainder is
// deliberately excluded. Requires n > k.
Rational theorem_estimate(long n, int k, const TollModel& toll);

// (-1)^n C(r, n) = prod_{j=0..n-1} (j - r)/(j + 1); empty product is 1.
std::complex<double> binom_complex(std::complex<double> r, long n);

struct SeriesReconstruction {
  int k = 0;
  TollModel toll;
  std::vector<std::complex<double>> roots;
  IntegrationConstants constants;
  std::vector<double> values;  // a_0..a_{n_max}
  double max_imag_residue = 0.0;
};

// a_n = leading*((n+1)H_n - n) + (a-b)/k + sum_i s_i (-1)^n C(r_i, n), with
// the real part taken once after summing the root terms. Throws if the
// imaginary residue exceeds 1e-8 (inconsistent constants).
SeriesReconstruction series_reconstruct(long n_max, int k, const TollModel& toll,
                                        const std::vector<std::complex<double>>& roots,
                                        const IntegrationConstants& constants);

struct ConvergenceRow {
  long n = 0;
  double oracle_value = 0.0;
  double theorem_value = 0.0;
  double gap = 0.0;  // oracle - theorem
};

// Evaluates the oracle (float backend) against the estimate at the sample
// points; the gap should settle at (a-b)/k.
std::vector<ConvergenceRow> convergence_table(int k, const TollModel& toll,
                                              std::vector<long> sample_points,
                                              Convention convention = Convention::paper);

}  // namespace pivotlab
