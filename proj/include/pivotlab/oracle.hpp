#pragma once

#include "pivotlab/rational.hpp"

#include <vector>

namespace pivotlab {

// Rational tables above this are possible but denominator growth makes the
// float backend the intended tool.
inline constexpr long kRationalOracleCap = 500;

// Base-case choice for the table. `paper` sets f(0..k-1) = 0 so the
// recurrence yields f(k) = T(k); `algorithmic` sets f(0..k) = 0, matching a
// sorter that hands segments of at most k keys to insertion sort.
enum class Convention { paper, algorithmic };

enum class Arithmetic { rational, floating };

// Mean stage cost T(s) = a_bar * s + b_bar.
struct TollModel {
  Rational a_bar;
  Rational b_bar;
};

// C(n, j), exact; zero when j > n or either argument is negative.
BigInt binomial(long long n, long long j);

struct ExactCostTable {
  int k = 0;
  TollModel toll;
  Convention convention = Convention::paper;
  Arithmetic arithmetic = Arithmetic::rational;
  std::vector<Rational> exact;  // populated when arithmetic == rational
  std::vector<double> approx;   // populated when arithmetic == floating

  long n_max() const;
  const Rational& at(long n) const;  // rational backend only
  double at_f(long n) const;         // either backend
};

// Expected-cost table f(0..n_max) by dynamic programming over
//   f(n) = T(n) + (k+1)/C(n,k) * sum_{i=1..n-k+1} C(n-i, k-1) f(i-1),
// with the inner binomial weight updated incrementally per term.
ExactCostTable exact_cost_table(int k, const TollModel& toll, long n_max,
                                Arithmetic arithmetic = Arithmetic::rational,
                                Convention convention = Convention::paper);

}  // namespace pivotlab
