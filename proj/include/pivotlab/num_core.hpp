#pragma once

#include "pivotlab/rational.hpp"

#include <vector>

namespace pivotlab {

// Identity checks keep factorials small by refusing k above this.
inline constexpr int kStirlingIdentityCap = 20;

BigInt factorial(int n);

// H_n = sum_{j=1..n} 1/j, exact. harmonic(0) == 0.
Rational harmonic(int n);

// H^(2)_n = sum_{j=1..n} 1/j^2, exact.
Rational harmonic2(int n);

struct HarmonicPair {
  Rational h1;
  Rational h2;
};

HarmonicPair harmonic_pair(int n);

// Stirling number of the second kind {n brace j}; zero for n < j.
BigInt stirling2(int n, int j);

// Monomial coefficients of x(x-1)...(x-k+1), constant term first, degree k.
std::vector<BigInt> falling_factorial_coeffs(int k);

struct IdentityCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

// Three alternating Stirling sums; all are theorems, so a failed check
// signals an arithmetic bug rather than a property of the input.
//   (a) sum_{j=1..k} (-1)^j (j-1)! {k-1 brace j-1}            = (-1)^k
//   (b) sum_{j=1..k} (-1)^j j!     {k-1 brace j-1}            = (-1)^k 2^(k-1)
//   (c) sum_{j=2..k} (-1)^j j!     {k-1 brace j-1} (H_j - 1)  = (-1)^k (k-1) 2^(k-2)
struct StirlingIdentityReport {
  int k = 0;
  IdentityCheck signed_factorial_sum;    // (a)
  IdentityCheck signed_shifted_sum;      // (b)
  IdentityCheck harmonic_weighted_sum;   // (c)

  bool all_hold() const {
    return signed_factorial_sum.holds && signed_shifted_sum.holds &&
           harmonic_weighted_sum.holds;
  }
};

StirlingIdentityReport check_stirling_identities(int k, int cap = kStirlingIdentityCap);

}  // namespace pivotlab
