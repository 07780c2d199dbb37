#pragma once

#include "pivotlab/rational.hpp"

#include <complex>
#include <vector>

namespace pivotlab {

// Above this the exact coefficients are still fine but the numeric
// root-finding conditioning starts to degrade.
inline constexpr int kIndicialCap = 15;

// (-1)^k Theta(Theta-1)...(Theta-k+1) - (k+1)!, exact coefficients.
struct IndicialPolynomial {
  int k = 0;
  std::vector<BigInt> coeffs;                // constant term first, degree k
  std::vector<std::complex<double>> roots;   // filled by find_roots
};

IndicialPolynomial build_indicial(int k);

// All k roots sorted by (Re, Im), conjugate pairs adjacent. -2 is deflated
// exactly (integer synthetic division) before any numeric work, so it comes
// back as an exact -2.0. Throws std::runtime_error if the residual bound
// |P(r)|/(k+1)! < 1e-9 cannot be met or two roots come within 1e-6.
std::vector<std::complex<double>> find_roots(IndicialPolynomial& poly);

BigInt eval_int(const std::vector<BigInt>& coeffs, const BigInt& x);
std::complex<double> eval_complex(const std::vector<BigInt>& coeffs,
                                  std::complex<double> x);
std::vector<BigInt> derivative(const std::vector<BigInt>& coeffs);

struct DerivativeIdentity {
  bool holds = false;
  Rational from_coeffs;
  Rational closed_form;
};

struct DerivativeIdentityReport {
  int k = 0;
  DerivativeIdentity p_prime_at_minus2;             // -(k+1)!(H_{k+1} - 1)
  DerivativeIdentity p_at_minus1;                   // -k k!
  DerivativeIdentity half_p_double_prime_at_minus2; // (k+1)!(H^2-2H-H2+2)/2

  bool all_hold() const {
    return p_prime_at_minus2.holds && p_at_minus1.holds &&
           half_p_double_prime_at_minus2.holds;
  }
};

// Evaluates the derivatives from the exact coefficients and compares with
// the harmonic-number closed forms.
DerivativeIdentityReport derivative_identities(int k);

}  // namespace pivotlab
