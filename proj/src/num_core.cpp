#include "pivotlab/num_core.hpp"

#include <stdexcept>
#include <utility>

namespace pivotlab {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("rational denominator is zero: " + text);
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

BigInt factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of negative argument");
  }
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) {
    out *= i;
  }
  return out;
}

Rational harmonic(int n) {
  if (n < 0) {
    throw std::invalid_argument("harmonic: n must be nonnegative");
  }
  Rational sum = 0;
  for (int j = 1; j <= n; ++j) {
    sum += Rational(1, j);
  }
  return sum;
}

Rational harmonic2(int n) {
  if (n < 0) {
    throw std::invalid_argument("harmonic2: n must be nonnegative");
  }
  Rational sum = 0;
  for (int j = 1; j <= n; ++j) {
    sum += Rational(1, BigInt(j) * j);
  }
  return sum;
}

HarmonicPair harmonic_pair(int n) {
  return HarmonicPair{harmonic(n), harmonic2(n)};
}

BigInt stirling2(int n, int j) {
  if (n < 0 || j < 0) {
    throw std::invalid_argument("stirling2: arguments must be nonnegative");
  }
  if (j > n) {
    return 0;
  }
  if (n == 0) {
    return 1;  // {0 brace 0}
  }
  if (j == 0) {
    return 0;
  }
  // Triangle recurrence {n, j} = j {n-1, j} + {n-1, j-1}.
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int c = std::min(m, j); c >= 1; --c) {
      row[static_cast<std::size_t>(c)] =
          BigInt(c) * row[static_cast<std::size_t>(c)] + row[static_cast<std::size_t>(c) - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(j)];
}

std::vector<BigInt> falling_factorial_coeffs(int k) {
  if (k < 1) {
    throw std::invalid_argument("falling_factorial_coeffs: k must be positive");
  }
  // Iteratively multiply by (x - t) for t = 0..k-1.
  std::vector<BigInt> coeffs{0, 1};  // x
  for (int t = 1; t < k; ++t) {
    std::vector<BigInt> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= BigInt(t) * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

StirlingIdentityReport check_stirling_identities(int k, int cap) {
  if (k < 2 || k > cap) {
    throw std::invalid_argument("check_stirling_identities: need 2 <= k <= cap");
  }
  StirlingIdentityReport report;
  report.k = k;

  BigInt sum_a = 0;
  BigInt sum_b = 0;
  Rational sum_c = 0;
  for (int j = 1; j <= k; ++j) {
    const BigInt s = stirling2(k - 1, j - 1);
    const int sign = (j % 2 == 0) ? 1 : -1;
    sum_a += sign * factorial(j - 1) * s;
    sum_b += sign * factorial(j) * s;
    if (j >= 2) {
      sum_c += Rational(sign * factorial(j) * s) * (harmonic(j) - 1);
    }
  }

  const int sign_k = (k % 2 == 0) ? 1 : -1;
  report.signed_factorial_sum.lhs = Rational(sum_a);
  report.signed_factorial_sum.rhs = Rational(sign_k);
  report.signed_shifted_sum.lhs = Rational(sum_b);
  report.signed_shifted_sum.rhs = Rational(sign_k * (BigInt(1) << (k - 1)));
  report.harmonic_weighted_sum.lhs = sum_c;
  report.harmonic_weighted_sum.rhs = Rational(sign_k * (k - 1) * (BigInt(1) << (k - 2)));

  report.signed_factorial_sum.holds =
      report.signed_factorial_sum.lhs == report.signed_factorial_sum.rhs;
  report.signed_shifted_sum.holds =
      report.signed_shifted_sum.lhs == report.signed_shifted_sum.rhs;
  report.harmonic_weighted_sum.holds =
      report.harmonic_weighted_sum.lhs == report.harmonic_weighted_sum.rhs;
  return report;
}

}  // namespace pivotlab
