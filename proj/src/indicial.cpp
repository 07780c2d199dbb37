#include "pivotlab/indicial.hpp"

#include "pivotlab/num_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pivotlab {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kSeparationTol = 1e-6;

std::complex<double> eval_complex_double(const std::vector<std::complex<double>>& coeffs,
                                         std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// Aberth-Ehrlich simultaneous iteration; the deflated indicial polynomials
// have simple, well-separated roots with Re in [-2, k+1].
std::vector<std::complex<double>> aberth(const std::vector<std::complex<double>>& coeffs,
                                         int k) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::complex<double>> deriv(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    deriv[static_cast<std::size_t>(i - 1)] = coeffs[static_cast<std::size_t>(i)] * double(i);
  }

  const std::complex<double> center(0.5 * (k - 1), 0.0);
  double radius = 0.5 * (k + 3) + 1.0;

  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (int i = 0; i < d; ++i) {
      const double angle = 2.0 * std::numbers::pi * (i + 0.37) / d + 0.173;
      z[static_cast<std::size_t>(i)] =
          center + std::polar(radius * (1.0 + 0.05 * i), angle);
    }
    bool converged = false;
    for (int iter = 0; iter < 500 && !converged; ++iter) {
      converged = true;
      for (int i = 0; i < d; ++i) {
        const auto zi = z[static_cast<std::size_t>(i)];
        const auto p = eval_complex_double(coeffs, zi);
        const auto dp = eval_complex_double(deriv, zi);
        if (p == 0.0) {
          continue;
        }
        std::complex<double> newton = (dp == 0.0) ? std::complex<double>(1e-12, 1e-12)
                                                  : p / dp;
        std::complex<double> repulse = 0.0;
        for (int j = 0; j < d; ++j) {
          if (j != i) {
            repulse += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
          }
        }
        const auto denom = 1.0 - newton * repulse;
        const auto correction = (std::abs(denom) < 1e-300) ? newton : newton / denom;
        z[static_cast<std::size_t>(i)] -= correction;
        if (std::abs(correction) > 1e-13 * (1.0 + std::abs(zi))) {
          converged = false;
        }
      }
    }
    if (converged) {
      // Two Newton polishing steps per root.
      for (auto& root : z) {
        for (int step = 0; step < 2; ++step) {
          const auto dp = eval_complex_double(deriv, root);
          if (std::abs(dp) < 1e-300) {
            break;
          }
          root -= eval_complex_double(coeffs, root) / dp;
        }
      }
      return z;
    }
    radius *= 2.0;
  }
  throw std::runtime_error("indicial root finder did not converge; lower k");
}

// Collapse numeric noise into exact conjugate pairs.
std::vector<std::complex<double>> symmetrize(std::vector<std::complex<double>> roots) {
  constexpr double imag_tol = 1e-7;
  std::vector<std::complex<double>> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) {
      continue;
    }
    if (std::abs(roots[i].imag()) <= imag_tol) {
      out.emplace_back(roots[i].real(), 0.0);
      used[i] = true;
      continue;
    }
    std::size_t best = i;
    double best_dist = std::numeric_limits<double>::max();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j]) {
        continue;
      }
      const double dist = std::abs(std::conj(roots[i]) - roots[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == i) {
      out.push_back(roots[i]);  // unpaired; leave as computed
      used[i] = true;
      continue;
    }
    used[i] = used[best] = true;
    const auto mean = 0.5 * (roots[i] + std::conj(roots[best]));
    const auto canonical = std::complex<double>(mean.real(), std::abs(mean.imag()));
    out.push_back(std::conj(canonical));
    out.push_back(canonical);
  }
  return out;
}

}  // namespace

BigInt eval_int(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::complex<double> eval_complex(const std::vector<BigInt>& coeffs,
                                  std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + it->convert_to<double>();
  }
  return acc;
}

std::vector<BigInt> derivative(const std::vector<BigInt>& coeffs) {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    out.push_back(BigInt(i) * coeffs[i]);
  }
  return out;
}

IndicialPolynomial build_indicial(int k) {
  if (k < 1 || k > kIndicialCap) {
    throw std::invalid_argument("build_indicial: need 1 <= k <= " +
                                std::to_string(kIndicialCap));
  }
  IndicialPolynomial poly;
  poly.k = k;
  poly.coeffs = falling_factorial_coeffs(k);
  if (k % 2 != 0) {
    for (auto& c : poly.coeffs) {
      c = -c;
    }
  }
  poly.coeffs[0] -= factorial(k + 1);
  return poly;
}

std::vector<std::complex<double>> find_roots(IndicialPolynomial& poly) {
  const int k = poly.k;
  if (static_cast<int>(poly.coeffs.size()) != k + 1) {
    throw std::invalid_argument("find_roots: polynomial not built by build_indicial");
  }
  if (eval_int(poly.coeffs, BigInt(-2)) != 0) {
    throw std::runtime_error("find_roots: -2 is not an exact root (corrupt coefficients)");
  }

  // Exact synthetic division by (Theta + 2).
  std::vector<BigInt> quotient(static_cast<std::size_t>(k));
  BigInt carry = poly.coeffs[static_cast<std::size_t>(k)];
  for (int i = k - 1; i >= 0; --i) {
    quotient[static_cast<std::size_t>(i)] = carry;
    carry = poly.coeffs[static_cast<std::size_t>(i)] - 2 * carry;
  }

  std::vector<std::complex<double>> roots;
  roots.emplace_back(-2.0, 0.0);

  const int d = k - 1;
  if (d == 1) {
    const double c0 = quotient[0].convert_to<double>();
    const double c1 = quotient[1].convert_to<double>();
    roots.emplace_back(-c0 / c1, 0.0);
  } else if (d == 2) {
    const double a = quotient[2].convert_to<double>();
    const double b = quotient[1].convert_to<double>();
    const double c = quotient[0].convert_to<double>();
    const std::complex<double> disc(b * b - 4.0 * a * c, 0.0);
    const auto sq = std::sqrt(disc);
    // Pick the addition that avoids cancellation, recover the mate by Viete.
    const auto q = (b >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
    roots.push_back(q / a);
    roots.push_back(c / q);
  } else if (d >= 3) {
    std::vector<std::complex<double>> coeffs(quotient.size());
    for (std::size_t i = 0; i < quotient.size(); ++i) {
      coeffs[i] = quotient[i].convert_to<double>();
    }
    for (const auto& r : aberth(coeffs, k)) {
      roots.push_back(r);
    }
  }

  roots = symmetrize(roots);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) {
      return a.real() < b.real();
    }
    return a.imag() < b.imag();
  });

  const double scale = factorial(k + 1).convert_to<double>();
  for (const auto& r : roots) {
    const double residual = std::abs(eval_complex(poly.coeffs, r)) / scale;
    if (residual >= kResidualTol) {
      throw std::runtime_error("find_roots: residual " + std::to_string(residual) +
                               " above tolerance; lower k");
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < kSeparationTol) {
        throw std::runtime_error("find_roots: two roots closer than separation tolerance");
      }
    }
  }

  poly.roots = roots;
  return roots;
}

DerivativeIdentityReport derivative_identities(int k) {
  IndicialPolynomial poly = build_indicial(k);
  const auto d1 = derivative(poly.coeffs);
  const auto d2 = derivative(d1);

  DerivativeIdentityReport report;
  report.k = k;

  const auto [h1, h2] = harmonic_pair(k + 1);
  const Rational fact_k1 = Rational(factorial(k + 1));

  report.p_prime_at_minus2.from_coeffs = Rational(eval_int(d1, BigInt(-2)));
  report.p_prime_at_minus2.closed_form = -fact_k1 * (h1 - 1);

  report.p_at_minus1.from_coeffs = Rational(eval_int(poly.coeffs, BigInt(-1)));
  report.p_at_minus1.closed_form = Rational(-BigInt(k) * factorial(k));

  report.half_p_double_prime_at_minus2.from_coeffs =
      Rational(eval_int(d2, BigInt(-2))) / 2;
  report.half_p_double_prime_at_minus2.closed_form =
      fact_k1 * (h1 * h1 - 2 * h1 - h2 + 2) / 2;

  report.p_prime_at_minus2.holds =
      report.p_prime_at_minus2.from_coeffs == report.p_prime_at_minus2.closed_form;
  report.p_at_minus1.holds =
      report.p_at_minus1.from_coeffs == report.p_at_minus1.closed_form;
  report.half_p_double_prime_at_minus2.holds =
      report.half_p_double_prime_at_minus2.from_coeffs ==
      report.half_p_double_prime_at_minus2.closed_form;
  return report;
}

}  // namespace pivotlab
