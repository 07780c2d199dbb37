#include "pivotlab/constants.hpp"

#include "pivotlab/num_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pivotlab {

namespace {

constexpr double kMinRootSeparation = 1e-6;
constexpr double kDualPathTol = 1e-9;

bool is_minus2(std::complex<double> r) {
  return std::abs(r - std::complex<double>(-2.0, 0.0)) < 1e-6;
}

}  // namespace

std::vector<std::complex<double>> order_roots_for_system(
    std::vector<std::complex<double>> roots) {
  const auto split = std::stable_partition(
      roots.begin(), roots.end(), [](const auto& r) { return !is_minus2(r); });
  if (split == roots.end()) {
    throw std::invalid_argument("order_roots_for_system: -2 missing from roots");
  }
  std::sort(roots.begin(), split, [](const auto& a, const auto& b) {
    if (a.real() != b.real()) {
      return a.real() < b.real();
    }
    return a.imag() < b.imag();
  });
  return roots;
}

std::vector<Rational> rhs_vector(int k, const TollModel& toll) {
  if (k < 1) {
    throw std::invalid_argument("rhs_vector: k must be positive");
  }
  const Rational hk1 = harmonic(k + 1) - 1;
  const Rational toll_term = (toll.a_bar - toll.b_bar) / k;
  std::vector<Rational> rhs;
  rhs.reserve(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) {
    const Rational hm = harmonic(m);
    Rational entry = toll.a_bar * ((m + 1) * hm - m) / hk1 + toll_term;
    entry *= Rational(factorial(m));
    if (m % 2 == 0) {
      entry = -entry;
    }
    rhs.push_back(entry);
  }
  return rhs;
}

BoundarySystem build_boundary_system(int k, const TollModel& toll,
                                     const std::vector<std::complex<double>>& roots) {
  if (static_cast<int>(roots.size()) != k) {
    throw std::invalid_argument("build_boundary_system: expected k roots");
  }
  BoundarySystem system;
  system.k = k;
  system.roots = order_roots_for_system(roots);
  system.matrix = Eigen::MatrixXcd(k, k);
  system.rhs = Eigen::VectorXcd(k);

  const auto rhs = rhs_vector(k, toll);
  for (int m = 0; m < k; ++m) {
    system.rhs(m) = std::complex<double>(rhs[static_cast<std::size_t>(m)].convert_to<double>(), 0.0);
    for (int i = 0; i < k; ++i) {
      std::complex<double> falling = 1.0;
      for (int t = 0; t < m; ++t) {
        falling *= system.roots[static_cast<std::size_t>(i)] - double(t);
      }
      system.matrix(m, i) = falling;
    }
  }
  return system;
}

BoundarySystem to_monomial_system(const BoundarySystem& system) {
  if (system.monomial) {
    return system;
  }
  BoundarySystem out = system;
  out.monomial = true;
  for (int m = 0; m < system.k; ++m) {
    for (int i = 0; i < system.k; ++i) {
      out.matrix(m, i) = std::pow(system.roots[static_cast<std::size_t>(i)], m);
    }
    // x^m = sum_j {m brace j} x^{falling j}: the new row (and rhs entry) is
    // the same Stirling combination of the original rows.
    std::complex<double> rhs_acc = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double weight = stirling2(m, j).convert_to<double>();
      if (weight != 0.0) {
        rhs_acc += weight * system.rhs(j);
      }
    }
    out.rhs(m) = rhs_acc;
  }
  return out;
}

VandermondeLU vandermonde_inverse_lu(const std::vector<std::complex<double>>& roots) {
  const int k = static_cast<int>(roots.size());
  if (k < 1) {
    throw std::invalid_argument("vandermonde_inverse_lu: empty root list");
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (std::abs(roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)]) <
          kMinRootSeparation) {
        throw std::invalid_argument("vandermonde_inverse_lu: near-coincident roots");
      }
    }
  }

  VandermondeLU lu;
  lu.upper = Eigen::MatrixXcd::Zero(k, k);
  lu.lower = Eigen::MatrixXcd::Zero(k, k);

  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      std::complex<double> denom = 1.0;
      for (int l = 0; l <= j; ++l) {
        if (l != i) {
          denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(l)];
        }
      }
      lu.upper(i, j) = 1.0 / denom;
    }
  }

  // Row i of L: coefficients of prod_{l<i}(x - r_l), constant term first.
  std::vector<std::complex<double>> poly{1.0};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= i; ++j) {
      lu.lower(i, j) = poly[static_cast<std::size_t>(j)];
    }
    if (i + 1 < k) {
      std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
      for (std::size_t c = 0; c < poly.size(); ++c) {
        next[c + 1] += poly[c];
        next[c] -= roots[static_cast<std::size_t>(i)] * poly[c];
      }
      poly = std::move(next);
    }
  }
  return lu;
}

std::complex<double> IntegrationConstants::at_root(std::complex<double> root,
                                                   double tol) const {
  for (const auto& [r, s] : entries) {
    if (std::abs(r - root) < tol) {
      return s;
    }
  }
  throw std::invalid_argument("IntegrationConstants::at_root: root not present");
}

std::complex<double> IntegrationConstants::at_minus2() const {
  return at_root(std::complex<double>(-2.0, 0.0));
}

IntegrationConstants solve_constants(int k, const TollModel& toll,
                                     const std::vector<std::complex<double>>& roots) {
  const auto system = to_monomial_system(build_boundary_system(k, toll, roots));

  const Eigen::VectorXcd direct = system.matrix.fullPivLu().solve(system.rhs);

  const auto lu = vandermonde_inverse_lu(system.roots);
  const Eigen::VectorXcd via_lu = lu.upper * (lu.lower * system.rhs);

  const double max_diff = (direct - via_lu).cwiseAbs().maxCoeff();
  if (!(max_diff < kDualPathTol)) {
    throw std::runtime_error(
        "solve_constants: LU-product and direct solutions disagree (max diff " +
        std::to_string(max_diff) + ")");
  }

  IntegrationConstants out;
  out.k = k;
  out.toll = toll;
  out.lu_direct_max_diff = max_diff;
  for (int i = 0; i < k; ++i) {
    out.entries.emplace_back(system.roots[static_cast<std::size_t>(i)], direct(i));
  }
  return out;
}

Rational closed_form_s_minus2(int k, const TollModel& toll) {
  if (k < 1) {
    throw std::invalid_argument("closed_form_s_minus2: k must be positive");
  }
  const auto [h1, h2] = harmonic_pair(k + 1);
  const Rational hm1 = h1 - 1;
  const Rational curvature = (h1 * h1 - 2 * h1 - h2 + 2) / (2 * hm1);
  return -(toll.a_bar / hm1 * curvature +
           (toll.a_bar - toll.b_bar) / ((k + 1) * hm1));
}

}  // namespace pivotlab
