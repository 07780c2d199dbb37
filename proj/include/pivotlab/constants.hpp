#pragma once

#include "pivotlab/oracle.hpp"

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace pivotlab {

// Column order used throughout: non-(-2) roots sorted by (Re, Im), -2 last.
std::vector<std::complex<double>> order_roots_for_system(
    std::vector<std::complex<double>> roots);

// Exact right-hand side; entry m (0-based) is
//   (-1)^(m+1) m! ( a((m+1)H_m - m)/(H_{k+1}-1) + (a-b)/k ).
std::vector<Rational> rhs_vector(int k, const TollModel& toll);

struct BoundarySystem {
  int k = 0;
  Eigen::MatrixXcd matrix;  // row m holds r_i^{falling m}; r_i^m once monomial
  Eigen::VectorXcd rhs;
  std::vector<std::complex<double>> roots;  // column order
  bool monomial = false;
};

BoundarySystem build_boundary_system(int k, const TollModel& toll,
                                     const std::vector<std::complex<double>>& roots);

// Rewrites falling-factorial rows as pure powers by adding Stirling-weighted
// earlier rows to each row (same for the rhs), leaving the solution unchanged.
BoundarySystem to_monomial_system(const BoundarySystem& system);

struct VandermondeLU {
  Eigen::MatrixXcd upper;
  Eigen::MatrixXcd lower;
};

// Factors inv(V) = U * L for the Vandermonde matrix V[m][i] = r_i^m:
// U[i][j] = 1/prod_{l<=j, l!=i}(r_i - r_l) on and above the diagonal, and
// row i of the unit lower factor holds the coefficients of
// prod_{l<i}(x - r_l). Requires pairwise distinct roots (min gap 1e-6).
VandermondeLU vandermonde_inverse_lu(const std::vector<std::complex<double>>& roots);

struct IntegrationConstants {
  int k = 0;
  TollModel toll;
  // (root, s) pairs in system column order (-2 last).
  std::vector<std::pair<std::complex<double>, std::complex<double>>> entries;
  double lu_direct_max_diff = 0.0;

  std::complex<double> at_root(std::complex<double> root, double tol = 1e-6) const;
  std::complex<double> at_minus2() const;
};

// Solves the monomial Vandermonde system along both the direct LU-solve path
// and the paper-style U*L product path; the two must agree to 1e-9 entrywise.
// Returns the direct-solve values.
IntegrationConstants solve_constants(int k, const TollModel& toll,
                                     const std::vector<std::complex<double>>& roots);

// The constant attached to the root -2, in closed form:
//   -[ a/(H_{k+1}-1) * (H^2 - 2H - H^(2) + 2)/(2(H_{k+1}-1))
//      + (a-b)/((k+1)(H_{k+1}-1)) ].
Rational closed_form_s_minus2(int k, const TollModel& toll);

}  // namespace pivotlab
