#pragma once

#include <optional>
#include <vector>

#include "ay/tuple.hpp"

namespace ay {

inline constexpr double kDefaultTol = 1e-9;

/// Solution (X_1, ..., X_{n-1}) of S_i - S_{n-i}^* S_n = D X_i D, each X_i
/// given on the basis of ran D (D = D_{S_n}).
struct FundamentalSolution {
  std::vector<ComplexMatrix> x_ops;
  std::vector<double> residuals;
  std::vector<double> numerical_radii;
  /// ||Sigma_i||_F; the acceptance bound is tol * (1 + ||Sigma_i||_F).
  std::vector<double> rhs_norms;
  DefectData defect;
  double tol = kDefaultTol;
  /// Largest Frobenius gap between the eigenbasis and normal-equation routes.
  double path_agreement = 0.0;

  int n() const { return static_cast<int>(x_ops.size()) + 1; }
  /// X_i (1-based) on the defect basis.
  const ComplexMatrix& x(int i) const;
  /// B X_i B^* in ambient coordinates.
  ComplexMatrix x_ambient(int i) const;
  bool residuals_pass() const;
};

/// Sigma_i = S_i - S_{n-i}^* S_n.
ComplexMatrix fundamental_rhs(const OperatorTuple& tuple, int i);

/// Throws NotAContraction, or NoSolution with value = residual and index = i.
FundamentalSolution solve_fundamental(const OperatorTuple& tuple, double tol = kDefaultTol,
                                      double rank_tol = kDefaultRankTol);

/// Solves S_i^* - S_{n-i} S_n^* = D_* Y_i^* D_* with D_* = D_{S_n^*}; the
/// returned x_ops are the Y_i on the basis of ran D_*.
FundamentalSolution adjoint_fundamental(const OperatorTuple& tuple, double tol = kDefaultTol,
                                        double rank_tol = kDefaultRankTol);

struct PredicateReport {
  bool pass = false;
  Index window_cols = 0;
  /// ||S_n^* S_n - I|| on the window.
  double isometry_dev = 0.0;
  /// ||S_n S_n^* - I|| (unitary check only).
  double coisometry_dev = 0.0;
  /// ||S_i - S_{n-i}^* S_n|| on the window, i = 1..n-1.
  std::vector<double> relation_devs;
  /// ||[S_i, S_n]|| on the window, i = 1..n-1.
  std::vector<double> commutator_norms;
};

/// Checks are restricted to the leading window_cols columns (all rows).
PredicateReport is_ay_isometry(const OperatorTuple& tuple, double tol = kDefaultTol,
                               std::optional<Index> window_cols = std::nullopt);
PredicateReport is_ay_unitary(const OperatorTuple& tuple, double tol = kDefaultTol,
                              std::optional<Index> window_cols = std::nullopt);

/// (B^* S_i B) after checking that ran B is invariant under every S_i^*.
OperatorTuple compress(const OperatorTuple& tuple, const ComplexMatrix& basis,
                       double tol = kDefaultTol);

}  // namespace ay
