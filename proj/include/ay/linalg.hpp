#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ay/errors.hpp"

namespace ay {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr int kDefaultAngleSamples = 720;
inline constexpr double kDefaultRefineTol = 1e-10;

/// Defect operator D_T = (I - T*T)^{1/2} of a contraction together with an
/// orthonormal basis of its range.
struct DefectData {
  ComplexMatrix d_matrix;
  /// Columns span ran D_T; they are eigenvectors of D_T.
  ComplexMatrix basis;
  /// Eigenvalues of D_T belonging to the basis columns (all > 0).
  Eigen::VectorXd values;
  Index rank = 0;
  double tol_used = kDefaultRankTol;

  Index ambient_dim() const { return d_matrix.rows(); }
  /// D_T expressed from ambient coordinates into range coordinates: B* D.
  ComplexMatrix to_range() const;
};

/// PSD square root of I - T*T by eigendecomposition. Eigenvalues of I - T*T
/// in [-tol, 0] are clamped to zero; an eigenvalue counts toward the range iff
/// it exceeds tol * lambda_max (or tol itself when lambda_max <= tol).
/// The contraction test uses contraction_tol when given, tol otherwise.
DefectData defect(const ComplexMatrix& t, double tol = kDefaultRankTol,
                  double contraction_tol = -1.0);

double spectral_norm(const ComplexMatrix& m);
double spectral_radius(const ComplexMatrix& m);
double frobenius(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// Lower bound for w(X) = max_theta lambda_max(Re(e^{i theta} X)), from a
/// uniform angle grid followed by ternary refinement of every sampled local
/// maximum down to bracket width refine_tol. The grid spacing is the
/// resolution of the certificate: the function of theta need not be unimodal.
double numerical_radius(const ComplexMatrix& x, int angle_samples = kDefaultAngleSamples,
                        double refine_tol = kDefaultRefineTol);

/// Largest eigenvalue of the Hermitian part Re(e^{i theta} X).
double real_part_top_eigenvalue(const ComplexMatrix& x, double theta);

/// Orthonormal basis of the column space, keeping singular values above
/// tol * sigma_max (absolute tol when sigma_max <= tol).
ComplexMatrix range_basis(const ComplexMatrix& m, double tol);
/// Orthonormal basis of the null space of m, complementary to range_basis(m*).
ComplexMatrix null_basis(const ComplexMatrix& m, double tol);

struct RestrictedSolve {
  ComplexMatrix x;  // rank x rank, on the defect basis
  double residual = 0.0;
  bool ok = false;
};

/// Least-squares solution of D X D = Sigma with X supported on ran D, by
/// projection onto the eigenbasis of D: X = L^{-1} B* Sigma B L^{-1}.
/// Throws NoSolution (value = residual) when ||D X D - Sigma||_F exceeds
/// tol * (1 + ||Sigma||_F).
ComplexMatrix solve_restricted(const DefectData& d, const ComplexMatrix& sigma, double tol);

/// Non-throwing form of solve_restricted; `ok` reports the residual test.
RestrictedSolve try_solve_restricted(const DefectData& d, const ComplexMatrix& sigma, double tol);

/// Same problem through the normal equations of G X G* = Sigma with
/// G = D_T B formed by matrix multiplication; never throws, reports the
/// residual instead. Used as the independent route for uniqueness checks.
RestrictedSolve solve_restricted_normal(const DefectData& d, const ComplexMatrix& sigma,
                                        double tol);

/// D X D in ambient coordinates for X given on the defect basis.
ComplexMatrix expand_on_defect(const DefectData& d, const ComplexMatrix& x);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm of the leading `cols` columns (all rows).
double column_window_norm(const ComplexMatrix& m, Index cols);

}  // namespace ay
