#pragma once

#include <optional>
#include <vector>

#include "ay/hardy.hpp"

namespace ay {

inline constexpr double kZeroMargin = 1e-8;
inline constexpr double kTailBudget = 1e-12;

/// lambda * prod_j (z - a_j) / (1 - conj(a_j) z).
struct BlaschkeProduct {
  std::vector<Complex> zeros;
  Complex unimodular{1.0, 0.0};

  Index degree() const { return static_cast<Index>(zeros.size()); }
  double max_modulus() const;
  Complex evaluate(Complex z) const;
  /// Taylor coefficients u_0, ..., u_{count-1}.
  ComplexVector taylor(Index count) const;
};

/// Throws ZeroTooCloseToCircle or InvalidArgument (no zeros).
void validate(const BlaschkeProduct& u);

struct ModelSpaceKu {
  BlaschkeProduct blaschke;
  Index ambient_order = 0;
  /// N x d, Taylor coefficients of the Takenaka-Malmquist basis.
  ComplexMatrix basis;
  /// C(v) = conj_matrix * conj(v) in basis coordinates.
  ComplexMatrix conj_matrix;
  ComplexVector k0;
  ComplexVector k0_tilde;
  /// Largest basis Taylor tail beyond the ambient order, bounded analytically.
  double tail_bound = 0.0;

  Index dim() const { return basis.cols(); }
  ComplexVector conjugate(const ComplexVector& v) const;
  /// C A C as a matrix, for A given on the basis.
  ComplexMatrix conjugate_operator(const ComplexMatrix& a) const;
};

/// The ambient order is raised until max|a_j|^N <= 1e-12 (plus headroom for
/// repeated zeros).
ModelSpaceKu build_model_space(const BlaschkeProduct& u, Index ambient_order = 64);

/// Scalar symbols only; bandwidth must stay below ambient_order / 2.
ComplexMatrix truncated_toeplitz(const ModelSpaceKu& space, const LaurentSymbol& phi);

struct ConjugationReport {
  bool pass = false;
  /// ||C C - I||.
  double involution_dev = 0.0;
  /// ||C^* C - I|| for the matrix part (antiunitarity).
  double antiunitary_dev = 0.0;
  /// ||C A_phi C - A_phi^*||.
  double symmetry_dev = 0.0;
  /// ||I - A_z A_z^* - k0 k0^*||.
  double defect_star_dev = 0.0;
  /// ||I - A_z^* A_z - k0~ k0~^*||.
  double defect_dev = 0.0;
  double worst() const;
};

ConjugationReport conjugation_identity_check(const ModelSpaceKu& space, const LaurentSymbol& phi,
                                             double tol = 1e-8);

struct EquivalenceResult {
  bool equivalent = false;
  /// ||A_{phi - psi}||.
  double operator_norm = 0.0;
  /// Relative distance of phi - psi from uH^2 + conj(uH^2) inside the window.
  double projection_residual = 0.0;
  bool oracle_agrees = false;
};

EquivalenceResult symbol_equivalence(const ModelSpaceKu& space, const LaurentSymbol& phi,
                                     const LaurentSymbol& psi, double tol = 1e-9);

/// Relative least-squares distance of chi from uH^2 + conj(uH^2) on the
/// Laurent window [-W, W], W = bandwidth(chi) (at least the degree).
double distance_from_sarason_kernel(const ModelSpaceKu& space, const LaurentSymbol& chi);

struct Classification {
  bool in_ay = false;
  std::optional<Complex> c;
  /// Fundamental-equation residual (the witness when in_ay is false).
  double residual = 0.0;
  double commutator_norm = 0.0;
  /// phi equivalent to conj(c) + c z (only meaningful when in_ay).
  bool converse_ok = false;
};

Classification classify_ay_pair(const ModelSpaceKu& space, const LaurentSymbol& phi,
                                double tol = 1e-9);

/// conj(c) + c z.
LaurentSymbol ay_linear_symbol(Complex c);

}  // namespace ay
