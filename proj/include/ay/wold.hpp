#pragma once

#include <optional>
#include <vector>

#include "ay/hardy.hpp"

namespace ay {

struct WoldDeviations {
  /// max(||P - P^*||, ||P^2 - P||).
  double projection = 0.0;
  /// max_i ||(I - P) S_i P|| + ||P S_i (I - P)||.
  double reducing = 0.0;
  /// Unitarity of S_n on H_1 and S_i = S_{n-i}^* S_n there.
  double unitary_part = 0.0;
  /// Orthonormality of the recovered pure-part basis.
  double basis = 0.0;
  /// Recovered S_n on H_2 against the truncated shift.
  double shift = 0.0;
  /// S_i = S_{n-i}^* S_n on the pure part, leading window - 1 block columns.
  double pure_relation = 0.0;
  /// A_k^{(i)} = (A_{1-k}^{(n-i)})^* for k <= 0.
  double mirror = 0.0;
};

struct WoldResult {
  ComplexMatrix p_unitary;
  /// Orthonormal basis of H_1.
  ComplexMatrix unitary_basis;
  /// Columns [D, S_n D, ..., S_n^{N-1} D] with D the wandering space.
  ComplexMatrix pure_basis;
  /// Restriction to H_1 in the coordinates of unitary_basis.
  OperatorTuple unitary_tuple;
  std::vector<LaurentSymbol> phi_recovered;
  std::vector<LaurentSymbol> f_recovered;
  Index dim_e = 0;
  /// Block order N of the pure part.
  Index pure_order = 0;
  /// Leading block columns of the pure part used for symbol reading.
  Index interior_window = 0;
  WoldDeviations deviations;

  Index dim_h1() const { return unitary_basis.cols(); }
};

/// window: interior block columns of the pure part (default: its full order).
/// max_power: length of the range chain of S_n (default: twice the dimension).
WoldResult wold_decompose(const OperatorTuple& tuple, std::optional<Index> window = std::nullopt,
                          std::optional<Index> max_power = std::nullopt, double tol = 1e-9);

struct RelationReport {
  bool pass = false;
  std::vector<double> devs;
  double worst() const;
};

/// S_{n-i}^* - S_i S_n^* = 0 on H_1 (+) T_{f_i}(I - T_z T_z^*) on the pure part.
RelationReport verify_determinant_relation(const WoldResult& wres, const OperatorTuple& original,
                                           double tol = 1e-8);

struct CsFactorization {
  std::vector<ComplexMatrix> c_ops;
  /// ||S_i - C_i S_n - C_{n-i}^*||.
  std::vector<double> relation_devs;
  /// ||[C_i, S_n]||.
  std::vector<double> commutator_devs;
  bool pass = false;
};

/// C_i = W^* T_{f_i} W in original coordinates. Throws HasUnitaryPart.
CsFactorization cs_factorize(const OperatorTuple& tuple, const WoldResult& wres,
                             double tol = 1e-8);

struct UnitaryExtension {
  OperatorTuple tuple;
  /// Isometry from the original space into H_1 (+) bilateral sequences.
  ComplexMatrix embedding;
  Index padding = 0;
  /// Leading pure-part block columns on which the intertwining is checked.
  Index interior_blocks = 0;
  /// max_i ||R_i emb - emb S_i|| on the interior.
  double intertwining_dev = 0.0;
  /// max_i ||emb^* R_i emb - S_i||.
  double compression_dev = 0.0;
  /// ||R_n^* R_n - I|| away from the bilateral truncation edges.
  double unitary_dev = 0.0;
};

/// Bilateral Laurent matrices of phi_i and z on [-L, N - 1 + L], L = padding
/// (default: the largest symbol bandwidth).
UnitaryExtension extend_to_unitary(const WoldResult& wres, const OperatorTuple& original,
                                   std::optional<Index> padding = std::nullopt);

struct SymbolTransfer {
  std::vector<LaurentSymbol> psi;
  double inner_dev = 0.0;
  std::vector<double> invariance_devs;
  /// max_i of the largest coefficient of phi_i theta - theta psi_i.
  double identity_dev = 0.0;
};

inline constexpr int kInnerSamples = 256;

/// psi_i with M_theta^* T_{phi_i} M_theta = T_{psi_i}, for a square inner
/// polynomial theta. Throws NotInner, NotInvariant(i), NotToeplitz.
SymbolTransfer symbol_transfer(const LaurentSymbol& theta, const std::vector<LaurentSymbol>& phi,
                               Index order, double tol = 1e-9);

}  // namespace ay
