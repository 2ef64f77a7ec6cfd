#pragma once

#include <vector>

#include "ay/core.hpp"
#include "ay/hardy.hpp"

namespace ay {

inline constexpr double kPureThreshold = 1.0 - 1e-8;
inline constexpr Index kDefaultModelOrder = 40;

/// Taylor coefficients Theta_0 = -A, Theta_k = D_{A^*} (A^*)^{k-1} D_A for
/// k = 1..order-1, as maps from ran D_A to ran D_{A^*} on their defect bases.
LaurentSymbol char_function(const ComplexMatrix& a, Index order);

struct ModelEmbedding {
  /// Block k is D_{S_n^*} (S_n^*)^k on the defect basis of S_n^*.
  ComplexMatrix w_matrix;
  LaurentSymbol theta_coeffs;
  Index order = 0;
  /// Spectral radius of S_n.
  double decay_rate = 0.0;
  DefectData defect_star;
  /// ||W S_n^* - T_z^* W|| on the leading order - 1 blocks.
  double intertwining_dev = 0.0;

  Index block_dim() const { return defect_star.rank; }
  /// ||W^* W - I||.
  double isometry_defect() const;
};

/// Throws NotPure when the spectral radius of S_n reaches 1 - 1e-8.
ModelEmbedding embed_w(const OperatorTuple& tuple, Index order = kDefaultModelOrder);

struct ComplementarityReport {
  bool pass = false;
  double deviation = 0.0;
  Index window_blocks = 0;
};

/// ||W W^* + M_Theta M_Theta^* - I|| on the leading order - 1 blocks.
ComplementarityReport complementarity_check(const ModelEmbedding& emb, double tol = 1e-9);

struct PureModel {
  /// Y_i on the defect basis of S_n^*.
  std::vector<ComplexMatrix> y;
  ModelEmbedding embedding;
  /// ||W S_i^* - T_{Y_i + z Y_{n-i}^*}^* W|| on the leading order - 1 blocks.
  std::vector<double> intertwining_devs;
};

/// Throws NotPure (also when S_n is an isometry), NoSolution, ModelMismatch.
PureModel pure_model(const OperatorTuple& tuple, Index order = kDefaultModelOrder,
                     double tol = 1e-9);

/// ||W^* W - I|| through W^* W = I - S_n^N (S_n^*)^N, which keeps its
/// relative accuracy after the direct difference has hit rounding level.
double telescoped_isometry_defect(const ComplexMatrix& sn, Index order);

/// Least-squares slope of log ||W^* W - I|| against the order (telescoped form).
double isometry_decay_slope(const OperatorTuple& tuple, const std::vector<Index>& orders);

/// Smallest order with rho^order <= 1e-8, capped.
Index auto_model_order(double rho, Index requested, Index cap = 400);

}  // namespace ay
