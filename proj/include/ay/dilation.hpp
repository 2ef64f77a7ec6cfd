#pragma once

#include <cstdint>
#include <vector>

#include "ay/core.hpp"

namespace ay {

/// Truncated isometric dilation on H (+) D (+) ... (+) D with K defect slots.
/// Slot coordinates are taken on the defect basis of D_{S_n}.
struct DilationResult {
  OperatorTuple v_ops;
  Index slots = 0;
  Index dim_h = 0;
  Index rank = 0;
  OperatorTuple source;
  FundamentalSolution x_used;
  /// Isometric inclusion of H as the first block.
  ComplexMatrix embedding;

  Index dim() const { return dim_h + slots * rank; }
  /// Columns unaffected by the dropped shift-out of the last slot.
  Index interior_cols() const { return dim_h + (slots - 1) * rank; }
};

DilationResult schaffer_dilate(const OperatorTuple& tuple, const FundamentalSolution& fsol,
                               Index slots);

struct DilationReport {
  bool pass = false;
  std::vector<int> worst_word;
  double worst_dev = 0.0;
  /// ||V_i - V_{n-i}^* V_n|| on the interior, i = 1..n-1.
  std::vector<double> relations_dev;
  /// ||V_n^* V_n - I|| on the interior.
  double isometry_dev = 0.0;
  /// Largest entry of the H row outside the H column over all V_i.
  double coinvariance_dev = 0.0;
  std::size_t words_checked = 0;
  bool sampled = false;
};

struct WordCheckOptions {
  std::size_t exhaustive_limit = 20000;
  std::size_t sample_count = 5000;
  std::uint64_t seed = 42;
  double word_tol = 1e-11;
  double relation_tol = 1e-9;
};

/// Compares P_H V_word |_H with S_word for every word up to max_len (or a
/// seeded sample when there are too many) and checks the dilation relations.
DilationReport verify_dilation(const DilationResult& dil, Index max_len,
                               const WordCheckOptions& options = {});

struct CommutingReport {
  bool pass = false;
  /// max_{i,j} ||[X_i, X_j]||.
  double max_x_commutator = 0.0;
  /// max_{i,j} ||[X_j, X_{n-i}^*] - [X_i, X_{n-j}^*]||.
  double max_mixed_defect = 0.0;
};

CommutingReport commuting_constraint_check(const FundamentalSolution& fsol, double tol = 1e-9);

/// max_{i,j} ||[V_i, V_j]|| over the columns that stay clear of the last two
/// slots (two applications move content at most two slots).
double dilation_commutator_norm(const DilationResult& dil);
/// max_{i,j} ||[S_i, S_j]||.
double tuple_commutator_norm(const OperatorTuple& tuple);

/// Adds eps to entry (row, col) of the diagonal (X_i) or subdiagonal
/// (X_{n-i}^*) block of V_i at slot `slot` (1-based; the subdiagonal block at
/// slot k maps slot k into slot k + 1).
DilationResult perturb_slot_pattern(const DilationResult& dil, int i, bool subdiagonal,
                                    Index slot, Index row, Index col, Complex eps);

/// Relation residuals of a possibly perturbed dilation (same quantities as
/// DilationReport::relations_dev).
std::vector<double> dilation_relation_devs(const DilationResult& dil);

/// dim span{V_n^k emb h : k <= slots, h in H}.
Index shift_orbit_dimension(const DilationResult& dil, double tol = 1e-10);

}  // namespace ay
