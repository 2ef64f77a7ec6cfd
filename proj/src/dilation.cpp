#include "ay/dilation.hpp"

#include <algorithm>
#include <random>

namespace ay {

namespace {

Index slot_offset(const DilationResult& d, Index k) { return d.dim_h + (k - 1) * d.rank; }

}  // namespace

DilationResult schaffer_dilate(const OperatorTuple& tuple, const FundamentalSolution& fsol,
                               Index slots) {
  if (slots < 1) throw Error(ErrorCode::InvalidArgument, "need at least one slot");
  if (fsol.n() != tuple.n() || fsol.defect.ambient_dim() != tuple.dim()) {
    throw Error(ErrorCode::InvalidSolution, "solution does not belong to this tuple");
  }
  if (!fsol.residuals_pass()) {
    double worst = 0.0;
    for (double r : fsol.residuals) worst = std::max(worst, r);
    throw Error(ErrorCode::InvalidSolution, "fundamental residuals exceed tolerance", worst);
  }
  DilationResult dil;
  dil.slots = slots;
  dil.dim_h = tuple.dim();
  dil.rank = fsol.defect.rank;
  dil.source = tuple;
  dil.x_used = fsol;
  const Index m = dil.dim_h;
  const Index r = dil.rank;
  const Index total = dil.dim();
  const ComplexMatrix range = fsol.defect.to_range();
  const int n = tuple.n();

  dil.embedding = ComplexMatrix::Zero(total, m);
  dil.embedding.topRows(m).setIdentity();

  std::vector<ComplexMatrix> ops;
  for (int i = 1; i < n; ++i) {
    ComplexMatrix v = ComplexMatrix::Zero(total, total);
    const ComplexMatrix& xi = fsol.x(i);
    const ComplexMatrix xm_adj = fsol.x(n - i).adjoint();
    v.topLeftCorner(m, m) = tuple.op(i);
    if (r > 0) {
      v.block(slot_offset(dil, 1), 0, r, m) = xm_adj * range;
      for (Index k = 1; k <= slots; ++k) {
        v.block(slot_offset(dil, k), slot_offset(dil, k), r, r) = xi;
        if (k < slots) v.block(slot_offset(dil, k + 1), slot_offset(dil, k), r, r) = xm_adj;
      }
    }
    ops.push_back(std::move(v));
  }
  ComplexMatrix vn = ComplexMatrix::Zero(total, total);
  vn.topLeftCorner(m, m) = tuple.last();
  if (r > 0) {
    vn.block(slot_offset(dil, 1), 0, r, m) = range;
    for (Index k = 1; k < slots; ++k) {
      vn.block(slot_offset(dil, k + 1), slot_offset(dil, k), r, r).setIdentity();
    }
  }
  ops.push_back(std::move(vn));
  dil.v_ops = OperatorTuple(std::move(ops));
  return dil;
}

std::vector<double> dilation_relation_devs(const DilationResult& dil) {
  std::vector<double> out;
  const OperatorTuple& v = dil.v_ops;
  for (int i = 1; i < v.n(); ++i) {
    out.push_back(column_window_norm(fundamental_rhs(v, i), dil.interior_cols()));
  }
  return out;
}

namespace {

struct WordWalker {
  const DilationResult& dil;
  double worst = 0.0;
  std::vector<int> worst_word;
  std::size_t checked = 0;

  void record(const std::vector<int>& word, const ComplexMatrix& vprod,
              const ComplexMatrix& sprod) {
    const Index m = dil.dim_h;
    const double dev = (vprod.topLeftCorner(m, m) - sprod).norm();
    ++checked;
    if (dev > worst || worst_word.empty()) {
      worst = std::max(worst, dev);
      worst_word = word;
    }
  }

  void walk(std::vector<int>& word, const ComplexMatrix& vprod, const ComplexMatrix& sprod,
            Index remaining) {
    record(word, vprod, sprod);
    if (remaining == 0) return;
    for (int i = 1; i <= dil.v_ops.n(); ++i) {
      word.push_back(i);
      walk(word, vprod * dil.v_ops.op(i), sprod * dil.source.op(i), remaining - 1);
      word.pop_back();
    }
  }
};

}  // namespace

DilationReport verify_dilation(const DilationResult& dil, Index max_len,
                               const WordCheckOptions& options) {
  if (max_len < 0) throw Error(ErrorCode::InvalidArgument, "max_len must be >= 0");
  if (max_len > dil.slots) {
    throw Error(ErrorCode::InvalidArgument, "max_len exceeds the slot count",
                static_cast<double>(max_len));
  }
  DilationReport rep;
  const int n = dil.v_ops.n();
  const Index m = dil.dim_h;

  // Number of words of length <= max_len, saturating.
  std::size_t total = 0;
  std::size_t layer = 1;
  for (Index len = 0; len <= max_len && total <= options.exhaustive_limit; ++len) {
    total += layer;
    layer *= static_cast<std::size_t>(n);
  }

  WordWalker walker{dil, 0.0, {}, 0};
  const ComplexMatrix v_id = ComplexMatrix::Identity(dil.dim(), dil.dim());
  const ComplexMatrix s_id = ComplexMatrix::Identity(m, m);
  if (total <= options.exhaustive_limit) {
    std::vector<int> word;
    walker.walk(word, v_id, s_id, max_len);
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick_len(0, max_len);
    std::uniform_int_distribution<int> pick_letter(1, n);
    for (std::size_t s = 0; s < options.sample_count; ++s) {
      const Index len = pick_len(rng);
      std::vector<int> word;
      for (Index k = 0; k < len; ++k) word.push_back(pick_letter(rng));
      walker.record(word, word_product(dil.v_ops, word), word_product(dil.source, word));
    }
  }
  rep.worst_dev = walker.worst;
  rep.worst_word = walker.worst_word;
  rep.words_checked = walker.checked;

  rep.relations_dev = dilation_relation_devs(dil);
  const ComplexMatrix& vn = dil.v_ops.last();
  rep.isometry_dev = column_window_norm(vn.adjoint() * vn - v_id, dil.interior_cols());
  for (int i = 1; i <= n; ++i) {
    const ComplexMatrix& v = dil.v_ops.op(i);
    rep.coinvariance_dev =
        std::max(rep.coinvariance_dev, v.topRightCorner(m, dil.dim() - m).norm());
  }
  const double worst_rel =
      rep.relations_dev.empty()
          ? 0.0
          : *std::max_element(rep.relations_dev.begin(), rep.relations_dev.end());
  rep.pass = rep.worst_dev <= options.word_tol && worst_rel <= options.relation_tol &&
             rep.isometry_dev <= options.relation_tol && rep.coinvariance_dev == 0.0;
  return rep;
}

CommutingReport commuting_constraint_check(const FundamentalSolution& fsol, double tol) {
  CommutingReport rep;
  const int n = fsol.n();
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      rep.max_x_commutator =
          std::max(rep.max_x_commutator, commutator(fsol.x(i), fsol.x(j)).norm());
      const ComplexMatrix lhs = commutator(fsol.x(j), fsol.x(n - i).adjoint());
      const ComplexMatrix rhs = commutator(fsol.x(i), fsol.x(n - j).adjoint());
      rep.max_mixed_defect = std::max(rep.max_mixed_defect, (lhs - rhs).norm());
    }
  }
  rep.pass = rep.max_x_commutator <= tol && rep.max_mixed_defect <= tol;
  return rep;
}

double dilation_commutator_norm(const DilationResult& dil) {
  const Index cols = dil.dim_h + std::max<Index>(dil.slots - 2, 0) * dil.rank;
  double worst = 0.0;
  const int n = dil.v_ops.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      worst = std::max(worst,
                       column_window_norm(commutator(dil.v_ops.op(i), dil.v_ops.op(j)), cols));
    }
  }
  return worst;
}

double tuple_commutator_norm(const OperatorTuple& tuple) {
  double worst = 0.0;
  for (int i = 1; i <= tuple.n(); ++i) {
    for (int j = i + 1; j <= tuple.n(); ++j) {
      worst = std::max(worst, commutator(tuple.op(i), tuple.op(j)).norm());
    }
  }
  return worst;
}

DilationResult perturb_slot_pattern(const DilationResult& dil, int i, bool subdiagonal,
                                    Index slot, Index row, Index col, Complex eps) {
  const int n = dil.v_ops.n();
  if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "perturbed index", 0.0, i);
  const Index last = subdiagonal ? dil.slots - 1 : dil.slots;
  if (slot < 1 || slot > last || row < 0 || col < 0 || row >= dil.rank || col >= dil.rank) {
    throw Error(ErrorCode::IndexOutOfRange, "perturbation outside the slot pattern");
  }
  DilationResult out = dil;
  std::vector<ComplexMatrix> ops = dil.v_ops.ops();
  const Index r0 = slot_offset(dil, subdiagonal ? slot + 1 : slot) + row;
  const Index c0 = slot_offset(dil, slot) + col;
  ops[static_cast<std::size_t>(i - 1)](r0, c0) += eps;
  out.v_ops = OperatorTuple(std::move(ops));
  return out;
}

Index shift_orbit_dimension(const DilationResult& dil, double tol) {
  const Index m = dil.dim_h;
  ComplexMatrix cols(dil.dim(), m * (dil.slots + 1));
  ComplexMatrix cur = dil.embedding;
  for (Index k = 0; k <= dil.slots; ++k) {
    cols.middleCols(k * m, m) = cur;
    cur = (dil.v_ops.last() * cur).eval();
  }
  return range_basis(cols, tol).cols();
}

}  // namespace ay
