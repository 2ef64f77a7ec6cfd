#include "ay/core.hpp"

#include <algorithm>
#include <string>

namespace ay {

const ComplexMatrix& FundamentalSolution::x(int i) const {
  if (i < 1 || i >= n()) {
    throw Error(ErrorCode::IndexOutOfRange, "X index " + std::to_string(i), 0.0, i);
  }
  return x_ops[static_cast<std::size_t>(i - 1)];
}

ComplexMatrix FundamentalSolution::x_ambient(int i) const {
  return defect.basis * x(i) * defect.basis.adjoint();
}

bool FundamentalSolution::residuals_pass() const {
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    const double scale = k < rhs_norms.size() ? rhs_norms[k] : 0.0;
    if (!(residuals[k] <= tol * (1.0 + scale))) return false;
  }
  return true;
}

ComplexMatrix fundamental_rhs(const OperatorTuple& tuple, int i) {
  return tuple.op(i) - tuple.op(tuple.n() - i).adjoint() * tuple.last();
}

FundamentalSolution solve_fundamental(const OperatorTuple& tuple, double tol, double rank_tol) {
  FundamentalSolution out;
  out.tol = tol;
  out.defect = defect(tuple.last(), rank_tol, std::max(tol, rank_tol));
  for (int i = 1; i < tuple.n(); ++i) {
    const ComplexMatrix sigma = fundamental_rhs(tuple, i);
    RestrictedSolve s = try_solve_restricted(out.defect, sigma, tol);
    if (!s.ok) {
      throw Error(ErrorCode::NoSolution,
                  "fundamental equation " + std::to_string(i) + " has no defect-supported solution",
                  s.residual, i);
    }
    const RestrictedSolve alt = solve_restricted_normal(out.defect, sigma, tol);
    out.path_agreement = std::max(out.path_agreement, (alt.x - s.x).norm());
    out.residuals.push_back(s.residual);
    out.rhs_norms.push_back(sigma.norm());
    out.numerical_radii.push_back(numerical_radius(s.x));
    out.x_ops.push_back(std::move(s.x));
  }
  return out;
}

FundamentalSolution adjoint_fundamental(const OperatorTuple& tuple, double tol, double rank_tol) {
  FundamentalSolution out = solve_fundamental(tuple.adjoint(), tol, rank_tol);
  for (auto& x : out.x_ops) x = x.adjoint().eval();
  return out;
}

namespace {

Index resolve_window(const OperatorTuple& tuple, std::optional<Index> window_cols) {
  const Index w = window_cols.value_or(tuple.dim());
  if (w < 0 || w > tuple.dim()) {
    throw Error(ErrorCode::InvalidArgument, "window exceeds the space dimension",
                static_cast<double>(w));
  }
  return w;
}

PredicateReport relation_report(const OperatorTuple& tuple, double tol, Index w) {
  PredicateReport r;
  r.window_cols = w;
  const Index d = tuple.dim();
  const ComplexMatrix& sn = tuple.last();
  r.isometry_dev = column_window_norm(sn.adjoint() * sn - ComplexMatrix::Identity(d, d), w);
  bool ok = r.isometry_dev <= tol;
  for (int i = 1; i < tuple.n(); ++i) {
    r.relation_devs.push_back(column_window_norm(fundamental_rhs(tuple, i), w));
    r.commutator_norms.push_back(column_window_norm(commutator(tuple.op(i), sn), w));
    ok = ok && r.relation_devs.back() <= tol;
  }
  r.pass = ok;
  return r;
}

}  // namespace

PredicateReport is_ay_isometry(const OperatorTuple& tuple, double tol,
                               std::optional<Index> window_cols) {
  return relation_report(tuple, tol, resolve_window(tuple, window_cols));
}

PredicateReport is_ay_unitary(const OperatorTuple& tuple, double tol,
                              std::optional<Index> window_cols) {
  const Index w = resolve_window(tuple, window_cols);
  PredicateReport r = relation_report(tuple, tol, w);
  const Index d = tuple.dim();
  const ComplexMatrix& sn = tuple.last();
  r.coisometry_dev = column_window_norm(sn * sn.adjoint() - ComplexMatrix::Identity(d, d), w);
  r.pass = r.pass && r.coisometry_dev <= tol;
  return r;
}

OperatorTuple compress(const OperatorTuple& tuple, const ComplexMatrix& basis, double tol) {
  if (basis.rows() != tuple.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "basis rows differ from the space dimension");
  }
  const Index m = basis.cols();
  const double ortho = (basis.adjoint() * basis - ComplexMatrix::Identity(m, m)).norm();
  if (ortho > tol) {
    throw Error(ErrorCode::InvalidArgument, "basis columns are not orthonormal", ortho);
  }
  const ComplexMatrix proj_out =
      ComplexMatrix::Identity(tuple.dim(), tuple.dim()) - basis * basis.adjoint();
  std::vector<ComplexMatrix> ops;
  for (int i = 1; i <= tuple.n(); ++i) {
    const double dev = (proj_out * tuple.op(i).adjoint() * basis).norm();
    if (dev > tol) {
      throw Error(ErrorCode::NotCoinvariant, "span is not invariant under S_i^*", dev, i);
    }
    ops.push_back(basis.adjoint() * tuple.op(i) * basis);
  }
  return OperatorTuple(std::move(ops));
}

}  // namespace ay
