#include "ay/model.hpp"

#include <algorithm>
#include <cmath>

namespace ay {

LaurentSymbol char_function(const ComplexMatrix& a, Index order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const DefectData da = defect(a);
  const DefectData ds = defect(a.adjoint());
  const Index r = std::max(da.rank, ds.rank);
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "A is unitary; both defect spaces vanish");

  // Coefficients as ran D_A -> ran D_{A^*}, zero padded to r x r.
  const ComplexMatrix into = ds.basis.adjoint();
  const ComplexMatrix from = da.basis;
  auto padded = [&](const ComplexMatrix& m) {
    ComplexMatrix out = ComplexMatrix::Zero(r, r);
    out.topLeftCorner(m.rows(), m.cols()) = m;
    return out;
  };
  std::vector<ComplexMatrix> coeffs;
  coeffs.push_back(padded(into * (-a) * from));
  ComplexMatrix power = da.d_matrix * from;
  for (Index k = 1; k < order; ++k) {
    coeffs.push_back(padded(into * ds.d_matrix * power));
    power = (a.adjoint() * power).eval();
  }
  return LaurentSymbol(r, 0, std::move(coeffs));
}

double ModelEmbedding::isometry_defect() const {
  const Index m = w_matrix.cols();
  return (w_matrix.adjoint() * w_matrix - ComplexMatrix::Identity(m, m)).norm();
}

ModelEmbedding embed_w(const OperatorTuple& tuple, Index order) {
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "order must be >= 2");
  const ComplexMatrix& sn = tuple.last();
  ModelEmbedding emb;
  emb.order = order;
  emb.decay_rate = spectral_radius(sn);
  if (emb.decay_rate >= kPureThreshold) {
    throw Error(ErrorCode::NotPure, "spectral radius of S_n is not below 1", emb.decay_rate);
  }
  emb.defect_star = defect(sn.adjoint());
  emb.theta_coeffs = char_function(sn, order);
  const Index r = emb.defect_star.rank;
  const Index m = tuple.dim();
  emb.w_matrix.resize(order * r, m);
  ComplexMatrix block = emb.defect_star.to_range();
  for (Index k = 0; k < order; ++k) {
    emb.w_matrix.middleRows(k * r, r) = block;
    block = (block * sn.adjoint()).eval();
  }
  const ComplexMatrix tz = toeplitz_truncate(LaurentSymbol::shift(r), order).matrix;
  const ComplexMatrix diff = emb.w_matrix * sn.adjoint() - tz.adjoint() * emb.w_matrix;
  emb.intertwining_dev = diff.topRows((order - 1) * r).norm();
  return emb;
}

ComplementarityReport complementarity_check(const ModelEmbedding& emb, double tol) {
  ComplementarityReport rep;
  const Index r = emb.block_dim();
  const Index total = emb.order * r;
  const ComplexMatrix mt = toeplitz_truncate(emb.theta_coeffs, emb.order).matrix;
  // Theta may be zero padded past the rank of D_{S_n^*}; compare on that block.
  const Index pad = emb.theta_coeffs.dim_e();
  ComplexMatrix sum = ComplexMatrix::Zero(total, total);
  sum += emb.w_matrix * emb.w_matrix.adjoint();
  for (Index j = 0; j < emb.order; ++j) {
    for (Index k = 0; k < emb.order; ++k) {
      ComplexMatrix acc = ComplexMatrix::Zero(pad, pad);
      for (Index l = 0; l <= std::min(j, k); ++l) {
        acc += block_of(mt, j, l, pad) * block_of(mt, k, l, pad).adjoint();
      }
      sum.block(j * r, k * r, r, r) += acc.topLeftCorner(r, r);
    }
  }
  sum -= ComplexMatrix::Identity(total, total);
  rep.window_blocks = emb.order - 1;
  rep.deviation = sum.topLeftCorner(rep.window_blocks * r, rep.window_blocks * r).norm();
  rep.pass = rep.deviation <= tol;
  return rep;
}

PureModel pure_model(const OperatorTuple& tuple, Index order, double tol) {
  const DefectData dn = defect(tuple.last(), kDefaultRankTol, tol);
  if (dn.rank == 0) throw Error(ErrorCode::NotPure, "S_n is an isometry");
  solve_fundamental(tuple, tol);
  const FundamentalSolution adj = adjoint_fundamental(tuple, tol);

  PureModel out;
  out.embedding = embed_w(tuple, order);
  out.y = adj.x_ops;
  const int n = tuple.n();
  const Index r = out.embedding.block_dim();
  const ComplexMatrix& w = out.embedding.w_matrix;
  const double scale = 1.0 + w.norm();
  for (int i = 1; i < n; ++i) {
    const LaurentSymbol sym(r, 0, {out.y[static_cast<std::size_t>(i - 1)],
                                   out.y[static_cast<std::size_t>(n - i - 1)].adjoint()});
    const ComplexMatrix t = toeplitz_truncate(sym, order).matrix;
    const ComplexMatrix diff = w * tuple.op(i).adjoint() - t.adjoint() * w;
    const double dev = diff.topRows((order - 1) * r).norm();
    out.intertwining_devs.push_back(dev);
    if (dev > tol * scale) {
      throw Error(ErrorCode::ModelMismatch, "model intertwining fails", dev, i);
    }
  }
  return out;
}

double telescoped_isometry_defect(const ComplexMatrix& sn, Index order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  ComplexMatrix power = ComplexMatrix::Identity(sn.rows(), sn.cols());
  for (Index k = 0; k < order; ++k) power = (sn * power).eval();
  return (power * power.adjoint()).norm();
}

double isometry_decay_slope(const OperatorTuple& tuple, const std::vector<Index>& orders) {
  if (orders.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two orders");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (Index order : orders) {
    const double x = static_cast<double>(order);
    const double y = std::log(telescoped_isometry_defect(tuple.last(), order));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(orders.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

Index auto_model_order(double rho, Index requested, Index cap) {
  Index order = requested;
  while (order < cap && std::pow(rho, static_cast<double>(order)) > 1e-8) ++order;
  return order;
}

}  // namespace ay
