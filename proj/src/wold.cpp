#include "ay/wold.hpp"
#include "ay/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ay {

namespace {

constexpr double kSubspaceTol = 1e-8;

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double tuple_scale(const OperatorTuple& t) {
  double s = 1.0;
  for (const auto& m : t.ops()) s = std::max(s, m.norm());
  return s;
}

OperatorTuple restrict_to(const OperatorTuple& t, const ComplexMatrix& basis) {
  std::vector<ComplexMatrix> ops;
  for (const auto& m : t.ops()) ops.push_back(basis.adjoint() * m * basis);
  return OperatorTuple(std::move(ops));
}

}  // namespace

double RelationReport::worst() const { return max_of(devs); }

WoldResult wold_decompose(const OperatorTuple& tuple, std::optional<Index> window,
                          std::optional<Index> max_power, double tol) {
  const Index dim = tuple.dim();
  const int n = tuple.n();
  const ComplexMatrix& sn = tuple.last();
  const Index powers = max_power.value_or(2 * dim);
  const double gate = 10.0 * tol * tuple_scale(tuple);

  // H_1: the stable member of the chain ran S_n^k.
  ComplexMatrix q = ComplexMatrix::Identity(dim, dim);
  bool stable = false;
  for (Index k = 0; k < powers && !stable; ++k) {
    ComplexMatrix next = range_basis(sn * q, kSubspaceTol);
    stable = next.cols() == q.cols();
    q = std::move(next);
  }
  if (!stable) {
    throw Error(ErrorCode::NotAYIsometry, "range chain of S_n did not stabilize within max_power",
                static_cast<double>(powers));
  }

  WoldResult res;
  res.unitary_basis = q;
  res.p_unitary = q * q.adjoint();
  const Index u = q.cols();
  const ComplexMatrix& p = res.p_unitary;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  res.deviations.projection =
      std::max((p - p.adjoint()).norm(), (p * p - p).norm());
  for (const auto& s : tuple.ops()) {
    const double red = ((id - p) * s * p).norm() + (p * s * (id - p)).norm();
    res.deviations.reducing = std::max(res.deviations.reducing, red);
  }

  res.unitary_tuple = restrict_to(tuple, q);
  {
    const ComplexMatrix& un = res.unitary_tuple.last();
    const ComplexMatrix iu = ComplexMatrix::Identity(u, u);
    double dev = std::max((un.adjoint() * un - iu).norm(), (un * un.adjoint() - iu).norm());
    for (int i = 1; i < n; ++i) {
      const ComplexMatrix rel = res.unitary_tuple.op(i) -
                                res.unitary_tuple.op(n - i).adjoint() * un;
      dev = std::max(dev, rel.norm());
    }
    res.deviations.unitary_part = dev;
  }

  if (u < dim) {
    const ComplexMatrix q2 = null_basis(q.adjoint(), kSubspaceTol);
    const ComplexMatrix wand = q2 * null_basis(sn.adjoint() * q2, kSubspaceTol);
    const Index d = wand.cols();
    if (d == 0 || q2.cols() % d != 0) {
      throw Error(ErrorCode::NotAYIsometry,
                  "pure part is not a multiple of the wandering space", static_cast<double>(d));
    }
    const Index order = q2.cols() / d;
    res.dim_e = d;
    res.pure_order = order;
    res.pure_basis.resize(dim, order * d);
    ComplexMatrix cur = wand;
    for (Index k = 0; k < order; ++k) {
      res.pure_basis.middleCols(k * d, d) = cur;
      cur = (sn * cur).eval();
    }
    const ComplexMatrix& wb = res.pure_basis;
    res.deviations.basis =
        (wb.adjoint() * wb - ComplexMatrix::Identity(order * d, order * d)).norm() +
        (q.adjoint() * wb).norm();

    const OperatorTuple pure = restrict_to(tuple, wb);
    const ComplexMatrix shift =
        toeplitz_truncate(LaurentSymbol::shift(d), order).matrix;
    res.deviations.shift = (pure.last() - shift).norm();

    const Index w = window.value_or(order);
    if (w < 1 || w > order) {
      throw Error(ErrorCode::WindowTooSmall, "window must lie in [1, N] blocks",
                  static_cast<double>(w));
    }
    res.interior_window = w;
    for (int i = 1; i < n; ++i) {
      res.deviations.pure_relation = std::max(
          res.deviations.pure_relation, column_window_norm(fundamental_rhs(pure, i), (w - 1) * d));
    }

    const int band = static_cast<int>((w - 1) / 2);
    for (int i = 1; i < n; ++i) {
      const ComplexMatrix lead = pure.op(i).topLeftCorner(w * d, w * d);
      try {
        res.phi_recovered.push_back(symbol_from_toeplitz(lead, d, band, gate).trimmed(gate));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BandExceeded) {
          throw Error(ErrorCode::WindowTooSmall, "symbol bandwidth exceeds the interior window",
                      e.value(), i);
        }
        throw Error(ErrorCode::NotAYIsometry, "pure part is not block Toeplitz", e.value(), i);
      }
    }
    for (int i = 1; i < n; ++i) {
      const LaurentSymbol& phi = res.phi_recovered[static_cast<std::size_t>(i - 1)];
      const LaurentSymbol& mirror = res.phi_recovered[static_cast<std::size_t>(n - i - 1)];
      for (int k = std::min(phi.k_min(), 1 - mirror.k_max()); k <= 0; ++k) {
        const double dev = (phi.coeff(k) - mirror.coeff(1 - k).adjoint()).norm();
        res.deviations.mirror = std::max(res.deviations.mirror, dev);
      }
      res.f_recovered.push_back(analytic_part_shifted(phi));
    }
  }

  const WoldDeviations& dv = res.deviations;
  const double worst = std::max({dv.projection, dv.reducing, dv.unitary_part, dv.basis, dv.shift,
                                 dv.pure_relation, dv.mirror});
  if (worst > gate) {
    throw Error(ErrorCode::NotAYIsometry, "decomposition relations fail on the window", worst);
  }
  return res;
}

RelationReport verify_determinant_relation(const WoldResult& wres, const OperatorTuple& original,
                                           double tol) {
  RelationReport rep;
  const int n = original.n();
  const Index d = wres.dim_e;
  const Index order = wres.pure_order;
  ComplexMatrix p0;
  if (order > 0) {
    p0 = ComplexMatrix::Zero(order * d, order * d);
    p0.topLeftCorner(d, d).setIdentity();
  }
  for (int i = 1; i < n; ++i) {
    const ComplexMatrix lhs = original.op(n - i).adjoint() - original.op(i) * original.last().adjoint();
    ComplexMatrix rhs = ComplexMatrix::Zero(original.dim(), original.dim());
    if (order > 0) {
      const ComplexMatrix tf =
          toeplitz_truncate(wres.f_recovered[static_cast<std::size_t>(i - 1)], order).matrix;
      rhs = wres.pure_basis * tf * p0 * wres.pure_basis.adjoint();
    }
    rep.devs.push_back((lhs - rhs).norm());
  }
  rep.pass = rep.worst() <= tol;
  return rep;
}

CsFactorization cs_factorize(const OperatorTuple& tuple, const WoldResult& wres, double tol) {
  if (wres.dim_h1() > 0) {
    throw Error(ErrorCode::HasUnitaryPart, "the tuple has a nonzero unitary part",
                static_cast<double>(wres.dim_h1()));
  }
  CsFactorization out;
  const int n = tuple.n();
  for (int i = 1; i < n; ++i) {
    const ComplexMatrix tf =
        toeplitz_truncate(wres.f_recovered[static_cast<std::size_t>(i - 1)], wres.pure_order)
            .matrix;
    out.c_ops.push_back(wres.pure_basis * tf * wres.pure_basis.adjoint());
  }
  const ComplexMatrix& sn = tuple.last();
  for (int i = 1; i < n; ++i) {
    const ComplexMatrix& ci = out.c_ops[static_cast<std::size_t>(i - 1)];
    const ComplexMatrix& cm = out.c_ops[static_cast<std::size_t>(n - i - 1)];
    out.relation_devs.push_back((tuple.op(i) - ci * sn - cm.adjoint()).norm());
    out.commutator_devs.push_back(commutator(ci, sn).norm());
  }
  out.pass = max_of(out.relation_devs) <= tol && max_of(out.commutator_devs) <= tol;
  return out;
}

UnitaryExtension extend_to_unitary(const WoldResult& wres, const OperatorTuple& original,
                                   std::optional<Index> padding) {
  UnitaryExtension ext;
  const int n = original.n();
  const Index dim = original.dim();
  const Index u = wres.dim_h1();
  const Index d = wres.dim_e;
  const Index order = wres.pure_order;

  if (order == 0) {
    ext.tuple = original;
    ext.embedding = ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix& sn = original.last();
    ext.unitary_dev = (sn.adjoint() * sn - ComplexMatrix::Identity(dim, dim)).norm();
    return ext;
  }

  int band = 1;
  for (const auto& phi : wres.phi_recovered) band = std::max(band, phi.bandwidth());
  const Index pad = padding.value_or(band);
  if (pad < 0) throw Error(ErrorCode::InvalidArgument, "padding must be >= 0");
  ext.padding = pad;
  const int lo = -static_cast<int>(pad);
  const int hi = static_cast<int>(order - 1 + pad);
  const Index len = hi - lo + 1;
  const Index total = u + len * d;

  ext.embedding = ComplexMatrix::Zero(total, dim);
  ext.embedding.topRows(u) = wres.unitary_basis.adjoint();
  ext.embedding.middleRows(u + pad * d, order * d) = wres.pure_basis.adjoint();

  std::vector<ComplexMatrix> ops;
  for (int i = 1; i <= n; ++i) {
    const LaurentSymbol sym = i < n ? wres.phi_recovered[static_cast<std::size_t>(i - 1)]
                                    : LaurentSymbol::shift(d);
    ComplexMatrix r = ComplexMatrix::Zero(total, total);
    r.topLeftCorner(u, u) = wres.unitary_tuple.op(i);
    r.bottomRightCorner(len * d, len * d) = bilateral_truncate(sym, lo, hi);
    ops.push_back(std::move(r));
  }
  ext.tuple = OperatorTuple(std::move(ops));

  int reach = 1;
  for (const auto& phi : wres.phi_recovered) reach = std::max(reach, phi.k_max());
  ext.interior_blocks = std::max<Index>(order - reach, 0);
  ComplexMatrix sel(dim, u + ext.interior_blocks * d);
  sel << wres.unitary_basis, wres.pure_basis.leftCols(ext.interior_blocks * d);
  for (int i = 1; i <= n; ++i) {
    const ComplexMatrix& r = ext.tuple.op(i);
    const ComplexMatrix diff = r * ext.embedding - ext.embedding * original.op(i);
    ext.intertwining_dev = std::max(ext.intertwining_dev, (diff * sel).norm());
    ext.compression_dev = std::max(
        ext.compression_dev, (ext.embedding.adjoint() * r * ext.embedding - original.op(i)).norm());
  }
  const ComplexMatrix& rn = ext.tuple.last();
  const ComplexMatrix gram = rn.adjoint() * rn - ComplexMatrix::Identity(total, total);
  ext.unitary_dev = gram.leftCols(total - d).norm();
  return ext;
}

SymbolTransfer symbol_transfer(const LaurentSymbol& theta, const std::vector<LaurentSymbol>& phi,
                               Index order, double tol) {
  if (!theta.is_analytic()) {
    throw Error(ErrorCode::InvalidArgument, "theta must be analytic");
  }
  const Index d = theta.dim_e();
  SymbolTransfer out;
  for (int k = 0; k < kInnerSamples; ++k) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / kInnerSamples);
    const ComplexMatrix t = theta.evaluate(z);
    out.inner_dev =
        std::max(out.inner_dev, (t.adjoint() * t - ComplexMatrix::Identity(d, d)).norm());
  }
  if (out.inner_dev > tol) {
    throw Error(ErrorCode::NotInner, "theta is not isometric on the circle", out.inner_dev);
  }

  const int bt = theta.k_max();
  int bp = 0;
  for (const auto& s : phi) {
    if (s.dim_e() != d) throw Error(ErrorCode::DimensionMismatch, "phi and theta differ in size");
    bp = std::max(bp, s.bandwidth());
  }
  const int bpsi = bp + 2 * bt;
  const Index exact = order - bt;
  const Index invariant_cols = order - 3 * bt - bp;
  if (exact - bpsi < bpsi + 1 || invariant_cols < 1) {
    throw Error(ErrorCode::OrderTooSmall, "order too small for the symbol bandwidths",
                static_cast<double>(order));
  }
  const ComplexMatrix mt = toeplitz_truncate(theta, order).matrix;
  const ComplexMatrix r = mt.leftCols(exact * d);
  const ComplexMatrix proj_out =
      ComplexMatrix::Identity(order * d, order * d) - r * r.adjoint();

  for (std::size_t i = 0; i < phi.size(); ++i) {
    const ComplexMatrix tp = toeplitz_truncate(phi[i], order).matrix;
    const double dev = (proj_out * tp * r.leftCols(invariant_cols * d)).norm();
    out.invariance_devs.push_back(dev);
    if (dev > tol) {
      throw Error(ErrorCode::NotInvariant, "ran M_theta is not invariant under T_phi", dev,
                  static_cast<int>(i + 1));
    }
    const ComplexMatrix comp = r.adjoint() * tp * r;
    LaurentSymbol psi = symbol_from_toeplitz(comp, d, bpsi, tol).trimmed(tol);
    out.identity_dev = std::max(out.identity_dev, symbol_distance(phi[i] * theta, theta * psi));
    out.psi.push_back(std::move(psi));
  }
  return out;
}

}  // namespace ay
