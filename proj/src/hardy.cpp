#include "ay/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ay {

LaurentSymbol::LaurentSymbol(Index dim_e, int k_min, std::vector<ComplexMatrix> coeffs)
    : dim_e_(dim_e), k_min_(k_min), coeffs_(std::move(coeffs)) {
  if (dim_e_ < 1) throw Error(ErrorCode::InvalidArgument, "dim_e must be >= 1");
  if (coeffs_.empty()) coeffs_.push_back(ComplexMatrix::Zero(dim_e_, dim_e_));
  for (const auto& a : coeffs_) {
    if (a.rows() != dim_e_ || a.cols() != dim_e_) {
      throw Error(ErrorCode::DimensionMismatch, "coefficient size differs from dim_e");
    }
  }
}

LaurentSymbol LaurentSymbol::zero(Index dim_e) {
  return LaurentSymbol(dim_e, 0, {ComplexMatrix::Zero(dim_e, dim_e)});
}

LaurentSymbol LaurentSymbol::constant(const ComplexMatrix& a) {
  return LaurentSymbol(a.rows(), 0, {a});
}

LaurentSymbol LaurentSymbol::monomial(const ComplexMatrix& a, int k) {
  return LaurentSymbol(a.rows(), k, {a});
}

LaurentSymbol LaurentSymbol::shift(Index dim_e) {
  return monomial(ComplexMatrix::Identity(dim_e, dim_e), 1);
}

LaurentSymbol LaurentSymbol::scalar(int k_min, const std::vector<Complex>& coeffs) {
  std::vector<ComplexMatrix> c;
  for (Complex v : coeffs) c.push_back(ComplexMatrix::Constant(1, 1, v));
  return LaurentSymbol(1, k_min, std::move(c));
}

ComplexMatrix LaurentSymbol::coeff(int k) const {
  if (k < k_min_ || k > k_max()) return ComplexMatrix::Zero(dim_e_, dim_e_);
  return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

int LaurentSymbol::bandwidth() const { return std::max(std::abs(k_min_), std::abs(k_max())); }

LaurentSymbol LaurentSymbol::adjoint() const {
  std::vector<ComplexMatrix> c;
  for (int k = -k_max(); k <= -k_min_; ++k) c.push_back(coeff(-k).adjoint());
  return LaurentSymbol(dim_e_, -k_max(), std::move(c));
}

LaurentSymbol LaurentSymbol::shifted(int m) const {
  return LaurentSymbol(dim_e_, k_min_ + m, coeffs_);
}

LaurentSymbol LaurentSymbol::trimmed(double tol) const {
  int lo = k_min_;
  int hi = k_max();
  while (lo < hi && coeff(lo).norm() <= tol) ++lo;
  while (hi > lo && coeff(hi).norm() <= tol) --hi;
  if (lo == hi && coeff(lo).norm() <= tol) return zero(dim_e_);
  std::vector<ComplexMatrix> c;
  for (int k = lo; k <= hi; ++k) c.push_back(coeff(k));
  return LaurentSymbol(dim_e_, lo, std::move(c));
}

ComplexMatrix LaurentSymbol::evaluate(Complex z) const {
  ComplexMatrix out = ComplexMatrix::Zero(dim_e_, dim_e_);
  for (int k = k_min_; k <= k_max(); ++k) out += std::pow(z, k) * coeff(k);
  return out;
}

namespace {

void require_same_dim(const LaurentSymbol& a, const LaurentSymbol& b) {
  if (a.dim_e() != b.dim_e()) {
    throw Error(ErrorCode::DimensionMismatch, "symbols act on different coefficient spaces");
  }
}

LaurentSymbol combine(const LaurentSymbol& a, const LaurentSymbol& b, Complex sb) {
  require_same_dim(a, b);
  const int lo = std::min(a.k_min(), b.k_min());
  const int hi = std::max(a.k_max(), b.k_max());
  std::vector<ComplexMatrix> c;
  for (int k = lo; k <= hi; ++k) c.push_back(a.coeff(k) + sb * b.coeff(k));
  return LaurentSymbol(a.dim_e(), lo, std::move(c));
}

}  // namespace

LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b) {
  return combine(a, b, 1.0);
}

LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b) {
  return combine(a, b, -1.0);
}

LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b) {
  require_same_dim(a, b);
  const int lo = a.k_min() + b.k_min();
  const int hi = a.k_max() + b.k_max();
  std::vector<ComplexMatrix> c(static_cast<std::size_t>(hi - lo + 1),
                               ComplexMatrix::Zero(a.dim_e(), a.dim_e()));
  for (int j = a.k_min(); j <= a.k_max(); ++j) {
    for (int k = b.k_min(); k <= b.k_max(); ++k) {
      c[static_cast<std::size_t>(j + k - lo)] += a.coeff(j) * b.coeff(k);
    }
  }
  return LaurentSymbol(a.dim_e(), lo, std::move(c));
}

LaurentSymbol operator*(Complex s, const LaurentSymbol& a) {
  std::vector<ComplexMatrix> c;
  for (const auto& m : a.coeffs()) c.push_back(s * m);
  return LaurentSymbol(a.dim_e(), a.k_min(), std::move(c));
}

double symbol_distance(const LaurentSymbol& a, const LaurentSymbol& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  const int lo = std::min(a.k_min(), b.k_min());
  const int hi = std::max(a.k_max(), b.k_max());
  for (int k = lo; k <= hi; ++k) worst = std::max(worst, (a.coeff(k) - b.coeff(k)).norm());
  return worst;
}

std::vector<LaurentSymbol> coanalytic_extension(const std::vector<LaurentSymbol>& f) {
  if (f.empty()) throw Error(ErrorCode::InvalidArgument, "need n - 1 >= 1 functions");
  const Index d = f.front().dim_e();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].dim_e() != d) {
      throw Error(ErrorCode::DimensionMismatch, "f entries act on different spaces", 0.0,
                  static_cast<int>(k + 1));
    }
    if (!f[k].is_analytic()) {
      throw Error(ErrorCode::InvalidArgument, "f entries must be analytic", 0.0,
                  static_cast<int>(k + 1));
    }
  }
  const std::size_t m = f.size();
  std::vector<LaurentSymbol> phi;
  for (std::size_t i = 0; i < m; ++i) {
    const LaurentSymbol& fi = f[i];
    const LaurentSymbol& fm = f[m - 1 - i];
    const int lo = -fm.k_max();
    const int hi = fi.k_max() + 1;
    std::vector<ComplexMatrix> c;
    for (int k = lo; k <= hi; ++k) {
      c.push_back(k >= 1 ? fi.coeff(k - 1) : ComplexMatrix(fm.coeff(-k).adjoint()));
    }
    phi.emplace_back(d, lo, std::move(c));
  }
  return phi;
}

LaurentSymbol analytic_part_shifted(const LaurentSymbol& phi) {
  if (phi.k_max() < 1) return LaurentSymbol::zero(phi.dim_e());
  std::vector<ComplexMatrix> c;
  for (int k = 1; k <= phi.k_max(); ++k) c.push_back(phi.coeff(k));
  return LaurentSymbol(phi.dim_e(), 0, std::move(c));
}

TruncatedToeplitz toeplitz_truncate(const LaurentSymbol& symbol, Index order) {
  const int b = symbol.bandwidth();
  if (order <= b) {
    throw Error(ErrorCode::OrderTooSmall, "order must exceed the bandwidth",
                static_cast<double>(order));
  }
  const Index d = symbol.dim_e();
  TruncatedToeplitz out;
  out.symbol = symbol;
  out.order = order;
  out.exact_cols = order - b;
  out.matrix = ComplexMatrix::Zero(order * d, order * d);
  for (Index j = 0; j < order; ++j) {
    for (int k = symbol.k_min(); k <= symbol.k_max(); ++k) {
      const Index col = j - k;
      if (col >= 0 && col < order) block_of(out.matrix, j, col, d) = symbol.coeff(k);
    }
  }
  return out;
}

ComplexMatrix bilateral_truncate(const LaurentSymbol& symbol, int lo, int hi) {
  const Index d = symbol.dim_e();
  const Index len = hi - lo + 1;
  ComplexMatrix m = ComplexMatrix::Zero(len * d, len * d);
  for (Index j = 0; j < len; ++j) {
    for (int k = symbol.k_min(); k <= symbol.k_max(); ++k) {
      const Index col = j - k;
      if (col >= 0 && col < len) block_of(m, j, col, d) = symbol.coeff(k);
    }
  }
  return m;
}

CanonicalIsometry canonical_ay(const std::vector<LaurentSymbol>& f, Index order) {
  CanonicalIsometry out;
  out.f = f;
  out.phi = coanalytic_extension(f);
  int band = 1;
  for (const auto& p : out.phi) band = std::max(band, p.bandwidth());
  if (order <= 2 * band) {
    throw Error(ErrorCode::OrderTooSmall, "order must exceed twice the bandwidth",
                static_cast<double>(order));
  }
  out.order = order;
  out.dim_e = f.front().dim_e();
  out.exact_cols = order - 1;
  std::vector<ComplexMatrix> ops;
  for (const auto& p : out.phi) ops.push_back(toeplitz_truncate(p, order).matrix);
  ops.push_back(toeplitz_truncate(LaurentSymbol::shift(out.dim_e), order).matrix);
  out.tuple = OperatorTuple(std::move(ops));
  return out;
}

LaurentSymbol symbol_from_toeplitz(const ComplexMatrix& t, Index dim_e, int bandwidth,
                                   double tol) {
  if (t.rows() != t.cols()) throw Error(ErrorCode::NonSquare, "Toeplitz input must be square");
  if (dim_e < 1 || t.rows() % dim_e != 0) {
    throw Error(ErrorCode::DimensionMismatch, "dimension is not a multiple of dim_e");
  }
  const Index order = t.rows() / dim_e;
  if (bandwidth < 0 || bandwidth >= order) {
    throw Error(ErrorCode::OrderTooSmall, "declared bandwidth must be below the order",
                static_cast<double>(bandwidth));
  }
  const Index window = order - bandwidth;
  const int reach = static_cast<int>(window) - 1;
  const int band = std::min(bandwidth, reach);

  double worst_dev = 0.0;
  double worst_out = 0.0;
  std::vector<ComplexMatrix> coeffs;
  for (int k = -reach; k <= reach; ++k) {
    const Index first_row = std::max(0, k);
    const ComplexMatrix base = block_of(t, first_row, first_row - k, dim_e);
    ComplexMatrix offset = ComplexMatrix::Zero(dim_e, dim_e);
    Index count = 0;
    for (Index j = first_row; j < window && j - k < window; ++j) {
      offset += block_of(t, j, j - k, dim_e) - base;
      ++count;
    }
    const ComplexMatrix mean = base + offset / static_cast<double>(count);
    for (Index j = first_row; j < window && j - k < window; ++j) {
      worst_dev = std::max(worst_dev, (block_of(t, j, j - k, dim_e) - mean).norm());
    }
    if (std::abs(k) <= band) {
      coeffs.push_back(mean);
    } else {
      worst_out = std::max(worst_out, mean.norm());
    }
  }
  // Diagonals past the reading window still count toward the band.
  for (int k = reach + 1; k < static_cast<int>(order); ++k) {
    for (Index j = 0; j + k < order; ++j) {
      worst_out = std::max(worst_out, block_of(t, j + k, j, dim_e).norm());
      worst_out = std::max(worst_out, block_of(t, j, j + k, dim_e).norm());
    }
  }
  if (worst_dev > tol) {
    throw Error(ErrorCode::NotToeplitz, "block diagonals vary inside the window", worst_dev);
  }
  if (worst_out > tol) {
    throw Error(ErrorCode::BandExceeded, "mass found beyond the declared bandwidth", worst_out);
  }
  return LaurentSymbol(dim_e, -band, std::move(coeffs));
}

}  // namespace ay
