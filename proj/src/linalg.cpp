#include "ay/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ay {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotAContraction: return "NotAContraction";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotToeplitz: return "NotToeplitz";
    case ErrorCode::BandExceeded: return "BandExceeded";
    case ErrorCode::InvalidSolution: return "InvalidSolution";
    case ErrorCode::NotCoinvariant: return "NotCoinvariant";
    case ErrorCode::NotAYIsometry: return "NotAYIsometry";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::HasUnitaryPart: return "HasUnitaryPart";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::ZeroTooCloseToCircle: return "ZeroTooCloseToCircle";
    case ErrorCode::BandwidthTooLarge: return "BandwidthTooLarge";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ComplexMatrix DefectData::to_range() const {
  return values.cast<Complex>().asDiagonal() * basis.adjoint();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double frobenius(const ComplexMatrix& m) { return m.norm(); }

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

DefectData defect(const ComplexMatrix& t, double tol, double contraction_tol) {
  if (t.rows() != t.cols()) {
    throw Error(ErrorCode::NonSquare, "defect needs a square operator");
  }
  const double norm = spectral_norm(t);
  if (norm > 1.0 + (contraction_tol >= 0.0 ? contraction_tol : tol)) {
    throw Error(ErrorCode::NotAContraction, "spectral norm exceeds 1 + tol", norm);
  }
  const Index dim = t.rows();
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim) - t.adjoint() * t;
  m = (0.5 * (m + m.adjoint())).eval();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0);
  const double lambda_max = dim > 0 ? lambda.maxCoeff() : 0.0;
  // lambda_max at rounding level counts as zero.
  const double cutoff = lambda_max > tol ? tol * lambda_max : tol;

  std::vector<Index> kept;
  for (Index k = 0; k < dim; ++k) {
    if (lambda(k) > cutoff) {
      kept.push_back(k);
    } else {
      lambda(k) = 0.0;
    }
  }

  DefectData out;
  out.tol_used = tol;
  out.rank = static_cast<Index>(kept.size());
  const ComplexMatrix& v = es.eigenvectors();
  out.d_matrix = v * lambda.cwiseSqrt().cast<Complex>().asDiagonal() * v.adjoint();
  out.basis.resize(dim, out.rank);
  out.values.resize(out.rank);
  // Largest eigenvalues first.
  for (Index j = 0; j < out.rank; ++j) {
    const Index k = kept[kept.size() - 1 - static_cast<std::size_t>(j)];
    out.basis.col(j) = v.col(k);
    out.values(j) = std::sqrt(lambda(k));
  }
  return out;
}

double real_part_top_eigenvalue(const ComplexMatrix& x, double theta) {
  const Complex phase = std::polar(1.0, theta);
  const ComplexMatrix h = 0.5 * (phase * x + std::conj(phase) * x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.rows() - 1);
}

double numerical_radius(const ComplexMatrix& x, int angle_samples, double refine_tol) {
  if (x.rows() != x.cols()) {
    throw Error(ErrorCode::NonSquare, "numerical radius needs a square operator");
  }
  if (angle_samples < 8) {
    throw Error(ErrorCode::InvalidArgument, "numerical radius needs at least 8 angle samples");
  }
  if (x.size() == 0) return 0.0;

  const double step = 2.0 * std::numbers::pi / angle_samples;
  std::vector<double> f(static_cast<std::size_t>(angle_samples));
  for (int k = 0; k < angle_samples; ++k) {
    f[static_cast<std::size_t>(k)] = real_part_top_eigenvalue(x, k * step);
  }
  double best = *std::max_element(f.begin(), f.end());

  // Candidate brackets: strict sampled local maxima, best first.
  std::vector<int> peaks;
  for (int k = 0; k < angle_samples; ++k) {
    const double prev = f[static_cast<std::size_t>((k + angle_samples - 1) % angle_samples)];
    const double next = f[static_cast<std::size_t>((k + 1) % angle_samples)];
    const double here = f[static_cast<std::size_t>(k)];
    if (here > prev && here >= next) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
    return f[static_cast<std::size_t>(a)] > f[static_cast<std::size_t>(b)];
  });
  constexpr std::size_t kMaxBrackets = 8;
  if (peaks.size() > kMaxBrackets) peaks.resize(kMaxBrackets);

  for (int k : peaks) {
    double lo = (k - 1) * step;
    double hi = (k + 1) * step;
    while (hi - lo > refine_tol) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      const double f1 = real_part_top_eigenvalue(x, m1);
      const double f2 = real_part_top_eigenvalue(x, m2);
      best = std::max({best, f1, f2});
      if (f1 < f2) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    best = std::max(best, real_part_top_eigenvalue(x, 0.5 * (lo + hi)));
  }
  return best;
}

ComplexMatrix range_basis(const ComplexMatrix& m, double tol) {
  if (m.cols() == 0 || m.rows() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = s(0) > tol ? tol * s(0) : tol;
  Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

ComplexMatrix null_basis(const ComplexMatrix& m, double tol) {
  const Index n = m.cols();
  if (n == 0) return ComplexMatrix(0, 0);
  if (m.rows() == 0) return ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = s(0) > tol ? tol * s(0) : tol;
  Index r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  return svd.matrixV().rightCols(n - r);
}

ComplexMatrix expand_on_defect(const DefectData& d, const ComplexMatrix& x) {
  const ComplexMatrix r = d.to_range();
  return r.adjoint() * x * r;
}

namespace {

RestrictedSolve project_on_defect(const DefectData& d, const ComplexMatrix& sigma, double tol) {
  if (sigma.rows() != sigma.cols() || sigma.rows() != d.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "Sigma must match the defect's ambient dimension");
  }
  RestrictedSolve out;
  const auto inv = d.values.cwiseInverse().cast<Complex>().asDiagonal();
  out.x = inv * (d.basis.adjoint() * sigma * d.basis) * inv;
  out.residual = (sigma - expand_on_defect(d, out.x)).norm();
  out.ok = out.residual <= tol * (1.0 + sigma.norm());
  return out;
}

}  // namespace

ComplexMatrix solve_restricted(const DefectData& d, const ComplexMatrix& sigma, double tol) {
  RestrictedSolve s = project_on_defect(d, sigma, tol);
  if (!s.ok) {
    throw Error(ErrorCode::NoSolution, "Sigma has components outside ran D (x) ran D",
                s.residual);
  }
  return std::move(s.x);
}

RestrictedSolve try_solve_restricted(const DefectData& d, const ComplexMatrix& sigma,
                                     double tol) {
  return project_on_defect(d, sigma, tol);
}

RestrictedSolve solve_restricted_normal(const DefectData& d, const ComplexMatrix& sigma,
                                        double tol) {
  if (sigma.rows() != sigma.cols() || sigma.rows() != d.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "Sigma must match the defect's ambient dimension");
  }
  RestrictedSolve out;
  const ComplexMatrix g = d.d_matrix * d.basis;
  const ComplexMatrix gram = g.adjoint() * g;
  Eigen::LDLT<ComplexMatrix> ldlt(gram);
  const ComplexMatrix left = ldlt.solve(g.adjoint() * sigma * g);
  // X = gram^{-1} (G* Sigma G) gram^{-1}; gram is Hermitian.
  out.x = ldlt.solve(left.adjoint()).adjoint();
  out.residual = (g * out.x * g.adjoint() - sigma).norm();
  out.ok = out.residual <= tol * (1.0 + sigma.norm());
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double column_window_norm(const ComplexMatrix& m, Index cols) {
  return m.leftCols(std::min(cols, m.cols())).norm();
}

}  // namespace ay
