#include "ay/ttoeplitz.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

#include "ay/core.hpp"

namespace ay {

double BlaschkeProduct::max_modulus() const {
  double m = 0.0;
  for (Complex a : zeros) m = std::max(m, std::abs(a));
  return m;
}

Complex BlaschkeProduct::evaluate(Complex z) const {
  Complex v = unimodular;
  for (Complex a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

namespace {

// Coefficients of (z - a) / (1 - conj(a) z).
ComplexVector factor_series(Complex a, Index count) {
  ComplexVector f = ComplexVector::Zero(count);
  if (count == 0) return f;
  f(0) = -a;
  Complex p = 1.0;
  const double scale = 1.0 - std::norm(a);
  for (Index m = 1; m < count; ++m) {
    f(m) = p * scale;
    p *= std::conj(a);
  }
  return f;
}

// Coefficients of sqrt(1 - |a|^2) / (1 - conj(a) z).
ComplexVector kernel_series(Complex a, Index count) {
  ComplexVector f(count);
  Complex p = std::sqrt(1.0 - std::norm(a));
  for (Index m = 0; m < count; ++m) {
    f(m) = p;
    p *= std::conj(a);
  }
  return f;
}

ComplexVector truncated_product(const ComplexVector& x, const ComplexVector& y) {
  const Index count = x.size();
  ComplexVector out = ComplexVector::Zero(count);
  for (Index j = 0; j < count; ++j) {
    if (x(j) == Complex(0.0)) continue;
    for (Index k = 0; j + k < count; ++k) out(j + k) += x(j) * y(k);
  }
  return out;
}

Index tail_length(const BlaschkeProduct& u) {
  const double rho = u.max_modulus();
  if (rho == 0.0) return 0;
  return static_cast<Index>(std::ceil(std::log(kTailBudget) / std::log(rho)));
}

}  // namespace

ComplexVector BlaschkeProduct::taylor(Index count) const {
  ComplexVector out = ComplexVector::Zero(count);
  if (count == 0) return out;
  out(0) = unimodular;
  for (Complex a : zeros) out = truncated_product(out, factor_series(a, count));
  return out;
}

void validate(const BlaschkeProduct& u) {
  if (u.zeros.empty()) throw Error(ErrorCode::InvalidArgument, "Blaschke product needs a zero");
  for (std::size_t k = 0; k < u.zeros.size(); ++k) {
    const double r = std::abs(u.zeros[k]);
    if (!(r <= 1.0 - kZeroMargin)) {
      throw Error(ErrorCode::ZeroTooCloseToCircle, "zero too close to the unit circle", r,
                  static_cast<int>(k + 1));
    }
  }
  if (std::abs(std::abs(u.unimodular) - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "leading constant must be unimodular",
                std::abs(u.unimodular));
  }
}

ComplexVector ModelSpaceKu::conjugate(const ComplexVector& v) const {
  return conj_matrix * v.conjugate();
}

ComplexMatrix ModelSpaceKu::conjugate_operator(const ComplexMatrix& a) const {
  return conj_matrix * a.conjugate() * conj_matrix.conjugate();
}

ModelSpaceKu build_model_space(const BlaschkeProduct& u, Index ambient_order) {
  validate(u);
  const Index d = u.degree();
  ModelSpaceKu space;
  space.blaschke = u;
  space.ambient_order = std::max({ambient_order, tail_length(u) + 8 * d, 2 * d + 2});
  const Index n = space.ambient_order;
  const Index wide = 2 * n;

  ComplexMatrix full(wide, d);
  ComplexVector prefix = ComplexVector::Zero(wide);
  prefix(0) = 1.0;
  for (Index k = 0; k < d; ++k) {
    const Complex a = u.zeros[static_cast<std::size_t>(k)];
    full.col(k) = truncated_product(prefix, kernel_series(a, wide));
    prefix = truncated_product(prefix, factor_series(a, wide));
  }
  space.basis = full.topRows(n);
  space.tail_bound = 0.0;
  for (Index k = 0; k < d; ++k) {
    space.tail_bound = std::max(space.tail_bound, full.col(k).tail(wide - n).norm());
  }

  // (C g)_m = sum_k u_{m+k+1} conj(g_k): a Hankel matrix in u.
  const ComplexVector uc = u.taylor(wide + 1);
  ComplexMatrix hankel(n, n);
  for (Index m = 0; m < n; ++m) {
    for (Index k = 0; k < n; ++k) hankel(m, k) = uc(m + k + 1);
  }
  space.conj_matrix = space.basis.adjoint() * hankel * space.basis.conjugate();
  space.k0 = space.basis.row(0).adjoint();
  space.k0_tilde = space.conjugate(space.k0);
  return space;
}

ComplexMatrix truncated_toeplitz(const ModelSpaceKu& space, const LaurentSymbol& phi) {
  if (phi.dim_e() != 1) throw Error(ErrorCode::DimensionMismatch, "symbol must be scalar");
  if (2 * phi.bandwidth() >= space.ambient_order) {
    throw Error(ErrorCode::BandwidthTooLarge, "symbol bandwidth must stay below N / 2",
                static_cast<double>(phi.bandwidth()));
  }
  const ComplexMatrix t = toeplitz_truncate(phi, space.ambient_order).matrix;
  return space.basis.adjoint() * t * space.basis;
}

double ConjugationReport::worst() const {
  return std::max({involution_dev, antiunitary_dev, symmetry_dev, defect_star_dev, defect_dev});
}

ConjugationReport conjugation_identity_check(const ModelSpaceKu& space, const LaurentSymbol& phi,
                                             double tol) {
  ConjugationReport rep;
  const Index d = space.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix& cm = space.conj_matrix;
  rep.involution_dev = (cm * cm.conjugate() - id).norm();
  rep.antiunitary_dev = (cm.adjoint() * cm - id).norm();
  const ComplexMatrix a = truncated_toeplitz(space, phi);
  rep.symmetry_dev = (space.conjugate_operator(a) - a.adjoint()).norm();
  const ComplexMatrix az = truncated_toeplitz(space, LaurentSymbol::scalar(1, {1.0}));
  rep.defect_star_dev = (id - az * az.adjoint() - space.k0 * space.k0.adjoint()).norm();
  rep.defect_dev =
      (id - az.adjoint() * az - space.k0_tilde * space.k0_tilde.adjoint()).norm();
  rep.pass = rep.worst() <= tol;
  return rep;
}

double distance_from_sarason_kernel(const ModelSpaceKu& space, const LaurentSymbol& chi) {
  if (chi.dim_e() != 1) throw Error(ErrorCode::DimensionMismatch, "symbol must be scalar");
  const Index d = space.dim();
  const Index band = std::max<Index>(chi.bandwidth(), d);
  const Index margin = std::max(d, tail_length(space.blaschke) + 2 * d);
  const Index w = band + margin;
  const Index len = 2 * w + 1;
  const ComplexVector uc = space.blaschke.taylor(w + 1);

  ComplexVector target = ComplexVector::Zero(len);
  for (int k = chi.k_min(); k <= chi.k_max(); ++k) target(k + w) = chi.coeff(k)(0, 0);
  const double scale = target.norm();
  if (scale == 0.0) return 0.0;

  // u z^k and conj(u z^k) for k <= band; their tails past the window are below
  // the tail budget.
  ComplexMatrix gens = ComplexMatrix::Zero(len, 2 * (band + 1));
  for (Index k = 0; k <= band; ++k) {
    for (Index j = 0; k + j <= w; ++j) {
      gens(k + j + w, 2 * k) = uc(j);
      gens(w - (k + j), 2 * k + 1) = std::conj(uc(j));
    }
  }
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(gens);
  const ComplexVector coef = cod.solve(target);
  return (target - gens * coef).norm() / scale;
}

namespace {

constexpr double kOracleThreshold = 1e-6;

}  // namespace

EquivalenceResult symbol_equivalence(const ModelSpaceKu& space, const LaurentSymbol& phi,
                                     const LaurentSymbol& psi, double tol) {
  EquivalenceResult res;
  const LaurentSymbol chi = phi - psi;
  double size = 0.0;
  for (const auto& c : chi.coeffs()) size = std::max(size, c.norm());
  res.operator_norm = spectral_norm(truncated_toeplitz(space, chi));
  res.equivalent = res.operator_norm <= tol * (1.0 + size);
  res.projection_residual = distance_from_sarason_kernel(space, chi);
  res.oracle_agrees = (res.projection_residual <= kOracleThreshold) == res.equivalent;
  return res;
}

LaurentSymbol ay_linear_symbol(Complex c) { return LaurentSymbol::scalar(0, {std::conj(c), c}); }

Classification classify_ay_pair(const ModelSpaceKu& space, const LaurentSymbol& phi, double tol) {
  Classification out;
  const ComplexMatrix a = truncated_toeplitz(space, phi);
  const ComplexMatrix az = truncated_toeplitz(space, LaurentSymbol::scalar(1, {1.0}));
  const OperatorTuple pair({a, az});
  try {
    const FundamentalSolution sol = solve_fundamental(pair, tol);
    out.in_ay = true;
    out.residual = sol.residuals.front();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSolution) throw;
    out.in_ay = false;
    out.residual = e.value();
  }
  out.commutator_norm = commutator(a, az).norm();
  if (out.in_ay) {
    const ComplexVector& kt = space.k0_tilde;
    const ComplexMatrix sigma = a - a.adjoint() * az;
    const Complex cbar = kt.dot(sigma * kt) / std::pow(kt.squaredNorm(), 2);
    out.c = std::conj(cbar);
    out.converse_ok = symbol_equivalence(space, phi, ay_linear_symbol(*out.c), tol).equivalent;
  }
  return out;
}

}  // namespace ay
