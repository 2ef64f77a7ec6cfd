#include "ay/fixtures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "ay/core.hpp"
#include "ay/linalg.hpp"

namespace ay {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  // Box-Muller; 1 - u keeps the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() { return {normal() / std::numbers::sqrt2, normal() / std::numbers::sqrt2}; }

Complex Rng::unit_complex() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

ComplexMatrix random_matrix(Rng& rng, Index rows, Index cols) {
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.complex_normal();
  }
  return m;
}

ComplexMatrix random_unitary(Rng& rng, Index dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

ComplexMatrix random_with_radius(Rng& rng, Index dim, double radius) {
  ComplexMatrix m = random_matrix(rng, dim, dim);
  const double w = numerical_radius(m);
  return m * (radius / w);
}

std::vector<LaurentSymbol> random_f_tuple(Rng& rng, int n, Index dim_e, int degree) {
  std::vector<LaurentSymbol> f;
  for (int i = 1; i < n; ++i) {
    std::vector<ComplexMatrix> c;
    for (int k = 0; k <= degree; ++k) c.push_back(0.5 * random_matrix(rng, dim_e, dim_e));
    f.emplace_back(dim_e, 0, std::move(c));
  }
  return f;
}

std::vector<ComplexMatrix> random_constant_f(Rng& rng, int n, Index dim_e, double radius) {
  std::vector<ComplexMatrix> f;
  for (int i = 1; i < n; ++i) f.push_back(random_with_radius(rng, dim_e, radius));
  return f;
}

CompressedFixture compressed_canonical(Rng& rng, const std::vector<ComplexMatrix>& f_const,
                                       Index blocks, const std::vector<Complex>& points,
                                       bool rotate) {
  const Index d = f_const.front().rows();
  double rho = 0.0;
  for (Complex w : points) rho = std::max(rho, std::abs(w));
  Index order = 64;
  if (rho > 0.0) order = std::max<Index>(order, static_cast<Index>(std::log(1e-20) / std::log(rho)));
  order = std::max<Index>(order, blocks + 4);

  std::vector<LaurentSymbol> f;
  for (const auto& m : f_const) f.push_back(LaurentSymbol::constant(m));
  const CanonicalIsometry canon = canonical_ay(f, order);

  const Index cols = (blocks + static_cast<Index>(points.size())) * d;
  ComplexMatrix span = ComplexMatrix::Zero(order * d, cols);
  span.topLeftCorner(blocks * d, blocks * d).setIdentity();
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Complex wbar = std::conj(points[p]);
    Complex pw = 1.0;
    for (Index k = 0; k < order; ++k) {
      for (Index e = 0; e < d; ++e) span(k * d + e, (blocks + static_cast<Index>(p)) * d + e) = pw;
      pw *= wbar;
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(span);
  ComplexMatrix basis = qr.householderQ() * ComplexMatrix::Identity(order * d, cols);
  if (rotate) basis = (basis * random_unitary(rng, cols)).eval();

  CompressedFixture fx;
  fx.tuple = compress(canon.tuple, basis, 1e-10);
  fx.f_const = f_const;
  fx.points = points;
  fx.blocks = blocks;
  fx.gen_order = order;
  fx.g_constants = basis.topRows(d).adjoint();
  return fx;
}

OperatorTuple ay_unitary_diagonal(Rng& rng, int n, Index dim, bool rotate) {
  std::vector<ComplexMatrix> ops(static_cast<std::size_t>(n), ComplexMatrix::Zero(dim, dim));
  for (Index j = 0; j < dim; ++j) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const Complex e = std::polar(1.0, theta);
    ops.back()(j, j) = e;
    for (int i = 1; 2 * i <= n; ++i) {
      const int m = n - i;
      if (i == m) {
        ops[static_cast<std::size_t>(i - 1)](j, j) = rng.uniform(-1.0, 1.0) * std::polar(1.0, theta / 2);
      } else {
        const Complex a = rng.complex_normal();
        ops[static_cast<std::size_t>(i - 1)](j, j) = a;
        ops[static_cast<std::size_t>(m - 1)](j, j) = std::conj(a) * e;
      }
    }
  }
  OperatorTuple t(std::move(ops));
  if (rotate) t = t.conjugated(random_unitary(rng, dim));
  return t;
}

WoldFixture wold_mixed(Rng& rng, int n, Index dim_unitary, Index dim_e, int degree, Index order) {
  WoldFixture fx;
  fx.dim_unitary = dim_unitary;
  fx.f = random_f_tuple(rng, n, dim_e, degree);
  fx.order = order;
  fx.dim_e = dim_e;
  const CanonicalIsometry canon = canonical_ay(fx.f, order);
  const Index pure = order * dim_e;
  const Index dim = dim_unitary + pure;
  std::vector<ComplexMatrix> ops(static_cast<std::size_t>(n), ComplexMatrix::Zero(dim, dim));
  if (dim_unitary > 0) {
    const OperatorTuple u = ay_unitary_diagonal(rng, n, dim_unitary, true);
    for (int i = 1; i <= n; ++i) {
      ops[static_cast<std::size_t>(i - 1)].topLeftCorner(dim_unitary, dim_unitary) = u.op(i);
    }
  }
  for (int i = 1; i <= n; ++i) {
    ops[static_cast<std::size_t>(i - 1)].bottomRightCorner(pure, pure) = canon.tuple.op(i);
  }
  fx.mixing = random_unitary(rng, dim);
  fx.tuple = OperatorTuple(std::move(ops)).conjugated(fx.mixing);
  return fx;
}

std::vector<ComplexMatrix> commuting_constant_f(Rng& rng, int n, Index dim_e) {
  const ComplexMatrix x = random_matrix(rng, dim_e, dim_e);
  const double alpha = 2.0 * std::numbers::pi * rng.uniform();
  std::vector<double> t(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; 2 * k <= n; ++k) {
    t[static_cast<std::size_t>(k)] = rng.uniform(0.2, 0.6);
    t[static_cast<std::size_t>(n - k)] = t[static_cast<std::size_t>(k)];
  }
  std::vector<ComplexMatrix> xs;
  for (int k = 1; k < n; ++k) {
    xs.push_back(t[static_cast<std::size_t>(k)] * std::polar(1.0, k * alpha) * x +
                 0.3 * rng.complex_normal() * ComplexMatrix::Identity(dim_e, dim_e));
  }
  std::vector<ComplexMatrix> f(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) f[static_cast<std::size_t>(n - i - 1)] = xs[static_cast<std::size_t>(i - 1)].adjoint();
  return f;
}

BlaschkeProduct random_blaschke(Rng& rng, int degree, double max_modulus) {
  BlaschkeProduct u;
  while (static_cast<int>(u.zeros.size()) < degree) {
    const Complex a = std::polar(max_modulus * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
    bool distinct = true;
    for (Complex b : u.zeros) distinct = distinct && std::abs(a - b) > 0.05;
    if (distinct) u.zeros.push_back(a);
  }
  return u;
}

LaurentSymbol ttoeplitz_member_symbol(Rng& rng, const BlaschkeProduct& u, Complex c, int window) {
  const ComplexVector uc = u.taylor(window + 1);
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * window + 1), 0.0);
  auto at = [&](int k) -> Complex& { return coeffs[static_cast<std::size_t>(k + window)]; };
  at(0) += std::conj(c);
  at(1) += c;
  const int degree = 2;
  for (int k = 0; k <= degree; ++k) {
    const Complex p = 0.5 * rng.complex_normal();
    const Complex q = 0.5 * rng.complex_normal();
    for (int j = 0; j + k <= window; ++j) {
      at(j + k) += p * uc(j);
      at(-(j + k)) += std::conj(q * uc(j));
    }
  }
  return LaurentSymbol::scalar(-window, coeffs);
}

LaurentSymbol random_trig_symbol(Rng& rng, int bandwidth) {
  std::vector<Complex> coeffs;
  for (int k = -bandwidth; k <= bandwidth; ++k) coeffs.push_back(rng.complex_normal());
  return LaurentSymbol::scalar(-bandwidth, coeffs);
}

}  // namespace ay
