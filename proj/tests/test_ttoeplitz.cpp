#include <cmath>

#include <Eigen/QR>

#include "ay/fixtures.hpp"
#include "ay/ttoeplitz.hpp"
#include "support.hpp"

using namespace ay;
using ay::testing::dist;
using ay::testing::mat;

namespace {

BlaschkeProduct zeros_at(std::vector<Complex> z) {
  BlaschkeProduct u;
  u.zeros = std::move(z);
  return u;
}

BlaschkeProduct power_of_z(int d) { return zeros_at(std::vector<Complex>(static_cast<std::size_t>(d), 0.0)); }

LaurentSymbol zbar() { return LaurentSymbol::scalar(-1, {1.0}); }
LaurentSymbol z_to(int k) { return LaurentSymbol::scalar(k, {1.0}); }

// Relative distance of chi from span{1, z} + uH^2 + conj(uH^2) on a wide
// Laurent window, by plain least squares on the coefficient vectors.
double distance_from_linear_plus_kernel(const BlaschkeProduct& u, const LaurentSymbol& chi, int w) {
  const Index len = 2 * w + 1;
  const ComplexVector uc = u.taylor(w + 1);
  ComplexMatrix gens = ComplexMatrix::Zero(len, 2 * (w + 1) + 2);
  for (int k = 0; k <= w; ++k) {
    for (int j = 0; k + j <= w; ++j) {
      gens(k + j + w, 2 * k) = uc(j);
      gens(w - (k + j), 2 * k + 1) = std::conj(uc(j));
    }
  }
  gens(w, 2 * (w + 1)) = 1.0;
  gens(w + 1, 2 * (w + 1) + 1) = 1.0;
  ComplexVector target = ComplexVector::Zero(len);
  for (int k = chi.k_min(); k <= chi.k_max(); ++k) target(k + w) = chi.coeff(k)(0, 0);
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(gens);
  return (target - gens * cod.solve(target)).norm() / target.norm();
}

// Member symbol window: Blaschke tail past it stays below 1e-15.
int member_window(const BlaschkeProduct& u) {
  return static_cast<int>(std::ceil(std::log(1e-15) / std::log(u.max_modulus()))) + 6;
}

}  // namespace

TEST_CASE("model space of z^2") {
  const ModelSpaceKu s = build_model_space(power_of_z(2));
  REQUIRE(s.dim() == 2);
  ComplexMatrix basis = ComplexMatrix::Zero(s.ambient_order, 2);
  basis(0, 0) = 1.0;
  basis(1, 1) = 1.0;
  CHECK(dist(s.basis, basis) == 0.0);
  CHECK(dist(s.conj_matrix, mat({{0, 1}, {1, 0}})) == 0.0);
  CHECK(dist(s.k0, mat({{1}, {0}})) == 0.0);
  CHECK(dist(s.k0_tilde, mat({{0}, {1}})) == 0.0);
  CHECK(s.tail_bound == 0.0);
}

TEST_CASE("model space of z") {
  const ModelSpaceKu s = build_model_space(power_of_z(1));
  REQUIRE(s.dim() == 1);
  CHECK(s.conj_matrix(0, 0) == Complex(1.0));
  const ComplexVector v = ComplexVector::Constant(1, Complex(0.3, 0.4));
  CHECK(s.conjugate(v)(0) == Complex(0.3, -0.4));
}

TEST_CASE("Cauchy kernel Gram matrix") {
  const std::vector<Complex> zs{0.0, 0.5};
  const ModelSpaceKu s = build_model_space(zeros_at(zs));
  const Index n = s.ambient_order;
  ComplexMatrix coords(2, 2);
  for (int j = 0; j < 2; ++j) {
    ComplexVector k(n);
    Complex p = 1.0;
    for (Index m = 0; m < n; ++m) {
      k(m) = p;
      p *= std::conj(zs[static_cast<std::size_t>(j)]);
    }
    coords.col(j) = s.basis.adjoint() * k;
    // The kernel lies in the model space.
    CHECK((s.basis * coords.col(j) - k).norm() < 1e-10);
  }
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const Complex expect = 1.0 / (1.0 - zs[static_cast<std::size_t>(k)] * std::conj(zs[static_cast<std::size_t>(j)]));
      CHECK(std::abs(coords.col(k).dot(coords.col(j)) - expect) < 1e-10);
    }
  }
}

TEST_CASE("model space invariants") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = rng.uniform_int(1, 4);
    BlaschkeProduct u = random_blaschke(rng, degree, 0.8);
    u.unimodular = rng.unit_complex();
    const ModelSpaceKu s = build_model_space(u);
    const Index d = s.dim();
    const double tb = std::max(s.tail_bound, 1e-13);
    CHECK(s.tail_bound <= 1e-11);
    CHECK(dist(s.basis.adjoint() * s.basis, ComplexMatrix::Identity(d, d)) <= 10 * tb);
    const ComplexVector v = ComplexVector::Random(d);
    const ComplexVector w = ComplexVector::Random(d);
    CHECK((s.conjugate(s.conjugate(v)) - v).norm() <= 10 * tb);
    CHECK(std::abs(s.conjugate(v).dot(s.conjugate(w)) - w.dot(v)) <= 10 * tb);
    // k0 reproduces 1 - conj(u(0)) u(z) on the circle.
    const ComplexVector series = s.basis * s.k0;
    const Complex u0 = u.evaluate(0.0);
    for (int k = 0; k < 32; ++k) {
      const Complex z = std::polar(1.0, 6.283185307179586 * k / 32);
      Complex val = 0.0;
      Complex p = 1.0;
      for (Index m = 0; m < series.size(); ++m) {
        val += series(m) * p;
        p *= z;
      }
      CHECK(std::abs(val - (1.0 - std::conj(u0) * u.evaluate(z))) <= 1e-10);
    }
  }
}

TEST_CASE("Blaschke validation") {
  CHECK_THROWS_CODE(build_model_space(zeros_at({})), ErrorCode::InvalidArgument);
  CHECK_THROWS_CODE(build_model_space(zeros_at({0.2, 1.0})), ErrorCode::ZeroTooCloseToCircle);
  CHECK_THROWS_CODE(build_model_space(zeros_at({Complex(0.0, 1.0 - 1e-9)})), ErrorCode::ZeroTooCloseToCircle);
  BlaschkeProduct u = zeros_at({0.1});
  u.unimodular = 2.0;
  CHECK_THROWS_CODE(build_model_space(u), ErrorCode::InvalidArgument);
  const BlaschkeProduct v = zeros_at({0.3, -0.2});
  const ComplexVector t = v.taylor(5);
  // Product of the two factors, expanded by hand up to z^2.
  CHECK(std::abs(t(0) - Complex(-0.06)) < 1e-15);
  CHECK(std::abs(t(1) - Complex(-0.3 * 0.96 + 0.2 * 0.91)) < 1e-15);
}

TEST_CASE("truncated Toeplitz examples on z^2") {
  const ModelSpaceKu s = build_model_space(power_of_z(2));
  CHECK(dist(truncated_toeplitz(s, z_to(1)), mat({{0, 0}, {1, 0}})) == 0.0);
  CHECK(dist(truncated_toeplitz(s, z_to(0)), ComplexMatrix::Identity(2, 2)) == 0.0);
  const Complex c(1.5, -0.5);
  CHECK(dist(truncated_toeplitz(s, ay_linear_symbol(c)), mat({{std::conj(c), 0}, {c, std::conj(c)}})) == 0.0);
  CHECK(truncated_toeplitz(s, z_to(2)).norm() == 0.0);
  CHECK_THROWS_CODE(truncated_toeplitz(s, z_to(static_cast<int>(s.ambient_order / 2))),
                    ErrorCode::BandwidthTooLarge);
}

TEST_CASE("truncated Toeplitz is linear and respects adjoints") {
  Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const ModelSpaceKu s = build_model_space(random_blaschke(rng, rng.uniform_int(1, 4), 0.7));
    const LaurentSymbol p = random_trig_symbol(rng, 3);
    const LaurentSymbol q = random_trig_symbol(rng, 2);
    const Complex a = rng.complex_normal();
    CHECK(dist(truncated_toeplitz(s, p + a * q),
               truncated_toeplitz(s, p) + a * truncated_toeplitz(s, q)) < 1e-12);
    CHECK(dist(truncated_toeplitz(s, p.adjoint()), truncated_toeplitz(s, p).adjoint()) < 1e-12);
  }
}

TEST_CASE("conjugation identities") {
  const ModelSpaceKu s2 = build_model_space(power_of_z(2));
  const ConjugationReport r2 = conjugation_identity_check(s2, z_to(1));
  CHECK(r2.worst() == 0.0);
  CHECK(r2.pass);
  CHECK(conjugation_identity_check(s2, z_to(0)).symmetry_dev == 0.0);

  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const ModelSpaceKu s = build_model_space(random_blaschke(rng, rng.uniform_int(1, 4), 0.8));
    const ConjugationReport r = conjugation_identity_check(s, random_trig_symbol(rng, 2));
    CHECK(r.pass);
    CHECK(r.worst() <= 1e-8);
  }
}

TEST_CASE("symbol equivalence examples") {
  const ModelSpaceKu s = build_model_space(power_of_z(2));
  const LaurentSymbol phi = LaurentSymbol::scalar(-1, {0.5, 1.0, 2.0});
  const EquivalenceResult same = symbol_equivalence(s, phi, phi);
  CHECK(same.equivalent);
  CHECK(same.oracle_agrees);

  const EquivalenceResult z2 = symbol_equivalence(s, phi + z_to(2), phi);
  CHECK(z2.equivalent);
  CHECK(z2.oracle_agrees);
  CHECK(z2.projection_residual < 1e-12);

  const EquivalenceResult zb = symbol_equivalence(s, phi + zbar(), phi);
  CHECK_FALSE(zb.equivalent);
  CHECK(zb.oracle_agrees);
  CHECK(zb.operator_norm == doctest::Approx(1.0));
}

TEST_CASE("classification examples on z^2") {
  const ModelSpaceKu s = build_model_space(power_of_z(2));
  const Complex c(1.0, 1.0);
  const Classification k = classify_ay_pair(s, LaurentSymbol::scalar(0, {std::conj(c), c}));
  CHECK(k.in_ay);
  REQUIRE(k.c.has_value());
  CHECK(*k.c == c);
  CHECK(k.converse_ok);
  CHECK(k.commutator_norm == 0.0);

  const Classification zero = classify_ay_pair(s, LaurentSymbol::zero(1));
  CHECK(zero.in_ay);
  CHECK(*zero.c == Complex(0.0));

  const Classification bad = classify_ay_pair(s, zbar());
  CHECK_FALSE(bad.in_ay);
  CHECK_FALSE(bad.c.has_value());
  CHECK(bad.residual > 0.5);
}

TEST_CASE("u = z^d cases are exact") {
  Rng rng(74);
  for (int d = 1; d <= 3; ++d) {
    const ModelSpaceKu s = build_model_space(power_of_z(d));
    for (int trial = 0; trial < 5; ++trial) {
      // Dyadic c keeps every product exact.
      const Complex c(rng.uniform_int(-8, 8) / 4.0, rng.uniform_int(-8, 8) / 4.0);
      const LaurentSymbol g = c * z_to(d) + std::conj(c) * z_to(-d - 1) + ay_linear_symbol(c);
      const Classification k = classify_ay_pair(s, g);
      CHECK(k.in_ay);
      CHECK(*k.c == c);
      CHECK(k.residual == 0.0);
      CHECK(k.commutator_norm == 0.0);
      CHECK(conjugation_identity_check(s, g).worst() == 0.0);
    }
  }
}

TEST_CASE("members are classified and c is recovered") {
  Rng rng(75);
  for (int trial = 0; trial < 30; ++trial) {
    const BlaschkeProduct u = random_blaschke(rng, rng.uniform_int(1, 4), 0.6);
    const int w = member_window(u);
    const ModelSpaceKu s = build_model_space(u, 2 * w + 8);
    const Complex c = rng.complex_normal();
    const LaurentSymbol phi = ttoeplitz_member_symbol(rng, u, c, w);
    const Classification k = classify_ay_pair(s, phi);
    CHECK(k.in_ay);
    REQUIRE(k.c.has_value());
    CHECK(std::abs(*k.c - c) <= 1e-8);
    CHECK(k.commutator_norm <= 1e-10);
    CHECK(k.converse_ok);
  }
}

TEST_CASE("non-members are rejected") {
  Rng rng(76);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const BlaschkeProduct u = random_blaschke(rng, rng.uniform_int(2, 4), 0.6);
    const ModelSpaceKu s = build_model_space(u, 96);
    const LaurentSymbol phi = random_trig_symbol(rng, 2);
    // Independent check that phi is far from every conj(c) + c z + kernel element.
    if (distance_from_linear_plus_kernel(u, phi, 60) < 1e-3) continue;
    ++checked;
    const Classification k = classify_ay_pair(s, phi);
    CHECK_FALSE(k.in_ay);
    CHECK(k.residual > 1e-6);
  }
  CHECK(checked >= 25);
}

TEST_CASE("degree one spaces always hold membership") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const ModelSpaceKu s = build_model_space(random_blaschke(rng, 1, 0.8));
    const Classification k = classify_ay_pair(s, random_trig_symbol(rng, 3));
    CHECK(k.in_ay);
    CHECK(k.converse_ok);
  }
}
