#include <cmath>
#include <numbers>

#include "ay/fixtures.hpp"
#include "ay/linalg.hpp"
#include "ay/tuple.hpp"
#include "support.hpp"

using namespace ay;
using ay::testing::dist;
using ay::testing::mat;
using ay::testing::scalar;

namespace {

// Top eigenvalue of a Hermitian 2x2 matrix in closed form.
double top_eigen_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double b = std::abs(h(0, 1));
  return 0.5 * (a + d) + std::sqrt(0.25 * (a - d) * (a - d) + b * b);
}

double brute_radius_2x2(const ComplexMatrix& x, int samples) {
  double best = -1.0;
  for (int k = 0; k < samples; ++k) {
    const Complex p = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
    best = std::max(best, top_eigen_2x2(0.5 * (p * x + std::conj(p) * x.adjoint())));
  }
  return best;
}

ComplexMatrix random_contraction(Rng& rng, Index dim) {
  ComplexMatrix m = random_matrix(rng, dim, dim);
  return m / (spectral_norm(m) * rng.uniform(1.0, 1.5));
}

}  // namespace

TEST_CASE("defect of the zero operator is the identity") {
  const DefectData d = defect(ComplexMatrix::Zero(3, 3));
  CHECK(d.rank == 3);
  CHECK(dist(d.d_matrix, ComplexMatrix::Identity(3, 3)) < 1e-15);
}

TEST_CASE("defect of a unitary vanishes") {
  Rng rng(3);
  const DefectData d = defect(random_unitary(rng, 4));
  CHECK(d.rank == 0);
  CHECK(d.d_matrix.norm() < 1e-7);
}

TEST_CASE("defect of a scalar") {
  const DefectData d = defect(scalar(0.6));
  CHECK(d.rank == 1);
  CHECK(std::abs(d.d_matrix(0, 0) - 0.8) < 1e-15);
}

TEST_CASE("defect rejects bad input") {
  CHECK_THROWS_CODE(defect(ComplexMatrix::Zero(2, 3)), ErrorCode::NonSquare);
  CHECK_THROWS_CODE(defect(scalar(1.1)), ErrorCode::NotAContraction);
}

TEST_CASE("defect invariants on random contractions") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Index dim = rng.uniform_int(1, 7);
    const ComplexMatrix t = random_contraction(rng, dim);
    const double tol = kDefaultRankTol;
    const DefectData d = defect(t, tol);
    const ComplexMatrix tt = t.adjoint() * t;
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    CHECK(dist(d.d_matrix * d.d_matrix + tt, id) <= 10 * tol);
    CHECK((d.d_matrix * tt - tt * d.d_matrix).norm() <= tol);
    CHECK(dist(d.d_matrix, d.d_matrix.adjoint()) <= tol);
    CHECK(dist(d.basis.adjoint() * d.basis, ComplexMatrix::Identity(d.rank, d.rank)) <= tol);
  }
}

TEST_CASE("defect of a partial isometry has the expected rank") {
  ComplexMatrix t = ComplexMatrix::Zero(4, 4);
  t(1, 0) = 1.0;
  t(2, 1) = 1.0;
  const DefectData d = defect(t);
  CHECK(d.rank == 2);
}

TEST_CASE("numerical radius examples") {
  CHECK(std::abs(numerical_radius(ComplexMatrix::Identity(3, 3)) - 1.0) < 1e-12);
  CHECK(numerical_radius(ComplexMatrix::Zero(2, 2)) == doctest::Approx(0.0));
  const ComplexMatrix jordan = mat({{0, 1}, {0, 0}});
  // Oracle: 1e5 closed-form samples; the frozen value is 1/2.
  CHECK(std::abs(brute_radius_2x2(jordan, 100000) - 0.5) < 1e-9);
  CHECK(std::abs(numerical_radius(jordan) - 0.5) < 1e-6);
  CHECK_THROWS_CODE(numerical_radius(ComplexMatrix::Zero(2, 3)), ErrorCode::NonSquare);
  CHECK_THROWS_CODE(numerical_radius(jordan, 4), ErrorCode::InvalidArgument);
}

TEST_CASE("numerical radius agrees with the 2x2 oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix x = random_matrix(rng, 2, 2);
    CHECK(std::abs(numerical_radius(x) - brute_radius_2x2(x, 200000)) < 1e-8);
  }
}

TEST_CASE("numerical radius bounds and unitary invariance") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = rng.uniform_int(1, 6);
    const ComplexMatrix x = random_matrix(rng, dim, dim);
    const double w = numerical_radius(x);
    const double norm = spectral_norm(x);
    CHECK(w <= norm * (1 + 1e-12));
    CHECK(w >= 0.5 * norm * (1 - 1e-12));
    const ComplexMatrix u = random_unitary(rng, dim);
    CHECK(std::abs(numerical_radius(u * x * u.adjoint()) - w) <= 2 * kDefaultRefineTol + 1e-12);
  }
}

TEST_CASE("solve_restricted examples") {
  Rng rng(2);
  const ComplexMatrix sigma = random_matrix(rng, 3, 3);
  const DefectData d0 = defect(ComplexMatrix::Zero(3, 3));
  const ComplexMatrix x = solve_restricted(d0, sigma, 1e-9);
  CHECK(dist(expand_on_defect(d0, x), sigma) < 1e-13);
  CHECK(dist(d0.basis * x * d0.basis.adjoint(), sigma) < 1e-13);

  const DefectData du = defect(random_unitary(rng, 2));
  const ComplexMatrix empty = solve_restricted(du, ComplexMatrix::Zero(2, 2), 1e-9);
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);

  const DefectData ds = defect(scalar(0.6));
  const ComplexMatrix xs = solve_restricted(ds, scalar(Complex(0.3, -0.2)), 1e-9);
  // sigma = (1 - s^2) x.
  CHECK(std::abs(xs(0, 0) - Complex(0.3, -0.2) / 0.64) < 1e-14);
}

TEST_CASE("solve_restricted reports the residual for off-support data") {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(1, 0) = 1.0;  // D = diag(0, 1)
  const DefectData d = defect(t);
  ComplexMatrix sigma = ComplexMatrix::Zero(2, 2);
  sigma(0, 0) = 0.5;
  try {
    solve_restricted(d, sigma, 1e-9);
    FAIL("expected NoSolution");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSolution);
    CHECK(e.value() == doctest::Approx(0.5));
  }
  CHECK_THROWS_CODE(solve_restricted(d, ComplexMatrix::Zero(3, 3), 1e-9),
                    ErrorCode::DimensionMismatch);
}

TEST_CASE("solve_restricted round trip and agreement of the two routes") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Index dim = rng.uniform_int(2, 6);
    const ComplexMatrix t = random_contraction(rng, dim);
    const DefectData d = defect(t);
    const ComplexMatrix x0 = random_matrix(rng, d.rank, d.rank);
    const ComplexMatrix sigma = expand_on_defect(d, x0);
    const ComplexMatrix x = solve_restricted(d, sigma, 1e-9);
    CHECK(dist(expand_on_defect(d, x), sigma) <= 1e-9 * (1 + sigma.norm()));
    const RestrictedSolve alt = solve_restricted_normal(d, sigma, 1e-9);
    CHECK(alt.ok);
    CHECK(dist(alt.x, x) < 1e-8 * (1 + x.norm()));
  }
}

TEST_CASE("word_product") {
  Rng rng(17);
  const OperatorTuple t({random_matrix(rng, 2, 2), random_matrix(rng, 2, 2)});
  CHECK(dist(word_product(t, {}), ComplexMatrix::Identity(2, 2)) == 0.0);
  // Independent re-multiplication, entry by entry.
  const ComplexMatrix& a = t.op(1);
  const ComplexMatrix& b = t.op(2);
  ComplexMatrix ab(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) ab(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  }
  CHECK(dist(word_product(t, {1, 2}), ab) < 1e-15);

  ComplexMatrix shift = ComplexMatrix::Zero(3, 3);
  shift(1, 0) = shift(2, 1) = 1.0;
  const OperatorTuple s({ComplexMatrix::Zero(3, 3), shift});
  CHECK(dist(word_product(s, {2}), shift) == 0.0);
  CHECK_THROWS_CODE(word_product(s, {3}), ErrorCode::IndexOutOfRange);
  CHECK_THROWS_CODE(word_product(s, {0}), ErrorCode::IndexOutOfRange);
}

TEST_CASE("tuple validation") {
  CHECK_THROWS_CODE(OperatorTuple({ComplexMatrix::Zero(2, 2)}), ErrorCode::InvalidArgument);
  CHECK_THROWS_CODE(OperatorTuple({ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)}),
                    ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(OperatorTuple({ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)}),
                    ErrorCode::NonSquare);
}
