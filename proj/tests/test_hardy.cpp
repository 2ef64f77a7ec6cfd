#include "ay/core.hpp"
#include "ay/fixtures.hpp"
#include "ay/hardy.hpp"
#include "support.hpp"

using namespace ay;
using ay::testing::dist;
using ay::testing::mat;
using ay::testing::scalar;

namespace {

LaurentSymbol random_symbol(Rng& rng, Index d, int lo, int hi) {
  std::vector<ComplexMatrix> c;
  for (int k = lo; k <= hi; ++k) c.push_back(random_matrix(rng, d, d));
  return LaurentSymbol(d, lo, std::move(c));
}

}  // namespace

TEST_CASE("coanalytic extension of a scalar constant") {
  const Complex a(0.3, 0.4);
  const auto phi = coanalytic_extension({LaurentSymbol::constant(scalar(a))});
  REQUIRE(phi.size() == 1);
  CHECK(phi[0].coeff(0)(0, 0) == std::conj(a));
  CHECK(phi[0].coeff(1)(0, 0) == a);
  CHECK(phi[0].coeff(-1).norm() == 0.0);
  CHECK(phi[0].coeff(2).norm() == 0.0);
}

TEST_CASE("coanalytic extension of zero is zero") {
  const auto phi = coanalytic_extension({LaurentSymbol::zero(2), LaurentSymbol::zero(2)});
  for (const auto& p : phi) {
    for (const auto& c : p.coeffs()) CHECK(c.norm() == 0.0);
  }
}

TEST_CASE("coanalytic extension matches the symbolic definition") {
  Rng rng(1);
  const ComplexMatrix p = random_matrix(rng, 2, 2);
  const ComplexMatrix q = random_matrix(rng, 2, 2);
  const LaurentSymbol f1 = LaurentSymbol::monomial(p, 1);
  const LaurentSymbol f2 = LaurentSymbol::constant(q);
  const auto phi = coanalytic_extension({f1, f2});
  CHECK(dist(phi[0].coeff(2), p) == 0.0);
  CHECK(dist(phi[0].coeff(0), q.adjoint()) == 0.0);
  CHECK(phi[0].coeff(1).norm() == 0.0);
  CHECK(dist(phi[1].coeff(1), q) == 0.0);
  CHECK(dist(phi[1].coeff(-1), p.adjoint()) == 0.0);
  CHECK(phi[1].coeff(0).norm() == 0.0);

  // Same thing through symbol arithmetic: z f_i + f_{n-i}^*.
  const LaurentSymbol z = LaurentSymbol::shift(2);
  CHECK(symbol_distance(phi[0], z * f1 + f2.adjoint()) == 0.0);
  CHECK(symbol_distance(phi[1], z * f2 + f1.adjoint()) == 0.0);
}

TEST_CASE("coanalytic extension validates input") {
  CHECK_THROWS_CODE(coanalytic_extension({LaurentSymbol::zero(1), LaurentSymbol::zero(2)}),
                    ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(coanalytic_extension({LaurentSymbol::monomial(scalar(1.0), -1)}),
                    ErrorCode::InvalidArgument);
}

TEST_CASE("analytic part inverts the coanalytic extension") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(2, 5);
    const auto f = random_f_tuple(rng, n, rng.uniform_int(1, 3), rng.uniform_int(0, 3));
    const auto phi = coanalytic_extension(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(symbol_distance(analytic_part_shifted(phi[i]), f[i]) == 0.0);
    }
  }
}

TEST_CASE("toeplitz truncation examples") {
  const auto shift = toeplitz_truncate(LaurentSymbol::shift(1), 3);
  CHECK(dist(shift.matrix, mat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
  CHECK(shift.exact_cols == 2);

  Rng rng(2);
  const ComplexMatrix m = random_matrix(rng, 2, 2);
  const auto diag = toeplitz_truncate(LaurentSymbol::constant(m), 3);
  ComplexMatrix expect = ComplexMatrix::Zero(6, 6);
  for (int k = 0; k < 3; ++k) expect.block(2 * k, 2 * k, 2, 2) = m;
  CHECK(dist(diag.matrix, expect) == 0.0);

  const Complex c(1.0, -2.0);
  const auto tri = toeplitz_truncate(LaurentSymbol::scalar(-1, {std::conj(c), 0.0, c}), 4);
  ComplexMatrix t = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 3; ++k) {
    t(k + 1, k) = c;
    t(k, k + 1) = std::conj(c);
  }
  CHECK(dist(tri.matrix, t) == 0.0);
  CHECK_THROWS_CODE(toeplitz_truncate(LaurentSymbol::scalar(-2, {1, 0, 0}), 2),
                    ErrorCode::OrderTooSmall);
}

TEST_CASE("truncated products agree with the Laurent product up to the Hankel term") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = rng.uniform_int(1, 2);
    const int p = rng.uniform_int(0, 2);
    const int q = rng.uniform_int(0, 2);
    const LaurentSymbol phi = random_symbol(rng, d, -p, p);
    const LaurentSymbol psi = random_symbol(rng, d, -q, q);
    const Index order = 12;
    const ComplexMatrix prod =
        toeplitz_truncate(phi, order).matrix * toeplitz_truncate(psi, order).matrix;
    const ComplexMatrix full = toeplitz_truncate(phi * psi, order).matrix;
    const Index window = order - p - q;
    for (Index j = 0; j < window; ++j) {
      for (Index k = 0; k < window; ++k) {
        // Terms through negative intermediate indices are lost by P_+.
        ComplexMatrix hankel = ComplexMatrix::Zero(d, d);
        for (int m = -p - q - 1; m < 0; ++m) {
          hankel += phi.coeff(static_cast<int>(j) - m) * psi.coeff(m - static_cast<int>(k));
        }
        CHECK(dist(block_of(prod, j, k, d), block_of(full, j, k, d) - hankel) < 1e-12);
      }
    }
  }
}

TEST_CASE("adjoint times shift differs from the Toeplitz matrix only in the last block column") {
  Rng rng(9);
  const Index d = 2;
  const Index order = 8;
  const LaurentSymbol phi = random_symbol(rng, d, -2, 2);
  const ComplexMatrix lhs = toeplitz_truncate(phi, order).matrix.adjoint() *
                            toeplitz_truncate(LaurentSymbol::shift(d), order).matrix;
  const ComplexMatrix rhs = toeplitz_truncate(phi.adjoint() * LaurentSymbol::shift(d), order).matrix;
  CHECK((lhs - rhs).leftCols((order - 1) * d).norm() == 0.0);
  CHECK((lhs - rhs).rightCols(d).norm() > 0.0);
}

TEST_CASE("canonical isometry examples") {
  const auto zero = canonical_ay({LaurentSymbol::zero(1)}, 4);
  CHECK(zero.tuple.op(1).norm() == 0.0);
  CHECK(dist(zero.tuple.op(2), toeplitz_truncate(LaurentSymbol::shift(1), 4).matrix) == 0.0);

  const Complex a(0.5, -0.25);
  const auto c = canonical_ay({LaurentSymbol::constant(scalar(a))}, 4);
  const ComplexMatrix& s1 = c.tuple.op(1);
  for (int k = 0; k < 4; ++k) CHECK(s1(k, k) == std::conj(a));
  for (int k = 0; k < 3; ++k) CHECK(s1(k + 1, k) == a);
  const ComplexMatrix rel = s1 - s1.adjoint() * c.tuple.op(2);
  CHECK(rel.leftCols(3).norm() == 0.0);

  Rng rng(3);
  const auto three = canonical_ay({LaurentSymbol::monomial(random_matrix(rng, 2, 2), 1),
                                   LaurentSymbol::constant(random_matrix(rng, 2, 2))},
                                  8);
  const PredicateReport rep = is_ay_isometry(three.tuple, 0.0, three.exact_cols * 2);
  CHECK(rep.pass);
  CHECK_THROWS_CODE(canonical_ay({LaurentSymbol::constant(scalar(a))}, 2),
                    ErrorCode::OrderTooSmall);
}

TEST_CASE("canonical isometry relation is exact off the last block column") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(2, 4);
    const Index d = rng.uniform_int(1, 3);
    const auto f = random_f_tuple(rng, n, d, rng.uniform_int(0, 2));
    const auto c = canonical_ay(f, 16);
    for (int i = 1; i < n; ++i) {
      CHECK(column_window_norm(fundamental_rhs(c.tuple, i), c.exact_cols * d) == 0.0);
    }
  }
}

TEST_CASE("symbol extraction round trips") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(1, 3);
    const int b = rng.uniform_int(0, 3);
    const LaurentSymbol phi = random_symbol(rng, d, -b, b);
    const auto t = toeplitz_truncate(phi, 10);
    const LaurentSymbol back = symbol_from_toeplitz(t.matrix, d, b, 1e-10);
    CHECK(symbol_distance(back, phi) == 0.0);
  }
  const Complex a(0.5, 0.5);
  const auto c = canonical_ay({LaurentSymbol::constant(scalar(a))}, 6);
  const LaurentSymbol s1 = symbol_from_toeplitz(c.tuple.op(1), 1, 1, 1e-10);
  CHECK(s1.coeff(0)(0, 0) == std::conj(a));
  CHECK(s1.coeff(1)(0, 0) == a);
  CHECK(s1.coeff(-1).norm() == 0.0);
}

TEST_CASE("symbol extraction errors") {
  const ComplexMatrix diag = mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK_THROWS_CODE(symbol_from_toeplitz(diag, 1, 0, 1e-10), ErrorCode::NotToeplitz);
  const auto wide = toeplitz_truncate(LaurentSymbol::scalar(-2, {1, 0, 0, 0, 1}), 10);
  CHECK_THROWS_CODE(symbol_from_toeplitz(wide.matrix, 1, 1, 1e-10), ErrorCode::BandExceeded);
  CHECK_THROWS_CODE(symbol_from_toeplitz(diag, 2, 0, 1e-10), ErrorCode::DimensionMismatch);
  CHECK_THROWS_CODE(symbol_from_toeplitz(diag, 1, 3, 1e-10), ErrorCode::OrderTooSmall);
}

TEST_CASE("Laurent arithmetic") {
  const LaurentSymbol a = LaurentSymbol::scalar(-1, {1.0, 2.0});
  const LaurentSymbol b = LaurentSymbol::scalar(0, {3.0, 4.0});
  const LaurentSymbol p = a * b;  // (z^-1 + 2)(3 + 4z) = 3z^-1 + 10 + 8z
  CHECK(p.coeff(-1)(0, 0) == Complex(3.0));
  CHECK(p.coeff(0)(0, 0) == Complex(10.0));
  CHECK(p.coeff(1)(0, 0) == Complex(8.0));
  CHECK(p.bandwidth() == 1);
  const Complex z = std::polar(1.0, 0.7);
  CHECK(std::abs(p.evaluate(z)(0, 0) - a.evaluate(z)(0, 0) * b.evaluate(z)(0, 0)) < 1e-13);
  CHECK(std::abs(a.adjoint().evaluate(z)(0, 0) - std::conj(a.evaluate(z)(0, 0))) < 1e-13);
  CHECK(LaurentSymbol::scalar(-2, {0.0, 1.0, 0.0}).trimmed().k_min() == -1);
}
