#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ay/hardy.hpp"
#include "ay/ttoeplitz.hpp"

namespace ay {

/// Seeded generator with platform-independent output: raw mt19937_64 words
/// turned into doubles by hand instead of through std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();
  Complex complex_normal();
  Complex unit_complex();

 private:
  std::mt19937_64 engine_;
};

ComplexMatrix random_matrix(Rng& rng, Index rows, Index cols);
ComplexMatrix random_unitary(Rng& rng, Index dim);
/// Random matrix rescaled to the given numerical radius.
ComplexMatrix random_with_radius(Rng& rng, Index dim, double radius);

std::vector<LaurentSymbol> random_f_tuple(Rng& rng, int n, Index dim_e, int degree);

/// Compression of the canonical isometry of a constant tuple f = (F_1, ...)
/// to span{first `blocks` blocks, k_w (x) E for w in points}, optionally
/// rotated by a random unitary.
struct CompressedFixture {
  OperatorTuple tuple;
  std::vector<ComplexMatrix> f_const;
  std::vector<Complex> points;
  Index blocks = 0;
  Index gen_order = 0;
  /// B^* (1 (x) E): the projected constants in fixture coordinates.
  ComplexMatrix g_constants;
};

CompressedFixture compressed_canonical(Rng& rng, const std::vector<ComplexMatrix>& f_const,
                                       Index blocks, const std::vector<Complex>& points,
                                       bool rotate);

/// Constant tuple with numerical radius `radius` for every F_i.
std::vector<ComplexMatrix> random_constant_f(Rng& rng, int n, Index dim_e, double radius);

/// Diagonal AY unitary, conjugated by a random unitary when `rotate`.
OperatorTuple ay_unitary_diagonal(Rng& rng, int n, Index dim, bool rotate);

struct WoldFixture {
  OperatorTuple tuple;
  Index dim_unitary = 0;
  std::vector<LaurentSymbol> f;
  Index order = 0;
  Index dim_e = 0;
  /// Mixing unitary; the pure part occupies the trailing coordinates before mixing.
  ComplexMatrix mixing;
};

WoldFixture wold_mixed(Rng& rng, int n, Index dim_unitary, Index dim_e, int degree, Index order);

/// X_k = t_k e^{ik alpha} X + b_k I with t_k = t_{n-k}: satisfies the
/// commuting constraints. Returned as constants F with F_{n-i} = X_i^*.
std::vector<ComplexMatrix> commuting_constant_f(Rng& rng, int n, Index dim_e);

struct TtoeplitzFixture {
  BlaschkeProduct u;
  LaurentSymbol phi;
  std::optional<Complex> c;
};

BlaschkeProduct random_blaschke(Rng& rng, int degree, double max_modulus);
/// conj(c) + c z + u p + conj(u q), truncated to the Laurent window [-window, window].
LaurentSymbol ttoeplitz_member_symbol(Rng& rng, const BlaschkeProduct& u, Complex c, int window);
LaurentSymbol random_trig_symbol(Rng& rng, int bandwidth);

}  // namespace ay
