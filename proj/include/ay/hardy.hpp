#pragma once

#include <vector>

#include "ay/tuple.hpp"

namespace ay {

/// Operator-valued Laurent polynomial sum_{k=k_min}^{k_max} A_k z^k with
/// dim_e x dim_e coefficients.
class LaurentSymbol {
 public:
  LaurentSymbol() = default;
  LaurentSymbol(Index dim_e, int k_min, std::vector<ComplexMatrix> coeffs);

  static LaurentSymbol zero(Index dim_e);
  static LaurentSymbol constant(const ComplexMatrix& a);
  static LaurentSymbol monomial(const ComplexMatrix& a, int k);
  /// z times the identity on E.
  static LaurentSymbol shift(Index dim_e);
  static LaurentSymbol scalar(int k_min, const std::vector<Complex>& coeffs);

  Index dim_e() const { return dim_e_; }
  int k_min() const { return k_min_; }
  int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ComplexMatrix>& coeffs() const { return coeffs_; }

  /// A_k, zero outside the stored support.
  ComplexMatrix coeff(int k) const;
  int bandwidth() const;
  bool is_analytic() const { return k_min_ >= 0; }

  /// phi*(z) on the circle: coefficient k is A_{-k}*.
  LaurentSymbol adjoint() const;
  /// phi(z) z^m.
  LaurentSymbol shifted(int m) const;
  /// Drops leading/trailing coefficients with Frobenius norm <= tol.
  LaurentSymbol trimmed(double tol = 0.0) const;
  ComplexMatrix evaluate(Complex z) const;

  friend LaurentSymbol operator+(const LaurentSymbol& a, const LaurentSymbol& b);
  friend LaurentSymbol operator-(const LaurentSymbol& a, const LaurentSymbol& b);
  friend LaurentSymbol operator*(const LaurentSymbol& a, const LaurentSymbol& b);
  friend LaurentSymbol operator*(Complex s, const LaurentSymbol& a);

 private:
  Index dim_e_ = 1;
  int k_min_ = 0;
  std::vector<ComplexMatrix> coeffs_;
};

/// Largest coefficient-wise Frobenius difference over the union of supports.
double symbol_distance(const LaurentSymbol& a, const LaurentSymbol& b);

struct TruncatedToeplitz {
  LaurentSymbol symbol;
  Index order = 0;
  ComplexMatrix matrix;
  /// Leading block columns on which products with other truncations are exact.
  Index exact_cols = 0;
};

/// Block (j, k) of a block matrix with square blocks of size d.
inline auto block_of(const ComplexMatrix& m, Index j, Index k, Index d) {
  return m.block(j * d, k * d, d, d);
}
inline auto block_of(ComplexMatrix& m, Index j, Index k, Index d) {
  return m.block(j * d, k * d, d, d);
}

/// phi_i = z f_i + f_{n-i}^*, for i = 1..n-1.
std::vector<LaurentSymbol> coanalytic_extension(const std::vector<LaurentSymbol>& f);

/// Inverse of coanalytic_extension on the analytic side: sum_{k>=1} A_k z^{k-1}.
LaurentSymbol analytic_part_shifted(const LaurentSymbol& phi);

/// P_N T_phi P_N as an (N dim_e)-square block Toeplitz matrix.
TruncatedToeplitz toeplitz_truncate(const LaurentSymbol& symbol, Index order);

/// Laurent matrix of phi on the bilateral index range [lo, hi].
ComplexMatrix bilateral_truncate(const LaurentSymbol& symbol, int lo, int hi);

struct CanonicalIsometry {
  OperatorTuple tuple;
  std::vector<LaurentSymbol> f;
  std::vector<LaurentSymbol> phi;
  Index order = 0;
  Index dim_e = 0;
  /// Block columns on which S_i = S_{n-i}^* S_n holds exactly.
  Index exact_cols = 0;
};

/// (T_{phi_1}, ..., T_{phi_{n-1}}, T_z) truncated to order N.
CanonicalIsometry canonical_ay(const std::vector<LaurentSymbol>& f, Index order);

/// Reads a block Toeplitz symbol of declared bandwidth b from the interior
/// window of leading N - b block rows and columns.
LaurentSymbol symbol_from_toeplitz(const ComplexMatrix& t, Index dim_e, int bandwidth, double tol);

}  // namespace ay
