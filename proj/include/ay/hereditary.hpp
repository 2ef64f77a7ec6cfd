#pragma once

#include <vector>

#include "ay/core.hpp"

namespace ay {

struct HereditaryMonomial {
  Complex coeff;
  /// z_{a}^* z_{b}^* ... evaluates to S_a^* S_b^* ...
  std::vector<int> star;
  std::vector<int> plain;
};

class HereditaryPolynomial {
 public:
  HereditaryPolynomial() = default;
  explicit HereditaryPolynomial(std::vector<HereditaryMonomial> monomials)
      : monomials_(std::move(monomials)) {}

  /// 2w(1 - z_n^* z_n) - alpha (z_i - z_{n-i}^* z_n) - conj(alpha) (z_i^* - z_n^* z_{n-i}).
  static HereditaryPolynomial ay_family(int n, int i, Complex alpha, double w);

  const std::vector<HereditaryMonomial>& monomials() const { return monomials_; }
  void add(Complex coeff, std::vector<int> star, std::vector<int> plain);
  /// The formal adjoint: (c, a, b) -> (conj c, reverse b, reverse a).
  HereditaryPolynomial adjoint() const;

  friend HereditaryPolynomial operator+(const HereditaryPolynomial& a,
                                        const HereditaryPolynomial& b);

 private:
  std::vector<HereditaryMonomial> monomials_;
};

ComplexMatrix hereditary_eval(const HereditaryPolynomial& h, const OperatorTuple& tuple);

struct HereditaryReport {
  bool pass = false;
  double min_eigenvalue = 0.0;
  int worst_index = 0;
  double worst_theta = 0.0;
  int theta_samples = 0;
  double w_bound = 0.0;
  /// Solver side: fundamental equations solvable and every w(X_i) <= w_bound + tol.
  bool solver_ok = false;
  std::vector<double> numerical_radii;
  bool criterion = false;
  bool agree = false;
};

inline constexpr int kDefaultThetaSamples = 360;

HereditaryReport hereditary_family_check(const OperatorTuple& tuple, double w_bound = 1.0,
                                         int theta_samples = kDefaultThetaSamples,
                                         double tol = 1e-8);

}  // namespace ay
