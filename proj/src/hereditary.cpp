#include "ay/hereditary.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace ay {

HereditaryPolynomial HereditaryPolynomial::ay_family(int n, int i, Complex alpha, double w) {
  const int m = n - i;
  HereditaryPolynomial h;
  h.add(2.0 * w, {}, {});
  h.add(-2.0 * w, {n}, {n});
  h.add(-alpha, {}, {i});
  h.add(alpha, {m}, {n});
  h.add(-std::conj(alpha), {i}, {});
  h.add(std::conj(alpha), {n}, {m});
  return h;
}

void HereditaryPolynomial::add(Complex coeff, std::vector<int> star, std::vector<int> plain) {
  monomials_.push_back({coeff, std::move(star), std::move(plain)});
}

HereditaryPolynomial HereditaryPolynomial::adjoint() const {
  HereditaryPolynomial out;
  for (const auto& m : monomials_) {
    out.add(std::conj(m.coeff), {m.plain.rbegin(), m.plain.rend()},
            {m.star.rbegin(), m.star.rend()});
  }
  return out;
}

HereditaryPolynomial operator+(const HereditaryPolynomial& a, const HereditaryPolynomial& b) {
  std::vector<HereditaryMonomial> all = a.monomials_;
  all.insert(all.end(), b.monomials_.begin(), b.monomials_.end());
  return HereditaryPolynomial(std::move(all));
}

ComplexMatrix hereditary_eval(const HereditaryPolynomial& h, const OperatorTuple& tuple) {
  const Index d = tuple.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& m : h.monomials()) {
    ComplexMatrix left = ComplexMatrix::Identity(d, d);
    for (int a : m.star) left = (left * tuple.op(a).adjoint()).eval();
    out += m.coeff * left * word_product(tuple, m.plain);
  }
  return out;
}

HereditaryReport hereditary_family_check(const OperatorTuple& tuple, double w_bound,
                                         int theta_samples, double tol) {
  if (theta_samples < 8) {
    throw Error(ErrorCode::InvalidArgument, "need at least 8 theta samples");
  }
  if (!(w_bound > 0.0)) throw Error(ErrorCode::InvalidArgument, "w_bound must be positive");

  HereditaryReport r;
  r.theta_samples = theta_samples;
  r.w_bound = w_bound;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  const int n = tuple.n();
  for (int i = 1; i < n; ++i) {
    for (int k = 0; k < theta_samples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / theta_samples;
      const auto h = HereditaryPolynomial::ay_family(n, i, std::polar(1.0, theta), w_bound);
      ComplexMatrix value = hereditary_eval(h, tuple);
      value = (0.5 * (value + value.adjoint())).eval();
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(value, Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues()(0);
      if (lo < r.min_eigenvalue) {
        r.min_eigenvalue = lo;
        r.worst_index = i;
        r.worst_theta = theta;
      }
    }
  }
  r.pass = r.min_eigenvalue >= -tol;

  try {
    const FundamentalSolution sol = solve_fundamental(tuple, tol);
    r.numerical_radii = sol.numerical_radii;
    r.solver_ok = true;
    r.criterion = std::all_of(sol.numerical_radii.begin(), sol.numerical_radii.end(),
                              [&](double w) { return w <= w_bound + tol; });
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSolution) throw;
    r.solver_ok = false;
    r.criterion = false;
  }
  r.agree = r.pass == r.criterion;
  return r;
}

}  // namespace ay
