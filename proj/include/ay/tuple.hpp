#pragma once

#include <vector>

#include "ay/linalg.hpp"

namespace ay {

/// An n-tuple (S_1, ..., S_n) of square matrices on one space. Indices in the
/// public API are 1-based to match the usual S_i notation.
class OperatorTuple {
 public:
  OperatorTuple() = default;
  explicit OperatorTuple(std::vector<ComplexMatrix> ops);

  int n() const { return static_cast<int>(ops_.size()); }
  Index dim() const { return ops_.empty() ? 0 : ops_.front().rows(); }

  const ComplexMatrix& op(int i) const;
  ComplexMatrix& op(int i);
  const ComplexMatrix& last() const { return ops_.back(); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

  OperatorTuple adjoint() const;
  /// (S_1*, ..., S_{n-1}*, S_n*) conjugated by a unitary: Q S_i Q*.
  OperatorTuple conjugated(const ComplexMatrix& q) const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// S_{w_1} S_{w_2} ... S_{w_k}; the empty word gives the identity.
ComplexMatrix word_product(const OperatorTuple& tuple, const std::vector<int>& word);

}  // namespace ay
