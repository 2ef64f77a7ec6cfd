#include "ay/tuple.hpp"

#include <string>

namespace ay {

OperatorTuple::OperatorTuple(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "a tuple needs n >= 2 operators");
  }
  const Index d = ops_.front().rows();
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const ComplexMatrix& m = ops_[k];
    if (m.rows() != m.cols()) {
      throw Error(ErrorCode::NonSquare, "tuple entry is not square", 0.0, static_cast<int>(k + 1));
    }
    if (m.rows() != d) {
      throw Error(ErrorCode::DimensionMismatch, "tuple entries differ in size", 0.0,
                  static_cast<int>(k + 1));
    }
  }
}

const ComplexMatrix& OperatorTuple::op(int i) const {
  if (i < 1 || i > n()) {
    throw Error(ErrorCode::IndexOutOfRange, "tuple index " + std::to_string(i), 0.0, i);
  }
  return ops_[static_cast<std::size_t>(i - 1)];
}

ComplexMatrix& OperatorTuple::op(int i) {
  if (i < 1 || i > n()) {
    throw Error(ErrorCode::IndexOutOfRange, "tuple index " + std::to_string(i), 0.0, i);
  }
  return ops_[static_cast<std::size_t>(i - 1)];
}

OperatorTuple OperatorTuple::adjoint() const {
  std::vector<ComplexMatrix> out;
  out.reserve(ops_.size());
  for (const auto& m : ops_) out.push_back(m.adjoint());
  return OperatorTuple(std::move(out));
}

OperatorTuple OperatorTuple::conjugated(const ComplexMatrix& q) const {
  std::vector<ComplexMatrix> out;
  out.reserve(ops_.size());
  for (const auto& m : ops_) out.push_back(q * m * q.adjoint());
  return OperatorTuple(std::move(out));
}

ComplexMatrix word_product(const OperatorTuple& tuple, const std::vector<int>& word) {
  ComplexMatrix out = ComplexMatrix::Identity(tuple.dim(), tuple.dim());
  for (int i : word) out = (out * tuple.op(i)).eval();
  return out;
}

}  // namespace ay
