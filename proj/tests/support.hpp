#pragma once

#include <doctest.h>

#include "ay/linalg.hpp"

namespace ay::testing {

inline ComplexMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  ComplexMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (Complex v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline ComplexMatrix scalar(Complex v) { return ComplexMatrix::Constant(1, 1, v); }

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

}  // namespace ay::testing

#define CHECK_THROWS_CODE(expr, expected)                    \
  do {                                                       \
    bool thrown_ = false;                                    \
    try {                                                    \
      (void)(expr);                                          \
    } catch (const ::ay::Error& e_) {                        \
      thrown_ = true;                                        \
      CHECK(e_.code() == (expected));                        \
    }                                                        \
    CHECK_MESSAGE(thrown_, "expected an ay::Error");         \
  } while (0)
