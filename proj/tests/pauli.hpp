#pragma once

#include <cmath>

#include "workbench/algebra.hpp"

namespace pauli {

using workbench::Complex;
using workbench::Mat;

inline Mat m2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}
inline Mat I() { return Mat::Identity(2, 2); }
inline Mat X() { return m2(0, 1, 1, 0); }
inline Mat Z() { return m2(1, 0, 0, -1); }
inline Mat Y() { return m2(0, Complex(0, -1), Complex(0, 1), 0); }
inline Mat H() { return m2(1, 1, 1, -1) / std::sqrt(2.0); }

}  // namespace pauli
