#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace workbench {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;

// Thrown for malformed input (bad sizes, non-unitary arguments, missing data).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// max |a_i - b_i|; the entrywise residual used by every identity sweep.
double residual(const Vec& a, const Vec& b);
double residual(const Mat& a, const Mat& b);

// Largest singular value.
double operator_norm(const Mat& m);

Mat kron(const Mat& a, const Mat& b);

// exp(2*pi*i*t)
Complex phase(double t);

}  // namespace workbench
