#pragma once

#include <random>

#include "workbench/types.hpp"

namespace gen {

using workbench::Complex;
using workbench::Mat;
using workbench::Vec;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed1234ULL);
  return r;
}

inline Complex complex_normal() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline Vec vec(std::size_t n) {
  Vec v(static_cast<Eigen::Index>(n));
  for (auto& c : v) c = complex_normal();
  return v;
}

inline Mat matrix(std::size_t n) {
  Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = complex_normal();
  return m;
}

// Haar-ish unitary from the QR factor of a Gaussian matrix.
inline Mat unitary(std::size_t n) {
  Eigen::HouseholderQR<Mat> qr(matrix(n));
  return qr.householderQ();
}

inline std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng()); }

}  // namespace gen
