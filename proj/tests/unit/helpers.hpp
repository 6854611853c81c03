#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "knotsig/algebra.hpp"
#include "knotsig/braid.hpp"

namespace testing {

using cd = std::complex<double>;
using MatD = Eigen::MatrixXcd;

inline knotsig::TorusPoint pt(const std::string& s) { return knotsig::TorusPoint::parse(s); }

inline cd unit(double num, double den) {
  return std::polar(1.0, 2 * std::numbers::pi * num / den);
}

// Coordinate i (from 0) of a torus point as a double-precision complex number.
inline cd coord(const knotsig::TorusPoint& w, int i) {
  const auto& r = w.rotation(i);
  return unit(static_cast<double>(r.num), static_cast<double>(r.den));
}

inline int sgn(double x, double eps = 1e-9) { return x > eps ? 1 : (x < -eps ? -1 : 0); }

// Signature of a Hermitian matrix in plain double precision; an oracle that
// shares no code with the library.
inline int signature_d(const MatD& H, double eps = 1e-9) {
  if (H.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<MatD> es((H + H.adjoint()) / 2.0);
  int s = 0;
  for (int i = 0; i < H.rows(); ++i) s += sgn(es.eigenvalues()(i), eps);
  return s;
}

// Levine-Tristram signature of an integer Seifert matrix.
template <class IntMat>
int lt_signature_d(const IntMat& A, cd w) {
  MatD a = A.template cast<double>().template cast<cd>();
  MatD H = (1.0 - w) * a + (1.0 - std::conj(w)) * a.transpose();
  return signature_d(H);
}

inline std::vector<knotsig::Letter> letters(const std::string& s) {
  return knotsig::BraidWord::parse_letters(s);
}

inline knotsig::BraidWord word(const std::string& w, const std::string& c) {
  return knotsig::BraidWord::parse(w, c);
}

}  // namespace testing
