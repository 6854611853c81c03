#pragma once

// Scalar tiers for numeric work. Every numeric template in the library is
// instantiated for exactly these five complex types.

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace knotsig {

namespace mp = boost::multiprecision;

template <unsigned Bits>
using BinReal = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;
template <unsigned Bits>
using BinComplex =
    mp::number<mp::complex_adaptor<mp::cpp_bin_float<Bits, mp::digit_base_2>>, mp::et_off>;

using cx64 = std::complex<long double>;
using cx128 = BinComplex<128>;
using cx256 = BinComplex<256>;
using cx512 = BinComplex<512>;
using cx1024 = BinComplex<1024>;

}  // namespace knotsig

// Boost's own NumTraits lacks infinity() and quiet_NaN(), which Eigen 3.4
// needs for the eigen solvers.
namespace Eigen {
namespace knotsig_detail {
template <class Self, class R, bool Cx>
struct MpTraits {
  typedef Self self_type;
  typedef R Real;
  typedef Self NonInteger;
  typedef double Literal;
  typedef Self Nested;
  enum {
    IsComplex = Cx,
    IsInteger = 0,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
    IsSigned = 1,
    RequireInitialization = 1
  };
  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return (std::numeric_limits<Real>::max)(); }
  static Real lowest() { return std::numeric_limits<Real>::lowest(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Real>::digits10; }
  static int digits() { return std::numeric_limits<Real>::digits; }
  static int min_exponent() { return std::numeric_limits<Real>::min_exponent; }
  static int max_exponent() { return std::numeric_limits<Real>::max_exponent; }
};
}  // namespace knotsig_detail
template <unsigned N>
struct NumTraits<knotsig::BinReal<N>>
    : knotsig_detail::MpTraits<knotsig::BinReal<N>, knotsig::BinReal<N>, false> {};
template <unsigned N>
struct NumTraits<knotsig::BinComplex<N>>
    : knotsig_detail::MpTraits<knotsig::BinComplex<N>, knotsig::BinReal<N>, true> {};
}  // namespace Eigen

namespace knotsig {

template <class S>
struct tier_traits;
template <>
struct tier_traits<cx64> {
  using real = long double;
  using next = cx128;
  static constexpr int bits = 64;
};
template <>
struct tier_traits<cx128> {
  using real = BinReal<128>;
  using next = cx256;
  static constexpr int bits = 128;
};
template <>
struct tier_traits<cx256> {
  using real = BinReal<256>;
  using next = cx512;
  static constexpr int bits = 256;
};
template <>
struct tier_traits<cx512> {
  using real = BinReal<512>;
  using next = cx1024;
  static constexpr int bits = 512;
};
template <>
struct tier_traits<cx1024> {
  using real = BinReal<1024>;
  using next = void;
  static constexpr int bits = 1024;
};

template <class S>
using real_t = typename tier_traits<S>::real;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Absolute magnitude below which a computed quantity is read as zero:
// 2^(-bits/2), well above accumulated rounding for the matrix sizes used here.
template <class S>
const real_t<S>& noise_floor() {
  static const real_t<S> v = [] {
    real_t<S> x(1);
    for (int i = 0; i < tier_traits<S>::bits / 2; ++i) x /= 2;
    return x;
  }();
  return v;
}

template <class S>
real_t<S> re(const S& z) {
  using std::real;
  return real(z);
}
template <class S>
real_t<S> im(const S& z) {
  using std::imag;
  return imag(z);
}
template <class S>
S cconj(const S& z) {
  return S(re(z), -im(z));
}
template <class S>
real_t<S> cabs(const S& z) {
  using std::abs;
  return abs(z);
}
template <class S>
S make_complex(double r, double i = 0.0) {
  return S(real_t<S>(r), real_t<S>(i));
}

template <class S>
double to_double(const S& z) {
  return static_cast<double>(re(z));
}
template <class R>
double real_to_double(const R& x) {
  return static_cast<double>(x);
}

// exp(2*pi*i*num/den), with the angle folded into (-1/2, 1/2] so that
// conjugate rotations give exactly conjugate values.
template <class S>
S unit_root(long long num, long long den) {
  using R = real_t<S>;
  if (den <= 0) throw std::invalid_argument("unit_root: nonpositive denominator");
  long long a = num % den;
  if (a < 0) a += den;
  bool flip = false;
  if (2 * a > den) {
    a = den - a;
    flip = true;
  }
  if (a == 0) return S(R(1), R(0));
  if (2 * a == den) return S(R(-1), R(0));
  if (4 * a == den) return S(R(0), R(flip ? -1 : 1));
  R theta = 2 * boost::math::constants::pi<R>() * R(a) / R(den);
  using std::cos;
  using std::sin;
  R c = cos(theta), s = sin(theta);
  return S(c, flip ? R(-s) : s);
}

// Lossless move up one tier, or a rounding move down.
template <class T, class S>
T convert_scalar(const S& z) {
  using RT = real_t<T>;
  if constexpr (std::is_same_v<T, S>) {
    return z;
  } else if constexpr (std::is_same_v<RT, long double>) {
    return T(static_cast<long double>(re(z)), static_cast<long double>(im(z)));
  } else {
    return T(RT(re(z)), RT(im(z)));
  }
}

template <class T, class S>
Mat<T> convert_matrix(const Mat<S>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = convert_scalar<T>(m(i, j));
  return out;
}

template <class S>
real_t<S> max_abs(const Mat<S>& m) {
  real_t<S> best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      real_t<S> a = cabs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

template <class S>
Mat<S> adjoint(const Mat<S>& m) {
  Mat<S> out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = cconj(m(i, j));
  return out;
}

template <class S>
Mat<S> conj_entries(const Mat<S>& m) {
  Mat<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = cconj(m(i, j));
  return out;
}

template <class S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> m = Mat<S>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

constexpr int kDefaultPrecision = 128;
constexpr double kDefaultTolerance = 1e-9;

// Round a requested bit count up to a tier; 64 is the floor.
int tier_bits(int requested);

template <class T>
struct tier_tag {
  using type = T;
};

// Calls f(tier_tag<S>{}) with S the tier chosen for `bits`.
template <class F>
decltype(auto) with_precision(int bits, F&& f) {
  switch (tier_bits(bits)) {
    case 64:
      return f(tier_tag<cx64>{});
    case 128:
      return f(tier_tag<cx128>{});
    case 256:
      return f(tier_tag<cx256>{});
    case 512:
      return f(tier_tag<cx512>{});
    default:
      return f(tier_tag<cx1024>{});
  }
}

}  // namespace knotsig

#define KNOTSIG_FOR_EACH_TIER(X) X(knotsig::cx64) X(knotsig::cx128) X(knotsig::cx256) X(knotsig::cx512) X(knotsig::cx1024)
