#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotsig/numeric.hpp"

namespace knotsig {

// Element of Z[i].
struct Gaussian {
  long long re = 0;
  long long im = 0;

  constexpr Gaussian() = default;
  constexpr Gaussian(long long r, long long i = 0) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }

  friend Gaussian operator+(Gaussian a, Gaussian b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(Gaussian a, Gaussian b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(Gaussian a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(Gaussian a, Gaussian b) = default;
};

enum class LaurentOp { add, sub, mul };

// Sparse Laurent polynomial in t_1..t_mu over Z[i]. Terms are kept
// normalized: no zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Gaussian>;

  explicit LaurentPoly(int num_vars = 1);

  static LaurentPoly constant(int num_vars, Gaussian c);
  static LaurentPoly monomial(int num_vars, Exponent e, Gaussian c = Gaussian(1));
  // t_var^power, var counted from 1.
  static LaurentPoly variable(int num_vars, int var, int power = 1);

  int num_vars() const { return mu_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Gaussian coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, Gaussian c);

  LaurentPoly bar() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Monomials in lexicographic exponent order; "t" when mu = 1, else t1, t2, ...
  std::string to_string() const;

 private:
  int mu_;
  Terms terms_;
};

LaurentPoly laurent_arith(const LaurentPoly& p, const LaurentPoly& q, LaurentOp op);
LaurentPoly laurent_bar(const LaurentPoly& p);

// A point of the torus with finite-order coordinates, stored as reduced
// rotation fractions a/b meaning exp(2 pi i a/b).
class TorusPoint {
 public:
  struct Rotation {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Rotation&, const Rotation&) = default;
  };

  TorusPoint() = default;
  explicit TorusPoint(std::vector<Rotation> rotations);

  // "a/b,c/d"; an entry without a slash is read as an integer rotation.
  static TorusPoint parse(const std::string& text);

  int num_vars() const { return static_cast<int>(rot_.size()); }
  const std::vector<Rotation>& rotations() const { return rot_; }
  const Rotation& rotation(int i) const { return rot_.at(i); }
  long long order(int i) const;
  std::vector<long long> orders() const;
  bool is_one(int i) const { return rot_.at(i).num == 0; }
  std::string to_string() const;

  // Value of t_var^power (var from 1) at this point.
  template <class S>
  S power(int var, long long power) const {
    const Rotation& r = rot_.at(var - 1);
    return unit_root<S>(r.num * power, r.den);
  }

  template <class S>
  std::vector<S> values() const {
    std::vector<S> v;
    for (int i = 1; i <= num_vars(); ++i) v.push_back(power<S>(i, 1));
    return v;
  }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::vector<Rotation> rot_;
};

bool is_in_TP(const TorusPoint& w);
bool is_admissible(const TorusPoint& w, const std::vector<int>& ell);

// Substitution t_i = omega_i. Monomials are evaluated through exact
// rotation sums so that evaluate(bar p) is the conjugate of evaluate(p).
template <class S>
S evaluate(const LaurentPoly& p, const TorusPoint& w);

}  // namespace knotsig
