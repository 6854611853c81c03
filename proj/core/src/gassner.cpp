#include "knotsig/gassner.hpp"

#include <array>
#include <fmt/format.h>

#include "knotsig/errors.hpp"
#include "knotsig/linalg.hpp"

namespace knotsig {

PolyMatrix::PolyMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), mu_(num_vars), data_(rows * cols, LaurentPoly(num_vars)) {}

PolyMatrix PolyMatrix::identity(int n, int num_vars) {
  PolyMatrix m(n, n, num_vars);
  for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(num_vars, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, mu_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::adjoint() const {
  PolyMatrix t(cols_, rows_, mu_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).bar();
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("PolyMatrix product shapes");
  PolyMatrix out(a.rows_, b.cols_, a.mu_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

template <class S>
Mat<S> PolyMatrix::evaluate(const TorusPoint& w) const {
  Mat<S> m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = knotsig::evaluate<S>((*this)(i, j), w);
  return m;
}

namespace {

LaurentPoly strand_var(const Coloring& c, int j, int power = 1) {
  return LaurentPoly::variable(c.mu, c.color(j), c.sign(j) * power);
}

LaurentPoly one(int mu) { return LaurentPoly::constant(mu, 1); }

// 2x2 Fox block of sigma_i^e read with bottom coloring c.
std::array<LaurentPoly, 4> letter_block(const Coloring& c, int i, int e) {
  const int mu = c.mu;
  if (e > 0) return {one(mu) - strand_var(c, i), strand_var(c, i + 1), one(mu), LaurentPoly(mu)};
  LaurentPoly inv = strand_var(c, i, -1);
  return {LaurentPoly(mu), one(mu), inv, (strand_var(c, i + 1) - one(mu)) * inv};
}

template <class S>
struct StrandValues {
  std::vector<S> t;     // T_j
  std::vector<S> tinv;  // 1 / T_j
};

template <class S>
StrandValues<S> strand_values(const Coloring& c, const TorusPoint& omega) {
  if (omega.num_vars() != c.mu)
    throw DimensionMismatch(fmt::format("coloring has mu = {}, torus point has {} coordinates",
                                        c.mu, omega.num_vars()));
  std::vector<S> w, wbar;
  for (int i = 1; i <= c.mu; ++i) {
    w.push_back(omega.power<S>(i, 1));
    wbar.push_back(omega.power<S>(i, -1));
  }
  StrandValues<S> v;
  for (int j = 0; j < c.size(); ++j) {
    bool pos = c.sign(j) > 0;
    v.t.push_back(pos ? w[c.color(j) - 1] : wbar[c.color(j) - 1]);
    v.tinv.push_back(pos ? wbar[c.color(j) - 1] : w[c.color(j) - 1]);
  }
  return v;
}

// Rows are the basis vectors v_j in x coordinates.
template <class S>
Mat<S> basis_rows(const Coloring& c, const TorusPoint& omega, ReducedBasis basis) {
  const int n = c.size();
  Mat<S> V = Mat<S>::Zero(std::max(n - 1, 0), n);
  if (basis == ReducedBasis::colored) {
    auto T = strand_values<S>(c, omega);
    for (int j = 0; j + 1 < n; ++j) {
      V(j, j) = S(1) - T.t[j + 1];
      V(j, j + 1) = -(S(1) - T.t[j]);
    }
  } else {
    if (c.mu != 1) throw UnsupportedColoring("the oriented basis needs a single color");
    S t = omega.power<S>(1, 1);
    auto p = [&](int j) { return c.sign(j) > 0 ? S(1) : S(-t); };
    for (int j = 0; j + 1 < n; ++j) {
      V(j, j) = p(j);
      V(j, j + 1) = -p(j + 1);
    }
  }
  return V;
}

// Solve R V_top = V_bottom J for R and return R^T.
template <class S>
Mat<S> restrict_to_basis(const Mat<S>& J, const Coloring& bottom, const Coloring& top,
                         const TorusPoint& omega, ReducedBasis basis, double tol) {
  const int n = bottom.size();
  if (n <= 1) return Mat<S>(0, 0);
  Mat<S> Vb = basis_rows<S>(bottom, omega, basis);
  Mat<S> Vt = basis_rows<S>(top, omega, basis);
  Mat<S> Y = Vb * J;
  Mat<S> Vtt = Vt.transpose();
  Mat<S> Yt = Y.transpose();
  Mat<S> B = solve_least_norm(Vtt, Yt, tol);
  real_t<S> scale = max_abs(Yt);
  if (scale < 1) scale = 1;
  if (max_abs(Mat<S>(Vtt * B - Yt)) > real_t<S>(1e-6) * scale)
    throw SubspaceNotInvariant("reduced basis is not invariant under the braid");
  return B;
}

}  // namespace

std::vector<LaurentPoly> fox_vector(const Coloring& c) {
  std::vector<LaurentPoly> u;
  for (int j = 0; j < c.size(); ++j) u.push_back(strand_var(c, j) - one(c.mu));
  return u;
}

UnreducedRep unreduced_burau(const BraidWord& w) {
  Coloring c = w.bottom();
  const int n = c.size();
  PolyMatrix M = PolyMatrix::identity(n, c.mu);
  for (const Letter& l : w.letters()) {
    const int i = l.index - 1;
    auto b = letter_block(c, i, l.sign);
    for (int r = 0; r < n; ++r) {
      LaurentPoly x = M(r, i), y = M(r, i + 1);
      M(r, i) = x * b[0] + y * b[2];
      M(r, i + 1) = x * b[1] + y * b[3];
    }
    std::swap(c.entries[i], c.entries[i + 1]);
  }
  return {w.bottom(), c, std::move(M)};
}

void require_nontrivial(const Coloring& c, const TorusPoint& omega) {
  if (omega.num_vars() != c.mu)
    throw DimensionMismatch(fmt::format("coloring has mu = {}, torus point has {} coordinates",
                                        c.mu, omega.num_vars()));
  for (int j = 0; j < c.size(); ++j)
    if (omega.is_one(c.color(j) - 1))
      throw EvaluationAtOne(fmt::format("omega_{} = 1 on an occurring color", c.color(j)));
}

template <class S>
Mat<S> unreduced_evaluated(const BraidWord& w, const TorusPoint& omega) {
  Coloring c = w.bottom();
  const int n = c.size();
  Mat<S> M = identity<S>(n);
  auto T = strand_values<S>(c, omega);
  for (const Letter& l : w.letters()) {
    const int i = l.index - 1;
    S a, b, cc, d;
    if (l.sign > 0) {
      a = S(1) - T.t[i];
      b = T.t[i + 1];
      cc = S(1);
      d = S(0);
    } else {
      a = S(0);
      b = S(1);
      cc = T.tinv[i];
      d = (T.t[i + 1] - S(1)) * T.tinv[i];
    }
    for (int r = 0; r < n; ++r) {
      S x = M(r, i), y = M(r, i + 1);
      M(r, i) = x * a + y * cc;
      M(r, i + 1) = x * b + y * d;
    }
    std::swap(T.t[i], T.t[i + 1]);
    std::swap(T.tinv[i], T.tinv[i + 1]);
  }
  return M;
}

template <class S>
ReducedRep<S> reduce(const UnreducedRep& u, const TorusPoint& w, ReducedBasis basis, double tol) {
  require_nontrivial(u.bottom, w);
  if (basis == ReducedBasis::oriented && u.bottom.mu != 1)
    throw UnsupportedColoring("the oriented basis needs a single color");
  Mat<S> J = u.matrix.evaluate<S>(w);
  return {u.bottom, u.top, basis, restrict_to_basis<S>(J, u.bottom, u.top, w, basis, tol)};
}

template <class S>
Mat<S> burau_matrix(const BraidWord& w, const TorusPoint& omega, ReducedBasis basis, double tol) {
  require_nontrivial(w.bottom(), omega);
  Mat<S> J = unreduced_evaluated<S>(w, omega);
  return restrict_to_basis<S>(J, w.bottom(), w.top(), omega, basis, tol);
}

PolyMatrix reduce_symbolic(const UnreducedRep& u) {
  if (u.bottom.mu != 1) throw UnsupportedColoring("symbolic reduction needs a single color");
  const int n = u.bottom.size();
  if (n <= 1) return PolyMatrix(0, 0, 1);
  auto p_row = [](const Coloring& c) {
    std::vector<LaurentPoly> p;
    for (int j = 0; j < c.size(); ++j)
      p.push_back(c.sign(j) > 0 ? LaurentPoly::constant(1, 1) : LaurentPoly::monomial(1, {1}, -1));
    return p;
  };
  auto pb = p_row(u.bottom);
  // 1/p for the top coloring: 1 or -t^-1.
  std::vector<LaurentPoly> pinv;
  for (int j = 0; j < n; ++j)
    pinv.push_back(u.top.sign(j) > 0 ? LaurentPoly::constant(1, 1)
                                     : LaurentPoly::monomial(1, {-1}, -1));
  PolyMatrix R(n - 1, n - 1, 1);
  for (int j = 0; j + 1 < n; ++j) {
    // y = v_j^bottom J, written as sum_k a_k v_k^top with a_k = sum_{m<=k} y_m / p_m.
    std::vector<LaurentPoly> y(n, LaurentPoly(1));
    for (int k = 0; k < n; ++k) y[k] = pb[j] * u.matrix(j, k) - pb[j + 1] * u.matrix(j + 1, k);
    LaurentPoly acc(1);
    for (int k = 0; k < n; ++k) {
      acc += y[k] * pinv[k];
      if (k + 1 < n) R(j, k) = acc;
    }
    if (!acc.is_zero()) throw SubspaceNotInvariant("oriented basis is not invariant");
  }
  return R.transpose();
}

PolyMatrix xi_form_symbolic(const Coloring& c, ReducedBasis basis) {
  const int n = c.size();
  const int mu = c.mu;
  PolyMatrix X(std::max(n - 1, 0), std::max(n - 1, 0), mu);
  if (basis == ReducedBasis::oriented) {
    if (mu != 1) throw UnsupportedColoring("the oriented basis needs a single color");
    LaurentPoly t = LaurentPoly::variable(1, 1), tb = LaurentPoly::variable(1, 1, -1);
    for (int j = 0; j + 1 < n; ++j) {
      // (eps_j + eps_{j+1}) / 2 is -1, 0 or 1
      int half = (c.sign(j) + c.sign(j + 1)) / 2;
      X(j, j) = LaurentPoly::constant(1, half) * (t - tb);
      if (j + 2 < n) {
        int e = c.sign(j + 1);
        X(j, j + 1) = one(1) - LaurentPoly::variable(1, 1, e);
        X(j + 1, j) = LaurentPoly::variable(1, 1, -e) - one(1);
      }
    }
    return X;
  }
  auto f = [&](const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly ab = a * b;
    return (a - a.bar()) + (b - b.bar()) - (ab - ab.bar());
  };
  for (int j = 0; j + 1 < n; ++j) {
    X(j, j) = f(strand_var(c, j), strand_var(c, j + 1));
    if (j + 2 < n) {
      X(j, j + 1) = (strand_var(c, j) - one(mu)) * (one(mu) - strand_var(c, j + 1)) *
                    (strand_var(c, j + 2, -1) - one(mu));
      X(j + 1, j) = -X(j, j + 1).bar();
    }
  }
  return X;
}

template <class S>
Mat<S> xi_form(const Coloring& c, const TorusPoint& omega, ReducedBasis basis) {
  require_nontrivial(c, omega);
  const int n = c.size();
  if (basis == ReducedBasis::oriented) return xi_form_symbolic(c, basis).evaluate<S>(omega);
  Mat<S> X = Mat<S>::Zero(std::max(n - 1, 0), std::max(n - 1, 0));
  auto T = strand_values<S>(c, omega);
  for (int j = 0; j + 1 < n; ++j) {
    const S &a = T.t[j], &b = T.t[j + 1], &ai = T.tinv[j], &bi = T.tinv[j + 1];
    X(j, j) = (a - ai) + (b - bi) - (a * b - ai * bi);
    if (j + 2 < n) {
      X(j, j + 1) = (a - S(1)) * (S(1) - b) * (T.tinv[j + 2] - S(1));
      X(j + 1, j) = -cconj(X(j, j + 1));
    }
  }
  return X;
}

#define KNOTSIG_INST(S)                                                                        \
  template Mat<S> PolyMatrix::evaluate<S>(const TorusPoint&) const;                            \
  template ReducedRep<S> reduce<S>(const UnreducedRep&, const TorusPoint&, ReducedBasis,       \
                                   double);                                                    \
  template Mat<S> unreduced_evaluated<S>(const BraidWord&, const TorusPoint&);                 \
  template Mat<S> burau_matrix<S>(const BraidWord&, const TorusPoint&, ReducedBasis, double);  \
  template Mat<S> xi_form<S>(const Coloring&, const TorusPoint&, ReducedBasis);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
