#pragma once

#include <vector>

#include "knotsig/algebra.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/numeric.hpp"

namespace knotsig {

// Dense row-major matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int num_vars);
  static PolyMatrix identity(int n, int num_vars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vars() const { return mu_; }
  LaurentPoly& operator()(int i, int j) { return data_.at(i * cols_ + j); }
  const LaurentPoly& operator()(int i, int j) const { return data_.at(i * cols_ + j); }

  PolyMatrix transpose() const;
  // Entrywise bar followed by transpose.
  PolyMatrix adjoint() const;
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  template <class S>
  Mat<S> evaluate(const TorusPoint& w) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int mu_ = 1;
  std::vector<LaurentPoly> data_;
};

// Fox matrix J of the Artin action, with strand j carrying the variable
// T_j = t_{|c_j|}^{sgn c_j}. Words multiply left to right and J u(top) = u(bottom)
// for u_j = T_j - 1.
struct UnreducedRep {
  Coloring bottom;
  Coloring top;
  PolyMatrix matrix;
};

UnreducedRep unreduced_burau(const BraidWord& w);

// Vector u with u_j = T_j - 1 for the coloring c.
std::vector<LaurentPoly> fox_vector(const Coloring& c);

// Bases of the rank n-1 reduced module.
//   colored:  v_j = (1 - T_{j+1}) x_j - (1 - T_j) x_{j+1}, any number of colors.
//   oriented: v_j = e_j - e_{j+1} with e_j = x_j (eps_j = +1) or -t x_j
//             (eps_j = -1); one color only, and Laurent throughout.
enum class ReducedBasis { colored, oriented };

// Reduced matrices act on column vectors: B(w) v_k = sum_j B_jk v_j, hence
// B(w1 w2) = B(w2) B(w1).
template <class S>
struct ReducedRep {
  Coloring bottom;
  Coloring top;
  ReducedBasis basis = ReducedBasis::colored;
  Mat<S> matrix;
};

template <class S>
ReducedRep<S> reduce(const UnreducedRep& u, const TorusPoint& w,
                     ReducedBasis basis = ReducedBasis::colored, double tol = kDefaultTolerance);

// Symbolic reduction in the oriented basis (one color).
PolyMatrix reduce_symbolic(const UnreducedRep& u);

// Evaluated Fox matrix computed letter by letter, without symbolic algebra.
template <class S>
Mat<S> unreduced_evaluated(const BraidWord& w, const TorusPoint& omega);

// Same result as reduce(unreduced_burau(w), omega, basis).matrix, computed numerically.
template <class S>
Mat<S> burau_matrix(const BraidWord& w, const TorusPoint& omega,
                    ReducedBasis basis = ReducedBasis::colored, double tol = kDefaultTolerance);

// Skew-Hermitian intersection form on the reduced module. In the colored
// basis, with f(a, b) = (a - 1/a) + (b - 1/b) - (ab - 1/(ab)):
//   xi_jj     = f(T_j, T_{j+1})
//   xi_j,j+1  = (T_j - 1)(1 - T_{j+1})(1/T_{j+2} - 1)
//   xi_j+1,j  = -bar(xi_j,j+1)
PolyMatrix xi_form_symbolic(const Coloring& c, ReducedBasis basis = ReducedBasis::colored);

template <class S>
Mat<S> xi_form(const Coloring& c, const TorusPoint& omega,
               ReducedBasis basis = ReducedBasis::colored);

// Throws EvaluationAtOne when a color occurring in c has omega_i = 1.
void require_nontrivial(const Coloring& c, const TorusPoint& omega);

}  // namespace knotsig
