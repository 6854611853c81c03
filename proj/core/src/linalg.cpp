#include "knotsig/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "knotsig/errors.hpp"

namespace knotsig {

template <class S>
Inertia hermitian_signature(const Mat<S>& M, double tol, double data_scale) {
  using R = real_t<S>;
  if (M.rows() != M.cols()) throw DimensionMismatch("signature of a non-square matrix");
  const int n = static_cast<int>(M.rows());
  if (n == 0) return {};
  R scale = std::max(max_abs(M), R(data_scale));
  if (max_abs(M) <= noise_floor<S>()) return {0, 0, n};
  Mat<S> H = (M + adjoint(M)) / S(2);
  Eigen::SelfAdjointEigenSolver<Mat<S>> es(H, Eigen::EigenvaluesOnly);
  R thr = std::max(R(R(tol) * scale), noise_floor<S>());
  Inertia out;
  bool ambiguous = false;
  for (int i = 0; i < n; ++i) {
    R lam = es.eigenvalues()(i);
    R a = lam < 0 ? R(-lam) : lam;
    if (a <= thr) {
      ++out.null;
    } else {
      if (a <= 10 * thr) ambiguous = true;
      ++(lam > 0 ? out.pos : out.neg);
    }
  }
  if (ambiguous) {
    using Next = typename tier_traits<S>::next;
    if constexpr (std::is_void_v<Next>) {
      throw PrecisionExhausted(
          fmt::format("eigenvalue sign unresolved at {} bits", tier_traits<S>::bits));
    } else {
      return hermitian_signature<Next>(convert_matrix<Next>(M), tol, data_scale);
    }
  }
  return out;
}

template <class S>
double symmetry_defect(const Mat<S>& M, FormKind kind) {
  if (M.rows() != M.cols()) throw DimensionMismatch("form matrix must be square");
  Mat<S> d = kind == FormKind::hermitian ? Mat<S>(M - adjoint(M)) : Mat<S>(M + adjoint(M));
  return real_to_double(max_abs(d));
}

// Gauss-Jordan on m with pivots searched only in the first `pivot_cols`
// columns; the threshold is relative to the largest entry there, but never
// below the noise floor.
template <class S>
static Echelon<S> eliminate(Mat<S> m, Eigen::Index pivot_cols, double tol) {
  using R = real_t<S>;
  Echelon<S> e;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  R thr = std::max(R(R(tol) * max_abs(Mat<S>(m.leftCols(pivot_cols)))), noise_floor<S>());
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < pivot_cols && r < rows; ++c) {
    Eigen::Index best = r;
    R best_abs = cabs(m(r, c));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      R a = cabs(m(i, c));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best_abs <= thr || best_abs == 0) {
      for (Eigen::Index i = r; i < rows; ++i) m(i, c) = S(0);
      continue;
    }
    if (best != r) m.row(best).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    m(r, c) = S(1);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      S f = m(i, c);
      if (f == S(0)) continue;
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
      m(i, c) = S(0);
    }
    e.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    for (Eigen::Index j = 0; j < pivot_cols; ++j) m(i, j) = S(0);
  e.rref = std::move(m);
  return e;
}

template <class S>
Echelon<S> row_echelon(const Mat<S>& A, double tol) {
  return eliminate(A, A.cols(), tol);
}

template <class S>
int rank(const Mat<S>& A, double tol) {
  return row_echelon(A, tol).rank();
}

template <class S>
static Mat<S> kernel_from(const Echelon<S>& e, Eigen::Index k) {
  std::vector<bool> is_pivot(k, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Mat<S> N = Mat<S>::Zero(k, k - e.rank());
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    N(f, col) = S(1);
    for (int r = 0; r < e.rank(); ++r) N(e.pivots[r], col) = -e.rref(r, f);
    ++col;
  }
  return N;
}

template <class S>
Mat<S> nullspace(const Mat<S>& A, double tol) {
  return kernel_from(row_echelon(A, tol), A.cols());
}

template <class S>
Mat<S> orthonormalize(const Mat<S>& A, double tol) {
  using R = real_t<S>;
  R scale = max_abs(A);
  std::vector<Vec<S>> q;
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    Vec<S> v = A.col(j);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) {
        S d(0);
        for (Eigen::Index i = 0; i < v.size(); ++i) d += cconj(u(i)) * v(i);
        v -= d * u;
      }
    R nrm(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) nrm += re(v(i) * cconj(v(i)));
    using std::sqrt;
    nrm = sqrt(nrm);
    if (nrm <= R(tol) * scale || nrm <= noise_floor<S>()) continue;
    q.push_back(v / S(nrm));
  }
  Mat<S> out(A.rows(), static_cast<Eigen::Index>(q.size()));
  for (size_t j = 0; j < q.size(); ++j) out.col(j) = q[j];
  return out;
}

template <class S>
Mat<S> solve_least_norm(const Mat<S>& A, const Mat<S>& B, double tol) {
  if (A.rows() != B.rows()) throw DimensionMismatch("solve: row counts differ");
  const Eigen::Index k = A.cols();
  Mat<S> aug(A.rows(), k + B.cols());
  aug << A, B;
  Echelon<S> e = eliminate(std::move(aug), k, tol);
  Mat<S> X = Mat<S>::Zero(k, B.cols());
  for (int r = 0; r < e.rank(); ++r)
    for (Eigen::Index j = 0; j < B.cols(); ++j) X(e.pivots[r], j) = e.rref(r, k + j);
  if (e.rank() < k) {
    Mat<S> Q = orthonormalize(kernel_from(e, k), tol);
    X -= Q * (adjoint(Q) * X);
  }
  return X;
}

template <class S>
Mat<S> inverse(const Mat<S>& A, double tol) {
  if (A.rows() != A.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  if (rank(A, tol) != A.rows()) throw DimensionMismatch("inverse of a singular matrix");
  return solve_least_norm(A, identity<S>(A.rows()), tol);
}

template <class S>
Subspace<S> Subspace<S>::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat<S>(ambient, 0);
  return s;
}

template <class S>
Subspace<S> Subspace<S>::whole(int ambient) {
  return span(identity<S>(ambient));
}

template <class S>
Subspace<S> Subspace<S>::span(const Mat<S>& columns, double tol) {
  Subspace s;
  s.ambient_ = static_cast<int>(columns.rows());
  if (columns.cols() == 0) {
    s.basis_ = Mat<S>(columns.rows(), 0);
    return s;
  }
  Mat<S> t = columns.transpose();
  Echelon<S> e = row_echelon(t, tol);
  s.basis_ = e.rref.topRows(e.rank()).transpose();
  s.pivots_ = e.pivots;
  return s;
}

template <class S>
bool Subspace<S>::approx_equal(const Subspace& other, double tol) const {
  if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
  if (dim() == 0) return true;
  return real_to_double(max_abs(Mat<S>(basis_ - other.basis_))) <= tol;
}

template <class S>
static void check_ambient(const Subspace<S>& U, const Subspace<S>& V) {
  if (U.ambient_dim() != V.ambient_dim())
    throw DimensionMismatch(
        fmt::format("ambient dimensions {} and {}", U.ambient_dim(), V.ambient_dim()));
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& U, const Subspace<S>& V, double tol) {
  check_ambient(U, V);
  Mat<S> both(U.ambient_dim(), U.dim() + V.dim());
  both << U.basis(), V.basis();
  return Subspace<S>::span(both, tol);
}

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& U, const Subspace<S>& V, double tol) {
  check_ambient(U, V);
  if (U.dim() == 0 || V.dim() == 0) return Subspace<S>::zero(U.ambient_dim());
  Mat<S> both(U.ambient_dim(), U.dim() + V.dim());
  both << U.basis(), -V.basis();
  Mat<S> N = nullspace(both, tol);
  if (N.cols() == 0) return Subspace<S>::zero(U.ambient_dim());
  return Subspace<S>::span(Mat<S>(U.basis() * N.topRows(U.dim())), tol);
}

template <class S>
Subspace<S> relative_complement(const Subspace<S>& W, const Subspace<S>& K, double tol) {
  check_ambient(W, K);
  if (K.dim() == 0 || W.dim() == 0) return W;
  // w = W c with K^* W c = 0.
  Mat<S> N = nullspace(Mat<S>(adjoint(K.basis()) * W.basis()), tol);
  if (N.cols() == 0) return Subspace<S>::zero(W.ambient_dim());
  return Subspace<S>::span(Mat<S>(W.basis() * N), tol);
}

template <class S>
std::pair<Vec<S>, Vec<S>> decompose(const Vec<S>& a, const Subspace<S>& U, const Subspace<S>& V,
                                    double tol) {
  check_ambient(U, V);
  if (a.size() != U.ambient_dim()) throw DimensionMismatch("vector length differs from ambient");
  Mat<S> both(U.ambient_dim(), U.dim() + V.dim());
  both << U.basis(), V.basis();
  Mat<S> x = solve_least_norm(both, Mat<S>(a), tol);
  Vec<S> a1 = U.basis() * x.topRows(U.dim());
  Vec<S> a2 = V.basis() * x.bottomRows(V.dim());
  real_t<S> res = max_abs(Mat<S>(a - a1 - a2));
  // The pieces can be much larger than a when U and V are nearly parallel, and
  // the residual carries their rounding.
  using std::max;
  real_t<S> scale = max(max(max_abs(Mat<S>(a)), max_abs(Mat<S>(a1))), max_abs(Mat<S>(a2)));
  if (scale < 1) scale = 1;
  if (res > real_t<S>(tol) * scale) throw NotInSum("vector is not in U + V");
  return {a1, a2};
}

template <class S>
bool is_isotropic(const Subspace<S>& L, const Mat<S>& xi, double tol) {
  if (xi.rows() != L.ambient_dim()) throw DimensionMismatch("form and subspace dimensions differ");
  if (L.dim() == 0) return true;
  Mat<S> g = L.basis().transpose() * xi * conj_entries(L.basis());
  real_t<S> scale = max_abs(xi);
  if (scale < 1) scale = 1;
  return max_abs(g) <= real_t<S>(tol) * scale;
}

#define KNOTSIG_INST(S)                                                                      \
  template Inertia hermitian_signature<S>(const Mat<S>&, double, double);                    \
  template double symmetry_defect<S>(const Mat<S>&, FormKind);                               \
  template Echelon<S> row_echelon<S>(const Mat<S>&, double);                                 \
  template int rank<S>(const Mat<S>&, double);                                               \
  template Mat<S> nullspace<S>(const Mat<S>&, double);                                       \
  template Mat<S> orthonormalize<S>(const Mat<S>&, double);                                  \
  template Mat<S> solve_least_norm<S>(const Mat<S>&, const Mat<S>&, double);                 \
  template Mat<S> inverse<S>(const Mat<S>&, double);                                         \
  template class Subspace<S>;                                                                \
  template Subspace<S> subspace_sum<S>(const Subspace<S>&, const Subspace<S>&, double);      \
  template Subspace<S> subspace_intersect<S>(const Subspace<S>&, const Subspace<S>&, double); \
  template Subspace<S> relative_complement<S>(const Subspace<S>&, const Subspace<S>&, double); \
  template std::pair<Vec<S>, Vec<S>> decompose<S>(const Vec<S>&, const Subspace<S>&,          \
                                                  const Subspace<S>&, double);                \
  template bool is_isotropic<S>(const Subspace<S>&, const Mat<S>&, double);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
