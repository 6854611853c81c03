#include "knotsig/maslov.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "knotsig/errors.hpp"

namespace knotsig {

namespace {

// Signature of the Hermitian part of F = X^T xi conj(Y), thresholded against
// the sizes of the factors rather than of F itself. A factor produced by
// cancellation can be far smaller than its inputs, so callers pass the size
// of those inputs as x_size and y_size.
template <class S>
Inertia form_inertia(const Mat<S>& X, const Mat<S>& xi, const Mat<S>& Y, double tol,
                     double x_size = 0, double y_size = 0) {
  Mat<S> F = X.transpose() * xi * conj_entries(Y);
  Mat<S> H = (F + adjoint(F)) / S(2);
  double scale = std::max(real_to_double(max_abs(X)), x_size) *
                 real_to_double(max_abs(xi)) *
                 std::max(real_to_double(max_abs(Y)), y_size);
  return hermitian_signature(H, tol, scale);
}

template <class S>
Mat<S> second_components(const Mat<S>& W, const Subspace<S>& L1, const Subspace<S>& L2,
                         double tol) {
  Mat<S> A2(W.rows(), W.cols());
  for (Eigen::Index k = 0; k < W.cols(); ++k)
    A2.col(k) = decompose(Vec<S>(W.col(k)), L1, L2, tol).second;
  return A2;
}

}  // namespace

template <class S>
Inertia maslov(const IsotropicTriple<S>& T, MaslovDefinition which, double tol) {
  const int n = static_cast<int>(T.xi.rows());
  for (const Subspace<S>* L : {&T.L1, &T.L2, &T.L3})
    if (L->ambient_dim() != n) throw DimensionMismatch("triple and form dimensions differ");

  if (which == MaslovDefinition::gg_kernel) {
    // Orthonormal bases throughout, so the form is measured against |xi| alone;
    // echelon bases and an unnormalised kernel can inflate the scale by orders
    // of magnitude and swallow genuine eigenvalues.
    Mat<S> Q1 = orthonormalize(T.L1.basis(), tol), Q2 = orthonormalize(T.L2.basis(), tol),
           Q3 = orthonormalize(T.L3.basis(), tol);
    Mat<S> B(n, Q1.cols() + Q2.cols() + Q3.cols());
    B << Q1, Q2, Q3;
    Mat<S> N = orthonormalize(nullspace(B, tol), tol);
    if (N.cols() == 0) return {};
    Mat<S> A1 = Q1 * N.topRows(Q1.cols());
    Mat<S> A2 = Q2 * N.middleRows(Q1.cols(), Q2.cols());
    return form_inertia<S>(A2, T.xi, A1, tol, 1, 1);
  }

  Subspace<S> W = subspace_intersect(subspace_sum(T.L1, T.L2, tol), T.L3, tol);
  if (which == MaslovDefinition::quotient) {
    Subspace<S> K = subspace_sum(subspace_intersect(T.L1, T.L3, tol),
                                 subspace_intersect(T.L2, T.L3, tol), tol);
    W = relative_complement(W, K, tol);
  }
  if (W.dim() == 0) return {};
  Mat<S> Wb = orthonormalize(W.basis(), tol);
  Mat<S> A2 = second_components(Wb, T.L1, T.L2, tol);
  // A2 = W - A1, so both pieces bound its size.
  double a_size = 1 + real_to_double(max_abs(Mat<S>(Wb - A2)));
  return form_inertia<S>(A2, T.xi, Wb, tol, a_size);
}

template <class S>
Inertia meyer(const Mat<S>& xi, const Mat<S>& g1, const Mat<S>& g2, double tol) {
  const Eigen::Index n = xi.rows();
  if (g1.rows() != n || g2.rows() != n || g1.cols() != n || g2.cols() != n)
    throw DimensionMismatch("Meyer: matrix sizes differ");
  if (n == 0) return {};
  Mat<S> I = identity<S>(n);
  Mat<S> A1 = inverse(g1, tol) - I;
  Mat<S> A2 = I - g2;
  Subspace<S> E =
      subspace_intersect(Subspace<S>::span(A1, tol), Subspace<S>::span(A2, tol), tol);
  if (E.dim() == 0) return {};
  Mat<S> X1 = solve_least_norm(A1, E.basis(), tol);
  Mat<S> X2 = solve_least_norm(A2, E.basis(), tol);
  return form_inertia<S>(Mat<S>(X1 + X2), xi, E.basis(), tol,
                         real_to_double(max_abs(X1)) + real_to_double(max_abs(X2)));
}

template <class S>
Subspace<S> graph(const Mat<S>& g, double tol) {
  Mat<S> m(2 * g.rows(), g.cols());
  m << identity<S>(g.rows()), g;
  return Subspace<S>::span(m, tol);
}

template <class S>
Mat<S> relation_form(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> m = Mat<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = -a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

template <class S>
Inertia meyer_via_maslov(const Mat<S>& xi, const Mat<S>& g1, const Mat<S>& g2, double tol) {
  const Eigen::Index n = xi.rows();
  if (n == 0) return {};
  IsotropicTriple<S> T{relation_form(xi, xi), graph(inverse(g1, tol), tol),
                       graph(identity<S>(n), tol), graph(g2, tol)};
  Inertia m = maslov(T, MaslovDefinition::sum_intersection, tol);
  return {m.neg, m.pos, m.null};
}

template <class S>
Subspace<S> compose_relations(const Subspace<S>& N1, const Subspace<S>& N2, int middle_dim,
                              double tol) {
  const int d1 = N1.ambient_dim() - middle_dim;
  const int d3 = N2.ambient_dim() - middle_dim;
  if (d1 < 0 || d3 < 0) throw DimensionMismatch("middle dimension exceeds relation ambient");
  if (N1.dim() == 0 || N2.dim() == 0) return Subspace<S>::zero(d1 + d3);
  Mat<S> M(middle_dim, N1.dim() + N2.dim());
  M << N1.basis().bottomRows(middle_dim), -N2.basis().topRows(middle_dim);
  Mat<S> K = nullspace(M, tol);
  Mat<S> out(d1 + d3, K.cols());
  out << N1.basis().topRows(d1) * K.topRows(N1.dim()),
      N2.basis().bottomRows(d3) * K.bottomRows(N2.dim());
  return Subspace<S>::span(out, tol);
}

template <class S>
double unitarity_defect(const Mat<S>& U, const Mat<S>& xi) {
  return real_to_double(max_abs(Mat<S>(U.transpose() * xi * conj_entries(U) - xi)));
}

#define KNOTSIG_INST(S)                                                                       \
  template Inertia maslov<S>(const IsotropicTriple<S>&, MaslovDefinition, double);            \
  template Inertia meyer<S>(const Mat<S>&, const Mat<S>&, const Mat<S>&, double);             \
  template Inertia meyer_via_maslov<S>(const Mat<S>&, const Mat<S>&, const Mat<S>&, double);  \
  template Subspace<S> graph<S>(const Mat<S>&, double);                                       \
  template Mat<S> relation_form<S>(const Mat<S>&, const Mat<S>&);                             \
  template Subspace<S> compose_relations<S>(const Subspace<S>&, const Subspace<S>&, int,      \
                                            double);                                          \
  template double unitarity_defect<S>(const Mat<S>&, const Mat<S>&);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
