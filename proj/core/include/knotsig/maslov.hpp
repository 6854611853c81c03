#pragma once

#include "knotsig/linalg.hpp"

namespace knotsig {

// Maslov indices of isotropic triples and Meyer cocycles of unitary pairs,
// all over C. Results carry the full inertia of the Hermitian form whose
// signature defines them.

template <class S>
struct IsotropicTriple {
  Mat<S> xi;
  Subspace<S> L1, L2, L3;
};

enum class MaslovDefinition {
  // f(a, b) = xi(a2, b) on (L1 + L2) cap L3, a = a1 + a2
  sum_intersection,
  // the same form on a complement of (L1 cap L3) + (L2 cap L3)
  quotient,
  // the form on {(v1, v2, v3) in L1 + L2 + L3 : v1 + v2 + v3 = 0}
  gg_kernel,
};

template <class S>
Inertia maslov(const IsotropicTriple<S>& T,
               MaslovDefinition which = MaslovDefinition::sum_intersection,
               double tol = kDefaultTolerance);

// Signature of b(e, e') = xi(x1 + x2, e') on E = Im(g1^-1 - 1) cap Im(1 - g2)
// with least-norm preimages e = (g1^-1 - 1) x1 = (1 - g2) x2.
template <class S>
Inertia meyer(const Mat<S>& xi, const Mat<S>& g1, const Mat<S>& g2,
              double tol = kDefaultTolerance);

// -Maslov(graph(g1^-1), diagonal, graph(g2)) in (-xi) + xi.
template <class S>
Inertia meyer_via_maslov(const Mat<S>& xi, const Mat<S>& g1, const Mat<S>& g2,
                         double tol = kDefaultTolerance);

// {(x, g x)}
template <class S>
Subspace<S> graph(const Mat<S>& g, double tol = kDefaultTolerance);

// Block form (-a) + b on the direct sum.
template <class S>
Mat<S> relation_form(const Mat<S>& a, const Mat<S>& b);

// N1 in H1 + H2 and N2 in H2 + H3 give {h1 + h3 : h1 + h2 in N1, h2 + h3 in N2}.
template <class S>
Subspace<S> compose_relations(const Subspace<S>& N1, const Subspace<S>& N2, int middle_dim,
                              double tol = kDefaultTolerance);

// max |U^T xi conj(U) - xi|
template <class S>
double unitarity_defect(const Mat<S>& U, const Mat<S>& xi);

}  // namespace knotsig
