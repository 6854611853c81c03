#pragma once

#include <map>
#include <vector>

#include "knotsig/algebra.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/numeric.hpp"

namespace knotsig {

// Finite abelian cover of the rose with n petals (the punctured disk up to
// homotopy). G = C_{k_1} x ... x C_{k_mu}; vertex index of g is its rank in
// lexicographic order; edge (g, j) has index g * n + j and runs from g to
// g * T_j with T_j = t_{|c_j|}^{sgn c_j}.
//
// The ribbon order at every vertex is out_1, in_1, ..., out_n, in_n.
struct FatGraphCover {
  Coloring coloring;
  TorusPoint omega;
  std::vector<long long> orders;
  int group_order = 1;
  int strands = 0;

  int vertices() const { return group_order; }
  int edges() const { return group_order * strands; }

  std::vector<int> element(int vertex) const;
  int index(const std::vector<int>& g) const;
  // Vertex reached from v along a step of color `color` (1-based), power +-1.
  int step(int vertex, int color, int power) const;
  int head(int edge) const;
  int tail(int edge) const { return edge / strands; }

  int connected_components() const;
  int graph_h1_rank() const { return edges() - vertices() + connected_components(); }

  struct Boundary {
    int outer = 0;     // lifts of the disk boundary
    int puncture = 0;  // lifts of the small loops around punctures
  };
  Boundary boundary_components() const;
  // |G| / order of prod_i t_i^{ell_i}.
  long long predicted_outer_boundary() const;

  // Fundamental cycles of a BFS spanning forest, as sparse edge chains.
  std::vector<std::map<int, int>> cycle_basis;
};

FatGraphCover build_cover(const Coloring& c, const TorusPoint& omega);

// Character value chi(g) = prod omega_i^{g_i}.
template <class S>
S character(const FatGraphCover& cov, int vertex);

// The chi-projector on 1-chains as a dense E x E matrix (for small covers).
template <class S>
Mat<S> projector_matrix(const FatGraphCover& cov);

template <class S>
struct EigenSpaceData {
  int dim = 0;
  Mat<S> basis;  // E x dim, columns are projected lifts of the reduced basis
  Mat<S> form;   // dim x dim, skew-Hermitian
};

template <class S>
EigenSpaceData<S> eigenspace_form(const FatGraphCover& cov, double tol = kDefaultTolerance);

// Rank of the projected fundamental cycles; equals the eigenspace dimension.
template <class S>
int projected_cycle_rank(const FatGraphCover& cov, double tol = kDefaultTolerance);

// Sparse integer chain map; column e is the image of edge e.
using ChainMap = std::vector<std::map<int, long long>>;

// The lifted Artin automorphism of w. Maps compose as chain(w1 w2) = chain(w2) chain(w1).
ChainMap braid_chain_map(const FatGraphCover& cov, const BraidWord& w);

// Matrix of the chain map on the eigenspace basis.
template <class S>
Mat<S> braid_action(const FatGraphCover& cov, const EigenSpaceData<S>& data, const BraidWord& w,
                    double tol = kDefaultTolerance);

}  // namespace knotsig
