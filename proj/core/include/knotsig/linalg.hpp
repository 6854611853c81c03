#pragma once

#include <utility>
#include <vector>

#include "knotsig/numeric.hpp"

namespace knotsig {

// Forms are read as f(x, y) = x^T F conj(y): linear in the first slot,
// antilinear in the second. A matrix U is unitary for F when U^T F conj(U) = F.

struct Inertia {
  int pos = 0;
  int neg = 0;
  int null = 0;
  int signature() const { return pos - neg; }
  int dim() const { return pos + neg + null; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class FormKind { hermitian, skew_hermitian };

template <class S>
struct FormMatrix {
  Mat<S> entries;
  FormKind kind = FormKind::hermitian;
  int dim() const { return static_cast<int>(entries.rows()); }
};

// Eigenvalue sign count of (M + M*)/2 with |lambda| <= tol * max|M_ij| taken
// as zero. Eigenvalues in (tol, 10 tol] (relative) trigger a rerun at the next
// tier; past 1024 bits this throws PrecisionExhausted. When M was assembled
// from larger data, pass that magnitude as `scale` so that a form which
// vanishes up to rounding is read as zero.
template <class S>
Inertia hermitian_signature(const Mat<S>& M, double tol = kDefaultTolerance, double scale = 0);

// Largest deviation from (skew-)Hermitian symmetry.
template <class S>
double symmetry_defect(const Mat<S>& M, FormKind kind);

// Reduced row echelon form with partial pivoting. Pivot threshold is
// tol * max|A_ij|.
template <class S>
struct Echelon {
  Mat<S> rref;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class S>
Echelon<S> row_echelon(const Mat<S>& A, double tol = kDefaultTolerance);

template <class S>
int rank(const Mat<S>& A, double tol = kDefaultTolerance);

// Columns span the kernel of A.
template <class S>
Mat<S> nullspace(const Mat<S>& A, double tol = kDefaultTolerance);

// Minimal-norm X with A X = B, column by column. The residual is not checked.
template <class S>
Mat<S> solve_least_norm(const Mat<S>& A, const Mat<S>& B, double tol = kDefaultTolerance);

// Throws DimensionMismatch when A is singular at the tolerance.
template <class S>
Mat<S> inverse(const Mat<S>& A, double tol = kDefaultTolerance);

// Orthonormal basis of the column span (modified Gram-Schmidt, two passes).
template <class S>
Mat<S> orthonormalize(const Mat<S>& A, double tol = kDefaultTolerance);

// Subspace of C^ambient with basis in reduced column echelon form, unit
// pivots. Equal subspaces have equal basis matrices up to rounding.
template <class S>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace whole(int ambient);
  static Subspace span(const Mat<S>& columns, double tol = kDefaultTolerance);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool approx_equal(const Subspace& other, double tol = 1e-8) const;

 private:
  int ambient_ = 0;
  Mat<S> basis_;
  std::vector<int> pivots_;
};

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& U, const Subspace<S>& V, double tol = kDefaultTolerance);

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& U, const Subspace<S>& V,
                               double tol = kDefaultTolerance);

// Vectors of W orthogonal (standard inner product) to K.
template <class S>
Subspace<S> relative_complement(const Subspace<S>& W, const Subspace<S>& K,
                                double tol = kDefaultTolerance);

// a = a1 + a2 with a1 in U and a2 in V. Throws NotInSum if a is not in U + V.
template <class S>
std::pair<Vec<S>, Vec<S>> decompose(const Vec<S>& a, const Subspace<S>& U, const Subspace<S>& V,
                                    double tol = kDefaultTolerance);

// max |B^T xi conj(B)| <= tol * max(1, max|xi|) for the canonical basis B.
template <class S>
bool is_isotropic(const Subspace<S>& L, const Mat<S>& xi, double tol = kDefaultTolerance);

}  // namespace knotsig
