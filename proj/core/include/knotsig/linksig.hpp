#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotsig/algebra.hpp"
#include "knotsig/braid.hpp"
#include "knotsig/linalg.hpp"

namespace knotsig {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Generalized Seifert matrices A^eps of a C-complex, keyed by sign vectors.
struct CComplexData {
  int mu = 1;
  std::map<std::vector<int>, IntMatrix> matrices;

  int size() const;
  // Throws InvalidCComplex unless every eps is present, sizes agree and
  // A^{-eps} = (A^eps)^T.
  void validate() const;
};

// {"mu": 2, "matrices": {"++": [[-1]], "+-": [[0]], ...}}
CComplexData parse_ccomplex_json(const std::string& text);

// H(omega) = sum_eps prod_i (1 - conj(omega_i)^{eps_i}) A^eps
template <class S>
Mat<S> ccomplex_H(const CComplexData& data, const TorusPoint& omega);

// Seifert matrix of the closure from Seifert's algorithm on the closed braid:
// one disk per strand, one band per letter. Generators are the loops through
// consecutive letters with the same index.
IntMatrix seifert_from_braid(const BraidWord& w);

// (1 - omega) A + (1 - conj omega) A^T
template <class S>
Mat<S> levine_tristram_H(const IntMatrix& A, const TorusPoint& omega);

enum class SignatureMethod { meyer_algorithm, seifert_oracle, ccomplex };
std::string to_string(SignatureMethod m);

struct SignatureResult {
  TorusPoint omega;
  int signature = 0;
  std::optional<int> nullity;  // not produced by the Meyer recursion
  SignatureMethod method = SignatureMethod::meyer_algorithm;
};

struct SignatureOptions {
  bool force = false;  // allow omega outside the coprime-order set
  double tol = kDefaultTolerance;
};

// Re-sign every letter so the closure is a layered unlink: components ranked
// by smallest strand, points by traversal from that strand, and at each
// crossing the earlier piece passes over (sigma_i^{+1}: left strand over).
BraidWord layered_unlink(const BraidWord& w);

template <class S>
SignatureResult braid_signature(const BraidWord& w, const TorusPoint& omega,
                                const SignatureOptions& opt = {});

template <class S>
SignatureResult seifert_signature(const BraidWord& w, const TorusPoint& omega,
                                  double tol = kDefaultTolerance);

template <class S>
SignatureResult ccomplex_signature(const CComplexData& data, const TorusPoint& omega,
                                   double tol = kDefaultTolerance);

struct Defect {
  int lhs = 0;
  int rhs = 0;
};

// lhs = sign(w1 w2) - sign(w1) - sign(w2), rhs = -Meyer(B(w1), B(w2)).
template <class S>
Defect additivity_defect(const BraidWord& w1, const BraidWord& w2, const TorusPoint& omega,
                         const SignatureOptions& opt = {});

// ceil(|signature| / 2)
template <class S>
int unlinking_bound(const BraidWord& w, const TorusPoint& omega, const SignatureOptions& opt = {});

}  // namespace knotsig
