#include "knotsig/linksig.hpp"

#include <array>
#include <fmt/format.h>
#include <json.hpp>

#include "knotsig/errors.hpp"
#include "knotsig/gassner.hpp"
#include "knotsig/maslov.hpp"

namespace knotsig {

int CComplexData::size() const {
  return matrices.empty() ? 0 : static_cast<int>(matrices.begin()->second.rows());
}

void CComplexData::validate() const {
  if (mu < 1) throw InvalidCComplex("mu must be positive");
  if (matrices.size() != (size_t{1} << mu))
    throw InvalidCComplex(fmt::format("expected {} matrices, got {}", 1 << mu, matrices.size()));
  const int n = size();
  for (const auto& [eps, A] : matrices) {
    if (static_cast<int>(eps.size()) != mu) throw InvalidCComplex("sign vector of wrong length");
    if (A.rows() != n || A.cols() != n) throw InvalidCComplex("matrices differ in size");
    std::vector<int> neg(eps.size());
    for (size_t i = 0; i < eps.size(); ++i) neg[i] = -eps[i];
    auto it = matrices.find(neg);
    if (it == matrices.end()) throw InvalidCComplex("missing opposite sign vector");
    if (it->second != A.transpose()) throw InvalidCComplex("A^{-eps} differs from (A^eps)^T");
  }
}

CComplexData parse_ccomplex_json(const std::string& text) {
  CComplexData d;
  try {
    auto j = nlohmann::json::parse(text);
    d.mu = j.at("mu").get<int>();
    for (const auto& [key, rows] : j.at("matrices").items()) {
      std::vector<int> eps;
      for (char ch : key) {
        if (ch == '+')
          eps.push_back(1);
        else if (ch == '-')
          eps.push_back(-1);
        else
          throw ParseError(fmt::format("bad sign key '{}'", key));
      }
      const int r = static_cast<int>(rows.size());
      IntMatrix A(r, r);
      for (int a = 0; a < r; ++a) {
        if (static_cast<int>(rows[a].size()) != r) throw InvalidCComplex("matrix is not square");
        for (int b = 0; b < r; ++b) A(a, b) = rows[a][b].get<long long>();
      }
      d.matrices[eps] = A;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("C-complex JSON: {}", e.what()));
  }
  d.validate();
  return d;
}

template <class S>
Mat<S> ccomplex_H(const CComplexData& data, const TorusPoint& omega) {
  data.validate();
  if (omega.num_vars() != data.mu) throw DimensionMismatch("C-complex and torus point disagree on mu");
  const int n = data.size();
  Mat<S> H = Mat<S>::Zero(n, n);
  for (const auto& [eps, A] : data.matrices) {
    S coeff(1);
    for (int i = 0; i < data.mu; ++i) coeff *= S(1) - omega.power<S>(i + 1, -eps[i]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (A(a, b) != 0) H(a, b) += coeff * S(real_t<S>(A(a, b)));
  }
  return H;
}

IntMatrix seifert_from_braid(const BraidWord& w) {
  const Coloring& c = w.bottom();
  if (c.mu != 1) throw UnsupportedColoring("Seifert oracle needs a single color");
  for (int j = 0; j < c.size(); ++j)
    if (c.sign(j) < 0) throw UnsupportedColoring("Seifert oracle needs positive orientations");
  if (!w.is_endomorphism()) throw NotEndomorphism("closure of a non-endomorphism");

  struct Gen {
    int index, p, q;  // letters p < q, consecutive with this index
  };
  std::vector<Gen> gens;
  const auto& L = w.letters();
  for (int i = 1; i < w.strands(); ++i) {
    int prev = -1;
    for (int p = 0; p < w.length(); ++p) {
      if (L[p].index != i) continue;
      if (prev >= 0) gens.push_back({i, prev, p});
      prev = p;
    }
  }
  const int m = static_cast<int>(gens.size());
  IntMatrix A = IntMatrix::Zero(m, m);
  auto e = [&](int p) { return static_cast<long long>(L[p].sign); };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Gen &g = gens[x], &h = gens[y];
      if (x == y) {
        A(x, y) = -(e(g.p) + e(g.q)) / 2;
      } else if (g.index == h.index && g.q == h.p) {
        A(x, y) = (1 + e(g.q)) / 2;
      } else if (g.index == h.index && h.q == g.p) {
        A(x, y) = (e(g.p) - 1) / 2;
      } else if (h.index == g.index + 1) {
        if (g.p < h.p && h.p < g.q && g.q < h.q) A(x, y) = -1;
        if (h.p < g.p && g.p < h.q && h.q < g.q) A(x, y) = 1;
      }
    }
  return A;
}

template <class S>
Mat<S> levine_tristram_H(const IntMatrix& A, const TorusPoint& omega) {
  if (omega.num_vars() != 1) throw DimensionMismatch("Levine-Tristram form needs one variable");
  S a = S(1) - omega.power<S>(1, 1), b = S(1) - omega.power<S>(1, -1);
  Mat<S> H(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      H(i, j) = a * S(real_t<S>(A(i, j))) + b * S(real_t<S>(A(j, i)));
  return H;
}

std::string to_string(SignatureMethod m) {
  switch (m) {
    case SignatureMethod::meyer_algorithm:
      return "meyer_algorithm";
    case SignatureMethod::seifert_oracle:
      return "seifert_oracle";
    case SignatureMethod::ccomplex:
      return "ccomplex";
  }
  return "unknown";
}

BraidWord layered_unlink(const BraidWord& w) {
  auto comps = closure_components(w);
  const auto& L = w.letters();
  // rank[p][0 or 1] for the left and right piece at letter p
  std::vector<std::array<std::pair<int, int>, 2>> rank(L.size());
  for (const auto& comp : comps) {
    int idx = 0;
    for (int s : comp.strands) {
      int pos = s;
      for (size_t p = 0; p < L.size(); ++p) {
        int i = L[p].index - 1;
        if (pos == i) {
          rank[p][0] = {comp.id, idx++};
          pos = i + 1;
        } else if (pos == i + 1) {
          rank[p][1] = {comp.id, idx++};
          pos = i;
        }
      }
    }
  }
  std::vector<Letter> out = L;
  for (size_t p = 0; p < L.size(); ++p) out[p].sign = rank[p][0] < rank[p][1] ? 1 : -1;
  return BraidWord(w.bottom(), std::move(out));
}

namespace {

void check_guarantee(const TorusPoint& omega, const SignatureOptions& opt) {
  if (!opt.force && !is_in_TP(omega))
    throw OutsideGuarantee(fmt::format(
        "omega = {} is outside the set of pairwise coprime orders > 1", omega.to_string()));
}

}  // namespace

template <class S>
SignatureResult braid_signature(const BraidWord& w, const TorusPoint& omega,
                                const SignatureOptions& opt) {
  if (!w.is_endomorphism()) throw NotEndomorphism("signature of a non-endomorphism");
  if (omega.num_vars() != w.bottom().mu)
    throw DimensionMismatch("coloring and torus point disagree on mu");
  check_guarantee(omega, opt);
  BraidWord padded = pad_for_admissibility(w, omega);
  const auto& target = padded.letters();
  std::vector<Letter> cur = layered_unlink(padded).letters();
  int s = 0;
  for (size_t p = 0; p < cur.size(); ++p) {
    if (cur[p] == target[p]) continue;
    const int i = target[p].index, e = target[p].sign;
    BraidWord current(padded.bottom(), cur);
    Coloring cp = current.coloring_at(static_cast<int>(p));
    // beta = sigma_i^{-e} v u, conjugate to the flipped word with sigma_i^{2e} removed
    std::vector<Letter> beta{{i, -e}};
    beta.insert(beta.end(), cur.begin() + p + 1, cur.end());
    beta.insert(beta.end(), cur.begin(), cur.begin() + p);
    BraidWord bw(cp, std::move(beta));
    BraidWord sq(cp, {{i, e}, {i, e}});
    int hopf = cp.color(i - 1) == cp.color(i) ? -e * cp.sign(i - 1) * cp.sign(i) : 0;
    Mat<S> xi = xi_form<S>(cp, omega);
    Inertia m = meyer<S>(xi, burau_matrix<S>(sq, omega, ReducedBasis::colored, opt.tol),
                         burau_matrix<S>(bw, omega, ReducedBasis::colored, opt.tol), opt.tol);
    s += hopf - m.signature();
    cur[p] = target[p];
  }
  return {omega, s, std::nullopt, SignatureMethod::meyer_algorithm};
}

template <class S>
SignatureResult seifert_signature(const BraidWord& w, const TorusPoint& omega, double tol) {
  IntMatrix A = seifert_from_braid(w);
  double scale = A.size() ? 4.0 * static_cast<double>(A.cwiseAbs().maxCoeff()) : 0.0;
  Inertia in = hermitian_signature<S>(levine_tristram_H<S>(A, omega), tol, scale);
  return {omega, in.signature(), in.null, SignatureMethod::seifert_oracle};
}

template <class S>
SignatureResult ccomplex_signature(const CComplexData& data, const TorusPoint& omega,
                                   double tol) {
  double scale = 0;
  for (const auto& [eps, A] : data.matrices)
    if (A.size()) scale = std::max(scale, static_cast<double>(A.cwiseAbs().maxCoeff()));
  Inertia in = hermitian_signature<S>(ccomplex_H<S>(data, omega), tol,
                                      scale * static_cast<double>(1 << data.mu));
  return {omega, in.signature(), in.null, SignatureMethod::ccomplex};
}

template <class S>
Defect additivity_defect(const BraidWord& w1, const BraidWord& w2, const TorusPoint& omega,
                         const SignatureOptions& opt) {
  if (!w1.is_endomorphism() || !w2.is_endomorphism())
    throw NotEndomorphism("defect needs endomorphisms");
  BraidWord w12 = compose(w1, w2);
  Defect d;
  d.lhs = braid_signature<S>(w12, omega, opt).signature -
          braid_signature<S>(w1, omega, opt).signature -
          braid_signature<S>(w2, omega, opt).signature;
  const Coloring& c = w1.bottom();
  Mat<S> xi = xi_form<S>(c, omega);
  d.rhs = -meyer<S>(xi, burau_matrix<S>(w1, omega, ReducedBasis::colored, opt.tol),
                    burau_matrix<S>(w2, omega, ReducedBasis::colored, opt.tol), opt.tol)
               .signature();
  return d;
}

template <class S>
int unlinking_bound(const BraidWord& w, const TorusPoint& omega, const SignatureOptions& opt) {
  int s = braid_signature<S>(w, omega, opt).signature;
  if (s < 0) s = -s;
  return (s + 1) / 2;
}

#define KNOTSIG_INST(S)                                                                       \
  template Mat<S> ccomplex_H<S>(const CComplexData&, const TorusPoint&);                      \
  template Mat<S> levine_tristram_H<S>(const IntMatrix&, const TorusPoint&);                  \
  template SignatureResult braid_signature<S>(const BraidWord&, const TorusPoint&,            \
                                              const SignatureOptions&);                       \
  template SignatureResult seifert_signature<S>(const BraidWord&, const TorusPoint&, double); \
  template SignatureResult ccomplex_signature<S>(const CComplexData&, const TorusPoint&,      \
                                                 double);                                     \
  template Defect additivity_defect<S>(const BraidWord&, const BraidWord&, const TorusPoint&, \
                                       const SignatureOptions&);                              \
  template int unlinking_bound<S>(const BraidWord&, const TorusPoint&, const SignatureOptions&);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig
