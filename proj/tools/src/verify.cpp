#include "knotsig_cli/verify.hpp"

#include <Eigen/LU>
#include <fmt/format.h>

#include <numeric>
#include <set>

#include "knotsig/cover.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/gassner.hpp"
#include "knotsig/linksig.hpp"
#include "knotsig_cli/parallel.hpp"

namespace knotsig::cli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

cx64 gaussian(Rng& rng) {
  std::normal_distribution<long double> d;
  return {d(rng), d(rng)};
}

Mat<cx64> gaussian_matrix(Rng& rng, int r, int c) {
  Mat<cx64> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = gaussian(rng);
  return m;
}

long long random_unit(Rng& rng, long long k) {
  long long a;
  do a = uniform(rng, 1, static_cast<int>(k) - 1);
  while (std::gcd(a, k) != 1);
  return a;
}

template <class S>
Subspace<S> convert_subspace(const Subspace<cx64>& L) {
  if (L.dim() == 0) return Subspace<S>::zero(L.ambient_dim());
  return Subspace<S>::span(convert_matrix<S>(L.basis()));
}

// Runs `check(i)` for every trial; a check returns an empty string on success
// and a description otherwise. Exceptions count as failures.
template <class Check>
SuiteReport run_trials(const std::string& name, int trials, int jobs, Check check) {
  auto results = parallel_map<std::string>(trials, jobs, [&](int i) -> std::string {
    try {
      return check(i);
    } catch (const std::exception& e) {
      return fmt::format("exception: {}", e.what());
    }
  });
  SuiteReport r{name, trials, 0, std::nullopt};
  for (int i = 0; i < trials; ++i) {
    if (results[i].empty())
      ++r.passed;
    else if (!r.counterexample)
      r.counterexample = fmt::format("trial {}: {}", i, results[i]);
  }
  return r;
}

// True when f hits PrecisionExhausted: some form has an eigenvalue inside the
// ambiguity band, so no verdict at this tolerance is meaningful.
template <class F>
bool on_wall(F f) {
  try {
    f();
    return false;
  } catch (const PrecisionExhausted&) {
    return true;
  }
}

std::string letters_to_string(const BraidWord& w) {
  std::string s;
  for (const auto& l : w.letters()) s += fmt::format("{}{} ", l.sign < 0 ? "-" : "", l.index);
  if (!s.empty()) s.pop_back();
  return fmt::format("\"{}\"", s);
}

}  // namespace

Coloring random_coloring(Rng& rng, int n, int mu, bool positive) {
  for (;;) {
    std::vector<int> c(n);
    std::set<int> used;
    for (int& x : c) {
      x = uniform(rng, 1, mu);
      used.insert(x);
      if (!positive && uniform(rng, 0, 1)) x = -x;
    }
    if (static_cast<int>(used.size()) == mu) return Coloring(c, mu);
  }
}

BraidWord random_endomorphism(Rng& rng, const Coloring& c, int min_len, int max_len) {
  for (;;) {
    std::vector<Letter> L(uniform(rng, min_len, max_len));
    for (auto& l : L) l = {uniform(rng, 1, c.size() - 1), uniform(rng, 0, 1) ? 1 : -1};
    BraidWord w(c, std::move(L));
    if (w.is_endomorphism()) return w;
  }
}

std::optional<TorusPoint> random_admissible_point(Rng& rng, const Coloring& c, int max_order) {
  auto l = ell(c);
  std::vector<std::vector<long long>> allowed(c.mu);
  for (int i = 0; i < c.mu; ++i)
    for (long long k = 2; k <= max_order; ++k)
      if (l[i] != 0 && std::gcd<long long>(l[i], k) == 1) allowed[i].push_back(k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<TorusPoint::Rotation> rot;
    bool ok = true;
    for (int i = 0; i < c.mu && ok; ++i) {
      if (allowed[i].empty()) return std::nullopt;
      long long k = allowed[i][uniform(rng, 0, static_cast<int>(allowed[i].size()) - 1)];
      for (const auto& r : rot) ok = ok && std::gcd(r.den, k) == 1;
      rot.push_back({random_unit(rng, k), k});
    }
    if (ok) return TorusPoint(rot);
  }
  return std::nullopt;
}

TorusPoint random_point(Rng& rng, int mu, int max_order) {
  std::vector<TorusPoint::Rotation> rot;
  for (int i = 0; i < mu; ++i) {
    long long k = uniform(rng, 2, max_order);
    rot.push_back({uniform(rng, 1, static_cast<int>(k) - 1), k});
  }
  return TorusPoint(rot);
}

IsotropicTriple<cx64> random_isotropic_triple(Rng& rng, int n) {
  std::vector<int> plus, minus;
  for (int i = 0; i < n; ++i) (uniform(rng, 0, 1) ? plus : minus).push_back(i);
  std::shuffle(plus.begin(), plus.end(), rng);
  std::shuffle(minus.begin(), minus.end(), rng);
  const int pairs = static_cast<int>(std::min(plus.size(), minus.size()));

  Mat<cx64> X0 = Mat<cx64>::Zero(n, n);
  for (int i : plus) X0(i, i) = cx64(0, 1);
  for (int i : minus) X0(i, i) = cx64(0, -1);
  Mat<cx64> P = gaussian_matrix(rng, n, n);
  Mat<cx64> Pinv = P.inverse();
  const cx64 phases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  auto lagrangian_piece = [&]() {
    std::vector<Vec<cx64>> cols;
    for (int p = 0; p < pairs; ++p) {
      if (!uniform(rng, 0, 2)) continue;
      Vec<cx64> v = Vec<cx64>::Zero(n);
      v(plus[p]) = 1;
      v(minus[p]) = phases[uniform(rng, 0, 3)];
      cols.push_back(Pinv * v);
    }
    if (cols.empty()) return Subspace<cx64>::zero(n);
    Mat<cx64> m(n, cols.size());
    for (size_t k = 0; k < cols.size(); ++k) m.col(k) = cols[k];
    return Subspace<cx64>::span(m);
  };
  IsotropicTriple<cx64> T;
  T.xi = P.transpose() * X0 * conj_entries(P);
  T.L1 = lagrangian_piece();
  T.L2 = lagrangian_piece();
  T.L3 = uniform(rng, 0, 4) ? lagrangian_piece() : T.L1;
  return T;
}

UnitaryPair random_unitary_pair(Rng& rng, int n) {
  // Work with Xi = conj(xi), where unitarity reads U* Xi U = Xi.
  const int fixed = uniform(rng, 0, n / 2);
  const int moving = n - fixed;
  auto random_hermitian = [&](int d) {
    Mat<cx64> A = gaussian_matrix(rng, d, d);
    return Mat<cx64>((A + adjoint(A)) / cx64(2));
  };
  auto cayley = [&](const Mat<cx64>& Xi) {
    const int d = static_cast<int>(Xi.rows());
    Mat<cx64> K = Xi.inverse() * random_hermitian(d);
    Mat<cx64> I = identity<cx64>(d);
    return Mat<cx64>((I - K).inverse() * (I + K));
  };
  Mat<cx64> Xi1 = cx64(0, 1) * random_hermitian(moving);
  Mat<cx64> Xi2 = cx64(0, 1) * random_hermitian(fixed);
  Mat<cx64> Xi = Mat<cx64>::Zero(n, n), g1 = identity<cx64>(n), g2 = identity<cx64>(n);
  Xi.topLeftCorner(moving, moving) = Xi1;
  Xi.bottomRightCorner(fixed, fixed) = Xi2;
  g1.topLeftCorner(moving, moving) = cayley(Xi1);
  g2.topLeftCorner(moving, moving) = cayley(Xi1);
  if (fixed > 0 && uniform(rng, 0, 1)) g2.bottomRightCorner(fixed, fixed) = cayley(Xi2);
  switch (uniform(rng, 0, 3)) {
    case 0:
      g2 = g1;
      break;
    case 1:
      g2 = g1.inverse();
      break;
    case 2:
      g2 = g1 * g2;
      break;
    default:
      break;
  }
  Mat<cx64> P = gaussian_matrix(rng, n, n), Pinv = P.inverse();
  return {conj_entries(Mat<cx64>(adjoint(P) * Xi * P)), Pinv * g1 * P, Pinv * g2 * P};
}

SuiteReport verify_theorem(const VerifyConfig& cfg) {
  struct Instance {
    BraidWord w1, w2;
    TorusPoint omega;
  };
  Rng rng(cfg.seed);
  std::vector<Instance> inst;
  while (static_cast<int>(inst.size()) < cfg.trials) {
    int mu = uniform(rng, 1, 2), n = uniform(rng, 2, 5);
    if (n < mu) continue;
    Coloring c = random_coloring(rng, n, mu);
    auto omega = random_admissible_point(rng, c, 13);
    if (!omega) continue;
    BraidWord w1 = random_endomorphism(rng, c, 0, 6);
    BraidWord w2 = random_endomorphism(rng, c, 0, 6);
    inst.push_back({w1, w2, *omega});
  }
  return run_trials("theorem", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    const Instance& x = inst[i];
    Defect d = with_precision(cfg.precision, [&](auto tag) {
      using S = typename decltype(tag)::type;
      return additivity_defect<S>(x.w1, x.w2, x.omega, {false, cfg.tol});
    });
    if (d.lhs == d.rhs) return {};
    return fmt::format("colors {} w1 {} w2 {} omega {}: lhs {} rhs {}",
                       x.w1.bottom().to_string(), letters_to_string(x.w1),
                       letters_to_string(x.w2), x.omega.to_string(), d.lhs, d.rhs);
  });
}

SuiteReport verify_oracle(const VerifyConfig& cfg) {
  struct Instance {
    BraidWord w;
    TorusPoint omega;
  };
  Rng rng(cfg.seed + 1);
  std::vector<Instance> inst;
  for (int t = 0; t < cfg.trials; ++t) {
    Coloring c = random_coloring(rng, uniform(rng, 2, 6), 1, true);
    BraidWord w = random_endomorphism(rng, c, 1, 14);
    inst.push_back({w, random_point(rng, 1, 13)});
  }
  return run_trials("oracle", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    const Instance& x = inst[i];
    auto [a, b] = with_precision(cfg.precision, [&](auto tag) {
      using S = typename decltype(tag)::type;
      return std::pair{braid_signature<S>(x.w, x.omega, {false, cfg.tol}).signature,
                       seifert_signature<S>(x.w, x.omega, cfg.tol).signature};
    });
    if (a == b) return {};
    return fmt::format("strands {} word {} omega {}: meyer {} seifert {}", x.w.strands(),
                       letters_to_string(x.w), x.omega.to_string(), a, b);
  });
}

SuiteReport verify_maslov_definitions(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 2);
  std::vector<IsotropicTriple<cx64>> inst;
  int resampled = 0;
  while (static_cast<int>(inst.size()) < cfg.trials) {
    auto T = random_isotropic_triple(rng, uniform(rng, 2, 8));
    if (on_wall([&] {
          for (auto d : {MaslovDefinition::sum_intersection, MaslovDefinition::quotient,
                         MaslovDefinition::gg_kernel})
            maslov(T, d, cfg.tol);
        })) {
      ++resampled;
      continue;
    }
    inst.push_back(std::move(T));
  }
  SuiteReport r = run_trials("maslov-defs", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    return with_precision(cfg.precision, [&](auto tag) -> std::string {
      using S = typename decltype(tag)::type;
      IsotropicTriple<S> T{convert_matrix<S>(inst[i].xi), convert_subspace<S>(inst[i].L1),
                           convert_subspace<S>(inst[i].L2), convert_subspace<S>(inst[i].L3)};
      int a = maslov(T, MaslovDefinition::sum_intersection, cfg.tol).signature();
      int b = maslov(T, MaslovDefinition::quotient, cfg.tol).signature();
      int c = maslov(T, MaslovDefinition::gg_kernel, cfg.tol).signature();
      if (a == b && b == c) return {};
      return fmt::format("ambient {}: sum-intersection {} quotient {} kernel {}",
                         T.xi.rows(), a, b, c);
    });
  });
  r.resampled = resampled;
  return r;
}

SuiteReport verify_meyer_definitions(const VerifyConfig& cfg) {
  Rng rng(cfg.seed + 3);
  std::vector<UnitaryPair> inst;
  int resampled = 0;
  while (static_cast<int>(inst.size()) < cfg.trials) {
    UnitaryPair p = random_unitary_pair(rng, uniform(rng, 1, 4));
    if (on_wall([&] {
          meyer(p.xi, p.g1, p.g2, cfg.tol);
          meyer_via_maslov(p.xi, p.g1, p.g2, cfg.tol);
        })) {
      ++resampled;
      continue;
    }
    inst.push_back(std::move(p));
  }
  SuiteReport r = run_trials("meyer-defs", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    return with_precision(cfg.precision, [&](auto tag) -> std::string {
      using S = typename decltype(tag)::type;
      Mat<S> xi = convert_matrix<S>(inst[i].xi), g1 = convert_matrix<S>(inst[i].g1),
             g2 = convert_matrix<S>(inst[i].g2);
      int a = meyer(xi, g1, g2, cfg.tol).signature();
      int b = meyer_via_maslov(xi, g1, g2, cfg.tol).signature();
      if (a == b) return {};
      return fmt::format("dim {}: E-space {} Maslov {}", xi.rows(), a, b);
    });
  });
  r.resampled = resampled;
  return r;
}

SuiteReport verify_unitarity(const VerifyConfig& cfg) {
  struct Instance {
    BraidWord w;
    TorusPoint omega;
  };
  Rng rng(cfg.seed + 4);
  std::vector<Instance> inst;
  for (int t = 0; t < cfg.trials; ++t) {
    int mu = uniform(rng, 1, 2);
    Coloring c = random_coloring(rng, uniform(rng, std::max(2, mu), 6), mu);
    BraidWord w = random_endomorphism(rng, c, 0, 12);
    inst.push_back({w, random_point(rng, mu, 13)});
  }
  return run_trials("unitarity", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    const Instance& x = inst[i];
    return with_precision(cfg.precision, [&](auto tag) -> std::string {
      using S = typename decltype(tag)::type;
      std::vector<ReducedBasis> bases{ReducedBasis::colored};
      if (x.w.bottom().mu == 1) bases.push_back(ReducedBasis::oriented);
      for (ReducedBasis b : bases) {
        Mat<S> B = burau_matrix<S>(x.w, x.omega, b, cfg.tol);
        double d = unitarity_defect<S>(B, xi_form<S>(x.w.bottom(), x.omega, b));
        if (d > 1e-9)
          return fmt::format("colors {} word {} omega {}: defect {:.3g}",
                             x.w.bottom().to_string(), letters_to_string(x.w),
                             x.omega.to_string(), d);
      }
      return {};
    });
  });
}

namespace {

// The oriented form written out entry by entry.
PolyMatrix oriented_form_reference(const Coloring& c) {
  const int n = c.size();
  PolyMatrix X(n - 1, n - 1, 1);
  auto t = [](int p) { return LaurentPoly::variable(1, 1, p); };
  LaurentPoly one = LaurentPoly::constant(1, 1);
  for (int j = 0; j + 1 < n; ++j) {
    int e0 = c.sign(j), e1 = c.sign(j + 1);
    X(j, j) = LaurentPoly::constant(1, (e0 + e1) / 2) * (t(1) - t(-1));
    if (j + 2 < n) {
      X(j, j + 1) = one - t(e1);
      X(j + 1, j) = t(-e1) - one;
    }
  }
  return X;
}

PolyMatrix bar_entries(const PolyMatrix& m) { return m.adjoint().transpose(); }

bool is_zero(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == LaurentPoly(m.num_vars()))) return false;
  return true;
}

}  // namespace

SuiteReport verify_forms(const VerifyConfig& cfg) {
  struct Instance {
    BraidWord oriented;  // one color, random orientations
    Coloring cover_coloring;
    TorusPoint cover_point;
  };
  Rng rng(cfg.seed + 5);
  std::vector<Instance> inst;
  for (int t = 0; t < cfg.trials; ++t) {
    Coloring c = random_coloring(rng, uniform(rng, 2, 6), 1);
    BraidWord w = random_endomorphism(rng, c, 0, 8);
    int mu = uniform(rng, 1, 2);
    Coloring cc = random_coloring(rng, uniform(rng, std::max(2, mu), 4), mu);
    inst.push_back({w, cc, random_point(rng, mu, 5)});
  }
  return run_trials("forms", cfg.trials, cfg.jobs, [&](int i) -> std::string {
    const Instance& x = inst[i];
    const Coloring& c = x.oriented.bottom();
    PolyMatrix xi = xi_form_symbolic(c, ReducedBasis::oriented);
    if (!(xi == oriented_form_reference(c)))
      return fmt::format("oriented form differs from the reference at {}", c.to_string());
    PolyMatrix B = reduce_symbolic(unreduced_burau(x.oriented));
    if (!(B.transpose() * xi * bar_entries(B) == xi))
      return fmt::format("symbolic unitarity fails for colors {} word {}", c.to_string(),
                         letters_to_string(x.oriented));
    if (c.size() == 2 && c.sign(0) != c.sign(1) &&
        !(is_zero(xi) && is_zero(xi_form_symbolic(c, ReducedBasis::colored))))
      return fmt::format("form does not vanish for colors {}", c.to_string());

    return with_precision(cfg.precision, [&](auto tag) -> std::string {
      using S = typename decltype(tag)::type;
      FatGraphCover cov = build_cover(x.cover_coloring, x.cover_point);
      EigenSpaceData<S> data = eigenspace_form<S>(cov, cfg.tol);
      Mat<S> ref = xi_form<S>(x.cover_coloring, x.cover_point);
      const double scale = real_to_double(max_abs(ref));
      const double cover_scale = real_to_double(max_abs(data.form));
      auto where = [&] {
        return fmt::format("cover of colors {} at {}", x.cover_coloring.to_string(),
                           x.cover_point.to_string());
      };
      if (scale < 1e-12) {
        if (cover_scale > 1e-12) return where() + ": nonzero form where the braid form vanishes";
        return {};
      }
      Eigen::Index bi = 0, bj = 0;
      ref.cwiseAbs().maxCoeff(&bi, &bj);
      S ratio = data.form(bi, bj) / ref(bi, bj);
      if (to_double(S(im(ratio))) > 1e-8 * cabs(ratio) || re(ratio) <= 0)
        return where() + ": ratio is not a positive real";
      double dev = real_to_double(max_abs(Mat<S>(data.form - ratio * ref))) / cover_scale;
      if (dev > 1e-8) return fmt::format("{}: relative deviation {:.3g}", where(), dev);
      return {};
    });
  });
}

std::vector<SuiteReport> run_suites(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (all || suite == "theorem") out.push_back(verify_theorem(cfg));
  if (all || suite == "oracle") out.push_back(verify_oracle(cfg));
  if (all || suite == "maslov-defs") {
    out.push_back(verify_maslov_definitions(cfg));
    out.push_back(verify_meyer_definitions(cfg));
  }
  if (all || suite == "unitarity") out.push_back(verify_unitarity(cfg));
  if (all || suite == "forms") out.push_back(verify_forms(cfg));
  if (out.empty()) throw ParseError(fmt::format("unknown suite '{}'", suite));
  return out;
}

}  // namespace knotsig::cli
