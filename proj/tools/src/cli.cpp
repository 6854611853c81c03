#include "knotsig_cli/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "knotsig/errors.hpp"
#include "knotsig_cli/parallel.hpp"
#include "knotsig_cli/verify.hpp"

namespace knotsig::cli {

using ojson = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (precision < 64) throw ParseError("precision must be at least 64 bits");
  if (!(tol > 0 && tol <= 1e-3)) throw ParseError("tolerance must lie in (0, 1e-3]");
  if (jobs < 1) throw ParseError("jobs must be positive");
  if (trials < 0) throw ParseError("trials must be non-negative");
}

ojson to_json(const SignatureResult& r) {
  ojson j;
  j["omega"] = r.omega.to_string();
  j["signature"] = r.signature;
  j["nullity"] = r.nullity ? ojson(*r.nullity) : ojson(nullptr);
  j["method"] = to_string(r.method);
  return j;
}

SignatureResult signature_result_from_json(const nlohmann::json& j) {
  SignatureResult r;
  r.omega = TorusPoint::parse(j.at("omega").get<std::string>());
  r.signature = j.at("signature").get<int>();
  if (!j.at("nullity").is_null()) r.nullity = j.at("nullity").get<int>();
  const auto m = j.at("method").get<std::string>();
  for (auto k : {SignatureMethod::meyer_algorithm, SignatureMethod::seifert_oracle,
                 SignatureMethod::ccomplex})
    if (to_string(k) == m) r.method = k;
  return r;
}

std::string to_string(const PolyMatrix& m) {
  std::string s = "(";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).to_string();
    }
  }
  return s + ")";
}

std::vector<TorusPoint> torus_grid(int mu, int N) {
  if (N < 2) throw ParseError("grid size must be at least 2");
  std::vector<TorusPoint> out;
  std::vector<long long> a(mu, 1);
  for (;;) {
    std::vector<TorusPoint::Rotation> rot;
    for (long long x : a) rot.push_back({x, N});
    out.emplace_back(rot);
    int i = mu - 1;
    while (i >= 0 && a[i] == N - 1) a[i--] = 1;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

namespace {

template <class S>
S parse_entry(const nlohmann::json& e) {
  if (e.is_number()) return make_complex<S>(e.get<double>());
  if (e.is_array() && e.size() == 2) return make_complex<S>(e[0].get<double>(), e[1].get<double>());
  throw ParseError("matrix entry must be a number or [re, im]");
}

template <class S>
Mat<S> parse_matrix(const nlohmann::json& rows, int cols_hint = -1) {
  if (!rows.is_array()) throw ParseError("matrix must be a list of rows");
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : std::max(cols_hint, 0);
  Mat<S> m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ParseError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = parse_entry<S>(rows[i][j]);
  }
  return m;
}

template <class S>
ojson matrix_json(const Mat<S>& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({real_to_double(re(m(i, j))), real_to_double(im(m(i, j)))});
    rows.push_back(row);
  }
  return rows;
}

ojson inertia_json(const Inertia& in) {
  ojson j;
  j["value"] = in.signature();
  j["pos"] = in.pos;
  j["neg"] = in.neg;
  j["null"] = in.null;
  return j;
}

// {rows, cols, entries} plus a one-line rendering for symbolic matrices.
void put_matrix(ojson& j, const PolyMatrix& m) {
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  j["entries"] = rows;
  j["matrix"] = to_string(m);
}

template <class S>
void put_matrix(ojson& j, const Mat<S>& m) {
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = matrix_json<S>(m);
}

std::string csv_field(const ojson& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

// Objects are records; arrays hold several records with the same fields.
void emit(std::ostream& out, const ojson& doc, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    out << doc.dump() << "\n";
    return;
  }
  std::vector<ojson> records;
  if (doc.is_array())
    records.assign(doc.begin(), doc.end());
  else
    records.push_back(doc);
  if (fmt == OutputFormat::csv) {
    if (records.empty()) return;
    bool first = true;
    for (const auto& [k, v] : records.front().items()) {
      out << (first ? "" : ",") << csv_field(k);
      first = false;
    }
    out << "\n";
    for (const auto& rec : records) {
      first = true;
      for (const auto& [k, v] : rec.items()) {
        out << (first ? "" : ",") << csv_field(v);
        first = false;
      }
      out << "\n";
    }
    return;
  }
  for (const auto& rec : records) {
    bool first = true;
    for (const auto& [k, v] : rec.items()) {
      out << (first ? "" : " ") << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      first = false;
    }
    out << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReducedBasis parse_basis(const std::string& s) {
  if (s == "colored") return ReducedBasis::colored;
  if (s == "oriented") return ReducedBasis::oriented;
  throw ParseError(fmt::format("unknown basis '{}'", s));
}

MaslovDefinition parse_definition(const std::string& s) {
  if (s == "sum-intersection") return MaslovDefinition::sum_intersection;
  if (s == "quotient") return MaslovDefinition::quotient;
  if (s == "gg-kernel") return MaslovDefinition::gg_kernel;
  throw ParseError(fmt::format("unknown Maslov definition '{}'", s));
}

struct BraidArgs {
  std::string word;
  std::string colors;
  int mu = 0;
  BraidWord get() const { return BraidWord::parse(word, colors, mu); }
  BraidWord with_word(const std::string& w) const { return BraidWord::parse(w, colors, mu); }
};

void add_colors(CLI::App* sub, BraidArgs& a) {
  sub->add_option("--colors", a.colors, "Signed strand colors, e.g. \"1,1,-2\"")->required();
  sub->add_option("--mu", a.mu, "Number of colors (inferred from --colors when 0)");
}

void add_braid(CLI::App* sub, BraidArgs& a) {
  sub->add_option("--word", a.word, "Letters as signed generator indices, e.g. \"1 -2 1\"")
      ->required();
  add_colors(sub, a);
}

struct PointArgs {
  std::string omega;
  int grid = 0;
  bool force = false;

  void add(CLI::App* sub, bool with_grid) {
    auto* o = sub->add_option("--omega", omega, "Torus point as rotation fractions, e.g. \"1/3,2/5\"");
    if (with_grid) {
      auto* g = sub->add_option("--grid", grid, "Sweep all points a/N with a = 1..N-1");
      o->excludes(g);
    }
  }
  std::vector<TorusPoint> points(int mu) const {
    if (grid) return torus_grid(mu, grid);
    if (omega.empty()) throw ParseError("--omega is required");
    return {TorusPoint::parse(omega)};
  }
  TorusPoint point() const {
    if (omega.empty()) throw ParseError("--omega is required");
    return TorusPoint::parse(omega);
  }
};

template <class F>
decltype(auto) at_precision(const RunConfig& cfg, F&& f) {
  return with_precision(cfg.precision, std::forward<F>(f));
}

// Drops grid points outside the guaranteed set unless forced; throws when
// nothing is left.
std::vector<TorusPoint> guaranteed(std::vector<TorusPoint> pts, bool force, bool grid,
                                   std::ostream& err) {
  if (force) return pts;
  std::vector<TorusPoint> keep;
  for (auto& p : pts)
    if (is_in_TP(p)) keep.push_back(p);
  if (!grid || keep.empty()) {
    if (keep.size() == pts.size()) return keep;
    throw OutsideGuarantee(fmt::format(
        "omega = {} is outside the set of pairwise coprime orders > 1 (use --force)",
        pts.front().to_string()));
  }
  if (keep.size() < pts.size())
    err << fmt::format("skipped {} grid points outside the guaranteed set\n",
                       pts.size() - keep.size());
  return keep;
}

}  // namespace

template <class S>
IsotropicTriple<S> parse_triple_json(const std::string& text, double tol) {
  try {
    auto j = nlohmann::json::parse(text);
    IsotropicTriple<S> T;
    T.xi = parse_matrix<S>(j.at("xi"));
    const int n = static_cast<int>(T.xi.rows());
    if (T.xi.cols() != n) throw ParseError("xi must be square");
    Subspace<S>* Ls[] = {&T.L1, &T.L2, &T.L3};
    const char* names[] = {"L1", "L2", "L3"};
    for (int k = 0; k < 3; ++k) {
      Mat<S> B = parse_matrix<S>(j.at(names[k]), 0);
      if (B.rows() == 0) B = Mat<S>(n, 0);
      if (B.rows() != n) throw DimensionMismatch(fmt::format("{} has the wrong length", names[k]));
      *Ls[k] = B.cols() ? Subspace<S>::span(B, tol) : Subspace<S>::zero(n);
      if (!is_isotropic(*Ls[k], T.xi, 1e-8))
        throw DimensionMismatch(fmt::format("{} is not isotropic", names[k]));
    }
    return T;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("triple JSON: {}", e.what()));
  }
}

namespace {

struct Commands {
  // signature
  CLI::App *sig, *sig_braid, *sig_cc;
  BraidArgs sb;
  PointArgs sb_pt;
  std::string sb_method = "meyer";
  std::string cc_file;
  PointArgs cc_pt;
  // burau / form
  CLI::App *burau, *form;
  BraidArgs bu;
  PointArgs bu_pt;
  bool bu_symbolic = false, bu_unreduced = false;
  std::string bu_basis;
  BraidArgs fo;
  PointArgs fo_pt;
  bool fo_symbolic = false;
  std::string fo_basis;
  // meyer / maslov
  CLI::App *meyer, *maslov;
  BraidArgs me;
  std::string me_alpha, me_beta, me_def = "e-space";
  PointArgs me_pt;
  std::string ma_file, ma_def = "sum-intersection";
  // defect / bound
  CLI::App *defect, *bound;
  BraidArgs de;
  std::string de_w1, de_w2;
  PointArgs de_pt;
  BraidArgs bo;
  PointArgs bo_pt;
  // verify
  CLI::App* verify;
  std::string suite = "all";
};

int cmd_signature_braid(Commands& c, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  BraidWord w = c.sb.get();
  if (c.sb_method != "meyer" && c.sb_method != "seifert")
    throw ParseError(fmt::format("unknown method '{}'", c.sb_method));
  const bool seifert = c.sb_method == "seifert";
  auto pts = c.sb_pt.points(w.bottom().mu);
  if (!seifert) pts = guaranteed(pts, c.sb_pt.force, c.sb_pt.grid > 0, err);
  auto results = parallel_map<SignatureResult>(
      static_cast<int>(pts.size()), cfg.jobs, [&](int i) {
        return at_precision(cfg, [&](auto tag) {
          using S = typename decltype(tag)::type;
          if (seifert) return seifert_signature<S>(w, pts[i], cfg.tol);
          return braid_signature<S>(w, pts[i], {c.sb_pt.force, cfg.tol});
        });
      });
  ojson doc = ojson::array();
  for (const auto& r : results) doc.push_back(to_json(r));
  emit(out, c.sb_pt.grid ? doc : doc[0], cfg.format);
  return kOk;
}

int cmd_signature_ccomplex(Commands& c, const RunConfig& cfg, std::ostream& out) {
  CComplexData data = parse_ccomplex_json(read_file(c.cc_file));
  auto pts = c.cc_pt.points(data.mu);
  auto results =
      parallel_map<SignatureResult>(static_cast<int>(pts.size()), cfg.jobs, [&](int i) {
        return at_precision(cfg, [&](auto tag) {
          using S = typename decltype(tag)::type;
          return ccomplex_signature<S>(data, pts[i], cfg.tol);
        });
      });
  ojson doc = ojson::array();
  for (const auto& r : results) doc.push_back(to_json(r));
  emit(out, c.cc_pt.grid ? doc : doc[0], cfg.format);
  return kOk;
}

int cmd_burau(Commands& c, const RunConfig& cfg, std::ostream& out) {
  BraidWord w = c.bu.get();
  ojson j;
  j["bottom"] = w.bottom().to_string();
  j["top"] = w.top().to_string();
  if (c.bu_symbolic) {
    if (c.bu_unreduced) {
      j["basis"] = "unreduced";
      put_matrix(j, unreduced_burau(w).matrix);
    } else {
      if (!c.bu_basis.empty() && c.bu_basis != "oriented")
        throw UnsupportedColoring("symbolic reduction is available in the oriented basis only");
      j["basis"] = "oriented";
      put_matrix(j, reduce_symbolic(unreduced_burau(w)));
    }
  } else {
    TorusPoint omega = c.bu_pt.point();
    j["omega"] = omega.to_string();
    at_precision(cfg, [&](auto tag) {
      using S = typename decltype(tag)::type;
      if (c.bu_unreduced) {
        j["basis"] = "unreduced";
        put_matrix<S>(j, unreduced_evaluated<S>(w, omega));
      } else {
        ReducedBasis b = parse_basis(c.bu_basis.empty() ? "colored" : c.bu_basis);
        j["basis"] = c.bu_basis.empty() ? "colored" : c.bu_basis;
        put_matrix<S>(j, burau_matrix<S>(w, omega, b, cfg.tol));
      }
    });
  }
  emit(out, j, cfg.format);
  return kOk;
}

int cmd_form(Commands& c, const RunConfig& cfg, std::ostream& out) {
  Coloring col = Coloring::parse(c.fo.colors, c.fo.mu);
  const std::string basis = c.fo_basis.empty() ? "colored" : c.fo_basis;
  ReducedBasis b = parse_basis(basis);
  ojson j;
  j["colors"] = col.to_string();
  j["basis"] = basis;
  if (c.fo_symbolic) {
    put_matrix(j, xi_form_symbolic(col, b));
  } else {
    TorusPoint omega = c.fo_pt.point();
    j["omega"] = omega.to_string();
    at_precision(cfg, [&](auto tag) {
      using S = typename decltype(tag)::type;
      put_matrix<S>(j, xi_form<S>(col, omega, b));
    });
  }
  emit(out, j, cfg.format);
  return kOk;
}

int cmd_meyer(Commands& c, const RunConfig& cfg, std::ostream& out) {
  BraidWord a = c.me.with_word(c.me_alpha), b = c.me.with_word(c.me_beta);
  if (!a.is_endomorphism() || !b.is_endomorphism())
    throw NotEndomorphism("Meyer cocycle needs endomorphisms of the coloring");
  if (c.me_def != "e-space" && c.me_def != "maslov")
    throw ParseError(fmt::format("unknown definition '{}'", c.me_def));
  TorusPoint omega = c.me_pt.point();
  Inertia in = at_precision(cfg, [&](auto tag) {
    using S = typename decltype(tag)::type;
    Mat<S> xi = xi_form<S>(a.bottom(), omega);
    Mat<S> ga = burau_matrix<S>(a, omega, ReducedBasis::colored, cfg.tol);
    Mat<S> gb = burau_matrix<S>(b, omega, ReducedBasis::colored, cfg.tol);
    return c.me_def == "maslov" ? meyer_via_maslov<S>(xi, ga, gb, cfg.tol)
                                : knotsig::meyer<S>(xi, ga, gb, cfg.tol);
  });
  emit(out, inertia_json(in), cfg.format);
  return kOk;
}

int cmd_maslov(Commands& c, const RunConfig& cfg, std::ostream& out) {
  const std::string text = read_file(c.ma_file);
  MaslovDefinition def = parse_definition(c.ma_def);
  Inertia in = at_precision(cfg, [&](auto tag) {
    using S = typename decltype(tag)::type;
    return knotsig::maslov<S>(parse_triple_json<S>(text, cfg.tol), def, cfg.tol);
  });
  emit(out, inertia_json(in), cfg.format);
  return kOk;
}

int cmd_defect(Commands& c, const RunConfig& cfg, std::ostream& out) {
  BraidWord w1 = c.de.with_word(c.de_w1), w2 = c.de.with_word(c.de_w2);
  TorusPoint omega = c.de_pt.point();
  Defect d = at_precision(cfg, [&](auto tag) {
    using S = typename decltype(tag)::type;
    return additivity_defect<S>(w1, w2, omega, {c.de_pt.force, cfg.tol});
  });
  ojson j;
  j["lhs"] = d.lhs;
  j["rhs"] = d.rhs;
  emit(out, j, cfg.format);
  return kOk;
}

int cmd_bound(Commands& c, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  BraidWord w = c.bo.get();
  auto pts = guaranteed(c.bo_pt.points(w.bottom().mu), c.bo_pt.force, c.bo_pt.grid > 0, err);
  auto sigs = parallel_map<int>(static_cast<int>(pts.size()), cfg.jobs, [&](int i) {
    return at_precision(cfg, [&](auto tag) {
      using S = typename decltype(tag)::type;
      return braid_signature<S>(w, pts[i], {c.bo_pt.force, cfg.tol}).signature;
    });
  });
  int best = 0;
  size_t arg = 0;
  for (size_t i = 0; i < sigs.size(); ++i)
    if (std::abs(sigs[i]) > std::abs(best)) best = sigs[i], arg = i;
  ojson j;
  j["bound"] = (std::abs(best) + 1) / 2;
  j["signature"] = best;
  j["omega"] = pts[arg].to_string();
  emit(out, j, cfg.format);
  return kOk;
}

int cmd_verify(Commands& c, const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc{cfg.trials, cfg.seed, cfg.precision, cfg.tol, cfg.jobs};
  auto reports = run_suites(c.suite, vc);
  ojson doc = ojson::array();
  bool ok = true;
  for (const auto& r : reports) {
    ojson j;
    j["suite"] = r.name;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["failed"] = r.trials - r.passed;
    j["resampled"] = r.resampled;
    j["counterexample"] = r.counterexample ? ojson(*r.counterexample) : ojson(nullptr);
    doc.push_back(j);
    ok = ok && r.ok();
  }
  emit(out, doc, cfg.format);
  return ok ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivariable signatures of colored links given as colored braids", "knotsig"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "knotsig 0.1");

  RunConfig cfg;
  std::string format = "json";
  app.add_option("--output", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision", cfg.precision, "Mantissa bits (64, 128, 256, 512 or 1024)")
      ->envname("KNOTSIG_PRECISION");
  app.add_option("--tol", cfg.tol, "Zero threshold relative to the largest matrix entry");
  app.add_option("--jobs", cfg.jobs, "Worker threads for grids and verification trials");

  Commands c{};
  c.sig = app.add_subcommand("signature", "Signature of a closed colored braid or a C-complex");
  c.sig->require_subcommand(1);
  c.sig_braid = c.sig->add_subcommand("braid", "Signature of the closure of a colored braid");
  add_braid(c.sig_braid, c.sb);
  c.sb_pt.add(c.sig_braid, true);
  c.sig_braid->add_flag("--force", c.sb_pt.force, "Evaluate outside the guaranteed set");
  c.sig_braid->add_option("--method", c.sb_method, "meyer (default) or seifert (one color)");
  c.sig_cc = c.sig->add_subcommand("ccomplex", "Signature of H(omega) from C-complex matrices");
  c.sig_cc->add_option("--file", c.cc_file, "C-complex JSON file")->required();
  c.cc_pt.add(c.sig_cc, true);

  c.burau = app.add_subcommand("burau", "Reduced colored Gassner matrix of a braid");
  add_braid(c.burau, c.bu);
  c.bu_pt.add(c.burau, false);
  c.burau->add_flag("--symbolic", c.bu_symbolic, "Laurent polynomial entries");
  c.burau->add_flag("--unreduced", c.bu_unreduced, "Fox matrix instead of the reduced one");
  c.burau->add_option("--basis", c.bu_basis, "colored or oriented");

  c.form = app.add_subcommand("form", "Skew-Hermitian form on the reduced module");
  add_colors(c.form, c.fo);
  c.fo_pt.add(c.form, false);
  c.form->add_flag("--symbolic", c.fo_symbolic, "Laurent polynomial entries");
  c.form->add_option("--basis", c.fo_basis, "colored or oriented");

  c.meyer = app.add_subcommand("meyer", "Meyer cocycle of the matrices of two braids");
  c.meyer->add_option("--alpha", c.me_alpha, "First braid word")->required();
  c.meyer->add_option("--beta", c.me_beta, "Second braid word")->required();
  add_colors(c.meyer, c.me);
  c.me_pt.add(c.meyer, false);
  c.meyer->add_option("--definition", c.me_def, "e-space or maslov");

  c.maslov = app.add_subcommand("maslov", "Maslov index of an isotropic triple");
  c.maslov->add_option("--file", c.ma_file, "Triple JSON file")->required();
  c.maslov->add_option("--definition", c.ma_def, "sum-intersection, quotient or gg-kernel");

  c.defect = app.add_subcommand("defect", "Both sides of the signature additivity formula");
  c.defect->add_option("--w1", c.de_w1, "First braid word")->required();
  c.defect->add_option("--w2", c.de_w2, "Second braid word")->required();
  add_colors(c.defect, c.de);
  c.de_pt.add(c.defect, false);
  c.defect->add_flag("--force", c.de_pt.force, "Evaluate outside the guaranteed set");

  c.bound = app.add_subcommand("bound", "Lower bound ceil(|signature|/2) on the unlinking number");
  add_braid(c.bound, c.bo);
  c.bo_pt.add(c.bound, true);
  c.bound->add_flag("--force", c.bo_pt.force, "Evaluate outside the guaranteed set");

  c.verify = app.add_subcommand("verify", "Randomized property suites");
  c.verify->add_option("--suite", c.suite, "theorem, oracle, maslov-defs, unitarity, forms or all")
      ->check(CLI::IsMember({"theorem", "oracle", "maslov-defs", "unitarity", "forms", "all"}));
  c.verify->add_option("--trials", cfg.trials, "Trials per suite");
  c.verify->add_option("--seed", cfg.seed, "Random seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    cfg.format = format == "csv" ? OutputFormat::csv
                 : format == "text" ? OutputFormat::text
                                    : OutputFormat::json;
    cfg.validate();
    if (*c.sig_braid) return cmd_signature_braid(c, cfg, out, err);
    if (*c.sig_cc) return cmd_signature_ccomplex(c, cfg, out);
    if (*c.burau) return cmd_burau(c, cfg, out);
    if (*c.form) return cmd_form(c, cfg, out);
    if (*c.meyer) return cmd_meyer(c, cfg, out);
    if (*c.maslov) return cmd_maslov(c, cfg, out);
    if (*c.defect) return cmd_defect(c, cfg, out);
    if (*c.bound) return cmd_bound(c, cfg, out, err);
    if (*c.verify) return cmd_verify(c, cfg, out);
    return kInputError;
  } catch (const OutsideGuarantee& e) {
    err << "error: " << e.what() << "\n";
    return kOutsideGuarantee;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kPrecisionExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

#define KNOTSIG_INST(S) template IsotropicTriple<S> parse_triple_json<S>(const std::string&, double);
KNOTSIG_FOR_EACH_TIER(KNOTSIG_INST)
#undef KNOTSIG_INST

}  // namespace knotsig::cli
