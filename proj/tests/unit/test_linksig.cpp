#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/linksig.hpp"
#include "knotsig_cli/verify.hpp"

using namespace knotsig;
using testing::cd;
using testing::word;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KNOTSIG_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int sig(const BraidWord& w, const TorusPoint& p) { return braid_signature<cx128>(w, p).signature; }

std::vector<TorusPoint> points(long long b) {
  std::vector<TorusPoint> v;
  for (long long a = 1; a < b; ++a)
    if (std::gcd(a, b) == 1) v.push_back(TorusPoint({{a, b}}));
  return v;
}

// Random admissible instance for the random property checks.
struct Instance {
  BraidWord w;
  TorusPoint omega;
};

std::optional<Instance> draw(cli::Rng& rng, int max_strands, int max_len) {
  int mu = 1 + static_cast<int>(rng() % 2);
  int n = std::max(2, mu) + static_cast<int>(rng() % (max_strands - std::max(2, mu) + 1));
  Coloring c = cli::random_coloring(rng, n, mu);
  auto omega = cli::random_admissible_point(rng, c, 13);
  if (!omega) return std::nullopt;
  return Instance{cli::random_endomorphism(rng, c, 0, max_len), *omega};
}

}  // namespace

TEST_SUITE("linksig") {
  TEST_CASE("C-complex examples") {
    CComplexData hopf = parse_ccomplex_json(slurp("hopf1.json"));
    for (long long b : {3, 5, 7, 8})
      for (const TorusPoint& p : points(b)) {
        Mat<cx128> H = ccomplex_H<cx128>(hopf, p);
        cd w = testing::coord(p, 0);
        CHECK(std::abs(to_double(H(0, 0)) - (-2 * (1.0 - w).real())) < 1e-12);
        SignatureResult r = ccomplex_signature<cx128>(hopf, p);
        CHECK(r.signature == -1);
        CHECK(r.nullity == 0);
        CHECK(r.method == SignatureMethod::ccomplex);
      }

    CComplexData ex4 = parse_ccomplex_json(slurp("ex4.json"));
    CComplexData empty = parse_ccomplex_json(slurp("hopf2.json"));
    CHECK(empty.size() == 0);
    for (long long b1 : {2, 3, 5, 7})
      for (long long b2 : {3, 4, 5, 9})
        for (long long a1 = 1; a1 < b1; ++a1)
          for (long long a2 = 1; a2 < b2; ++a2) {
            TorusPoint p({{a1, b1}, {a2, b2}});
            cd w1 = testing::coord(p, 0), w2 = testing::coord(p, 1);
            CHECK(ccomplex_signature<cx128>(ex4, p).signature ==
                  -testing::sgn(((1.0 - w1) * (1.0 - w2)).real()));
            CHECK(ccomplex_signature<cx128>(empty, p).signature == 0);
          }
  }

  TEST_CASE("C-complex validation") {
    CHECK_THROWS_AS(parse_ccomplex_json(R"({"mu": 1, "matrices": {"+": [[0, 1], [0, 0]], "-": [[0, 1], [0, 0]]}})"),
                    InvalidCComplex);
    CHECK_THROWS_AS(parse_ccomplex_json(R"({"mu": 2, "matrices": {"++": [[1]], "--": [[1]]}})"),
                    InvalidCComplex);
    CHECK_THROWS_AS(parse_ccomplex_json(R"({"mu": 1, "matrices": {"x": [[1]]}})"), ParseError);
    CHECK_THROWS_AS(parse_ccomplex_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_ccomplex_json(R"({"mu": 1, "matrices": {"+": [[1, 2]], "-": [[1]]}})"),
                    InvalidCComplex);
    CHECK_NOTHROW(parse_ccomplex_json(R"({"mu": 1, "matrices": {"+": [[0, 1], [0, 0]], "-": [[0, 0], [1, 0]]}})"));
  }

  TEST_CASE("Seifert matrices from braids") {
    IntMatrix hopf = seifert_from_braid(word("1 1", "1,1"));
    REQUIRE(hopf.rows() == 1);
    CHECK(hopf(0, 0) == -1);

    IntMatrix tre = seifert_from_braid(word("1 1 1", "1,1"));
    IntMatrix expect(2, 2);
    expect << -1, 1, 0, -1;
    CHECK(tre == expect);

    CHECK(seifert_from_braid(word("1", "1,1")).rows() == 0);
    CHECK_THROWS_AS(seifert_from_braid(word("1 1", "1,-1")), UnsupportedColoring);
    CHECK_THROWS_AS(seifert_from_braid(word("1 1", "1,2")), UnsupportedColoring);
  }

  TEST_CASE("trefoil Seifert oracle follows the closed form") {
    IntMatrix A = seifert_from_braid(word("1 1 1", "1,1"));
    int count = 0;
    for (long long b : {5, 7, 11, 13, 17, 19})
      for (const TorusPoint& p : points(b)) {
        double re = testing::coord(p, 0).real();
        int expect = -1 + testing::sgn(2 * re - 1);
        CHECK(testing::lt_signature_d(A, testing::coord(p, 0)) == expect);
        SignatureResult r = seifert_signature<cx128>(word("1 1 1", "1,1"), p);
        CHECK(r.signature == expect);
        CHECK(r.method == SignatureMethod::seifert_oracle);
        REQUIRE(r.nullity.has_value());
        ++count;
      }
    CHECK(count >= 50);
  }

  TEST_CASE("braid signature examples") {
    for (long long b : {3, 5, 7})
      for (const TorusPoint& p : points(b)) CHECK(sig(word("1 1", "1,1"), p) == -1);

    for (long long b : {5, 7, 11})
      for (const TorusPoint& p : points(b)) {
        int expect = -1 + testing::sgn(2 * testing::coord(p, 0).real() - 1);
        CHECK(sig(word("1 1 1", "1,1"), p) == expect);
      }
    CHECK(sig(word("1 1 1", "1,1"), testing::pt("1/5")) == -2);

    for (auto [k1, k2] : {std::pair{2, 3}, {2, 5}, {3, 5}})
      for (long long a1 = 1; a1 < k1; ++a1)
        for (long long a2 = 1; a2 < k2; ++a2) {
          TorusPoint p({{a1, k1}, {a2, k2}});
          cd w1 = testing::coord(p, 0), w2 = testing::coord(p, 1);
          int expect = -testing::sgn(((1.0 - w1) * (1.0 - w2) * (1.0 - w1 * w2)).real());
          CHECK(sig(word("1 1 1 1", "1,2"), p) == expect);
        }

    CHECK(sig(word("1", "1,1"), testing::pt("1/3")) == 0);
    SignatureResult r = braid_signature<cx128>(word("1 1", "1,1"), testing::pt("1/3"));
    CHECK(r.method == SignatureMethod::meyer_algorithm);
    CHECK_FALSE(r.nullity.has_value());
  }

  TEST_CASE("hypotheses are enforced") {
    BraidWord w = word("1 1 1 1", "1,2");
    CHECK_THROWS_AS(braid_signature<cx128>(w, testing::pt("1/2,1/4")), OutsideGuarantee);
    CHECK_THROWS_AS(braid_signature<cx128>(w, testing::pt("0/1,1/3")), OutsideGuarantee);
    CHECK_NOTHROW(braid_signature<cx128>(w, testing::pt("1/2,1/4"), {true, kDefaultTolerance}));
    CHECK_THROWS_AS(braid_signature<cx128>(word("1", "1,2"), testing::pt("1/2,1/3")),
                    NotEndomorphism);
  }

  TEST_CASE("additivity defect examples") {
    BraidWord s = word("1", "1,1");
    Defect d = additivity_defect<cx128>(s, s, testing::pt("1/3"));
    CHECK(d.lhs == -1);
    CHECK(d.rhs == -1);
    Defect f = additivity_defect<cx128>(s, s, testing::pt("1/2"), {true, kDefaultTolerance});
    CHECK(f.lhs == -1);
    CHECK(f.rhs == 0);
    BraidWord id = BraidWord::identity(Coloring::parse("1,1"));
    Defect z = additivity_defect<cx128>(id, id, testing::pt("1/3"));
    CHECK(z.lhs == 0);
    CHECK(z.rhs == 0);
  }

  TEST_CASE("unlinking bound examples") {
    CHECK(unlinking_bound<cx128>(word("1 1 1", "1,1"), testing::pt("1/5")) == 1);
    CHECK(unlinking_bound<cx128>(word("1", "1,1"), testing::pt("1/5")) == 0);
    CHECK(unlinking_bound<cx128>(word("1 1", "1,1"), testing::pt("1/3")) == 1);
  }

  TEST_CASE("layered words close to an unlink") {
    cli::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
      Coloring c = cli::random_coloring(rng, 2 + trial % 5, 1, true);
      BraidWord w = cli::random_endomorphism(rng, c, 1, 12);
      BraidWord w0 = layered_unlink(w);
      CHECK(w0.bottom() == w.bottom());
      CHECK(closure_components(w0).size() == closure_components(w).size());
      for (long long b : {3, 5, 7}) {
        TorusPoint p({{1, b}});
        CHECK(testing::lt_signature_d(seifert_from_braid(w0), testing::coord(p, 0)) == 0);
      }
    }
  }

  TEST_CASE("Meyer algorithm agrees with the Seifert oracle") {
    cli::Rng rng(72);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
      Coloring c = cli::random_coloring(rng, 2 + trial % 5, 1, true);
      auto p = cli::random_admissible_point(rng, c, 13);
      if (!p) continue;
      BraidWord w = cli::random_endomorphism(rng, c, 1, 14);
      CHECK(sig(w, *p) == testing::lt_signature_d(seifert_from_braid(w), testing::coord(*p, 0)));
      ++checked;
    }
    CHECK(checked >= 40);
  }

  TEST_CASE("conjugation, disjoint union and padding leave the signature unchanged") {
    cli::Rng rng(73);
    for (int trial = 0; trial < 60; ++trial) {
      auto x = draw(rng, 5, 10);
      if (!x) continue;
      int s = sig(x->w, x->omega);
      int p = static_cast<int>(rng() % (x->w.length() + 1));
      std::vector<Letter> l(x->w.letters().begin() + p, x->w.letters().end());
      l.insert(l.end(), x->w.letters().begin(), x->w.letters().begin() + p);
      CHECK(sig(BraidWord(x->w.coloring_at(p), l), x->omega) == s);

      std::vector<int> extra;
      for (int k = 1 + static_cast<int>(rng() % 2); k > 0; --k) {
        int col = 1 + static_cast<int>(rng() % x->w.bottom().mu);
        extra.push_back(rng() % 2 ? col : -col);
      }
      CHECK(sig(disjoint_union(x->w, extra), x->omega) == s);
      CHECK(sig(pad_for_admissibility(x->w, x->omega), x->omega) == s);
    }
  }

  TEST_CASE("crossing changes move the signature by at most two") {
    cli::Rng rng(74);
    for (int trial = 0; trial < 60; ++trial) {
      auto x = draw(rng, 5, 10);
      if (!x || x->w.length() == 0) continue;
      std::vector<Letter> l = x->w.letters();
      l[rng() % l.size()].sign *= -1;
      CHECK(std::abs(sig(BraidWord(x->w.bottom(), l), x->omega) - sig(x->w, x->omega)) <= 2);
    }
  }

  TEST_CASE("defects are bounded and match the Meyer term") {
    cli::Rng rng(75);
    for (int trial = 0; trial < 60; ++trial) {
      auto x = draw(rng, 5, 6);
      if (!x) continue;
      BraidWord w2 = cli::random_endomorphism(rng, x->w.bottom(), 0, 6);
      Defect d = additivity_defect<cx128>(x->w, w2, x->omega);
      CHECK(d.lhs == d.rhs);
      CHECK(std::abs(d.lhs) <= 2 * (x->w.strands() - 1));
    }
  }
}
