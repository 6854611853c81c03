#include <doctest.h>

#include "helpers.hpp"
#include "knotsig/cover.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/gassner.hpp"
#include "knotsig/maslov.hpp"
#include "knotsig_cli/verify.hpp"

using namespace knotsig;
using testing::word;

namespace {

// Positive real r with a = r b, or nullopt when no single ratio fits.
std::optional<double> positive_ratio(const Mat<cx64>& a, const Mat<cx64>& b, double rel = 1e-8) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  Eigen::Index bi = 0, bj = 0;
  long double best = 0;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) best = std::abs(b(i, j)), bi = i, bj = j;
  if (best == 0) return std::nullopt;
  cx64 r = a(bi, bj) / b(bi, bj);
  if (std::abs(r.imag()) > rel * std::abs(r) || r.real() <= 0) return std::nullopt;
  long double dev = max_abs(Mat<cx64>(a - r.real() * b)) / max_abs(a);
  if (dev > rel) return std::nullopt;
  return static_cast<double>(r.real());
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("vertex and edge counts") {
    FatGraphCover a = build_cover(Coloring::parse("1,1"), testing::pt("1/2"));
    CHECK(a.vertices() == 2);
    CHECK(a.edges() == 4);
    CHECK(a.connected_components() == 1);
    CHECK(a.graph_h1_rank() == 3);

    FatGraphCover b = build_cover(Coloring::parse("1,2"), testing::pt("1/2,1/3"));
    CHECK(b.vertices() == 6);
    CHECK(b.edges() == 12);

    // One strand: the cover of a once-punctured disk is a k-cycle.
    for (const char* s : {"1/2", "1/3", "2/5", "1/7"}) {
      FatGraphCover d = build_cover(Coloring::parse("1"), testing::pt(s));
      CHECK(d.graph_h1_rank() == 1);
      CHECK(eigenspace_form<cx64>(d).dim == 0);
      CHECK(projected_cycle_rank<cx64>(d) == 0);
    }
  }

  TEST_CASE("vertex indexing round-trips") {
    FatGraphCover c = build_cover(Coloring::parse("1,-2,1"), testing::pt("2/5,1/3"));
    for (int v = 0; v < c.vertices(); ++v) CHECK(c.index(c.element(v)) == v);
    for (int e = 0; e < c.edges(); ++e) {
      int j = e % c.strands;
      CHECK(c.head(e) == c.step(c.tail(e), c.coloring.color(j), c.coloring.sign(j)));
    }
  }

  TEST_CASE("eigenspace dimensions") {
    CHECK(eigenspace_form<cx64>(build_cover(Coloring::parse("1,1"), testing::pt("1/3"))).dim == 1);
    CHECK(eigenspace_form<cx64>(build_cover(Coloring::parse("1,2"), testing::pt("1/2,1/3"))).dim == 1);
    CHECK(eigenspace_form<cx64>(build_cover(Coloring::parse("1,1,1"), testing::pt("1/5"))).dim == 2);
  }

  TEST_CASE("eigenspace forms match the printed ones up to a positive scalar") {
    for (const char* s : {"1/3", "1/5", "3/7"}) {
      TorusPoint w = testing::pt(s);
      auto data = eigenspace_form<cx64>(build_cover(Coloring::parse("1,1"), w));
      cx64 om = w.power<cx64>(1, 1);
      Mat<cx64> expect(1, 1);
      expect(0, 0) = om - std::conj(om);
      CHECK(positive_ratio(data.form, expect));
    }
    for (const char* s : {"1/2,1/3", "1/3,2/5", "3/4,1/5"}) {
      TorusPoint w = testing::pt(s);
      auto data = eigenspace_form<cx64>(build_cover(Coloring::parse("1,2"), w));
      testing::cd a = testing::coord(w, 0), b = testing::coord(w, 1);
      testing::cd f = (a - std::conj(a)) + (b - std::conj(b)) - (a * b - std::conj(a * b));
      Mat<cx64> expect(1, 1);
      expect(0, 0) = cx64(f.real(), f.imag());
      CHECK(positive_ratio(data.form, expect));
    }
  }

  TEST_CASE("eigenspace form is proportional to the reduced form") {
    cli::Rng rng(51);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
      int mu = 1 + trial % 2;
      Coloring c = cli::random_coloring(rng, std::max(2, mu) + trial % 3, mu);
      auto omega = cli::random_admissible_point(rng, c, 7);
      if (!omega) continue;
      FatGraphCover cov = build_cover(c, *omega);
      auto data = eigenspace_form<cx64>(cov);
      REQUIRE(data.dim == c.size() - 1);
      // The cover basis is the projected lift of the colored reduced basis.
      CHECK(positive_ratio(data.form, xi_form<cx64>(c, *omega)));
      ++checked;
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("one outer boundary component under the hypotheses") {
    cli::Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
      int mu = 1 + trial % 2;
      Coloring c = cli::random_coloring(rng, std::max(2, mu) + trial % 4, mu);
      TorusPoint omega = cli::random_point(rng, mu, 9);
      FatGraphCover cov = build_cover(c, omega);
      auto b = cov.boundary_components();
      CHECK(b.outer == cov.predicted_outer_boundary());
      if (is_in_TP(omega) && is_admissible(omega, ell(c))) CHECK(b.outer == 1);
      // Each puncture of strand j lifts to |G| / k_j circles.
      long long punct = 0;
      for (int j = 0; j < c.size(); ++j) punct += cov.group_order / omega.order(c.color(j) - 1);
      CHECK(b.puncture == punct);
    }
  }

  TEST_CASE("projector is idempotent and kills branch loops") {
    for (const char* cs : {"1,1", "1,-1,1", "1,2"}) {
      Coloring c = Coloring::parse(cs);
      TorusPoint w = c.mu == 1 ? testing::pt("2/5") : testing::pt("1/2,1/3");
      FatGraphCover cov = build_cover(c, w);
      Mat<cx128> P = projector_matrix<cx128>(cov);
      CHECK(max_abs(Mat<cx128>(P * P - P)) < real_t<cx128>(1e-30));
      // Loop of strand 0 around its puncture: edges (g, 0), (gT, 0), ...
      Vec<cx128> loop = Vec<cx128>::Zero(cov.edges());
      int v = 0;
      for (long long s = 0; s < w.order(c.color(0) - 1); ++s) {
        loop(v * cov.strands + 0) = cx128(1);
        v = cov.head(v * cov.strands + 0);
      }
      CHECK(max_abs(Mat<cx128>(P * loop)) < real_t<cx128>(1e-30));
    }
  }

  TEST_CASE("projected cycle rank equals the eigenspace dimension") {
    cli::Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
      int mu = 1 + trial % 2;
      Coloring c = cli::random_coloring(rng, std::max(2, mu) + trial % 3, mu);
      TorusPoint omega = cli::random_point(rng, mu, 7);
      FatGraphCover cov = build_cover(c, omega);
      CHECK(projected_cycle_rank<cx64>(cov) == eigenspace_form<cx64>(cov).dim);
    }
  }

  TEST_CASE("braid action examples") {
    Coloring c = Coloring::parse("1,2");
    TorusPoint w = testing::pt("1/2,1/3");
    FatGraphCover cov = build_cover(c, w);
    auto data = eigenspace_form<cx64>(cov);
    Mat<cx64> id = braid_action(cov, data, BraidWord::identity(c));
    CHECK(max_abs(Mat<cx64>(id - identity<cx64>(1))) < 1e-15L);
    Mat<cx64> a12 = braid_action(cov, data, word("1 1", "1,2"));
    CHECK(std::abs(a12(0, 0) - w.power<cx64>(1, 1) * w.power<cx64>(2, 1)) < 1e-15L);
    CHECK_THROWS_AS(braid_action(cov, data, word("1", "1,2")), NotEndomorphism);
  }

  TEST_CASE("trefoil Meyer values agree across pipelines") {
    Coloring c = Coloring::parse("1,1");
    TorusPoint w = testing::pt("1/5");
    FatGraphCover cov = build_cover(c, w);
    auto data = eigenspace_form<cx128>(cov);
    BraidWord s1 = word("1", "1,1"), s2 = word("1 1", "1,1");
    Inertia a = meyer(data.form, braid_action(cov, data, s1), braid_action(cov, data, s2));
    Inertia b = meyer(xi_form<cx128>(c, w), burau_matrix<cx128>(s1, w), burau_matrix<cx128>(s2, w));
    CHECK(a.signature() == b.signature());
  }

  TEST_CASE("braid action is unitary, anti-multiplicative and matches Meyer values") {
    cli::Rng rng(54);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
      int mu = 1 + trial % 2;
      Coloring c = cli::random_coloring(rng, std::max(2, mu) + trial % 3, mu);
      auto omega = cli::random_admissible_point(rng, c, 7);
      if (!omega) continue;
      ++checked;
      FatGraphCover cov = build_cover(c, *omega);
      auto data = eigenspace_form<cx128>(cov);
      BraidWord a = cli::random_endomorphism(rng, c, 0, 5), b = cli::random_endomorphism(rng, c, 0, 5);
      Mat<cx128> A = braid_action(cov, data, a), B = braid_action(cov, data, b);
      CHECK(unitarity_defect(A, data.form) < 1e-20);
      Mat<cx128> AB = braid_action(cov, data, compose(a, b));
      CHECK(max_abs(Mat<cx128>(AB - B * A)) < real_t<cx128>(1e-20));
      Mat<cx128> xi = xi_form<cx128>(c, *omega);
      int m1 = meyer(data.form, A, B).signature();
      int m2 = meyer(xi, burau_matrix<cx128>(a, *omega), burau_matrix<cx128>(b, *omega)).signature();
      CHECK(m1 == m2);
    }
    CHECK(checked >= 20);
  }
}
