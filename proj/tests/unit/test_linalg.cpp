#include <doctest.h>

#include <Eigen/LU>

#include "helpers.hpp"
#include "knotsig/errors.hpp"
#include "knotsig/linalg.hpp"
#include "knotsig/maslov.hpp"

using namespace knotsig;
using testing::cd;

namespace {

using M64 = Mat<cx64>;

M64 from_d(const testing::MatD& m) { return m.cast<cx64>(); }

testing::MatD random_d(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> g;
  testing::MatD m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = cd(g(rng), g(rng));
  return m;
}

// Random matrix of the given rank (rank <= min(r, c)).
testing::MatD random_rank(std::mt19937_64& rng, int r, int c, int rank) {
  return random_d(rng, r, rank) * random_d(rng, rank, c);
}

int rank_d(const testing::MatD& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<testing::MatD> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("signature examples") {
    cd w = testing::unit(1, 4);
    M64 m(1, 1);
    m(0, 0) = cx64(-2 * std::real(1.0 - w));
    Inertia in = hermitian_signature(m);
    CHECK(in == Inertia{0, 1, 0});
    CHECK(in.signature() == -1);

    CHECK(hermitian_signature(M64(M64::Zero(1, 1))) == Inertia{0, 0, 1});
    CHECK(hermitian_signature(M64(0, 0)) == Inertia{});
  }

  TEST_CASE("trefoil Levine-Tristram form at 1/5") {
    Eigen::Matrix2d A;
    A << -1, 1, 0, -1;
    cd w = testing::unit(1, 5);
    testing::MatD a = A.cast<cd>();
    testing::MatD H = (1.0 - w) * a + (1.0 - std::conj(w)) * a.transpose();
    CHECK(testing::signature_d(H) == -2);  // oracle
    CHECK(hermitian_signature(from_d(H)).signature() == -2);
    CHECK(hermitian_signature(convert_matrix<cx128>(from_d(H))).signature() == -2);
  }

  TEST_CASE("congruence leaves the inertia unchanged") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + trial % 6, r = trial % (n + 1);
      testing::MatD B = random_rank(rng, n, n, r);
      testing::MatD H = B.adjoint() * testing::MatD::Identity(n, n) * B;
      // Indefinite: flip the sign of a random half.
      testing::MatD D = testing::MatD::Identity(n, n);
      for (int i = 0; i < n; ++i)
        if (rng() % 2) D(i, i) = -1;
      H = B.adjoint() * D * B;
      testing::MatD P = random_d(rng, n, n);
      Inertia a = hermitian_signature(from_d(H));
      Inertia b = hermitian_signature(from_d(testing::MatD(P.adjoint() * H * P)));
      CHECK(a == b);
      CHECK(a.dim() == n);
      CHECK(a.null == n - r);
    }
  }

  TEST_CASE("eigenvalues near the threshold exhaust the precision ladder") {
    M64 m = M64::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = cx64(5e-9L);
    CHECK_THROWS_AS(hermitian_signature(m), PrecisionExhausted);
    m(1, 1) = cx64(1e-7L);
    CHECK(hermitian_signature(m) == Inertia{2, 0, 0});
    m(1, 1) = cx64(1e-12L);
    CHECK(hermitian_signature(m) == Inertia{1, 0, 1});
  }

  TEST_CASE("symmetry defect") {
    M64 h(2, 2);
    h << cx64(1), cx64(0, 1), cx64(0, -1), cx64(2);
    CHECK(symmetry_defect(h, FormKind::hermitian) == doctest::Approx(0));
    M64 s = h * cx64(0, 1);
    CHECK(symmetry_defect(s, FormKind::skew_hermitian) < 1e-15);
  }

  TEST_CASE("sum and intersection examples") {
    Subspace<cx64> e1 = Subspace<cx64>::span(M64(M64::Identity(2, 2).col(0)));
    Subspace<cx64> e2 = Subspace<cx64>::span(M64(M64::Identity(2, 2).col(1)));
    CHECK(subspace_sum(e1, e1).approx_equal(e1));
    CHECK(subspace_intersect(e1, e1).approx_equal(e1));
    CHECK(subspace_sum(e1, e2).dim() == 2);
    CHECK(subspace_intersect(e1, e2).dim() == 0);
    CHECK_THROWS(subspace_sum(e1, Subspace<cx64>::zero(3)));

    for (const char* s : {"1/3", "1/5", "2/7"}) {
      cx64 w = testing::pt(s).power<cx64>(1, 1);
      M64 g(1, 1);
      g(0, 0) = -w;
      Subspace<cx64> a = graph(inverse(g)), b = graph(identity<cx64>(1));
      CHECK(subspace_sum(a, b).dim() == 2);
    }
  }

  TEST_CASE("Grassmann identity against an independent rank oracle") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
      int n = 1 + trial % 8;
      int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
      testing::MatD A = random_d(rng, n, a), B = random_d(rng, n, b);
      // Share some directions so intersections are nontrivial.
      int shared = std::min(a, b) > 0 ? static_cast<int>(rng() % (std::min(a, b) + 1)) : 0;
      B.leftCols(shared) = A.leftCols(shared) * random_d(rng, shared, shared);
      Subspace<cx64> U = Subspace<cx64>::span(from_d(A)), V = Subspace<cx64>::span(from_d(B));
      testing::MatD AB(n, a + b);
      AB << A, B;
      int sum_dim = rank_d(AB);
      CHECK(subspace_sum(U, V).dim() == sum_dim);
      CHECK(subspace_sum(U, V).dim() + subspace_intersect(U, V).dim() == U.dim() + V.dim());
    }
  }

  TEST_CASE("canonical bases") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 + trial % 6, k = 1 + static_cast<int>(rng() % n);
      testing::MatD A = random_d(rng, n, k);
      Subspace<cx64> U = Subspace<cx64>::span(from_d(A));
      Subspace<cx64> again = Subspace<cx64>::span(U.basis());
      CHECK(max_abs(M64(again.basis() - U.basis())) < 1e-12L);
      Subspace<cx64> mixed = Subspace<cx64>::span(from_d(testing::MatD(A * random_d(rng, k, k))));
      CHECK(mixed.approx_equal(U));
      for (int c = 0; c < U.dim(); ++c) CHECK(std::abs(U.basis()(U.pivots()[c], c) - cx64(1)) < 1e-15L);
    }
  }

  TEST_CASE("decompose") {
    M64 I = M64::Identity(2, 2);
    Subspace<cx64> U = Subspace<cx64>::span(M64(I.col(0))), V = Subspace<cx64>::span(M64(I.col(1)));
    Vec<cx64> a = I.col(0) + I.col(1);
    auto [a1, a2] = decompose(a, U, V);
    CHECK(max_abs(M64(a1 - I.col(0))) < 1e-15L);
    CHECK(max_abs(M64(a2 - I.col(1))) < 1e-15L);

    Subspace<cx64> W = Subspace<cx64>::span(M64(I.col(0) * cx64(2, 1) + I.col(1)));
    auto [b1, b2] = decompose(Vec<cx64>(I.col(0)), U, W);
    CHECK(max_abs(M64(b1 + b2 - I.col(0))) < 1e-15L);

    Subspace<cx64> line = Subspace<cx64>::span(M64(M64::Identity(3, 3).col(0)));
    CHECK_THROWS_AS(decompose(Vec<cx64>(M64::Identity(3, 3).col(2)), line, line), NotInSum);

    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 2 + trial % 7;
      int p = 1 + static_cast<int>(rng() % (n - 1)), q = 1 + static_cast<int>(rng() % (n - 1));
      testing::MatD A = random_d(rng, n, p), B = random_d(rng, n, q);
      testing::MatD x = A * random_d(rng, p, 1) + B * random_d(rng, q, 1);
      Subspace<cx64> S1 = Subspace<cx64>::span(from_d(A)), S2 = Subspace<cx64>::span(from_d(B));
      Vec<cx64> v = from_d(x);
      auto [v1, v2] = decompose(v, S1, S2);
      CHECK(max_abs(M64(v - v1 - v2)) <= 1e-12L * max_abs(M64(v)));
      CHECK(subspace_sum(S1, Subspace<cx64>::span(M64(v1))).dim() == S1.dim());
    }
  }

  TEST_CASE("isotropy") {
    cx64 w = testing::pt("1/5").power<cx64>(1, 1);
    M64 xi(2, 2);
    xi << w - std::conj(w), cx64(1) - w, cx64(-1) + std::conj(w), w - std::conj(w);
    CHECK(is_isotropic(Subspace<cx64>::zero(2), xi));
    CHECK_FALSE(is_isotropic(Subspace<cx64>::span(M64(M64::Identity(2, 2).col(0))), xi));

    M64 g(2, 2);
    g << -w, cx64(1), cx64(0), cx64(1);
    CHECK(unitarity_defect(g, xi) < 1e-15);
    CHECK(is_isotropic(graph(g), relation_form(xi, xi)));
  }

  TEST_CASE("rank, nullspace, inverse") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + trial % 6, r = static_cast<int>(rng() % (n + 1));
      testing::MatD A = random_rank(rng, n, n + 1, r);
      M64 a = from_d(A);
      CHECK(rank(a) == r);
      M64 N = nullspace(a);
      CHECK(N.cols() == n + 1 - r);
      if (N.cols()) CHECK(max_abs(M64(a * N)) < 1e-10L);
    }
    M64 s = M64::Ones(2, 2);
    CHECK_THROWS_AS(inverse(s), DimensionMismatch);
    M64 g = from_d(random_d(rng, 4, 4));
    CHECK(max_abs(M64(g * inverse(g) - identity<cx64>(4))) < 1e-12L);
  }
}
