#include "doctest.h"

#include "ul/building.hpp"
#include "ul/errors.hpp"
#include "ul/strata.hpp"

#include <cmath>
#include <random>

using namespace ul;

namespace {

// Maximal curve of genus p(p-1)/2 over F_{p^2}: Frobenius eigenvalues -p.
std::int64_t weil_fermat(int p, int m) {
  std::int64_t q = 1, a = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::int64_t>(p) * p;
    a *= -p;
  }
  return q + 1 - static_cast<std::int64_t>(p) * (p - 1) * a;
}

std::uint64_t naive_fermat(int p, int m) {
  FiniteField F(p, 2 * m);
  std::uint64_t affine = 0;
  for (FiniteField::Elem x = 0; x < F.size(); ++x)
    for (FiniteField::Elem y = 0; y < F.size(); ++y)
      for (FiniteField::Elem z = 0; z < F.size(); ++z) {
        auto s = F.add(F.add(F.pow(x, p + 1), F.pow(y, p + 1)), F.pow(z, p + 1));
        affine += s == 0;
      }
  return (affine - 1) / (F.size() - 1);
}

HermSubspace random_subspace(const FiniteHermSpace &S, int k, std::mt19937_64 &rng) {
  std::uniform_int_distribution<FiniteField::Elem> d(0, S.field().size() - 1);
  FRows rows(k, FVec(S.l()));
  for (auto &r : rows)
    for (auto &x : r)
      x = d(rng);
  return HermSubspace(S, rows);
}

} // namespace

TEST_CASE("perp and tau") {
  std::mt19937_64 rng(5);
  for (FormKind kind : {FormKind::AntiDiagonal, FormKind::Identity}) {
    FiniteHermSpace S(3, 5, 2, kind);
    for (int it = 0; it < 100; ++it) {
      HermSubspace U = random_subspace(S, 1 + it % 4, rng);
      HermSubspace P = perp(U);
      CHECK(P.dim() == S.l() - U.dim());
      CHECK(perp(P) == tau(U));
    }
    HermSubspace zero(S, {});
    CHECK(perp(zero).dim() == 5);
    CHECK(perp(perp(zero)).dim() == 0);
    FRows id(5, FVec(5, 0));
    for (int i = 0; i < 5; ++i)
      id[i][i] = 1;
    CHECK(perp(HermSubspace(S, id)).dim() == 0);
    const auto &F = S.field();
    CHECK(F.frobenius(S.tbar(), 1) == F.neg(S.tbar()));
    CHECK(F.in_subfield(S.tbar(), 2));
  }
}

TEST_CASE("Gaussian binomial matches enumeration") {
  FiniteHermSpace S(3, 5, 1);
  for (int k = 0; k <= 5; ++k) {
    std::uint64_t n = 0;
    if (k <= 2 || k == 5)
      for_each_subspace(S, k, [&](const HermSubspace &) { ++n; });
    else
      n = subspace_count(9, 5, k);
    CHECK(n == subspace_count(9, 5, k));
  }
  CHECK(subspace_count(9, 5, 1) == (59049 - 1) / 8);
}

TEST_CASE("Fermat and chart curve counts") {
  CHECK(fermat_count(3, 1) == 28);
  CHECK(fermat_count(5, 1) == 126);
  CHECK(fermat_count(3, 2) == naive_fermat(3, 2));
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}})
    CHECK(static_cast<std::int64_t>(fermat_count(p, m)) == weil_fermat(p, m));
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    FiniteField F(p, 2 * m);
    for (auto j : j_representatives(F)) {
      CHECK(chart_curve_count(F, j.lambda) == fermat_count(p, m));
      CHECK(chart_curve_affine_count(F, j.lambda) + 1 ==
            chart_curve_count(F, j.lambda));
    }
    for (auto lam : F.subfield(2))
      if (lam != 0)
        CHECK(chart_curve_count(F, lam) == fermat_count(p, m));
  }
  FiniteField F9(3, 2);
  CHECK_THROWS_AS(chart_curve_count(F9, 0), InvalidArgument);
}

TEST_CASE("enumerate_Y counts") {
  for (FormKind kind : {FormKind::AntiDiagonal, FormKind::Identity}) {
    FiniteHermSpace S1(3, 3, 1, kind);
    auto Y = enumerate_Y(S1);
    CHECK(Y.size() == 28);
    for (const auto &U : Y) {
      CHECK(U.dim() == 2);
      CHECK(perp(U).dim() == 1);
      CHECK_FALSE(perp(U) == U);
    }
    CHECK(enumerate_Y(FiniteHermSpace(3, 1, 1, kind)).size() == 1);
    CHECK(enumerate_Y(FiniteHermSpace(3, 3, 2, kind)).size() ==
          fermat_count(3, 2));
  }
  CHECK(enumerate_Y(FiniteHermSpace(5, 3, 1)).size() == 126);
  auto old = enumeration_bound();
  set_enumeration_bound(50);
  CHECK_THROWS_AS(enumerate_Y(FiniteHermSpace(3, 3, 1)), BoundExceeded);
  set_enumeration_bound(old);
}

TEST_CASE("stratification") {
  auto t1 = stratum_table(FiniteHermSpace(3, 3, 1));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].count == 28);

  auto t2 = stratum_table(FiniteHermSpace(3, 3, 2));
  REQUIRE(t2.size() == 2);
  CHECK(t2[0].count == 28);
  CHECK(t2[0].count + t2[1].count == fermat_count(3, 2));

  FiniteHermSpace S3(3, 3, 3);
  auto t3 = stratum_table(S3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0].count == 28);
  CHECK(t3[0].count + t3[1].count == fermat_count(3, 3));
  CHECK(t3[1].count == 864);

  auto t5 = stratum_table(FiniteHermSpace(3, 5, 1));
  REQUIRE(t5.size() == 1);
  CHECK(t5[0].count == enumerate_Y(FiniteHermSpace(3, 5, 1)).size());

  FiniteHermSpace S(3, 3, 2);
  for (const auto &U : enumerate_Y(S)) {
    int i = stratify(U);
    CHECK((i == 0) == is_tau_stable(U));
  }
  CHECK(strata_csv(t2).rfind("p,l,m,depth,count\n3,3,2,0,28\n", 0) == 0);
}

TEST_CASE("isotropic lines and sub-vertices") {
  for (int p : {3, 5}) {
    FiniteHermSpace S(p, 3, 1);
    auto lines = isotropic_lines(S);
    CHECK(lines.size() == static_cast<std::size_t>(p * p * p + 1));
    for (const auto &l : lines)
      CHECK(perp(l).contains(l));
    BuildingContext B(p);
    CHECK(neighbors_of_type3(B, B.type3_center()).size() == lines.size());
    CHECK(sub_vertex_correspondence(S, 1).size() == lines.size());
    CHECK(sub_vertex_correspondence(S, 3).size() == 1);
  }
  CHECK(sub_vertex_correspondence(FiniteHermSpace(3, 3, 2), 1).size() == 28);
  CHECK_THROWS_AS(sub_vertex_correspondence(FiniteHermSpace(3, 3, 1), 2),
                  InvalidArgument);
}

TEST_CASE("type-3 sub-vertices of a type-5 vertex") {
  // Oracle: hyperplanes of L / pL for L self-dual of rank 5, classified by
  // p-adic vertex type.
  auto ctx = make_context(3, 1);
  auto space = std::make_shared<const HermitianSpace>(
      ctx, scale(identity_matrix(*ctx, 5), skew_unit(*ctx)));
  Lattice L = Lattice::standard(space);
  REQUIRE(vertex_type(L, 0) == 5);
  const FiniteField &F = ctx->residue();
  auto els = F.elements();
  int type3 = 0;
  for (int lead = 0; lead < 5; ++lead) {
    std::uint64_t total = 1;
    for (int i = lead + 1; i < 5; ++i)
      total *= els.size();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FiniteField::Elem> c(5, 0);
      c[lead] = F.one();
      std::uint64_t cc = code;
      for (int i = lead + 1; i < 5; ++i) {
        c[i] = els[cc % els.size()];
        cc /= els.size();
      }
      WMatrix g = zero_matrix(*ctx, 5, 9);
      int col = 0;
      for (int j = 0; j < 5; ++j) {
        g(j, 4 + j) = Witt(*ctx, 3);
        if (j == lead)
          continue;
        g(j, col) = Witt(*ctx, 1);
        g(lead, col) = -teichmuller(*ctx, c[j]);
        ++col;
      }
      Lattice M = Lattice::from_generators(space, g, 0);
      if (is_vertex(M, 0) && vertex_type(M, 0) == 3)
        ++type3;
    }
  }
  auto subs = sub_vertex_correspondence(FiniteHermSpace(3, 5, 1), 3);
  CHECK(static_cast<int>(subs.size()) == type3);
  CHECK(sub_vertex_correspondence(FiniteHermSpace(3, 5, 1, FormKind::Identity), 3)
            .size() == subs.size());
}
