#include "doctest.h"

#include "helpers.hpp"
#include "ul/errors.hpp"
#include "ul/isocrystal.hpp"

#include <set>

using namespace ul;
using namespace testutil;

namespace {

WMatrix diag_t(const StandardModel &m, std::vector<int> e, int sign) {
  std::vector<Witt> d;
  for (int x : e)
    d.push_back(m.t().mul_p_pow(x) * Witt(m.context(), sign));
  return diagonal_matrix(d);
}

Lattice frob_lattice(const Lattice &L) {
  return semilinear_image(identity_matrix(L.context(), L.dim()), 1, L,
                          L.space_ptr());
}

} // namespace

TEST_CASE("F and V are adjoint and FV = p") {
  auto ctx = make_context(3, 2);
  StandardModel m(ctx);
  std::mt19937_64 rng(11);
  const int N = ctx->N();
  for (int it = 0; it < 20; ++it) {
    WMatrix x = random_matrix(*ctx, 6, 1, rng);
    WMatrix y = random_matrix(*ctx, 6, 1, rng);
    CHECK(m.pair(m.apply_F(x), y).equal_mod(frobenius(m.pair(x, m.apply_V(y))),
                                             N - 2));
    CHECK(equal_mod(m.apply_F(m.apply_V(x)), mul_p_pow(x, 1), N - 2));
    CHECK(equal_mod(m.apply_V(m.apply_F(x)), mul_p_pow(x, 1), N - 2));
  }
}

TEST_CASE("forms on N0 and N1") {
  for (int mdeg : {1, 2}) {
    auto ctx = make_context(3, mdeg);
    StandardModel m(ctx);
    CHECK(m.space0()->gram() == diag_t(m, {1, 0, 1}, 1));
    CHECK(m.space1()->gram() == diag_t(m, {0, 1, 0}, -1));
    CHECK(m.t().valuation() == 0);
    CHECK(frobenius(m.t()) == -m.t());
  }
}

TEST_CASE("J representatives") {
  for (int p : {3, 5}) {
    for (int mdeg : {1, 2}) {
      if (p == 5 && mdeg == 2)
        continue;
      auto ctx = make_context(p, mdeg);
      const FiniteField &F = ctx->residue();
      auto J = j_representatives(F);
      CHECK(J.size() == static_cast<std::size_t>(p + 1));
      auto perm = j_frobenius_permutation(F, J);
      std::set<int> img(perm.begin(), perm.end());
      CHECK(img.size() == J.size());
      for (const auto &j : J) {
        CHECK(j.lambda == F.one());
        CHECK(j.mu != 0);
        CHECK(in_J(F, j.lambda, j.mu));
        CHECK(F.in_subfield(j.mu, 2));
      }
      CHECK_FALSE(in_J(F, F.one(), F.one()));
      CHECK_THROWS_AS(neighbor_lattice_J(StandardModel(ctx), F.one(), F.one()),
                      NotInJ);
    }
  }
}

TEST_CASE("M_ab construction errors") {
  auto ctx = make_context(3, 2);
  StandardModel m(ctx);
  const FiniteField &F = ctx->residue();
  auto J = j_representatives(F);
  CHECK_THROWS_AS(build_M_ab(m, JRep{F.one(), F.one()}, 0, 0), NotInJ);
  CHECK_THROWS_AS(build_M_ab(m, J[0], 0, F.one()), ChartViolation);
  CHECK_FALSE(on_chart(F, J[0].lambda, 0, F.one()));
}

TEST_CASE("standard superspecial lattice") {
  auto ctx = make_context(3, 2);
  StandardModel m(ctx);
  DieudonneLattice S = standard_superspecial(m);
  auto r = verify_dieudonne(m, S, 0);
  CHECK(r.ok());
  CHECK(r.items.size() == 6);
  CHECK(is_superspecial(S));
  auto J = j_representatives(ctx->residue());
  for (const auto &j : J) {
    DieudonneLattice M = build_M_ab(m, j, 0, 0);
    CHECK(M.M0 == S.M0);
    CHECK(M.M1 == S.M1);
  }

  DieudonneLattice P{S.M0.scaled(1), S.M1.scaled(1), 2};
  CHECK(verify_dieudonne(m, P, 2).ok());
  CHECK_FALSE(verify_dieudonne(m, P, 0).ok());

  DieudonneLattice Q{S.M0, S.M1.scaled(1), 0};
  auto rq = verify_dieudonne(m, Q, 0);
  CHECK_FALSE(rq.ok());
  CHECK_FALSE(rq.passed("F M1 = p^(i+1) M0^v"));

  auto odd = verify_dieudonne(m, S, 1);
  CHECK_FALSE(odd.passed(kVolumeCheck));

  DieudonneLattice D = dieudonne_from_A(m, S.M0.scaled(1), 2);
  CHECK(D.M0.log_volume() + D.M1.log_volume() == 6);
  CHECK(verify_dieudonne(m, D, 2).passed(kVolumeCheck));
}

TEST_CASE("chart over F_81 is exhaustively valid and superspecial") {
  auto ctx = make_context(3, 2);
  StandardModel m(ctx);
  const FiniteField &F = ctx->residue();
  auto J = j_representatives(F);
  int total = 0;
  for (const auto &j : J) {
    for (auto [a, b] : chart_points(F, j.lambda)) {
      DieudonneLattice M = build_M_ab(m, j, a, b);
      auto r = verify_dieudonne(m, M, 0);
      INFO(r.describe());
      CHECK(r.ok());
      CHECK(check_V_basis(m, j, a, b, M));
      CHECK(is_superspecial(M));
      ++total;
    }
  }
  CHECK(total == 4 * 27);
}

TEST_CASE("non-superspecial points over F_729") {
  auto ctx = make_context(3, 3);
  StandardModel m(ctx);
  const FiniteField &F = ctx->residue();
  auto J = j_representatives(F);
  const JRep &j = J[0];
  auto pts = chart_points(F, j.lambda);
  CHECK(pts.size() == 891);
  int ss = 0, d1 = 0, seen = 0;
  for (std::size_t k = 0; k < pts.size(); k += 7) {
    auto [a, b] = pts[k];
    DieudonneLattice M = build_M_ab(m, j, a, b);
    CHECK(verify_dieudonne(m, M, 0).ok());
    CHECK(check_V_basis(m, j, a, b, M));
    TauStabilization ts = tau_stabilize(M.M0, 0, 2);
    CHECK(ts.chain.satisfied());
    CHECK(ts.type == 2 * ts.d + 1);
    bool s = is_superspecial(M);
    CHECK((ts.d == 0) == s);
    CHECK(s == F.in_subfield(b, 2));
    if (ts.d == 1) {
      CHECK(ts.lambda == neighbor_lattice_J(m, j.lambda, j.mu));
      ++d1;
    } else {
      ++ss;
    }
    ++seen;
  }
  CHECK(d1 > 0);
  CHECK(ss + d1 == seen);
}

TEST_CASE("Frobenius relabels chart points") {
  auto ctx = make_context(3, 2);
  StandardModel m(ctx);
  const FiniteField &F = ctx->residue();
  auto J = j_representatives(F);
  auto perm = j_frobenius_permutation(F, J);
  for (std::size_t i = 0; i < J.size(); ++i) {
    auto pts = chart_points(F, J[i].lambda);
    for (std::size_t k = 0; k < pts.size(); k += 5) {
      auto [a, b] = pts[k];
      const JRep &js = J[perm[i]];
      FiniteField::Elem ap = F.frobenius(a, 1), bp = F.frobenius(b, 1);
      REQUIRE(on_chart(F, js.lambda, ap, bp));
      DieudonneLattice M = build_M_ab(m, J[i], a, b);
      DieudonneLattice Ms = build_M_ab(m, js, ap, bp);
      CHECK(frob_lattice(M.M0) == Ms.M0);
    }
  }
}
