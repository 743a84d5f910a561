#include "doctest.h"

#include "ul/errors.hpp"
#include "ul/localring.hpp"
#include "ul/strata.hpp"

#include <set>

using namespace ul;

namespace {

FieldPtr field(int p) { return std::make_shared<const FiniteField>(p, 2); }

// Point of V(g_0..g_p) over the degree-4 extension with prod(y - mu_i x) != 0.
// Works on the relation sum_i nu_i^k s_i = x^(p+1-k) y^k, s_i = a_i^p + a_i.
bool gk_point_off_lines(int p) {
  FiniteField E(p, 4);
  auto reps = j_representatives(E);
  std::vector<FiniteField::Elem> image(E.size(), 0);
  std::vector<FiniteField::Elem> root(E.size(), 0);
  std::vector<bool> hit(E.size(), false);
  for (FiniteField::Elem a = 0; a < E.size(); ++a) {
    auto s = E.add(E.pow(a, p), a);
    if (!hit[s]) {
      hit[s] = true;
      root[s] = a;
    }
  }
  for (FiniteField::Elem x = 0; x < E.size(); ++x)
    for (FiniteField::Elem y = 0; y < E.size(); ++y) {
      FiniteField::Elem prod = E.one();
      for (const auto &j : reps)
        prod = E.mul(prod, E.sub(E.mul(j.lambda, y), E.mul(j.mu, x)));
      if (prod == 0)
        continue;
      FRows aug;
      for (int k = 0; k <= p; ++k) {
        FVec r;
        for (const auto &j : reps)
          r.push_back(E.pow(E.div(j.mu, j.lambda), k));
        r.push_back(E.mul(E.pow(x, p + 1 - k), E.pow(y, k)));
        aug.push_back(r);
      }
      rref(E, aug);
      bool ok = static_cast<int>(aug.size()) == p + 1;
      std::vector<FiniteField::Elem> a(p + 1);
      for (int i = 0; ok && i <= p; ++i) {
        auto s = aug[i][p + 1];
        ok = hit[s];
        a[i] = root[s];
      }
      if (!ok)
        continue;
      for (int k = 0; k <= p; ++k) {
        FiniteField::Elem g = E.neg(E.mul(E.pow(x, p + 1 - k), E.pow(y, k)));
        for (int i = 0; i <= p; ++i) {
          auto nu = E.pow(E.div(reps[i].mu, reps[i].lambda), k);
          g = E.add(g, E.mul(nu, E.add(E.pow(a[i], p), a[i])));
        }
        REQUIRE(g == 0);
      }
      return true;
    }
  return false;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  auto F = field(3);
  Poly x = Poly::variable(F, 2, 0), y = Poly::variable(F, 2, 1);
  Poly f = (x + y).pow(3);
  CHECK(f == x.pow(3) + y.pow(3));
  CHECK((x * y - y * x).is_zero());
  CHECK(f.degree() == 3);
  auto d = divide(x.pow(2) * y + x, x * y);
  CHECK(d.quotient == x);
  CHECK(d.remainder == x);
  CHECK(f.leading_monomial() == Monomial{3, 0});
  CHECK(f.substitute({y, x}) == f);
  CHECK(f.evaluate({1, 1}) == F->from_int(2));
}

TEST_CASE("R_M generators") {
  auto F = field(3);
  auto reps = local_representatives(F);
  IdealPresentation I = build_RM(F, reps);
  CHECK(I.generators.size() == 4 + 1 + 6 + 4);
  CHECK(I.variables.size() == 6);
  Monomial x4{0, 0, 0, 0, 4, 0};
  CHECK(I.generators[0].coeff(x4) == F->neg(F->one()));
  std::vector<Poly> kill;
  for (int v = 0; v < 6; ++v)
    kill.push_back(v < 4 ? Poly(F, 6) : Poly::variable(F, 6, v));
  for (int k = 0; k <= 3; ++k) {
    Monomial m{0, 0, 0, 0, static_cast<std::uint16_t>(4 - k),
               static_cast<std::uint16_t>(k)};
    CHECK(I.generators[k].substitute(kill) ==
          Poly::monomial(F, m, F->neg(F->one())));
  }
  CHECK(product_of_lines(F, reps) == I.generators[4]);
}

TEST_CASE("tangent dimensions") {
  for (int p : {3, 5, 7}) {
    auto F = field(p);
    auto reps = local_representatives(F);
    CHECK(tangent_dim_at_origin(build_RM(F, reps)) == 2);
    CHECK(tangent_dim_at_origin(build_A_prime(F, reps)) == p + 1);
    for (const auto &j : reps)
      CHECK(tangent_dim_at_origin(build_R_i(F, j)) == 1);
    CHECK(check_vandermonde_rank(*F, reps) == p + 1);
    auto dup = reps;
    dup[1] = dup[0];
    CHECK(check_vandermonde_rank(*F, dup) < p + 1);

    // Jacobian of the g_k in the a-variables is the Vandermonde matrix.
    IdealPresentation G = build_gk(F, reps);
    for (int k = 0; k <= p; ++k) {
      for (int i = 0; i <= p; ++i) {
        Monomial m(p + 3, 0);
        m[i] = 1;
        auto expect = F->mul(F->pow(F->inv(reps[i].lambda), k - 1),
                             F->pow(reps[i].mu, k));
        if (k == 0)
          expect = reps[i].lambda;
        CHECK(G.generators[k].coeff(m) == expect);
      }
      Monomial mx(p + 3, 0), my(p + 3, 0);
      mx[p + 1] = 1;
      my[p + 2] = 1;
      CHECK(G.generators[k].coeff(mx) == 0);
      CHECK(G.generators[k].coeff(my) == 0);
    }
  }
  auto F = field(3);
  IdealPresentation bad{F, {"a"}, {Poly::constant(F, 1, 1)}, {"one"}};
  CHECK_THROWS_AS(tangent_dim_at_origin(bad), NonVanishing);
}

TEST_CASE("eta identity and components") {
  for (int p : {3, 5}) {
    auto F = field(p);
    auto reps = local_representatives(F);
    for (int i = 0; i <= p; ++i) {
      CHECK(check_eta_identity(F, reps[i]));
      CHECK_FALSE(check_eta_identity(F, reps[i], F->one()));
      CHECK(component_substitution_check(F, reps, i));
    }
    CHECK(check_eta_identity(F, JRep{F->one(), 0}));
  }
}

TEST_CASE("bounded membership") {
  auto F = field(3);
  auto reps = local_representatives(F);
  IdealPresentation RM = build_RM(F, reps);
  auto r0 = membership_bounded(RM.generators[0], RM, 4);
  CHECK(r0.member);
  CHECK(r0.verified);
  CHECK(r0.witness[0] == Poly::constant(F, 6, 1));
  for (std::size_t k = 1; k < r0.witness.size(); ++k)
    CHECK(r0.witness[k].is_zero());

  Poly prod = product_of_lines(F, reps);
  auto r1 = membership_bounded(prod, RM, 8);
  CHECK(r1.member);
  CHECK(r1.verified);
  CHECK(verify_witness(prod, RM, r1.witness));

  // Not in (g_k): V(g_k) has points off the lines.
  IdealPresentation G = build_gk(F, reps);
  auto r2 = membership_bounded(prod, G, 8);
  CHECK_FALSE(r2.member);
  CHECK(gk_point_off_lines(3));

  Poly x = Poly::variable(F, 6, 4);
  for (int bound : {1, 4, 6})
    CHECK_FALSE(membership_bounded(x, RM, bound).member);
  auto pt = nonmember_certificate(x, RM, reps);
  REQUIRE(pt.has_value());
  CHECK(x.evaluate(*pt) != 0);
  for (const auto &g : RM.generators)
    CHECK(g.evaluate(*pt) == 0);

  CHECK_THROWS_AS(membership_bounded(prod, RM, 3), InvalidArgument);
  auto old = enumeration_bound();
  set_enumeration_bound(1000);
  CHECK_THROWS_AS(membership_bounded(prod, RM, 8), BoundExceeded);
  set_enumeration_bound(old);
}

TEST_CASE("membership at p = 5") {
  auto F = field(5);
  auto reps = local_representatives(F);
  Poly prod = product_of_lines(F, reps);
  auto r = membership_bounded(prod, build_RM(F, reps), 6);
  CHECK(r.member);
  CHECK(r.verified);
  CHECK_FALSE(membership_bounded(prod, build_gk(F, reps), 8).member);
}

TEST_CASE("component points are chart points") {
  auto ctx = make_context(3, 2);
  StandardModel model(ctx);
  const FiniteField &E = ctx->residue();
  auto reps = j_representatives(E);
  auto perm = j_frobenius_permutation(E, reps);
  const int p = 3;
  int seen = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto l = reps[i].lambda;
    for (FiniteField::Elem a = 0; a < E.size(); ++a)
      for (FiniteField::Elem x = 0; x < E.size(); ++x) {
        auto h = E.sub(E.add(E.mul(E.pow(a, p), E.pow(l, p)), E.mul(a, l)),
                       E.pow(x, p + 1));
        if (h != 0)
          continue;
        auto b = E.div(x, l);
        CHECK(on_chart(E, l, a, b));
        auto M = build_M_ab(model, reps[perm[i]], E.frobenius(a, 1),
                            E.frobenius(b, 1));
        CHECK(verify_dieudonne(model, M, 0).ok());
        ++seen;
      }
  }
  CHECK(seen == 4 * 27);
}
