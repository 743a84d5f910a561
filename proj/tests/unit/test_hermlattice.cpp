#include "doctest.h"

#include "helpers.hpp"
#include "ul/errors.hpp"

#include <set>

using namespace ul;
using namespace testutil;

namespace {

WMatrix diag_p(const PrimeContext &ctx, std::vector<int> e) {
  std::vector<Witt> d;
  for (int x : e)
    d.push_back(Witt(ctx, 1).mul_p_pow(x));
  return diagonal_matrix(d);
}

// Image of an integral lattice containing pW^n in F_q^n, by brute force.
std::set<std::vector<FiniteField::Elem>> reduction_set(const Lattice &L) {
  const PrimeContext &ctx = L.context();
  const FiniteField &F = ctx.residue();
  REQUIRE(L.denom() <= 0);
  WMatrix B = L.basis_with_denom(0);
  const int n = L.dim();
  std::set<std::vector<FiniteField::Elem>> out;
  std::vector<FiniteField::Elem> coef(n, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i)
    total *= F.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      coef[i] = static_cast<FiniteField::Elem>(c % F.size());
      c /= F.size();
    }
    std::vector<FiniteField::Elem> v(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        v[i] = F.add(v[i], F.mul(coef[j], B(i, j).reduce()));
    out.insert(v);
  }
  return out;
}

Lattice random_between(const SpacePtr &S, std::mt19937_64 &rng) {
  const PrimeContext &ctx = S->context();
  int n = S->dim();
  std::uniform_int_distribution<int> dk(0, n);
  int k = dk(rng);
  WMatrix g = hconcat(random_matrix(ctx, n, k == 0 ? 1 : k, rng),
                      diag_p(ctx, std::vector<int>(n, 1)));
  if (k == 0)
    g = hconcat(mul_p_pow(random_matrix(ctx, n, 1, rng), 1),
                diag_p(ctx, std::vector<int>(n, 1)));
  return Lattice::from_generators(S, g, 0);
}

} // namespace

TEST_CASE("smith normal form") {
  std::mt19937_64 rng(10);
  auto ctx = make_context(3, 2, 10);
  for (int it = 0; it < 40; ++it) {
    WMatrix U0 = random_unimodular(*ctx, 3, rng), V0 = random_unimodular(*ctx, 3, rng);
    std::vector<int> e = {it % 3, 1, 2};
    WMatrix A = U0 * diag_p(*ctx, e) * V0;
    SnfResult s = snf(A);
    std::sort(e.begin(), e.end());
    CHECK(s.exponents == e);
    WMatrix D = s.left * A * s.right;
    CHECK(D == diag_p(*ctx, s.exponents));
    CHECK(det_valuation(s.left) == 0);
    CHECK(det_valuation(s.right) == 0);
  }
  WMatrix Z = zero_matrix(*ctx, 2, 2);
  CHECK_THROWS_AS(snf(Z), InsufficientPrecision);
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(11);
  auto ctx = make_context(5, 1, 10);
  for (int it = 0; it < 20; ++it) {
    WMatrix A = random_unimodular(*ctx, 3, rng) * diag_p(*ctx, {0, 1, 2}) *
                random_unimodular(*ctx, 3, rng);
    FracMatrix inv = inverse(A);
    CHECK(inv.denom == 2);
    WMatrix prod = A * inv.num;
    CHECK(equal_mod(prod, diag_p(*ctx, {2, 2, 2}), 6));
  }
}

TEST_CASE("canonical keys") {
  std::mt19937_64 rng(12);
  auto ctx = make_context(3, 1, 12);
  SpacePtr S = diag_space(ctx, {0, 0, 0});
  for (int it = 0; it < 30; ++it) {
    Lattice L = random_lattice(S, rng);
    WMatrix B = L.basis_with_denom(L.denom()) * random_unimodular(*ctx, 3, rng);
    Lattice L2 = Lattice::from_generators(S, B, L.denom());
    CHECK(L.key() == L2.key());
    Lattice pL = L.scaled(1);
    CHECK(pL.key().denom == L.key().denom - 1);
    CHECK(pL.key().entries == L.key().entries);
    CHECK(pL.key() != L.key());
  }
}

TEST_CASE("index properties") {
  std::mt19937_64 rng(13);
  for (int m : {1, 2}) {
    auto ctx = make_context(3, m, 12);
    SpacePtr S = diag_space(ctx, {0, 0, 0});
    for (int it = 0; it < 30; ++it) {
      Lattice L = random_lattice(S, rng);
      CHECK(index(L.scaled(1), L) == 3);
      CHECK(index(L, L.scaled(1)) == -3);
      Lattice A = random_lattice(S, rng), B = random_lattice(S, rng),
              C = random_lattice(S, rng);
      CHECK(index(A, C) == index(A, B) + index(B, C));
      // modular law
      CHECK(index(lattice_intersect(A, B), A) ==
            index(B, lattice_sum(A, B)));
      Lattice I = lattice_intersect(A, B);
      CHECK(contains(A, I));
      CHECK(contains(B, I));
      CHECK(contains(lattice_sum(A, B), A));
    }
  }
}

TEST_CASE("sum and intersection against a brute-force residue oracle") {
  std::mt19937_64 rng(14);
  auto ctx = make_context(3, 1, 10);
  SpacePtr S = diag_space(ctx, {0, 0, 0});
  for (int it = 0; it < 25; ++it) {
    Lattice A = random_between(S, rng), B = random_between(S, rng);
    auto sa = reduction_set(A), sb = reduction_set(B);
    std::set<std::vector<FiniteField::Elem>> inter;
    for (const auto &v : sa)
      if (sb.count(v))
        inter.insert(v);
    CHECK(reduction_set(lattice_intersect(A, B)) == inter);
    auto ss = reduction_set(lattice_sum(A, B));
    CHECK(ss.size() >= std::max(sa.size(), sb.size()));
    CHECK(ss.size() * inter.size() == sa.size() * sb.size());
    // index agrees with the size of the residue image
    std::size_t expect = 1;
    for (int i = 0; i < 3 - index(A, Lattice::standard(S)); ++i)
      expect *= 9;
    CHECK(sa.size() == expect);
  }
}

TEST_CASE("hermitian duality") {
  std::mt19937_64 rng(15);
  for (int m : {1, 2}) {
    auto ctx = make_context(3, m, 12);
    for (auto exps : {std::vector<int>{0, 0, 0}, std::vector<int>{1, 0, 1},
                      std::vector<int>{1, 0, 0}}) {
      SpacePtr S = diag_space(ctx, exps);
      for (int it = 0; it < 20; ++it) {
        Lattice L = random_lattice(S, rng);
        Lattice D = dual(L);
        CHECK(dual(D) == tau(L));
        CHECK(tau(dual(L)) == dual(tau(L)));
        CHECK(dual(L.scaled(1)) == D.scaled(-1));
        // {D, L} integral, computed directly
        int e = D.denom() + L.denom();
        WMatrix g = transpose(D.hnf()) * S->gram() * frobenius(L.hnf(), 1);
        CHECK(min_valuation(g) >= e);
        // inclusion reversing
        Lattice L2 = lattice_sum(L, random_lattice(S, rng));
        CHECK(contains(D, dual(L2)));
        CHECK(index(L, L2) == index(dual(L2), D));
      }
    }
  }
}

TEST_CASE("tau is trivial for m = 1 and an involution-like automorphism for m = 2") {
  std::mt19937_64 rng(16);
  auto ctx = make_context(3, 2, 12);
  SpacePtr S = diag_space(ctx, {0, 0, 0});
  int moved = 0;
  for (int it = 0; it < 20; ++it) {
    Lattice L = random_lattice(S, rng);
    CHECK(tau(tau(L)) == L);
    if (!(tau(L) == L))
      ++moved;
    CHECK(index(tau(L), L) == 0);
    Lattice Ls = random_lattice(S, rng, 2, 1, true);
    CHECK(is_tau_invariant(Ls));
  }
  CHECK(moved > 0);
}

TEST_CASE("classify_form") {
  std::mt19937_64 rng(17);
  for (int p : {3, 5}) {
    auto ctx = make_context(p, 1, 10);
    Witt t = skew_unit(*ctx);
    WMatrix I3 = scale(identity_matrix(*ctx, 3), t);
    WMatrix J3 = scale(diag_p(*ctx, {1, 0, 0}), t);
    WMatrix D = scale(diag_p(*ctx, {0, 1, 1}), t);
    CHECK(classify_form(I3) == FormClass::SelfDual);
    CHECK(classify_form(J3) == FormClass::NonSelfDual);
    CHECK(classify_form(D) == FormClass::SelfDual);
    for (int it = 0; it < 100; ++it) {
      WMatrix P = random_unimodular(*ctx, 3, rng) * diag_p(*ctx, {0, it % 2, 0});
      for (const WMatrix &G : {I3, J3}) {
        WMatrix G2 = transpose(frobenius(P, 1)) * G * P;
        CHECK(classify_form(G2) == classify_form(G));
      }
    }
  }
}

TEST_CASE("vertex lattices and chains") {
  auto ctx = make_context(3, 1, 12);
  SpacePtr S = diag_space(ctx, {0, 0, 0});
  Lattice L = Lattice::standard(S);
  CHECK(vertex_type(L, 0) == 3);
  CHECK(vertex_type(L.scaled(1), 2) == 3);
  CHECK_THROWS_AS(vertex_type(L, 1), NotAVertex);
  SpacePtr S2 = diag_space(ctx, {1, 0, 1});
  Lattice M = Lattice::standard(S2);
  CHECK(vertex_type(M, 0) == 1);
  CHECK(check_D_i(M, 0).satisfied());
  CHECK(!check_D_i(L, 0).satisfied());
  CHECK_THROWS_AS(shift_psi(M, 1), OddShiftUnsupported);
  CHECK(shift_psi(M, 2) == M.scaled(-1));
  CHECK(volume(M.scaled(1), M) == 3);
}

TEST_CASE("Gram-Schmidt normalization") {
  std::mt19937_64 rng(18);
  for (int p : {3, 5}) {
    auto ctx = make_context(p, 1, 12);
    Witt t = skew_unit(*ctx);
    for (auto exps : {std::vector<int>{1, 0, 1}, std::vector<int>{0, 0, 0}}) {
      SpacePtr S = diag_space(ctx, exps);
      int s = exps[0] + exps[1] + exps[2];
      for (int it = 0; it < 15; ++it) {
        // same lattice, scrambled basis
        WMatrix B = random_unimodular(*ctx, 3, rng);
        Lattice M = Lattice::from_generators(S, B, 0);
        FracMatrix nb = gram_schmidt_normalize(M, 3 - s, s);
        WMatrix g = S->gram_of(nb.num);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            Witt want = i == j ? t.mul_p_pow(i < 3 - s ? 0 : 1) : Witt(*ctx);
            CHECK(g(i, j).equal_mod(want, 10));
          }
        CHECK(Lattice::from_generators(S, nb.num, nb.denom) == M);
      }
      Lattice M = Lattice::standard(S);
      CHECK_THROWS_AS(gram_schmidt_normalize(M, s, 3 - s), ChainViolation);
    }
  }
}

TEST_CASE("Gram-Schmidt over a larger residue field uses W(F_p^2) bases") {
  std::mt19937_64 rng(19);
  auto ctx = make_context(3, 2, 12);
  Witt t = skew_unit(*ctx);
  SpacePtr S = diag_space(ctx, {1, 0, 1});
  for (int it = 0; it < 10; ++it) {
    WMatrix B = random_unimodular(*ctx, 3, rng, true);
    Lattice M = Lattice::from_generators(S, B, 0);
    FracMatrix nb = gram_schmidt_normalize(M, 1, 2);
    WMatrix g = S->gram_of(nb.num);
    CHECK(g(0, 0).equal_mod(t, 10));
    CHECK(g(1, 1).equal_mod(t.mul_p_pow(1), 10));
    CHECK(g(0, 1).equal_mod(Witt(*ctx), 10));
  }
}
