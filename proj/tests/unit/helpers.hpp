#pragma once

#include "ul/hermlattice.hpp"

#include <random>

namespace testutil {

inline ul::Witt random_witt(const ul::PrimeContext &ctx, std::mt19937_64 &rng) {
  ul::Coeffs c{};
  std::uniform_int_distribution<std::int64_t> d(0, ctx.modulus_pN() - 1);
  for (int i = 0; i < ctx.degree(); ++i)
    c[i] = d(rng);
  return ul::Witt(ctx, c);
}

// Random element of W(F_p^2) inside the context.
inline ul::Witt random_witt_sub(const ul::PrimeContext &ctx,
                                std::mt19937_64 &rng) {
  ul::Witt w = ul::teichmuller(ctx, ctx.residue().subfield(2).at(2));
  std::uniform_int_distribution<std::int64_t> d(0, ctx.modulus_pN() - 1);
  return ul::Witt(ctx, d(rng)) + ul::Witt(ctx, d(rng)) * w;
}

inline ul::WMatrix random_matrix(const ul::PrimeContext &ctx, int r, int c,
                                 std::mt19937_64 &rng, bool sub = false) {
  ul::WMatrix m = ul::zero_matrix(ctx, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m(i, j) = sub ? random_witt_sub(ctx, rng) : random_witt(ctx, rng);
  return m;
}

// Random unimodular matrix: product of a unit lower and unit upper triangle
// with a permutation.
inline ul::WMatrix random_unimodular(const ul::PrimeContext &ctx, int n,
                                     std::mt19937_64 &rng, bool sub = false) {
  ul::WMatrix L = ul::identity_matrix(ctx, n), U = ul::identity_matrix(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      L(i, j) = sub ? random_witt_sub(ctx, rng) : random_witt(ctx, rng);
      U(j, i) = sub ? random_witt_sub(ctx, rng) : random_witt(ctx, rng);
    }
  ul::WMatrix m = L * U;
  std::uniform_int_distribution<int> d(0, n - 1);
  m.swap_cols(d(rng), d(rng));
  return m;
}

// Random lattice with elementary divisors in [0, maxexp] and denominator in
// [0, maxden].
inline ul::Lattice random_lattice(const ul::SpacePtr &space, std::mt19937_64 &rng,
                                  int maxexp = 2, int maxden = 1,
                                  bool sub = false) {
  const ul::PrimeContext &ctx = space->context();
  int n = space->dim();
  std::uniform_int_distribution<int> de(0, maxexp), dd(0, maxden);
  std::vector<ul::Witt> diag;
  for (int i = 0; i < n; ++i)
    diag.push_back(ul::Witt(ctx, 1).mul_p_pow(de(rng)));
  ul::WMatrix B = random_unimodular(ctx, n, rng, sub) * ul::diagonal_matrix(diag) *
                  random_unimodular(ctx, n, rng, sub);
  return ul::Lattice::from_generators(space, B, dd(rng));
}

inline ul::SpacePtr diag_space(std::shared_ptr<const ul::PrimeContext> ctx,
                               std::vector<int> exps) {
  std::vector<ul::Witt> d;
  ul::Witt t = ul::skew_unit(*ctx);
  for (int e : exps)
    d.push_back(t.mul_p_pow(e));
  return std::make_shared<ul::HermitianSpace>(ctx, ul::diagonal_matrix(d));
}

} // namespace testutil
