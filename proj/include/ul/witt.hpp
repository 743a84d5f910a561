#pragma once

#include "ul/finite_field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ul {

inline constexpr int kMaxDegree = 8;
inline constexpr int kDefaultPrecision = 12;

using Coeffs = std::array<std::int64_t, kMaxDegree>;

// W(F_q)/p^N with q = p^(2m), realised as (Z/p^N)[x]/(f) where f is the
// Hensel lift of the minimal polynomial of a primitive element of F_q. The
// class of x is then the Teichmuller lift zeta of that primitive element.
class PrimeContext {
public:
  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  int N() const noexcept { return N_; }
  int degree() const noexcept { return deg_; }
  std::int64_t modulus_pN() const noexcept { return pN_; }
  std::int64_t p_pow(int k) const { return ppow_.at(k); }
  std::uint64_t q() const noexcept { return residue_.size(); }
  const FiniteField &residue() const noexcept { return residue_; }
  // f, low to high, monic of length degree + 1.
  const std::vector<std::int64_t> &modulus() const noexcept { return f_; }
  // Smallest e with sigma(zeta^e) = -zeta^e.
  std::int64_t skew_exponent() const noexcept { return skew_e_; }

  // Internal arithmetic helpers.
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const noexcept {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % pN_);
  }
  Coeffs multiply(const Coeffs &a, const Coeffs &b) const;
  Coeffs apply_frobenius(const Coeffs &a, int k) const;
  const Coeffs &zeta_power(std::int64_t e) const;
  Coeffs canonical_mod(const Coeffs &a, int v) const;

private:
  friend std::shared_ptr<const PrimeContext> make_context(int p, int m, int N);
  PrimeContext(int p, int m, int N);

  int p_, m_, N_, deg_;
  std::int64_t pN_;
  std::vector<std::int64_t> ppow_;
  FiniteField residue_;
  std::vector<std::int64_t> f_;
  std::vector<Coeffs> red_;               // x^(deg + j) mod f
  std::vector<std::vector<Coeffs>> frob_; // frob_[k][j] = sigma^k(x^j)
  std::vector<Coeffs> zeta_pow_;
  std::vector<std::vector<std::int64_t>> adapt_, adapt_inv_;
  std::int64_t skew_e_ = 0;
};

// Rejects p = 2 ("p must be odd"), composite p, and oversized fields.
std::shared_ptr<const PrimeContext> make_context(int p, int m,
                                                 int N = kDefaultPrecision);

// Element of W(F_q)/p^N. Holds a non-owning pointer to its context.
class Witt {
public:
  Witt() = default;
  explicit Witt(const PrimeContext &ctx) : ctx_(&ctx) { c_.fill(0); }
  Witt(const PrimeContext &ctx, std::int64_t v);
  Witt(const PrimeContext &ctx, const Coeffs &c) : ctx_(&ctx), c_(c) {}

  const PrimeContext &context() const { return *ctx_; }
  const PrimeContext *context_ptr() const noexcept { return ctx_; }
  std::int64_t coeff(int j) const { return c_[j]; }
  const Coeffs &coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_unit() const { return valuation() == 0; }
  // v_p of the element; returns N for zero (meaning ">= N").
  int valuation() const;

  Witt operator+(const Witt &o) const;
  Witt operator-(const Witt &o) const;
  Witt operator*(const Witt &o) const;
  Witt operator-() const;
  Witt &operator+=(const Witt &o) { return *this = *this + o; }
  Witt &operator-=(const Witt &o) { return *this = *this - o; }
  Witt &operator*=(const Witt &o) { return *this = *this * o; }
  bool operator==(const Witt &o) const;
  bool operator!=(const Witt &o) const { return !(*this == o); }

  Witt inverse() const;
  Witt mul_p_pow(int k) const;
  // Exact division by p^k; throws if not divisible. The top k digits of the
  // result are unknown and set to zero.
  Witt div_p_pow(int k) const;
  Witt pow(std::int64_t e) const;
  // Residue class in F_q.
  FiniteField::Elem reduce() const;
  // Canonical representative modulo p^v.
  Witt canonical_mod(int v) const;
  bool equal_mod(const Witt &o, int v) const;
  std::string to_string() const;

private:
  const PrimeContext *ctx_ = nullptr;
  Coeffs c_{};
};

Witt frobenius(const Witt &a, int k = 1);
Witt teichmuller(const PrimeContext &ctx, FiniteField::Elem a);
// Any lift of a residue class (digit-wise).
Witt residue_lift(const PrimeContext &ctx, FiniteField::Elem a);
Witt skew_unit(const PrimeContext &ctx);
Witt zeta(const PrimeContext &ctx);
inline int valuation(const Witt &a) { return a.valuation(); }
// Fixed by sigma^(2d), i.e. lies in W(F_{p^(2d)}).
bool in_subring(const Witt &a, int d);

} // namespace ul
