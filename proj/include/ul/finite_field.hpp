#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ul {

// F_{p^k} with elements encoded as base-p digit vectors in the power basis of
// a fixed primitive element. The defining polynomial is the lexicographically
// first monic primitive polynomial of degree k.
class FiniteField {
public:
  using Elem = std::uint32_t;

  FiniteField(int p, int degree);

  int p() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  // Low to high, monic, length degree + 1.
  const std::vector<int> &modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_digits(const std::vector<int> &digits) const;
  int digit(Elem a, int i) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  // a^(p^k); k may be negative.
  Elem frobenius(Elem a, int k = 1) const;

  Elem generator() const noexcept { return exp_[1 % (q_ - 1)]; }
  Elem gen_pow(std::int64_t e) const;
  std::int64_t log(Elem a) const;

  bool in_subfield(Elem a, int sub_degree) const;
  // Zero first, then powers of the subfield generator gen^((q-1)/(p^s-1)).
  std::vector<Elem> subfield(int sub_degree) const;
  std::vector<Elem> elements() const { return subfield(k_); }

  std::string to_string(Elem a) const;

private:
  int p_;
  int k_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::int64_t> log_;
  std::vector<std::uint32_t> pp_; // p^i
  std::vector<std::uint16_t> add_table_;
  std::vector<Elem> neg_;
};

} // namespace ul
