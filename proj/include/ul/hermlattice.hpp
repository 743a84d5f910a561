#pragma once

#include "ul/matrix.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace ul {

struct SnfResult {
  std::vector<int> exponents; // nondecreasing
  WMatrix left;               // left * A * right = diag(p^exponents)
  WMatrix right;
};

// Unit-pivot Smith normal form over W/p^N. Pivot: minimal valuation, ties in
// row-major order. Throws InsufficientPrecision when a pivot vanishes.
SnfResult snf(const WMatrix &a);

// p^(-denom) * num
struct FracMatrix {
  WMatrix num;
  int denom = 0;
};

// Inverse of a square matrix with nonzero determinant.
FracMatrix inverse(const WMatrix &a);

enum class FormClass { SelfDual, NonSelfDual };
std::string to_string(FormClass c);

// SelfDual iff v_p(det gram) is even.
FormClass classify_form(const WMatrix &gram);
int det_valuation(const WMatrix &a);

// C_k = W(F_q)[1/p]^n with {x, y} = x^T G sigma(y), G = -sigma(G)^T.
class HermitianSpace {
public:
  HermitianSpace(std::shared_ptr<const PrimeContext> ctx, WMatrix gram);

  int dim() const noexcept { return gram_.rows(); }
  const PrimeContext &context() const noexcept { return *ctx_; }
  const std::shared_ptr<const PrimeContext> &context_ptr() const noexcept {
    return ctx_;
  }
  const WMatrix &gram() const noexcept { return gram_; }
  FormClass form_class() const noexcept { return class_; }
  // Gram matrix of the columns of B: B^T G sigma(B).
  WMatrix gram_of(const WMatrix &basis) const;

private:
  std::shared_ptr<const PrimeContext> ctx_;
  WMatrix gram_;
  FormClass class_;
};

using SpacePtr = std::shared_ptr<const HermitianSpace>;

struct LatticeKey {
  int denom = 0;
  std::vector<std::int64_t> entries;
  auto operator<=>(const LatticeKey &) const = default;
  std::string hex() const;
  std::uint64_t hash() const;
};

struct LatticeKeyHash {
  std::size_t operator()(const LatticeKey &k) const {
    return static_cast<std::size_t>(k.hash());
  }
};

// p^(-denom) * span(hnf) where hnf is the canonical lower-triangular Hermite
// form of an integral lattice not contained in p W^n.
class HermitianLattice {
public:
  // Columns of `gens` generate p^denom * L. `prec` is the number of reliable
  // p-adic digits of the generators.
  static HermitianLattice from_generators(SpacePtr space, const WMatrix &gens,
                                          int denom, int prec);
  static HermitianLattice from_generators(SpacePtr space, const WMatrix &gens,
                                          int denom = 0);
  static HermitianLattice standard(SpacePtr space);

  const HermitianSpace &space() const noexcept { return *space_; }
  const SpacePtr &space_ptr() const noexcept { return space_; }
  const PrimeContext &context() const { return space_->context(); }
  int dim() const { return hnf_.rows(); }
  int denom() const noexcept { return denom_; }
  const WMatrix &hnf() const noexcept { return hnf_; }
  // Diagonal exponents of the Hermite form.
  std::vector<int> diagonal_exponents() const;
  // v_p(det) of a basis, i.e. [W^n : L] as a generalized index.
  int log_volume() const;
  // Basis scaled to denominator d >= denom: p^(-d) * result.
  WMatrix basis_with_denom(int d) const;
  FracMatrix basis() const { return {hnf_, denom_}; }
  LatticeKey key() const;
  HermitianLattice scaled(int k) const; // p^k L
  bool operator==(const HermitianLattice &o) const {
    return denom_ == o.denom_ && hnf_ == o.hnf_;
  }

private:
  HermitianLattice(SpacePtr s, WMatrix h, int d)
      : space_(std::move(s)), hnf_(std::move(h)), denom_(d) {}
  SpacePtr space_;
  WMatrix hnf_;
  int denom_ = 0;
};

using Lattice = HermitianLattice;

Lattice dual(const Lattice &L);
Lattice euclidean_dual(const Lattice &L);
Lattice tau(const Lattice &L);
Lattice lattice_sum(const Lattice &a, const Lattice &b);
Lattice lattice_intersect(const Lattice &a, const Lattice &b);
// Generalized index [sup : sub].
int index(const Lattice &sub, const Lattice &sup);
bool contains(const Lattice &big, const Lattice &small);
bool is_tau_invariant(const Lattice &L);
// Image of L under the sigma^k-semilinear map x -> A sigma^k(x); `target` is
// the space of the image.
Lattice semilinear_image(const WMatrix &A, int k, const Lattice &L,
                         SpacePtr target);
inline LatticeKey canonicalize(const Lattice &L) { return L.key(); }
// Index of `sub` relative to `ref` ([ref : sub]).
inline int volume(const Lattice &sub, const Lattice &ref) {
  return index(sub, ref);
}

struct ChainLink {
  std::string sub;
  std::string sup;
  int expected = 0;
  bool included = false;
  int actual = 0;
  bool ok() const { return included && actual == expected; }
};

struct ChainReport {
  std::vector<ChainLink> links;
  bool tau_invariant = true;
  bool satisfied() const;
  std::string describe() const;
};

// p^(i+1) A^v <=^1 A <=^(n-1) p^i A^v, and the same for tau(A).
ChainReport check_D_i(const Lattice &A, int i);
// Type l = [L : p^(i+1) L^v] of a vertex lattice; throws NotAVertex.
int vertex_type(const Lattice &L, int i);
bool is_vertex(const Lattice &L, int i);

struct TauStabilization {
  int d = 0;
  Lattice lambda;
  int type = 0;
  ChainReport chain;
};
TauStabilization tau_stabilize(const Lattice &A, int i, int s);

// Basis of M with gram t * diag(I_r, p I_s). Requires M tau-invariant and
// p M^v <=^r M <=^s M^v; throws ChainViolation otherwise.
FracMatrix gram_schmidt_normalize(const Lattice &M, int r, int s);

// p^(-i/2) A; odd i throws OddShiftUnsupported.
Lattice shift_psi(const Lattice &A, int i);

} // namespace ul
