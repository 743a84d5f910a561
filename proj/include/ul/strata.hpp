#pragma once

#include "ul/finite_field.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ul {

using FVec = std::vector<FiniteField::Elem>;
using FRows = std::vector<FVec>;

// Reduced row echelon form in place; zero rows are dropped. Returns pivots.
std::vector<int> rref(const FiniteField &F, FRows &rows);
// Basis of {x : rows * x = 0}, in reduced echelon form.
FRows null_space(const FiniteField &F, const FRows &rows, int ncols);

enum class FormKind { AntiDiagonal, Identity };

// F_{p^2}^l with a skew-hermitian form tbar * T, viewed over F_{p^{2m}}.
// (x, y) = sum_ij x_i form_ij y_j^p.
class FiniteHermSpace {
public:
  FiniteHermSpace(int p, int l, int m = 1, FormKind kind = FormKind::AntiDiagonal);

  int p() const { return F_->p(); }
  int l() const { return l_; }
  int m() const { return m_; }
  FormKind kind() const { return kind_; }
  const FiniteField &field() const { return *F_; }
  const std::shared_ptr<const FiniteField> &field_ptr() const { return F_; }
  FiniteField::Elem tbar() const { return tbar_; }
  const FRows &form() const { return form_; }
  FiniteField::Elem pair(const FVec &x, const FVec &y) const;

private:
  std::shared_ptr<const FiniteField> F_;
  int l_, m_;
  FormKind kind_;
  FiniteField::Elem tbar_;
  FRows form_;
};

class HermSubspace {
public:
  HermSubspace(const FiniteHermSpace &space, FRows rows);

  const FiniteHermSpace &space() const { return *space_; }
  int field_degree() const { return space_->m(); }
  const FRows &basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool contains(const HermSubspace &o) const;
  bool operator==(const HermSubspace &o) const { return basis_ == o.basis_; }
  bool operator<(const HermSubspace &o) const { return basis_ < o.basis_; }
  std::string to_string() const;

private:
  const FiniteHermSpace *space_;
  FRows basis_;
};

HermSubspace perp(const HermSubspace &U);
// sigma^2 applied entrywise.
HermSubspace tau(const HermSubspace &U);
HermSubspace subspace_sum(const HermSubspace &a, const HermSubspace &b);
bool is_tau_stable(const HermSubspace &U);

// Number of k-dimensional subspaces of F^l (Gaussian binomial).
std::uint64_t subspace_count(std::uint64_t q, int l, int k);
// Visits each k-dimensional subspace once, as a canonical echelon form.
void for_each_subspace(const FiniteHermSpace &space, int k,
                       const std::function<void(const HermSubspace &)> &f,
                       bool base_field_only = false);

// Subspaces U of dimension (l + 1) / 2 with perp(U) in U; throws BoundExceeded.
std::vector<HermSubspace> enumerate_Y(const FiniteHermSpace &space);
// Least i with U + tau U + ... + tau^i U tau-stable.
int stratify(const HermSubspace &U);

struct StratumRow {
  int p = 0, l = 0, m = 0, depth = 0;
  std::uint64_t count = 0;
};
// Rows for depths 0 .. min(d, m - 1).
std::vector<StratumRow> stratum_table(const FiniteHermSpace &space);
std::string strata_csv(const std::vector<StratumRow> &rows);
std::string strata_json(const std::vector<StratumRow> &rows);

// Projective points of x^(p+1) + y^(p+1) + z^(p+1) over F_{p^{2m}}.
std::uint64_t fermat_count(int p, int m);
// Curve a^p l^p d + a l d^p - b^(p+1) l^(p+1) = 0 over the field F.
std::uint64_t chart_curve_affine_count(const FiniteField &F,
                                       FiniteField::Elem lambda);
std::uint64_t chart_curve_count(const FiniteField &F, FiniteField::Elem lambda);

std::vector<HermSubspace> isotropic_lines(const FiniteHermSpace &space);
// F_{p^2}-rational U of dimension (l + l1) / 2 with perp(U) in U.
std::vector<HermSubspace> sub_vertex_correspondence(const FiniteHermSpace &space,
                                                    int l1);

} // namespace ul
