#pragma once

#include "ul/hermlattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ul {

struct JRep {
  FiniteField::Elem lambda = 0;
  FiniteField::Elem mu = 0;
};

bool in_J(const FiniteField &F, FiniteField::Elem lambda, FiniteField::Elem mu);

// One representative of each projective point of
// J = {lambda^(p+1) + mu^(p+1) = 0} over the subfield F_{p^2} of F. Pairs are
// enumerated in generator-power order, so every first representative has
// lambda = 1 and the set is closed under (lambda, mu) -> (lambda^p, mu^p).
std::vector<JRep> j_representatives(const FiniteField &F);
// sigma(i): the index of (lambda_i^p, mu_i^p).
std::vector<int> j_frobenius_permutation(const FiniteField &F,
                                         const std::vector<JRep> &reps);

// Isocrystal N = N0 + N1 with basis e1, e2, e3, f1, f2, f3, F sigma-semilinear
// and <e_i, f_j> = t delta_ij. N0 carries {x, y} = <x, F y>.
class StandardModel {
public:
  explicit StandardModel(std::shared_ptr<const PrimeContext> ctx);

  const PrimeContext &context() const { return *ctx_; }
  const std::shared_ptr<const PrimeContext> &context_ptr() const { return ctx_; }
  Witt t() const { return t_; }
  // 6 x 6 matrices in the basis (e1, e2, e3, f1, f2, f3); columns are images.
  const WMatrix &F_matrix() const { return F_; }
  const WMatrix &V_matrix() const { return V_; }
  const WMatrix &pairing() const { return omega_; }
  // Restrictions F: N0 -> N1 and F: N1 -> N0.
  const WMatrix &F01() const { return F01_; }
  const WMatrix &F10() const { return F10_; }
  const SpacePtr &space0() const { return space0_; }
  const SpacePtr &space1() const { return space1_; }

  // x -> F_matrix * sigma(x) and x -> V_matrix * sigma^{-1}(x) on 6-vectors.
  WMatrix apply_F(const WMatrix &v) const;
  WMatrix apply_V(const WMatrix &v) const;
  // <x, y> on 6-vectors.
  Witt pair(const WMatrix &x, const WMatrix &y) const;

  Lattice F_of_N0(const Lattice &L0) const; // in N1
  Lattice F_of_N1(const Lattice &L1) const; // in N0
  Lattice V_of_N0(const Lattice &L0) const; // in N1
  Lattice V_of_N1(const Lattice &L1) const; // in N0
  Lattice Finv_of_N0(const Lattice &L0) const; // in N1

private:
  std::shared_ptr<const PrimeContext> ctx_;
  Witt t_;
  WMatrix F_, V_, omega_, F01_, F10_;
  SpacePtr space0_, space1_;
};

struct DieudonneLattice {
  Lattice M0;
  Lattice M1;
  int i = 0;
};

DieudonneLattice standard_superspecial(const StandardModel &model);
// (A, F^{-1}(p^(i+1) A^v)).
DieudonneLattice dieudonne_from_A(const StandardModel &model, const Lattice &A,
                                  int i);

struct CheckItem {
  std::string name;
  bool ok = false;
};

struct DieudonneReport {
  std::vector<CheckItem> items;
  bool ok() const;
  bool passed(const std::string &name) const;
  std::string describe() const;
};

inline constexpr const char *kVolumeCheck = "volume";

DieudonneReport verify_dieudonne(const StandardModel &model,
                                 const DieudonneLattice &M, int i);
bool is_superspecial(const DieudonneLattice &M);

// <e1, e2, e3, p^-1([lambda] e1 + [mu] e3)>; throws NotInJ.
Lattice neighbor_lattice_J(const StandardModel &model, FiniteField::Elem lambda,
                           FiniteField::Elem mu);

bool on_chart(const FiniteField &F, FiniteField::Elem lambda,
              FiniteField::Elem a, FiniteField::Elem b);
// All (a, b) in F^2 on the chart a^p l^p + a l - b^(p+1) l^(p+1) = 0.
std::vector<std::pair<FiniteField::Elem, FiniteField::Elem>>
chart_points(const FiniteField &F, FiniteField::Elem lambda);

struct MabBasis {
  WMatrix e_tilde; // 3 x 3 numerators over p^-1, columns e~1, e~2, e~3
  WMatrix f_tilde; // 3 x 3 numerators over p^-1, columns f~1, f~2, f~3
};
MabBasis mab_basis(const StandardModel &model, const JRep &j,
                   FiniteField::Elem a, FiniteField::Elem b);
// Throws NotInJ / ChartViolation.
DieudonneLattice build_M_ab(const StandardModel &model, const JRep &j,
                            FiniteField::Elem a, FiniteField::Elem b);
// V(M) = <e~1, p e~2, e~3, p f~1, f~2, p f~3>.
bool check_V_basis(const StandardModel &model, const JRep &j,
                   FiniteField::Elem a, FiniteField::Elem b,
                   const DieudonneLattice &M);

} // namespace ul
