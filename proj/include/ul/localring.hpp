#pragma once

#include "ul/finite_field.hpp"
#include "ul/isocrystal.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ul {

using Monomial = std::vector<std::uint16_t>;

int monomial_degree(const Monomial &m);
// Graded lexicographic, variable 0 largest; true when a comes before b.
struct GrlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

class Poly {
public:
  using Terms = std::map<Monomial, FiniteField::Elem, GrlexGreater>;

  Poly(FieldPtr F, int nvars);
  static Poly constant(FieldPtr F, int nvars, FiniteField::Elem c);
  static Poly variable(FieldPtr F, int nvars, int i);
  static Poly monomial(FieldPtr F, const Monomial &m, FiniteField::Elem c);

  const FiniteField &field() const { return *F_; }
  const FieldPtr &field_ptr() const { return F_; }
  int nvars() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const; // -1 for zero
  FiniteField::Elem coeff(const Monomial &m) const;
  void add_term(const Monomial &m, FiniteField::Elem c);
  const Monomial &leading_monomial() const;
  FiniteField::Elem leading_coeff() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly scaled(FiniteField::Elem c) const;
  Poly times_monomial(const Monomial &m) const;
  Poly pow(int e) const;
  bool operator==(const Poly &o) const { return terms_ == o.terms_; }

  FiniteField::Elem evaluate(const std::vector<FiniteField::Elem> &pt) const;
  // Replaces variable i by images[i]; images live in a common ring.
  Poly substitute(const std::vector<Poly> &images) const;
  std::string to_string(const std::vector<std::string> &names) const;

private:
  FieldPtr F_;
  int n_;
  Terms terms_;
};

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};
DivisionResult divide(const Poly &f, const Poly &g);

struct IdealPresentation {
  FieldPtr field;
  std::vector<std::string> variables;
  std::vector<Poly> generators;
  std::vector<std::string> labels;
};

// Representatives over F_{p^2} in the order used by module isocrystal.
std::vector<JRep> local_representatives(const FieldPtr &F);

// Variables (a_0..a_p, x, y). Generators g_0..g_p, the Fermat relation,
// a_i a_j (i < j), a_i (l_i y - mu_i x).
IdealPresentation build_RM(const FieldPtr &F, const std::vector<JRep> &reps);
// Only g_0..g_p, same variables.
IdealPresentation build_gk(const FieldPtr &F, const std::vector<JRep> &reps);
// Variables (a_0..a_p, b_0..b_p): h_i, a_i a_j, a_i b_j, b_i b_j.
IdealPresentation build_A_prime(const FieldPtr &F, const std::vector<JRep> &reps);
// Variables (a, b): h_i.
IdealPresentation build_R_i(const FieldPtr &F, const JRep &rep);
Poly h_poly(const FieldPtr &F, const JRep &rep, int nvars, int ia, int ib);
// prod_i (l_i y - mu_i x) in the variables of build_RM.
Poly product_of_lines(const FieldPtr &F, const std::vector<JRep> &reps);

int jacobian_rank_at_origin(const IdealPresentation &I);
// Throws NonVanishing if a generator has a constant term.
int tangent_dim_at_origin(const IdealPresentation &I);

int check_vandermonde_rank(const FiniteField &F, const std::vector<JRep> &reps);
// All k = 0..p; `perturb` is added to one coefficient of the right side.
bool check_eta_identity(const FieldPtr &F, const JRep &rep,
                        FiniteField::Elem perturb = 0);

struct MembershipResult {
  bool member = false;
  int degree_bound = 0;
  std::size_t rows = 0, columns = 0;
  // f = sum_k c_k * gen_k when member.
  std::vector<Poly> witness;
  bool verified = false;
};
// Searches c_k with deg(c_k) + deg(gen_k) <= degree_bound by exact linear
// algebra. Throws BoundExceeded, InvalidArgument if degree_bound < deg f.
MembershipResult membership_bounded(const Poly &f, const IdealPresentation &I,
                                    int degree_bound);
bool verify_witness(const Poly &f, const IdealPresentation &I,
                    const std::vector<Poly> &witness);

// A point of Z(I) over F with f != 0, searched on the curve components
// a_j = 0 (j != i), l_i y = mu_i x.
std::optional<std::vector<FiniteField::Elem>>
nonmember_certificate(const Poly &f, const IdealPresentation &I,
                      const std::vector<JRep> &reps);

// prod_i (l_i y - mu_i x): bounded search in (g_k), then in R_M when that
// search is inconclusive.
struct LinesCertificate {
  std::string ideal; // "g_k", "R_M" or "" when neither search succeeds
  MembershipResult gk;
  std::optional<MembershipResult> rm;
  bool certified() const { return !ideal.empty(); }
};
LinesCertificate certify_lines_product(const FieldPtr &F,
                                       const std::vector<JRep> &reps,
                                       int degree_bound);
std::string witness_json(const IdealPresentation &I, const MembershipResult &r);

bool component_substitution_check(const FieldPtr &F,
                                  const std::vector<JRep> &reps, int i);

struct LocalringReport {
  std::string check;
  int p = 0;
  std::string result;
  std::optional<std::string> witness;
  std::optional<int> jacobian_rank;
  std::string to_json() const;
};

} // namespace ul
