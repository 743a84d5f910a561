#include "ul/isocrystal.hpp"

#include "ul/errors.hpp"

#include <sstream>

namespace ul {

using Elem = FiniteField::Elem;

bool in_J(const FiniteField &F, Elem lambda, Elem mu) {
  if (lambda == 0 && mu == 0)
    return false;
  if (!F.in_subfield(lambda, 2) || !F.in_subfield(mu, 2))
    return false;
  const int p = F.p();
  return F.add(F.pow(lambda, p + 1), F.pow(mu, p + 1)) == 0;
}

std::vector<JRep> j_representatives(const FiniteField &F) {
  std::vector<Elem> sub = F.subfield(2);
  // Generator-power order: 1, w, w^2, ..., then 0.
  std::vector<Elem> order(sub.begin() + 1, sub.end());
  order.push_back(sub[0]);
  std::vector<JRep> reps;
  std::vector<std::pair<Elem, Elem>> seen; // normalized (1, mu/lambda)
  for (Elem l : order)
    for (Elem m : order) {
      if (!in_J(F, l, m))
        continue;
      Elem ratio = F.div(m, l);
      bool dup = false;
      for (auto &s : seen)
        if (s.second == ratio)
          dup = true;
      if (dup)
        continue;
      seen.push_back({F.one(), ratio});
      reps.push_back({l, m});
    }
  return reps;
}

std::vector<int> j_frobenius_permutation(const FiniteField &F,
                                         const std::vector<JRep> &reps) {
  std::vector<int> perm(reps.size(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Elem l = F.frobenius(reps[i].lambda), m = F.frobenius(reps[i].mu);
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (reps[j].lambda == l && reps[j].mu == m)
        perm[i] = static_cast<int>(j);
    if (perm[i] < 0)
      throw Error("representative set is not Frobenius-stable");
  }
  return perm;
}

StandardModel::StandardModel(std::shared_ptr<const PrimeContext> ctx)
    : ctx_(std::move(ctx)) {
  const PrimeContext &c = *ctx_;
  const int p = c.p();
  t_ = skew_unit(c);
  const int rows[6][6] = {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, p, 0},
                          {0, 0, 0, 0, 0, 1}, {p, 0, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0, 0}, {0, 0, p, 0, 0, 0}};
  F_ = zero_matrix(c, 6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      F_(i, j) = Witt(c, rows[i][j]);
  FracMatrix finv = inverse(F_);
  V_ = mul_p_pow(finv.num, 1 - finv.denom);
  omega_ = zero_matrix(c, 6, 6);
  for (int i = 0; i < 3; ++i) {
    omega_(i, 3 + i) = t_;
    omega_(3 + i, i) = -t_;
  }
  F01_ = zero_matrix(c, 3, 3);
  F10_ = zero_matrix(c, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      F01_(i, j) = F_(3 + i, j);
      F10_(i, j) = F_(i, 3 + j);
    }
  // {x, y} = <x, F y>: the N0 and N1 blocks of Omega * F.
  WMatrix OF = omega_ * F_;
  WMatrix g0 = zero_matrix(c, 3, 3), g1 = zero_matrix(c, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g0(i, j) = OF(i, j);
      g1(i, j) = OF(3 + i, 3 + j);
    }
  space0_ = std::make_shared<HermitianSpace>(ctx_, g0);
  space1_ = std::make_shared<HermitianSpace>(ctx_, g1);
}

WMatrix StandardModel::apply_F(const WMatrix &v) const {
  return F_ * frobenius(v, 1);
}

WMatrix StandardModel::apply_V(const WMatrix &v) const {
  return V_ * frobenius(v, -1);
}

Witt StandardModel::pair(const WMatrix &x, const WMatrix &y) const {
  return (transpose(x) * omega_ * y)(0, 0);
}

Lattice StandardModel::F_of_N0(const Lattice &L0) const {
  return semilinear_image(F01_, 1, L0, space1_);
}

Lattice StandardModel::F_of_N1(const Lattice &L1) const {
  return semilinear_image(F10_, 1, L1, space0_);
}

namespace {

WMatrix block(const WMatrix &m, int r0, int c0) {
  WMatrix b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      b(i, j) = m(r0 + i, c0 + j);
  return b;
}

} // namespace

Lattice StandardModel::V_of_N0(const Lattice &L0) const {
  return semilinear_image(block(V_, 3, 0), -1, L0, space1_);
}

Lattice StandardModel::V_of_N1(const Lattice &L1) const {
  return semilinear_image(block(V_, 0, 3), -1, L1, space0_);
}

Lattice StandardModel::Finv_of_N0(const Lattice &L0) const {
  // F^{-1} = p^{-1} V on N0.
  return V_of_N0(L0).scaled(-1);
}

DieudonneLattice standard_superspecial(const StandardModel &model) {
  Lattice M0 = Lattice::standard(model.space0());
  return dieudonne_from_A(model, M0, 0);
}

DieudonneLattice dieudonne_from_A(const StandardModel &model, const Lattice &A,
                                  int i) {
  Lattice M1 = model.Finv_of_N0(dual(A).scaled(i + 1));
  return {A, M1, i};
}

bool DieudonneReport::ok() const {
  for (const auto &c : items)
    if (!c.ok)
      return false;
  return true;
}

bool DieudonneReport::passed(const std::string &name) const {
  for (const auto &c : items)
    if (c.name == name)
      return c.ok;
  throw InvalidArgument("unknown check " + name);
}

std::string DieudonneReport::describe() const {
  std::ostringstream os;
  for (const auto &c : items)
    os << (c.ok ? "PASS " : "FAIL ") << c.name << "\n";
  return os.str();
}

namespace {

bool chain_ok(const Lattice &low, const Lattice &mid, const Lattice &high,
              int i1, int i2) {
  return contains(mid, low) && contains(high, mid) && index(low, mid) == i1 &&
         index(mid, high) == i2;
}

} // namespace

DieudonneReport verify_dieudonne(const StandardModel &model,
                                 const DieudonneLattice &M, int i) {
  DieudonneReport r;
  Lattice FM0 = model.F_of_N0(M.M0);
  Lattice FM1 = model.F_of_N1(M.M1);
  Lattice VM0 = model.V_of_N0(M.M0);
  Lattice VM1 = model.V_of_N1(M.M1);
  r.items.push_back({"F-stable", contains(M.M1, FM0) && contains(M.M0, FM1)});
  r.items.push_back({"V-stable", contains(M.M1, VM0) && contains(M.M0, VM1)});
  r.items.push_back(
      {"p M0 <=^2 F M1 <=^1 M0", chain_ok(M.M0.scaled(1), FM1, M.M0, 2, 1)});
  r.items.push_back(
      {"p M1 <=^1 F M0 <=^2 M1", chain_ok(M.M1.scaled(1), FM0, M.M1, 1, 2)});
  r.items.push_back(
      {"F M1 = p^(i+1) M0^v", FM1 == dual(M.M0).scaled(i + 1)});
  r.items.push_back(
      {kVolumeCheck, M.M0.log_volume() + M.M1.log_volume() == 3 * i});
  return r;
}

bool is_superspecial(const DieudonneLattice &M) {
  return is_tau_invariant(M.M0);
}

Lattice neighbor_lattice_J(const StandardModel &model, Elem lambda, Elem mu) {
  const PrimeContext &c = model.context();
  if (!in_J(c.residue(), lambda, mu))
    throw NotInJ("(lambda, mu) is not a point of J");
  WMatrix g = zero_matrix(c, 3, 4);
  for (int i = 0; i < 3; ++i)
    g(i, i) = Witt(c, c.p());
  g(0, 3) = teichmuller(c, lambda);
  g(2, 3) = teichmuller(c, mu);
  return Lattice::from_generators(model.space0(), g, 1);
}

bool on_chart(const FiniteField &F, Elem lambda, Elem a, Elem b) {
  const int p = F.p();
  Elem t1 = F.mul(F.pow(a, p), F.pow(lambda, p));
  Elem t2 = F.mul(a, lambda);
  Elem t3 = F.mul(F.pow(b, p + 1), F.pow(lambda, p + 1));
  return F.sub(F.add(t1, t2), t3) == 0;
}

std::vector<std::pair<Elem, Elem>> chart_points(const FiniteField &F,
                                                Elem lambda) {
  check_enumeration(static_cast<std::uint64_t>(F.size()) * F.size(),
                    "chart points");
  std::vector<std::pair<Elem, Elem>> out;
  std::vector<Elem> els = F.elements();
  for (Elem a : els)
    for (Elem b : els)
      if (on_chart(F, lambda, a, b))
        out.push_back({a, b});
  return out;
}

MabBasis mab_basis(const StandardModel &model, const JRep &j, Elem a, Elem b) {
  const PrimeContext &c = model.context();
  const FiniteField &F = c.residue();
  const int p = c.p();
  if (!in_J(F, j.lambda, j.mu))
    throw NotInJ("(lambda, mu) is not a point of J");
  if (!on_chart(F, j.lambda, a, b))
    throw ChartViolation("(a, b) violates the chart equation");
  auto T = [&](Elem x) { return teichmuller(c, x); };
  const Elem l = j.lambda, mu = j.mu;
  const Elem lp = F.pow(l, p), mup = F.pow(mu, p);
  const Elem b1p = F.frobenius(b, -1);
  const Elem bp1p = F.mul(b, b1p);
  const Elem cc = F.neg(F.mul(F.mul(l, F.inv(mu)), a));
  const Witt P(c, p);

  MabBasis out{zero_matrix(c, 3, 3), zero_matrix(c, 3, 3)};
  WMatrix &E = out.e_tilde;
  // e~1
  Witt k1 = T(a) - T(F.mul(bp1p, lp));
  E(0, 0) = P + k1 * T(l);
  E(1, 0) = -(P * T(F.mul(b1p, lp)));
  E(2, 0) = k1 * T(mu);
  // e~2
  E(0, 1) = T(b) * T(l);
  E(1, 1) = P;
  E(2, 1) = T(b) * T(mu);
  // e~3
  Witt k3 = T(cc) - T(F.mul(bp1p, mup));
  E(0, 2) = k3 * T(l);
  E(1, 2) = -(P * T(F.mul(b1p, mup)));
  E(2, 2) = P + k3 * T(mu);

  WMatrix &Fm = out.f_tilde;
  const Elem l1p = F.pow(l, 1 - p), mu1p = F.pow(mu, 1 - p);
  // f~1
  Witt h1 = T(F.mul(a, l1p));
  Fm(0, 0) = P - h1 * T(lp);
  Fm(1, 0) = -T(F.mul(b, l));
  Fm(2, 0) = -(h1 * T(mup));
  // f~2
  Fm(0, 1) = P * T(b1p) * T(lp);
  Fm(1, 1) = P;
  Fm(2, 1) = P * T(b1p) * T(mup);
  // f~3
  Witt h3 = T(F.mul(cc, mu1p));
  Fm(0, 2) = -(h3 * T(lp));
  Fm(1, 2) = -T(F.mul(b, mu));
  Fm(2, 2) = P - h3 * T(mup);
  return out;
}

DieudonneLattice build_M_ab(const StandardModel &model, const JRep &j, Elem a,
                            Elem b) {
  MabBasis B = mab_basis(model, j, a, b);
  Lattice M0 = Lattice::from_generators(model.space0(), B.e_tilde, 1);
  Lattice M1 = Lattice::from_generators(model.space1(), B.f_tilde, 1);
  return {M0, M1, 0};
}

bool check_V_basis(const StandardModel &model, const JRep &j, Elem a, Elem b,
                   const DieudonneLattice &M) {
  MabBasis B = mab_basis(model, j, a, b);
  WMatrix e = B.e_tilde, f = B.f_tilde;
  for (int i = 0; i < 3; ++i) {
    e(i, 1) = e(i, 1).mul_p_pow(1);
    f(i, 0) = f(i, 0).mul_p_pow(1);
    f(i, 2) = f(i, 2).mul_p_pow(1);
  }
  Lattice want1 = Lattice::from_generators(model.space0(), e, 1);
  Lattice want0 = Lattice::from_generators(model.space1(), f, 1);
  return model.V_of_N1(M.M1) == want1 && model.V_of_N0(M.M0) == want0;
}

} // namespace ul
