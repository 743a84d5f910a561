#include "ul/localring.hpp"

#include "ul/errors.hpp"
#include "ul/strata.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace ul {

using Elem = FiniteField::Elem;

int monomial_degree(const Monomial &m) {
  int d = 0;
  for (auto e : m)
    d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db)
    return da > db;
  return a > b;
}

Poly::Poly(FieldPtr F, int nvars) : F_(std::move(F)), n_(nvars) {}

Poly Poly::constant(FieldPtr F, int nvars, Elem c) {
  Poly r(std::move(F), nvars);
  r.add_term(Monomial(nvars, 0), c);
  return r;
}

Poly Poly::variable(FieldPtr F, int nvars, int i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(std::move(F), m, 1);
}

Poly Poly::monomial(FieldPtr F, const Monomial &m, Elem c) {
  Poly r(std::move(F), static_cast<int>(m.size()));
  r.add_term(m, c);
  return r;
}

int Poly::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, monomial_degree(m));
  return d;
}

Elem Poly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial &m, Elem c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = F_->add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

const Monomial &Poly::leading_monomial() const {
  if (terms_.empty())
    throw InvalidArgument("zero polynomial has no leading term");
  return terms_.begin()->first;
}

Elem Poly::leading_coeff() const {
  if (terms_.empty())
    throw InvalidArgument("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Poly Poly::operator+(const Poly &o) const {
  Poly r = *this;
  for (const auto &[m, c] : o.terms_)
    r.add_term(m, c);
  return r;
}

Poly Poly::operator-() const { return scaled(F_->neg(F_->one())); }

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Poly &o) const {
  Poly r(F_, n_);
  for (const auto &[m1, c1] : terms_)
    for (const auto &[m2, c2] : o.terms_) {
      Monomial m(n_);
      for (int i = 0; i < n_; ++i)
        m[i] = static_cast<std::uint16_t>(m1[i] + m2[i]);
      r.add_term(m, F_->mul(c1, c2));
    }
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(F_, n_);
  if (c == 0)
    return r;
  for (const auto &[m, a] : terms_)
    r.terms_.emplace(m, F_->mul(a, c));
  return r;
}

Poly Poly::times_monomial(const Monomial &mm) const {
  Poly r(F_, n_);
  for (const auto &[m, a] : terms_) {
    Monomial s(n_);
    for (int i = 0; i < n_; ++i)
      s[i] = static_cast<std::uint16_t>(m[i] + mm[i]);
    r.terms_.emplace(std::move(s), a);
  }
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(F_, n_, 1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1)
      r = r * b;
    if (e > 1)
      b = b * b;
  }
  return r;
}

Elem Poly::evaluate(const std::vector<Elem> &pt) const {
  Elem s = 0;
  for (const auto &[m, c] : terms_) {
    Elem t = c;
    for (int i = 0; i < n_ && t != 0; ++i)
      if (m[i])
        t = F_->mul(t, F_->pow(pt[i], m[i]));
    s = F_->add(s, t);
  }
  return s;
}

Poly Poly::substitute(const std::vector<Poly> &images) const {
  if (static_cast<int>(images.size()) != n_)
    throw InvalidArgument("substitution needs one image per variable");
  const int n2 = images.at(0).nvars();
  Poly r(F_, n2);
  for (const auto &[m, c] : terms_) {
    Poly t = constant(F_, n2, c);
    for (int i = 0; i < n_; ++i)
      if (m[i])
        t = t * images[i].pow(m[i]);
    r = r + t;
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string> &names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    bool unit = c == F_->one();
    bool any = false;
    if (!unit || monomial_degree(m) == 0) {
      os << F_->to_string(c);
      any = true;
    }
    for (int i = 0; i < n_; ++i) {
      if (!m[i])
        continue;
      os << (any ? "*" : "") << names.at(i);
      if (m[i] > 1)
        os << "^" << m[i];
      any = true;
    }
  }
  return os.str();
}

DivisionResult divide(const Poly &f, const Poly &g) {
  if (g.is_zero())
    throw InvalidArgument("division by zero polynomial");
  const FiniteField &F = f.field();
  Poly q(f.field_ptr(), f.nvars()), r(f.field_ptr(), f.nvars());
  Poly rest = f;
  const Monomial &lg = g.leading_monomial();
  Elem inv = F.inv(g.leading_coeff());
  while (!rest.is_zero()) {
    Monomial lm = rest.leading_monomial();
    Elem lc = rest.leading_coeff();
    bool divisible = true;
    Monomial s(lm.size());
    for (std::size_t i = 0; i < lm.size(); ++i) {
      if (lm[i] < lg[i]) {
        divisible = false;
        break;
      }
      s[i] = static_cast<std::uint16_t>(lm[i] - lg[i]);
    }
    if (divisible) {
      Elem c = F.mul(lc, inv);
      q.add_term(s, c);
      rest = rest - g.times_monomial(s).scaled(c);
    } else {
      r.add_term(lm, lc);
      rest = rest - Poly::monomial(f.field_ptr(), lm, lc);
    }
  }
  return {q, r};
}

namespace {

Elem ipow(const FiniteField &F, Elem a, int e) {
  return e >= 0 ? F.pow(a, e) : F.pow(F.inv(a), -e);
}

std::vector<std::string> rm_names(int p) {
  std::vector<std::string> v;
  for (int i = 0; i <= p; ++i)
    v.push_back("a" + std::to_string(i));
  v.push_back("x");
  v.push_back("y");
  return v;
}

std::vector<Poly> g_polys(const FieldPtr &F, const std::vector<JRep> &reps) {
  const int p = F->p();
  const int n = p + 3;
  if (static_cast<int>(reps.size()) != p + 1)
    throw InvalidArgument("need p + 1 representatives");
  Poly x = Poly::variable(F, n, p + 1), y = Poly::variable(F, n, p + 2);
  std::vector<Poly> out;
  for (int k = 0; k <= p; ++k) {
    Poly g(F, n);
    for (int i = 0; i <= p; ++i) {
      Elem l = reps[i].lambda, mu = reps[i].mu;
      Poly a = Poly::variable(F, n, i);
      Elem c1 = F->mul(ipow(*F, l, p - k), ipow(*F, mu, k));
      Elem c2 = F->mul(ipow(*F, l, 1 - k), ipow(*F, mu, k));
      g = g + a.pow(p).scaled(c1) + a.scaled(c2);
    }
    g = g - x.pow(p + 1 - k) * y.pow(k);
    out.push_back(g);
  }
  return out;
}

} // namespace

std::vector<JRep> local_representatives(const FieldPtr &F) {
  if (F->degree() != 2)
    throw InvalidArgument("local rings are defined over F_{p^2}");
  return j_representatives(*F);
}

IdealPresentation build_gk(const FieldPtr &F, const std::vector<JRep> &reps) {
  IdealPresentation I{F, rm_names(F->p()), g_polys(F, reps), {}};
  for (int k = 0; k <= F->p(); ++k)
    I.labels.push_back("g" + std::to_string(k));
  return I;
}

IdealPresentation build_RM(const FieldPtr &F, const std::vector<JRep> &reps) {
  IdealPresentation I = build_gk(F, reps);
  const int p = F->p();
  const int n = p + 3;
  Poly x = Poly::variable(F, n, p + 1), y = Poly::variable(F, n, p + 2);
  I.generators.push_back(x.pow(p + 1) + y.pow(p + 1));
  I.labels.push_back("fermat");
  for (int i = 0; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      I.generators.push_back(Poly::variable(F, n, i) * Poly::variable(F, n, j));
      I.labels.push_back("a" + std::to_string(i) + "*a" + std::to_string(j));
    }
  for (int i = 0; i <= p; ++i) {
    Poly line = y.scaled(reps[i].lambda) - x.scaled(reps[i].mu);
    I.generators.push_back(Poly::variable(F, n, i) * line);
    I.labels.push_back("a" + std::to_string(i) + "*line" + std::to_string(i));
  }
  return I;
}

Poly h_poly(const FieldPtr &F, const JRep &rep, int nvars, int ia, int ib) {
  const int p = F->p();
  Poly a = Poly::variable(F, nvars, ia), b = Poly::variable(F, nvars, ib);
  Elem l = rep.lambda;
  return a.pow(p).scaled(F->pow(l, p)) + a.scaled(l) -
         b.pow(p + 1).scaled(F->pow(l, p + 1));
}

IdealPresentation build_A_prime(const FieldPtr &F,
                                const std::vector<JRep> &reps) {
  const int p = F->p();
  const int n = 2 * (p + 1);
  IdealPresentation I{F, {}, {}, {}};
  for (int i = 0; i <= p; ++i)
    I.variables.push_back("a" + std::to_string(i));
  for (int i = 0; i <= p; ++i)
    I.variables.push_back("b" + std::to_string(i));
  auto a = [&](int i) { return Poly::variable(F, n, i); };
  auto b = [&](int i) { return Poly::variable(F, n, p + 1 + i); };
  for (int i = 0; i <= p; ++i) {
    I.generators.push_back(h_poly(F, reps.at(i), n, i, p + 1 + i));
    I.labels.push_back("h" + std::to_string(i));
  }
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p; ++j) {
      if (i == j)
        continue;
      std::string si = std::to_string(i), sj = std::to_string(j);
      if (i < j) {
        I.generators.push_back(a(i) * a(j));
        I.labels.push_back("a" + si + "*a" + sj);
        I.generators.push_back(b(i) * b(j));
        I.labels.push_back("b" + si + "*b" + sj);
      }
      I.generators.push_back(a(i) * b(j));
      I.labels.push_back("a" + si + "*b" + sj);
    }
  return I;
}

IdealPresentation build_R_i(const FieldPtr &F, const JRep &rep) {
  return {F, {"a", "b"}, {h_poly(F, rep, 2, 0, 1)}, {"h"}};
}

Poly product_of_lines(const FieldPtr &F, const std::vector<JRep> &reps) {
  const int p = F->p();
  const int n = p + 3;
  Poly x = Poly::variable(F, n, p + 1), y = Poly::variable(F, n, p + 2);
  Poly r = Poly::constant(F, n, 1);
  for (const auto &j : reps)
    r = r * (y.scaled(j.lambda) - x.scaled(j.mu));
  return r;
}

int jacobian_rank_at_origin(const IdealPresentation &I) {
  const int n = static_cast<int>(I.variables.size());
  FRows rows;
  for (const auto &g : I.generators) {
    FVec r(n, 0);
    for (int v = 0; v < n; ++v) {
      Monomial m(n, 0);
      m[v] = 1;
      r[v] = g.coeff(m);
    }
    rows.push_back(std::move(r));
  }
  return static_cast<int>(rref(*I.field, rows).size());
}

int tangent_dim_at_origin(const IdealPresentation &I) {
  const int n = static_cast<int>(I.variables.size());
  for (std::size_t k = 0; k < I.generators.size(); ++k)
    if (I.generators[k].coeff(Monomial(n, 0)) != 0)
      throw NonVanishing("generator " + I.labels.at(k) +
                         " does not vanish at the origin");
  return n - jacobian_rank_at_origin(I);
}

int check_vandermonde_rank(const FiniteField &F, const std::vector<JRep> &reps) {
  const int p = F.p();
  FRows rows;
  for (int k = 0; k <= p; ++k) {
    FVec r;
    for (const auto &j : reps)
      r.push_back(F.mul(ipow(F, j.lambda, 1 - k), ipow(F, j.mu, k)));
    rows.push_back(std::move(r));
  }
  return static_cast<int>(rref(F, rows).size());
}

bool check_eta_identity(const FieldPtr &F, const JRep &rep, Elem perturb) {
  const int p = F->p();
  Elem l = rep.lambda, mu = rep.mu;
  if (l == 0)
    return false;
  Poly a = Poly::variable(F, 2, 0), b = Poly::variable(F, 2, 1);
  Poly h = h_poly(F, rep, 2, 0, 1);
  const int kmax = mu == 0 ? 0 : p;
  Elem nu = F->div(mu, l);
  for (int k = 0; k <= kmax; ++k) {
    Poly lhs = h.scaled(F->pow(nu, k));
    Elem c1 = F->mul(ipow(*F, l, p - k), F->pow(mu, k));
    Elem c2 = F->mul(ipow(*F, l, 1 - k), F->pow(mu, k));
    if (k == kmax)
      c2 = F->add(c2, perturb);
    Poly rhs = a.pow(p).scaled(c1) + a.scaled(c2) -
               b.scaled(l).pow(p + 1 - k) * b.scaled(mu).pow(k);
    if (!(lhs == rhs))
      return false;
  }
  return true;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint64_t, Elem>>; // descending
using SparseWit = std::vector<std::pair<int, Elem>>;           // ascending

template <class K, class Cmp>
std::vector<std::pair<K, Elem>>
axpy(const FiniteField &F, const std::vector<std::pair<K, Elem>> &a, Elem c,
     const std::vector<std::pair<K, Elem>> &b, Cmp before) {
  // a - c * b
  std::vector<std::pair<K, Elem>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && before(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || before(b[j].first, a[i].first)) {
      out.push_back({b[j].first, F.neg(F.mul(c, b[j].second))});
      ++j;
    } else {
      Elem v = F.sub(a[i].second, F.mul(c, b[j].second));
      if (v != 0)
        out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void monomials_of_degree(int n, int d, std::vector<Monomial> &out) {
  Monomial m(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m[i] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0)
      out.push_back(m);
    return;
  }
  rec(0, d);
}

std::uint64_t binom(int n, int k) {
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX)
      return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

} // namespace

MembershipResult membership_bounded(const Poly &f, const IdealPresentation &I,
                                    int degree_bound) {
  const FiniteField &F = *I.field;
  const int n = static_cast<int>(I.variables.size());
  if (degree_bound < f.degree())
    throw InvalidArgument("degree bound below deg f");
  MembershipResult res;
  res.degree_bound = degree_bound;
  res.witness.assign(I.generators.size(), Poly(I.field, n));

  // Columns: multiplier degree, then generator, then multiplier monomial.
  struct Product {
    int gen;
    Monomial mono;
  };
  std::vector<Product> products;
  int maxe = -1;
  for (const auto &g : I.generators)
    maxe = std::max(maxe, degree_bound - g.degree());
  std::vector<std::vector<Monomial>> by_deg(std::max(maxe, 0) + 1);
  for (int e = 0; e <= maxe; ++e)
    monomials_of_degree(n, e, by_deg[e]);
  for (int e = 0; e <= maxe; ++e)
    for (std::size_t k = 0; k < I.generators.size(); ++k)
      if (I.generators[k].degree() + e <= degree_bound)
        for (const auto &m : by_deg[e])
          products.push_back({static_cast<int>(k), m});
  const std::uint64_t universe = binom(n + degree_bound, n);
  res.rows = universe;
  res.columns = products.size();
  check_enumeration(universe > 0 && products.size() > UINT64_MAX / universe
                        ? UINT64_MAX
                        : universe * products.size(),
                    "membership matrix");

  // Grlex-preserving integer keys.
  const std::uint64_t B = static_cast<std::uint64_t>(degree_bound) + 1;
  {
    unsigned __int128 cap = 1;
    for (int i = 0; i <= n; ++i)
      cap *= B;
    if (cap > (static_cast<unsigned __int128>(1) << 63))
      throw BoundExceeded("membership: monomial keys overflow");
  }
  auto key = [&](const Monomial &m) {
    std::uint64_t k = static_cast<std::uint64_t>(monomial_degree(m));
    for (int i = 0; i < n; ++i)
      k = k * B + m[i];
    return k;
  };
  auto to_row = [&](const Poly &p) {
    SparseRow r;
    for (const auto &[m, c] : p.terms())
      r.push_back({key(m), c});
    std::sort(r.begin(), r.end(),
              [](const auto &x, const auto &y) { return x.first > y.first; });
    return r;
  };
  auto row_before = [](std::uint64_t a, std::uint64_t b) { return a > b; };
  auto wit_before = [](int a, int b) { return a < b; };

  std::vector<SparseRow> piv_rows;
  std::vector<SparseWit> piv_wits;
  std::unordered_map<std::uint64_t, int> pivot_of;

  auto reduce = [&](SparseRow &r, SparseWit &w) {
    while (!r.empty()) {
      auto it = pivot_of.find(r.front().first);
      if (it == pivot_of.end())
        return;
      Elem c = r.front().second;
      r = axpy(F, r, c, piv_rows[it->second], row_before);
      w = axpy(F, w, c, piv_wits[it->second], wit_before);
    }
  };

  for (std::size_t j = 0; j < products.size(); ++j) {
    SparseRow r =
        to_row(I.generators[products[j].gen].times_monomial(products[j].mono));
    SparseWit w{{static_cast<int>(j), F.one()}};
    reduce(r, w);
    if (r.empty())
      continue;
    Elem inv = F.inv(r.front().second);
    for (auto &t : r)
      t.second = F.mul(t.second, inv);
    for (auto &t : w)
      t.second = F.mul(t.second, inv);
    pivot_of[r.front().first] = static_cast<int>(piv_rows.size());
    piv_rows.push_back(std::move(r));
    piv_wits.push_back(std::move(w));
  }

  // Invariant: r = f - sum w_j * product_j.
  SparseRow r = to_row(f);
  SparseWit w;
  while (!r.empty()) {
    auto it = pivot_of.find(r.front().first);
    if (it == pivot_of.end())
      break;
    Elem c = r.front().second;
    r = axpy(F, r, c, piv_rows[it->second], row_before);
    w = axpy(F, w, F.neg(c), piv_wits[it->second], wit_before);
  }
  if (!r.empty())
    return res;
  res.member = true;
  for (auto [j, c] : w)
    res.witness[products[j].gen].add_term(products[j].mono, c);
  res.verified = verify_witness(f, I, res.witness);
  return res;
}

bool verify_witness(const Poly &f, const IdealPresentation &I,
                    const std::vector<Poly> &witness) {
  if (witness.size() != I.generators.size())
    return false;
  Poly s(I.field, static_cast<int>(I.variables.size()));
  for (std::size_t k = 0; k < witness.size(); ++k)
    if (!witness[k].is_zero())
      s = s + witness[k] * I.generators[k];
  return s == f;
}

std::optional<std::vector<Elem>>
nonmember_certificate(const Poly &f, const IdealPresentation &I,
                      const std::vector<JRep> &reps) {
  const FiniteField &F = *I.field;
  const int p = F.p();
  const int n = static_cast<int>(I.variables.size());
  if (n != p + 3)
    throw InvalidArgument("certificate search expects the variables of R_M");
  check_enumeration(static_cast<std::uint64_t>(p + 1) * F.size() * F.size(),
                    "nonmember_certificate");
  for (int i = 0; i <= p; ++i) {
    Elem nu = F.div(reps.at(i).mu, reps.at(i).lambda);
    for (Elem x = 0; x < F.size(); ++x)
      for (Elem a = 0; a < F.size(); ++a) {
        std::vector<Elem> pt(n, 0);
        pt[i] = a;
        pt[p + 1] = x;
        pt[p + 2] = F.mul(nu, x);
        if (f.evaluate(pt) == 0)
          continue;
        bool zero = true;
        for (const auto &g : I.generators)
          if (g.evaluate(pt) != 0) {
            zero = false;
            break;
          }
        if (zero)
          return pt;
      }
  }
  return std::nullopt;
}

bool component_substitution_check(const FieldPtr &F,
                                  const std::vector<JRep> &reps, int i) {
  const int p = F->p();
  const int n = p + 3;
  if (i < 0 || i > p)
    throw InvalidArgument("component index out of range");
  IdealPresentation RM = build_RM(F, reps);
  Elem nu = F->div(reps[i].mu, reps[i].lambda);
  std::vector<Poly> images;
  for (int v = 0; v < n; ++v) {
    if (v <= p)
      images.push_back(v == i ? Poly::variable(F, n, v) : Poly(F, n));
    else if (v == p + 1)
      images.push_back(Poly::variable(F, n, v));
    else
      images.push_back(Poly::variable(F, n, p + 1).scaled(nu));
  }
  // h_i(a_i, l_i^{-1} x)
  Poly x = Poly::variable(F, n, p + 1);
  Poly H = h_poly(F, reps[i], n, i, p + 1)
               .substitute([&] {
                 std::vector<Poly> s;
                 for (int v = 0; v < n; ++v)
                   s.push_back(v == p + 1 ? x.scaled(F->inv(reps[i].lambda))
                                          : Poly::variable(F, n, v));
                 return s;
               }());
  IdealPresentation image{F, RM.variables, {}, RM.labels};
  for (const auto &g : RM.generators) {
    Poly img = g.substitute(images);
    if (!img.is_zero() && !divide(img, H).remainder.is_zero())
      return false;
    image.generators.push_back(img);
  }
  return membership_bounded(H, image, H.degree()).member;
}

LinesCertificate certify_lines_product(const FieldPtr &F,
                                       const std::vector<JRep> &reps,
                                       int degree_bound) {
  Poly prod = product_of_lines(F, reps);
  LinesCertificate c;
  c.gk = membership_bounded(prod, build_gk(F, reps), degree_bound);
  if (c.gk.member && c.gk.verified) {
    c.ideal = "g_k";
    return c;
  }
  c.rm = membership_bounded(prod, build_RM(F, reps), degree_bound);
  if (c.rm->member && c.rm->verified)
    c.ideal = "R_M";
  return c;
}

std::string witness_json(const IdealPresentation &I, const MembershipResult &r) {
  nlohmann::ordered_json j;
  j["member"] = r.member;
  j["verified"] = r.verified;
  j["degree_bound"] = r.degree_bound;
  j["variables"] = I.variables;
  j["terms"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < I.generators.size(); ++k) {
    if (k >= r.witness.size() || r.witness[k].is_zero())
      continue;
    j["terms"].push_back({{"generator", I.labels.at(k)},
                          {"polynomial", I.generators[k].to_string(I.variables)},
                          {"coefficient", r.witness[k].to_string(I.variables)}});
  }
  return j.dump(1) + "\n";
}

std::string LocalringReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["p"] = p;
  j["result"] = result;
  if (witness)
    j["witness"] = *witness;
  if (jacobian_rank)
    j["jacobian_rank"] = *jacobian_rank;
  return j.dump(1) + "\n";
}

} // namespace ul
