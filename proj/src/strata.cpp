#include "ul/strata.hpp"

#include "ul/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace ul {

using Elem = FiniteField::Elem;

std::vector<int> rref(const FiniteField &F, FRows &rows) {
  std::vector<int> pivots;
  if (rows.empty())
    return pivots;
  const int n = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    Elem inv = F.inv(rows[r][c]);
    for (auto &x : rows[r])
      x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      Elem f = rows[i][c];
      for (int j = c; j < n; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

FRows null_space(const FiniteField &F, const FRows &rows, int ncols) {
  FRows a = rows;
  std::vector<int> piv = rref(F, a);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv)
    is_piv[c] = true;
  FRows out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f])
      continue;
    FVec x(ncols, 0);
    x[f] = F.one();
    for (std::size_t r = 0; r < piv.size(); ++r)
      x[piv[r]] = F.neg(a[r][f]);
    out.push_back(std::move(x));
  }
  rref(F, out);
  return out;
}

FiniteHermSpace::FiniteHermSpace(int p, int l, int m, FormKind kind)
    : l_(l), m_(m), kind_(kind) {
  if (l < 1 || l % 2 == 0)
    throw InvalidArgument("l must be odd and positive");
  if (m < 1)
    throw InvalidArgument("m must be positive");
  if (p == 2)
    throw InvalidArgument("p must be odd");
  F_ = std::make_shared<const FiniteField>(p, 2 * m);
  // zeta generates F_{p^2}^*; tbar^(p-1) = -1.
  std::int64_t sub = (static_cast<std::int64_t>(F_->size()) - 1) /
                     (static_cast<std::int64_t>(p) * p - 1);
  tbar_ = F_->gen_pow(sub * ((p + 1) / 2));
  form_.assign(l, FVec(l, 0));
  for (int i = 0; i < l; ++i) {
    if (kind == FormKind::AntiDiagonal)
      form_[i][l - 1 - i] = tbar_;
    else
      form_[i][i] = tbar_;
  }
}

Elem FiniteHermSpace::pair(const FVec &x, const FVec &y) const {
  const FiniteField &F = *F_;
  Elem s = 0;
  for (int i = 0; i < l_; ++i) {
    if (x[i] == 0)
      continue;
    for (int j = 0; j < l_; ++j)
      if (form_[i][j] != 0 && y[j] != 0)
        s = F.add(s, F.mul(F.mul(x[i], form_[i][j]), F.frobenius(y[j], 1)));
  }
  return s;
}

HermSubspace::HermSubspace(const FiniteHermSpace &space, FRows rows)
    : space_(&space), basis_(std::move(rows)) {
  for (const auto &r : basis_)
    if (static_cast<int>(r.size()) != space.l())
      throw InvalidArgument("row length differs from l");
  rref(space.field(), basis_);
}

bool HermSubspace::contains(const HermSubspace &o) const {
  FRows all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return static_cast<int>(rref(space_->field(), all).size()) == dim();
}

std::string HermSubspace::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? "; " : "") << "(";
    for (std::size_t j = 0; j < basis_[i].size(); ++j)
      os << (j ? "," : "") << space_->field().to_string(basis_[i][j]);
    os << ")";
  }
  os << "]";
  return os.str();
}

HermSubspace perp(const HermSubspace &U) {
  const FiniteHermSpace &S = U.space();
  const FiniteField &F = S.field();
  const int l = S.l();
  FRows eqs;
  for (const auto &u : U.basis()) {
    FVec c(l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (S.form()[i][j] != 0)
          c[i] = F.add(c[i], F.mul(S.form()[i][j], F.frobenius(u[j], 1)));
    eqs.push_back(std::move(c));
  }
  return HermSubspace(S, null_space(F, eqs, l));
}

HermSubspace tau(const HermSubspace &U) {
  FRows rows = U.basis();
  for (auto &r : rows)
    for (auto &x : r)
      x = U.space().field().frobenius(x, 2);
  return HermSubspace(U.space(), std::move(rows));
}

HermSubspace subspace_sum(const HermSubspace &a, const HermSubspace &b) {
  FRows rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return HermSubspace(a.space(), std::move(rows));
}

bool is_tau_stable(const HermSubspace &U) { return tau(U) == U; }

std::uint64_t subspace_count(std::uint64_t q, int l, int k) {
  if (k < 0 || k > l)
    return 0;
  // [l choose k]_q as a ratio of products, kept exact in 128 bits.
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (int j = 0; j < l - i; ++j)
      a *= q;
    for (int j = 0; j < i + 1; ++j)
      b *= q;
    num *= a - 1;
    den *= b - 1;
    unsigned __int128 g = num, h = den;
    while (h) {
      unsigned __int128 t = g % h;
      g = h;
      h = t;
    }
    num /= g;
    den /= g;
    if (num > static_cast<unsigned __int128>(UINT64_MAX) * den)
      return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(num / den);
}

void for_each_subspace(const FiniteHermSpace &space, int k,
                       const std::function<void(const HermSubspace &)> &f,
                       bool base_field_only) {
  const int l = space.l();
  if (k < 0 || k > l)
    return;
  const FiniteField &F = space.field();
  std::vector<Elem> vals = base_field_only ? F.subfield(2) : F.elements();
  const std::uint64_t q = vals.size();
  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i)
    piv[i] = i;
  while (true) {
    std::vector<bool> is_piv(l, false);
    for (int c : piv)
      is_piv[c] = true;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < l; ++c)
        if (!is_piv[c])
          cells.push_back({r, c});
    FRows rows(k, FVec(l, 0));
    for (int r = 0; r < k; ++r)
      rows[r][piv[r]] = F.one();
    std::vector<std::uint64_t> digit(cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        rows[cells[i].first][cells[i].second] = vals[digit[i]];
      f(HermSubspace(space, rows));
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == q)
        digit[i++] = 0;
      if (i == digit.size())
        break;
    }
    int j = k - 1;
    while (j >= 0 && piv[j] == l - k + j)
      --j;
    if (j < 0)
      break;
    ++piv[j];
    for (int i = j + 1; i < k; ++i)
      piv[i] = piv[i - 1] + 1;
  }
}

std::vector<HermSubspace> enumerate_Y(const FiniteHermSpace &space) {
  const int k = (space.l() + 1) / 2;
  check_enumeration(subspace_count(space.field().size(), space.l(), k),
                    "enumerate_Y");
  std::vector<HermSubspace> out;
  for_each_subspace(space, k, [&](const HermSubspace &U) {
    if (U.contains(perp(U)))
      out.push_back(U);
  });
  return out;
}

int stratify(const HermSubspace &U) {
  HermSubspace S = U, T = U;
  for (int i = 0;; ++i) {
    if (is_tau_stable(S))
      return i;
    T = tau(T);
    S = subspace_sum(S, T);
  }
}

std::vector<StratumRow> stratum_table(const FiniteHermSpace &space) {
  const int d = (space.l() - 1) / 2;
  const int top = std::min(d, space.m() - 1);
  std::vector<StratumRow> rows;
  for (int i = 0; i <= top; ++i)
    rows.push_back({space.p(), space.l(), space.m(), i, 0});
  for (const auto &U : enumerate_Y(space)) {
    int i = stratify(U);
    rows.at(i).count++;
  }
  return rows;
}

std::string strata_csv(const std::vector<StratumRow> &rows) {
  std::ostringstream os;
  os << "p,l,m,depth,count\n";
  for (const auto &r : rows)
    os << r.p << "," << r.l << "," << r.m << "," << r.depth << "," << r.count
       << "\n";
  return os.str();
}

std::string strata_json(const std::vector<StratumRow> &rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto &r : rows)
    j.push_back({{"p", r.p},
                 {"l", r.l},
                 {"m", r.m},
                 {"depth", r.depth},
                 {"count", r.count}});
  return j.dump(1) + "\n";
}

namespace {

std::vector<Elem> power_table(const FiniteField &F, std::int64_t e) {
  std::vector<Elem> t(F.size());
  for (Elem a = 0; a < F.size(); ++a)
    t[a] = F.pow(a, e);
  return t;
}

} // namespace

std::uint64_t fermat_count(int p, int m) {
  if (m < 1)
    throw InvalidArgument("m must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < 2 * m; ++i)
    q *= static_cast<std::uint64_t>(p);
  check_enumeration(q * q + q + 1, "fermat_count");
  FiniteField F(p, 2 * m);
  auto pw = power_table(F, p + 1);
  std::uint64_t n = 0;
  // [1 : y : z]
  for (Elem y = 0; y < F.size(); ++y) {
    Elem s = F.add(F.one(), pw[y]);
    for (Elem z = 0; z < F.size(); ++z)
      n += F.add(s, pw[z]) == 0;
  }
  // [0 : 1 : z]
  for (Elem z = 0; z < F.size(); ++z)
    n += F.add(F.one(), pw[z]) == 0;
  return n;
}

std::uint64_t chart_curve_affine_count(const FiniteField &F, Elem lambda) {
  if (lambda == 0)
    throw InvalidArgument("lambda must be nonzero");
  const std::uint64_t q = F.size();
  check_enumeration(q * q, "chart_curve_count");
  const int p = F.p();
  Elem lp = F.frobenius(lambda, 1);
  Elem c = F.pow(lambda, p + 1);
  auto bp = power_table(F, p + 1);
  // a^p l^p + a l as a function of a, bucketed.
  std::vector<std::uint64_t> hits(q, 0);
  for (Elem a = 0; a < q; ++a)
    hits[F.add(F.mul(F.frobenius(a, 1), lp), F.mul(a, lambda))]++;
  std::uint64_t n = 0;
  for (Elem b = 0; b < q; ++b)
    n += hits[F.mul(bp[b], c)];
  return n;
}

std::uint64_t chart_curve_count(const FiniteField &F, Elem lambda) {
  // d = 0 forces b = 0, leaving [1 : 0 : 0].
  return chart_curve_affine_count(F, lambda) + 1;
}

std::vector<HermSubspace> isotropic_lines(const FiniteHermSpace &space) {
  check_enumeration(subspace_count(space.field().size(), space.l(), 1),
                    "isotropic_lines");
  std::vector<HermSubspace> out;
  for_each_subspace(space, 1, [&](const HermSubspace &U) {
    if (space.pair(U.basis()[0], U.basis()[0]) == 0)
      out.push_back(U);
  });
  return out;
}

std::vector<HermSubspace> sub_vertex_correspondence(const FiniteHermSpace &space,
                                                    int l1) {
  const int l = space.l();
  if (l1 < 1 || l1 > l || l1 % 2 == 0)
    throw InvalidArgument("l1 must be odd with 1 <= l1 <= l");
  const int k = (l + l1) / 2;
  std::uint64_t q = static_cast<std::uint64_t>(space.p()) * space.p();
  check_enumeration(subspace_count(q, l, k), "sub_vertex_correspondence");
  std::vector<HermSubspace> out;
  for_each_subspace(
      space, k,
      [&](const HermSubspace &U) {
        if (U.contains(perp(U)))
          out.push_back(U);
      },
      true);
  return out;
}

} // namespace ul
