#include "ul/hermlattice.hpp"

#include "ul/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ul {

namespace {

Witt p_power(const PrimeContext &ctx, int v) {
  return Witt(ctx, 1).mul_p_pow(v);
}

} // namespace

SnfResult snf(const WMatrix &a);

namespace {

// Canonical lower-triangular Hermite form of the column span of `gens`.
WMatrix hnf_core(WMatrix M, int prec) {
  const int n = M.rows();
  const int k = M.cols();
  if (k < n)
    throw InsufficientPrecision("fewer generators than the dimension");
  const PrimeContext &ctx = M(0, 0).context();
  std::vector<int> v(n, 0);
  for (int i = 0; i < n; ++i) {
    int best = -1, bv = ctx.N() + 1;
    for (int c = i; c < k; ++c) {
      int val = M(i, c).valuation();
      if (val < bv) {
        bv = val;
        best = c;
      }
    }
    if (bv >= prec)
      throw InsufficientPrecision("lattice is not of full rank at precision " +
                                  std::to_string(prec));
    M.swap_cols(i, best);
    v[i] = bv;
    Witt uinv = M(i, i).div_p_pow(bv).inverse();
    for (int r = i; r < n; ++r)
      M(r, i) = M(r, i) * uinv;
    M(i, i) = p_power(ctx, bv);
    for (int c = i + 1; c < k; ++c) {
      if (M(i, c).is_zero())
        continue;
      Witt f = M(i, c).div_p_pow(bv);
      for (int r = i + 1; r < n; ++r)
        M(r, c) -= f * M(r, i);
      M(i, c) = Witt(ctx);
    }
  }
  int total = 0;
  for (int x : v)
    total += x;
  WMatrix H = zero_matrix(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      H(i, j) = M(i, j);
  if (total >= prec) {
    // The lattice is determined modulo p^prec only if it contains p^prec W^n.
    SnfResult s = snf(H);
    if (s.exponents.back() >= prec)
      throw InsufficientPrecision("lattice index exceeds working precision");
  }
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Witt x = H(i, j);
      Witt r = x.canonical_mod(v[i]);
      if (x != r) {
        Witt c = (x - r).div_p_pow(v[i]);
        for (int rr = i + 1; rr < n; ++rr)
          H(rr, j) -= c * H(rr, i);
      }
      H(i, j) = r;
    }
  return H;
}

void append_hex(std::string &out, std::uint64_t v, int width) {
  static const char *digits = "0123456789abcdef";
  for (int s = width - 1; s >= 0; --s)
    out.push_back(digits[(v >> (4 * s)) & 0xF]);
}

} // namespace

SnfResult snf(const WMatrix &a) {
  const PrimeContext &ctx = a(0, 0).context();
  const int R = a.rows(), C = a.cols();
  WMatrix A = a;
  WMatrix U = identity_matrix(ctx, R);
  WMatrix V = identity_matrix(ctx, C);
  SnfResult res;
  for (int k = 0; k < std::min(R, C); ++k) {
    int bi = -1, bj = -1, bv = ctx.N();
    for (int i = k; i < R; ++i)
      for (int j = k; j < C; ++j) {
        int val = A(i, j).valuation();
        if (val < bv) {
          bv = val;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0)
      throw InsufficientPrecision("SNF pivot vanishes modulo p^N");
    A.swap_rows(k, bi);
    U.swap_rows(k, bi);
    A.swap_cols(k, bj);
    V.swap_cols(k, bj);
    Witt uinv = A(k, k).div_p_pow(bv).inverse();
    for (int j = 0; j < C; ++j)
      A(k, j) = A(k, j) * uinv;
    for (int j = 0; j < R; ++j)
      U(k, j) = U(k, j) * uinv;
    A(k, k) = p_power(ctx, bv);
    for (int i = k + 1; i < R; ++i) {
      if (A(i, k).is_zero())
        continue;
      Witt f = A(i, k).div_p_pow(bv);
      for (int j = k; j < C; ++j)
        A(i, j) -= f * A(k, j);
      for (int j = 0; j < R; ++j)
        U(i, j) -= f * U(k, j);
      A(i, k) = Witt(ctx);
    }
    for (int j = k + 1; j < C; ++j) {
      if (A(k, j).is_zero())
        continue;
      Witt f = A(k, j).div_p_pow(bv);
      for (int i = 0; i < C; ++i)
        V(i, j) -= f * V(i, k);
      A(k, j) = Witt(ctx);
    }
    res.exponents.push_back(bv);
  }
  res.left = std::move(U);
  res.right = std::move(V);
  return res;
}

FracMatrix inverse(const WMatrix &a) {
  if (a.rows() != a.cols())
    throw InvalidArgument("inverse of a non-square matrix");
  SnfResult s = snf(a);
  const PrimeContext &ctx = a(0, 0).context();
  const int n = a.rows();
  int amax = s.exponents.empty() ? 0 : s.exponents.back();
  WMatrix D = zero_matrix(ctx, n, n);
  for (int i = 0; i < n; ++i)
    D(i, i) = p_power(ctx, amax - s.exponents[i]);
  return {s.right * D * s.left, amax};
}

int det_valuation(const WMatrix &a) {
  int t = 0;
  for (int e : snf(a).exponents)
    t += e;
  return t;
}

FormClass classify_form(const WMatrix &gram) {
  return det_valuation(gram) % 2 == 0 ? FormClass::SelfDual
                                      : FormClass::NonSelfDual;
}

std::string to_string(FormClass c) {
  return c == FormClass::SelfDual ? "SelfDual" : "NonSelfDual";
}

HermitianSpace::HermitianSpace(std::shared_ptr<const PrimeContext> ctx,
                               WMatrix gram)
    : ctx_(std::move(ctx)), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() < 1)
    throw InvalidArgument("gram matrix must be square");
  WMatrix adj = transpose(frobenius(gram_, 1));
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (gram_(i, j) != -adj(i, j))
        throw InvalidArgument("gram matrix is not skew-hermitian");
  class_ = classify_form(gram_);
}

WMatrix HermitianSpace::gram_of(const WMatrix &basis) const {
  return transpose(basis) * gram_ * frobenius(basis, 1);
}

std::string LatticeKey::hex() const {
  std::string out;
  append_hex(out, static_cast<std::uint32_t>(denom), 8);
  for (std::int64_t e : entries)
    append_hex(out, static_cast<std::uint64_t>(e), 16);
  return out;
}

std::uint64_t LatticeKey::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint32_t>(denom));
  for (std::int64_t e : entries)
    mix(static_cast<std::uint64_t>(e));
  return h;
}

HermitianLattice HermitianLattice::from_generators(SpacePtr space,
                                                   const WMatrix &gens,
                                                   int denom, int prec) {
  if (gens.rows() != space->dim())
    throw InvalidArgument("generator dimension mismatch");
  int k0 = min_valuation(gens);
  if (k0 >= prec)
    throw InsufficientPrecision("lattice generators vanish at precision");
  WMatrix g = gens;
  if (k0 > 0)
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j)
        g(i, j) = g(i, j).div_p_pow(k0);
  WMatrix H = hnf_core(std::move(g), prec - k0);
  return HermitianLattice(std::move(space), std::move(H), denom - k0);
}

HermitianLattice HermitianLattice::from_generators(SpacePtr space,
                                                   const WMatrix &gens,
                                                   int denom) {
  int N = space->context().N();
  return from_generators(std::move(space), gens, denom, N);
}

HermitianLattice HermitianLattice::standard(SpacePtr space) {
  WMatrix I = identity_matrix(space->context(), space->dim());
  return HermitianLattice(std::move(space), std::move(I), 0);
}

std::vector<int> HermitianLattice::diagonal_exponents() const {
  std::vector<int> v(dim());
  for (int i = 0; i < dim(); ++i)
    v[i] = hnf_(i, i).valuation();
  return v;
}

int HermitianLattice::log_volume() const {
  int t = 0;
  for (int x : diagonal_exponents())
    t += x;
  return t - dim() * denom_;
}

WMatrix HermitianLattice::basis_with_denom(int d) const {
  if (d < denom_)
    throw InvalidArgument("denominator below lattice denominator");
  return mul_p_pow(hnf_, d - denom_);
}

LatticeKey HermitianLattice::key() const {
  LatticeKey k;
  k.denom = denom_;
  const int deg = context().degree();
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j <= i; ++j)
      for (int c = 0; c < deg; ++c)
        k.entries.push_back(hnf_(i, j).coeff(c));
  return k;
}

HermitianLattice HermitianLattice::scaled(int k) const {
  return HermitianLattice(space_, hnf_, denom_ - k);
}

namespace {

// Columns spanning p^(e) * span(X^{-T}) with X square; returns (gens, denom
// shift, precision).
struct DualGens {
  WMatrix gens;
  int amax;
  int prec;
};

DualGens inverse_transpose_span(const WMatrix &X) {
  const PrimeContext &ctx = X(0, 0).context();
  SnfResult s = snf(X);
  const int n = X.rows();
  int amax = s.exponents.back();
  WMatrix g = transpose(s.left);
  for (int j = 0; j < n; ++j) {
    int sh = amax - s.exponents[j];
    for (int i = 0; i < n; ++i)
      g(i, j) = g(i, j).mul_p_pow(sh);
  }
  return {g, amax, ctx.N() - amax};
}

} // namespace

Lattice dual(const Lattice &L) {
  const HermitianSpace &S = L.space();
  WMatrix X = S.gram() * frobenius(L.hnf(), 1);
  DualGens d = inverse_transpose_span(X);
  return Lattice::from_generators(L.space_ptr(), d.gens, d.amax - L.denom(),
                                  d.prec);
}

Lattice euclidean_dual(const Lattice &L) {
  DualGens d = inverse_transpose_span(L.hnf());
  return Lattice::from_generators(L.space_ptr(), d.gens, d.amax - L.denom(),
                                  d.prec);
}

Lattice tau(const Lattice &L) {
  if (L.context().m() == 1)
    return L;
  return Lattice::from_generators(L.space_ptr(), frobenius(L.hnf(), 2),
                                  L.denom());
}

Lattice lattice_sum(const Lattice &a, const Lattice &b) {
  int E = std::max(a.denom(), b.denom());
  WMatrix g = hconcat(a.basis_with_denom(E), b.basis_with_denom(E));
  return Lattice::from_generators(a.space_ptr(), g, E);
}

Lattice lattice_intersect(const Lattice &a, const Lattice &b) {
  return euclidean_dual(lattice_sum(euclidean_dual(a), euclidean_dual(b)));
}

int index(const Lattice &sub, const Lattice &sup) {
  return sub.log_volume() - sup.log_volume();
}

bool contains(const Lattice &big, const Lattice &small) {
  return lattice_sum(big, small) == big;
}

bool is_tau_invariant(const Lattice &L) { return tau(L) == L; }

Lattice semilinear_image(const WMatrix &A, int k, const Lattice &L,
                         SpacePtr target) {
  return Lattice::from_generators(std::move(target),
                                  A * frobenius(L.hnf(), k), L.denom());
}

bool ChainReport::satisfied() const {
  if (!tau_invariant)
    return false;
  for (const auto &l : links)
    if (!l.ok())
      return false;
  return true;
}

std::string ChainReport::describe() const {
  std::ostringstream os;
  for (const auto &l : links)
    os << l.sub << " <=^" << l.expected << " " << l.sup << ": "
       << (l.included ? "included" : "not included") << ", index "
       << l.actual << (l.ok() ? "" : " FAIL") << "\n";
  if (!tau_invariant)
    os << "not tau-invariant\n";
  return os.str();
}

namespace {

ChainLink make_link(const std::string &sub_name, const Lattice &sub,
                    const std::string &sup_name, const Lattice &sup,
                    int expected) {
  ChainLink l;
  l.sub = sub_name;
  l.sup = sup_name;
  l.expected = expected;
  l.included = contains(sup, sub);
  l.actual = index(sub, sup);
  return l;
}

std::string pname(const std::string &base, int k) {
  if (k == 0)
    return base;
  return "p^" + std::to_string(k) + " " + base;
}

} // namespace

ChainReport check_D_i(const Lattice &A, int i) {
  const int n = A.dim();
  ChainReport rep;
  auto add_chain = [&](const Lattice &X, const std::string &name) {
    Lattice D = dual(X);
    rep.links.push_back(make_link(pname(name + "^v", i + 1), D.scaled(i + 1),
                                  name, X, 1));
    rep.links.push_back(
        make_link(name, X, pname(name + "^v", i), D.scaled(i), n - 1));
  };
  add_chain(A, "A");
  add_chain(tau(A), "tau(A)");
  return rep;
}

int vertex_type(const Lattice &L, int i) {
  const int n = L.dim();
  if (!is_tau_invariant(L))
    throw NotAVertex("lattice is not tau-invariant");
  Lattice D = dual(L);
  Lattice low = D.scaled(i + 1);
  Lattice high = D.scaled(i);
  if (!contains(L, low) || !contains(high, L))
    throw NotAVertex("vertex chain fails");
  int l = index(low, L);
  if (l < 1 || l > n || l % 2 == 0)
    throw NotAVertex("vertex type " + std::to_string(l) + " is not odd in [1, n]");
  return l;
}

bool is_vertex(const Lattice &L, int i) {
  try {
    vertex_type(L, i);
    return true;
  } catch (const NotAVertex &) {
    return false;
  }
}

TauStabilization tau_stabilize(const Lattice &A, int i, int s) {
  const int n = A.dim();
  ChainReport pre = check_D_i(A, i);
  if (!pre.satisfied())
    throw ChainViolation("input lattice is not in D_i:\n" + pre.describe());
  Lattice T = A;
  int d = 0;
  while (!is_tau_invariant(T)) {
    T = lattice_sum(T, tau(T));
    if (++d > n)
      throw ChainViolation("tau stabilization does not terminate");
  }
  if (2 * d > s)
    throw ChainViolation("tau stabilization exceeded s/2");
  TauStabilization out{d, T, 0, {}};
  Lattice DA = dual(A);
  Lattice DL = dual(T);
  auto &links = out.chain.links;
  links.push_back(make_link(pname("L^v", i + 1), DL.scaled(i + 1),
                            pname("A^v", i + 1), DA.scaled(i + 1), d));
  links.push_back(make_link(pname("A^v", i + 1), DA.scaled(i + 1), "A", A, 1));
  links.push_back(make_link("A", A, "L", T, d));
  links.push_back(
      make_link("L", T, pname("L^v", i), DL.scaled(i), n - 2 * d - 1));
  links.push_back(
      make_link(pname("L^v", i), DL.scaled(i), pname("A^v", i), DA.scaled(i), d));
  out.type = index(DL.scaled(i + 1), T);
  return out;
}

namespace {

// a with a * sigma(a) = c for a unit c of Z_p.
Witt norm_preimage(const PrimeContext &ctx, const Witt &c) {
  const FiniteField &F = ctx.residue();
  const int p = ctx.p();
  Witt half0 = Witt(ctx, 2).inverse();
  const Witt target = (c + frobenius(c, 1)) * half0;
  FiniteField::Elem cb = target.reduce();
  FiniteField::Elem abar = 0;
  for (FiniteField::Elem x : F.subfield(2))
    if (x != 0 && F.pow(x, p + 1) == cb) {
      abar = x;
      break;
    }
  if (abar == 0)
    throw Error("norm equation has no residual solution");
  Witt a = teichmuller(ctx, abar);
  Witt one(ctx, 1);
  Witt half = Witt(ctx, 2).inverse();
  for (int it = 0; it < 64; ++it) {
    Witt nrm = a * frobenius(a, 1);
    if (nrm == target)
      return a;
    Witt eps = (target * nrm.inverse() - one) * half;
    a = a * (one + eps);
  }
  throw Error("norm equation did not converge");
}

} // namespace

FracMatrix gram_schmidt_normalize(const Lattice &M, int r, int s) {
  const PrimeContext &ctx = M.context();
  const int n = M.dim();
  if (r < 0 || s < 0 || r + s != n)
    throw ChainViolation("r + s must equal the dimension");
  Lattice D = dual(M);
  Lattice pD = D.scaled(1);
  if (!contains(M, pD) || index(pD, M) != r || !contains(D, M) ||
      index(M, D) != s)
    throw ChainViolation("p M^v <=^r M <=^s M^v fails");
  if (!is_tau_invariant(M))
    throw ChainViolation("lattice is not tau-invariant");
  const WMatrix &H = M.hnf();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!in_subring(H(i, j), 1))
        throw Error("Hermite basis of a tau-invariant lattice left W(F_p^2)");

  const int e = M.denom();
  WMatrix gram0 = M.space().gram_of(H);
  if (e > 0) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram0(i, j) = gram0(i, j).div_p_pow(2 * e);
  } else if (e < 0) {
    gram0 = mul_p_pow(gram0, -2 * e);
  }
  Witt t = skew_unit(ctx);
  Witt tinv = t.inverse();
  WMatrix P = identity_matrix(ctx, n);
  Witt w = teichmuller(ctx, ctx.residue().subfield(2).at(2));
  auto herm = [&]() {
    return scale(transpose(P) * gram0 * frobenius(P, 1), tinv);
  };

  int k = 0;
  int counts[2] = {0, 0};
  for (int level = 0; level < 2; ++level) {
    while (k < n) {
      WMatrix h = herm();
      int piv = -1;
      for (int i = k; i < n && piv < 0; ++i)
        if (h(i, i).valuation() == level)
          piv = i;
      for (int i = k; i < n && piv < 0; ++i)
        for (int j = i + 1; j < n && piv < 0; ++j) {
          if (h(i, j).valuation() != level)
            continue;
          for (const Witt &alpha : {Witt(ctx, 1), w}) {
            Witt val = h(i, i) + frobenius(alpha, 1) * h(i, j) +
                       alpha * h(j, i) + alpha * frobenius(alpha, 1) * h(j, j);
            if (val.valuation() == level) {
              for (int rr = 0; rr < n; ++rr)
                P(rr, i) += alpha * P(rr, j);
              piv = i;
              break;
            }
          }
        }
      if (piv < 0)
        break;
      P.swap_cols(k, piv);
      h = herm();
      Witt u = h(k, k).div_p_pow(level);
      Witt a = norm_preimage(ctx, u.inverse());
      for (int rr = 0; rr < n; ++rr)
        P(rr, k) = P(rr, k) * a;
      h = herm();
      for (int j = k + 1; j < n; ++j) {
        Witt c = h(j, k).div_p_pow(level);
        for (int rr = 0; rr < n; ++rr)
          P(rr, j) -= c * P(rr, k);
      }
      ++counts[level];
      ++k;
    }
  }
  if (k != n || counts[0] != r || counts[1] != s)
    throw ChainViolation("form does not normalize to diag(I_r, p I_s)");

  WMatrix basis = H * P;
  WMatrix target = zero_matrix(ctx, n, n);
  for (int i = 0; i < n; ++i)
    target(i, i) = i < r ? t : t.mul_p_pow(1);
  WMatrix got = transpose(P) * gram0 * frobenius(P, 1);
  int guard = std::max(0, 2 * e) + 2;
  if (!equal_mod(got, target, ctx.N() - guard))
    throw Error("Gram-Schmidt result failed verification");
  return {basis, e};
}

Lattice shift_psi(const Lattice &A, int i) {
  if (i % 2 != 0)
    throw OddShiftUnsupported("shift by p^(-i/2) needs even i");
  return A.scaled(-i / 2);
}

} // namespace ul
