#include "ul/witt.hpp"

#include "ul/errors.hpp"

#include <sstream>

namespace ul {

namespace {

using IMat = std::vector<std::vector<std::int64_t>>;

std::int64_t norm_mod(std::int64_t a, std::int64_t mod) {
  a %= mod;
  return a < 0 ? a + mod : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t mod) {
  __int128 t = 0, nt = 1, r = mod, nr = norm_mod(a, mod);
  while (nr != 0) {
    __int128 qq = r / nr;
    __int128 tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1)
    throw InvalidArgument("not invertible modulo p^N");
  return norm_mod(static_cast<std::int64_t>(t), mod);
}

std::int64_t mm(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % mod);
}

// Inverse of a matrix over Z/p^N that is invertible modulo p.
IMat invert_mod(IMat a, std::int64_t mod, int p) {
  const int n = static_cast<int>(a.size());
  IMat inv(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw Error("matrix not invertible modulo p");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    std::int64_t u = inv_mod(a[col][col], mod);
    for (int j = 0; j < n; ++j) {
      a[col][j] = mm(a[col][j], u, mod);
      inv[col][j] = mm(inv[col][j], u, mod);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      std::int64_t f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] = norm_mod(a[r][j] - mm(f, a[col][j], mod), mod);
        inv[r][j] = norm_mod(inv[r][j] - mm(f, inv[col][j], mod), mod);
      }
    }
  }
  return inv;
}

// Polynomial product modulo a monic g over Z/mod.
std::vector<std::int64_t> polymulmod(const std::vector<std::int64_t> &a,
                                     const std::vector<std::int64_t> &b,
                                     const std::vector<std::int64_t> &g,
                                     std::int64_t mod) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<std::int64_t> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + mm(a[i], b[j], mod)) % mod;
  for (int k = 2 * d - 2; k >= d; --k) {
    std::int64_t c = prod[k];
    if (!c)
      continue;
    prod[k] = 0;
    for (int j = 0; j < d; ++j)
      prod[k - d + j] = norm_mod(prod[k - d + j] - mm(c, g[j], mod), mod);
  }
  prod.resize(d);
  return prod;
}

std::vector<std::int64_t> polypowmod(std::vector<std::int64_t> a,
                                     std::uint64_t e,
                                     const std::vector<std::int64_t> &g,
                                     std::int64_t mod) {
  const int d = static_cast<int>(g.size()) - 1;
  std::vector<std::int64_t> r(d, 0);
  r[0] = 1;
  while (e) {
    if (e & 1)
      r = polymulmod(r, a, g, mod);
    a = polymulmod(a, a, g, mod);
    e >>= 1;
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

std::shared_ptr<const PrimeContext> make_context(int p, int m, int N) {
  if (p == 2)
    throw InvalidArgument("p must be odd");
  if (!is_prime(p))
    throw InvalidArgument("p must be prime");
  if (m < 1)
    throw InvalidArgument("m must be positive");
  if (N < 1)
    throw InvalidArgument("N must be positive");
  if (2 * m > kMaxDegree)
    throw InvalidArgument("m too large");
  std::uint64_t q = 1;
  for (int i = 0; i < 2 * m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1ULL << 21))
      throw BoundExceeded("residue field too large");
  }
  check_enumeration(q * q * q, "context q^3");
  return std::shared_ptr<const PrimeContext>(new PrimeContext(p, m, N));
}

PrimeContext::PrimeContext(int p, int m, int N)
    : p_(p), m_(m), N_(N), deg_(2 * m), pN_(1), residue_(p, 2 * m) {
  ppow_.push_back(1);
  for (int i = 0; i < N; ++i) {
    if (pN_ > (std::int64_t{1} << 62) / p)
      throw InvalidArgument("p^N exceeds 62 bits");
    pN_ *= p;
    ppow_.push_back(pN_);
  }
  const std::int64_t qm1 = static_cast<std::int64_t>(residue_.size()) - 1;

  // Teichmuller lift of x in (Z/p^N)[x]/(g~) is x^(q^(N-1)).
  std::vector<std::int64_t> g(deg_ + 1);
  for (int i = 0; i <= deg_; ++i)
    g[i] = residue_.modulus()[i];
  std::vector<std::int64_t> z(deg_, 0);
  z[1] = 1;
  for (int i = 0; i + 1 < N_; ++i)
    z = polypowmod(z, residue_.size(), g, pN_);

  IMat pm(deg_, std::vector<std::int64_t>(deg_, 0));
  std::vector<std::int64_t> cur(deg_, 0);
  cur[0] = 1;
  for (int j = 0; j < deg_; ++j) {
    for (int i = 0; i < deg_; ++i)
      pm[i][j] = cur[i];
    cur = polymulmod(cur, z, g, pN_);
  }
  IMat pinv = invert_mod(pm, pN_, p_);
  f_.assign(deg_ + 1, 0);
  for (int i = 0; i < deg_; ++i) {
    std::int64_t c = 0;
    for (int j = 0; j < deg_; ++j)
      c = (c + mm(pinv[i][j], cur[j], pN_)) % pN_;
    f_[i] = norm_mod(-c, pN_);
  }
  f_[deg_] = 1;
  for (int i = 0; i <= deg_; ++i)
    if (norm_mod(f_[i], p_) != g[i])
      throw Error("lifted modulus does not reduce to the residue modulus");

  red_.assign(deg_ - 1, Coeffs{});
  Coeffs top{};
  for (int j = 0; j < deg_; ++j)
    top[j] = norm_mod(-f_[j], pN_);
  for (int k = 0; k + 1 < deg_; ++k) {
    red_[k] = top;
    // multiply top by x
    std::int64_t hi = top[deg_ - 1];
    for (int j = deg_ - 1; j > 0; --j)
      top[j] = top[j - 1];
    top[0] = 0;
    for (int j = 0; j < deg_; ++j)
      top[j] = norm_mod(top[j] - mm(hi, f_[j], pN_), pN_);
  }

  zeta_pow_.assign(qm1, Coeffs{});
  Coeffs xc{};
  xc[1] = 1;
  zeta_pow_[0][0] = 1;
  for (std::int64_t e = 1; e < qm1; ++e)
    zeta_pow_[e] = multiply(zeta_pow_[e - 1], xc);
  Coeffs one{};
  one[0] = 1;
  if (multiply(zeta_pow_[qm1 - 1], xc) != one)
    throw Error("modulus does not divide x^(q-1) - 1");

  frob_.assign(deg_, std::vector<Coeffs>(deg_));
  std::int64_t pk = 1;
  for (int k = 0; k < deg_; ++k) {
    for (int j = 0; j < deg_; ++j)
      frob_[k][j] = zeta_pow_[(j * pk) % qm1];
    pk = (pk * p_) % qm1;
  }

  const std::int64_t s = qm1 / (static_cast<std::int64_t>(p_) * p_ - 1);
  adapt_.assign(deg_, std::vector<std::int64_t>(deg_, 0));
  for (int j = 0; j < m_; ++j)
    for (int kk = 0; kk < 2; ++kk) {
      const Coeffs &b = zeta_pow_[(j + kk * s) % qm1];
      for (int i = 0; i < deg_; ++i)
        adapt_[i][2 * j + kk] = b[i];
    }
  adapt_inv_ = invert_mod(adapt_, pN_, p_);

  skew_e_ = -1;
  for (std::int64_t e = 0; e < qm1 && skew_e_ < 0; ++e) {
    const Coeffs &a = zeta_pow_[e];
    const Coeffs &fa = zeta_pow_[(e * p_) % qm1];
    bool ok = true;
    for (int i = 0; i < deg_ && ok; ++i)
      ok = fa[i] == norm_mod(-a[i], pN_);
    if (ok)
      skew_e_ = e;
  }
  if (skew_e_ < 0)
    throw Error("no skew unit found");
}

Coeffs PrimeContext::multiply(const Coeffs &a, const Coeffs &b) const {
  __int128 prod[2 * kMaxDegree] = {};
  for (int i = 0; i < deg_; ++i) {
    if (!a[i])
      continue;
    for (int j = 0; j < deg_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<__int128>(a[i]) * b[j]) % pN_;
  }
  Coeffs r{};
  for (int i = 0; i < deg_; ++i)
    r[i] = static_cast<std::int64_t>(prod[i]);
  for (int k = deg_; k <= 2 * deg_ - 2; ++k) {
    std::int64_t c = static_cast<std::int64_t>(prod[k]);
    if (!c)
      continue;
    const Coeffs &rr = red_[k - deg_];
    for (int i = 0; i < deg_; ++i)
      r[i] = (r[i] + mulmod(c, rr[i])) % pN_;
  }
  return r;
}

Coeffs PrimeContext::apply_frobenius(const Coeffs &a, int k) const {
  k %= deg_;
  if (k < 0)
    k += deg_;
  if (k == 0)
    return a;
  Coeffs r{};
  for (int j = 0; j < deg_; ++j) {
    if (!a[j])
      continue;
    const Coeffs &b = frob_[k][j];
    for (int i = 0; i < deg_; ++i)
      r[i] = (r[i] + mulmod(a[j], b[i])) % pN_;
  }
  return r;
}

const Coeffs &PrimeContext::zeta_power(std::int64_t e) const {
  const std::int64_t n = static_cast<std::int64_t>(zeta_pow_.size());
  e %= n;
  if (e < 0)
    e += n;
  return zeta_pow_[e];
}

Coeffs PrimeContext::canonical_mod(const Coeffs &a, int v) const {
  if (v >= N_)
    return a;
  if (v <= 0)
    return Coeffs{};
  const std::int64_t pv = ppow_[v];
  std::int64_t y[kMaxDegree];
  for (int i = 0; i < deg_; ++i) {
    __int128 s = 0;
    for (int j = 0; j < deg_; ++j)
      s += static_cast<__int128>(adapt_inv_[i][j]) * a[j] % pN_;
    y[i] = norm_mod(static_cast<std::int64_t>(s % pN_), pN_) % pv;
  }
  Coeffs r{};
  for (int i = 0; i < deg_; ++i) {
    __int128 s = 0;
    for (int j = 0; j < deg_; ++j)
      s += static_cast<__int128>(adapt_[i][j]) * y[j] % pN_;
    r[i] = static_cast<std::int64_t>(s % pN_);
  }
  return r;
}

Witt::Witt(const PrimeContext &ctx, std::int64_t v) : ctx_(&ctx) {
  c_.fill(0);
  c_[0] = norm_mod(v, ctx.modulus_pN());
}

bool Witt::is_zero() const {
  for (int i = 0; i < ctx_->degree(); ++i)
    if (c_[i])
      return false;
  return true;
}

int Witt::valuation() const {
  const int p = ctx_->p();
  int best = ctx_->N();
  for (int i = 0; i < ctx_->degree(); ++i) {
    std::int64_t c = c_[i];
    if (!c)
      continue;
    int v = 0;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    if (v < best)
      best = v;
  }
  return best;
}

Witt Witt::operator+(const Witt &o) const {
  Witt r(*ctx_);
  const std::int64_t mod = ctx_->modulus_pN();
  for (int i = 0; i < ctx_->degree(); ++i) {
    std::int64_t s = c_[i] + o.c_[i];
    r.c_[i] = s >= mod ? s - mod : s;
  }
  return r;
}

Witt Witt::operator-(const Witt &o) const {
  Witt r(*ctx_);
  const std::int64_t mod = ctx_->modulus_pN();
  for (int i = 0; i < ctx_->degree(); ++i) {
    std::int64_t s = c_[i] - o.c_[i];
    r.c_[i] = s < 0 ? s + mod : s;
  }
  return r;
}

Witt Witt::operator-() const {
  Witt r(*ctx_);
  const std::int64_t mod = ctx_->modulus_pN();
  for (int i = 0; i < ctx_->degree(); ++i)
    r.c_[i] = c_[i] ? mod - c_[i] : 0;
  return r;
}

Witt Witt::operator*(const Witt &o) const {
  return Witt(*ctx_, ctx_->multiply(c_, o.c_));
}

bool Witt::operator==(const Witt &o) const {
  for (int i = 0; i < ctx_->degree(); ++i)
    if (c_[i] != o.c_[i])
      return false;
  return true;
}

Witt Witt::inverse() const {
  if (!is_unit())
    throw InvalidArgument("element is not a unit");
  const FiniteField &F = ctx_->residue();
  Witt y = residue_lift(*ctx_, F.inv(reduce()));
  Witt two(*ctx_, 2);
  Witt one(*ctx_, 1);
  for (int it = 0; it < 64; ++it) {
    Witt xy = *this * y;
    if (xy == one)
      return y;
    y = y * (two - xy);
  }
  throw Error("Newton inversion did not converge");
}

Witt Witt::mul_p_pow(int k) const {
  if (k <= 0)
    return k == 0 ? *this : div_p_pow(-k);
  if (k >= ctx_->N())
    return Witt(*ctx_);
  Witt r(*ctx_);
  const std::int64_t pk = ctx_->p_pow(k);
  for (int i = 0; i < ctx_->degree(); ++i)
    r.c_[i] = ctx_->mulmod(c_[i], pk);
  return r;
}

Witt Witt::div_p_pow(int k) const {
  if (k <= 0)
    return mul_p_pow(-k);
  if (k > ctx_->N())
    throw InsufficientPrecision("division by p^k beyond precision");
  const std::int64_t pk = ctx_->p_pow(k);
  Witt r(*ctx_);
  for (int i = 0; i < ctx_->degree(); ++i) {
    if (c_[i] % pk != 0)
      throw InvalidArgument("element not divisible by p^k");
    r.c_[i] = c_[i] / pk;
  }
  return r;
}

Witt Witt::pow(std::int64_t e) const {
  Witt base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e)
                          : static_cast<std::uint64_t>(e);
  Witt r(*ctx_, 1);
  while (n) {
    if (n & 1)
      r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

FiniteField::Elem Witt::reduce() const {
  const int p = ctx_->p();
  std::vector<int> d(ctx_->degree());
  for (int i = 0; i < ctx_->degree(); ++i)
    d[i] = static_cast<int>(c_[i] % p);
  return ctx_->residue().from_digits(d);
}

Witt Witt::canonical_mod(int v) const {
  return Witt(*ctx_, ctx_->canonical_mod(c_, v));
}

bool Witt::equal_mod(const Witt &o, int v) const {
  return (*this - o).valuation() >= v;
}

std::string Witt::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < ctx_->degree(); ++i)
    os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

Witt frobenius(const Witt &a, int k) {
  return Witt(a.context(), a.context().apply_frobenius(a.coeffs(), k));
}

Witt teichmuller(const PrimeContext &ctx, FiniteField::Elem a) {
  if (a == 0)
    return Witt(ctx);
  return Witt(ctx, ctx.zeta_power(ctx.residue().log(a)));
}

Witt residue_lift(const PrimeContext &ctx, FiniteField::Elem a) {
  Coeffs c{};
  for (int i = 0; i < ctx.degree(); ++i)
    c[i] = ctx.residue().digit(a, i);
  return Witt(ctx, c);
}

Witt skew_unit(const PrimeContext &ctx) {
  return Witt(ctx, ctx.zeta_power(ctx.skew_exponent()));
}

Witt zeta(const PrimeContext &ctx) { return Witt(ctx, ctx.zeta_power(1)); }

bool in_subring(const Witt &a, int d) { return frobenius(a, 2 * d) == a; }

} // namespace ul
