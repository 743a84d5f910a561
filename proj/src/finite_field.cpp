#include "ul/finite_field.hpp"

#include "ul/errors.hpp"

#include <sstream>

namespace ul {

namespace {

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// Multiply the digit vector `v` by x modulo the monic polynomial g.
void times_x(std::vector<int> &v, const std::vector<int> &g, int p) {
  const int k = static_cast<int>(v.size());
  int top = v[k - 1];
  for (int i = k - 1; i > 0; --i)
    v[i] = v[i - 1];
  v[0] = 0;
  if (top)
    for (int i = 0; i < k; ++i)
      v[i] = ((v[i] - top * g[i]) % p + p) % p;
}

} // namespace

FiniteField::FiniteField(int p, int degree) : p_(p), k_(degree) {
  if (!is_prime(p))
    throw InvalidArgument("p must be prime");
  if (degree < 1)
    throw InvalidArgument("field degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < degree; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1ULL << 24))
      throw BoundExceeded("finite field too large");
  }
  q_ = static_cast<std::uint32_t>(q);
  pp_.resize(k_ + 1);
  pp_[0] = 1;
  for (int i = 1; i <= k_; ++i)
    pp_[i] = pp_[i - 1] * p_;

  // Lexicographic search for a primitive polynomial.
  std::vector<int> g(k_ + 1, 0);
  g[k_] = 1;
  bool found = false;
  for (std::uint32_t code = 1; code < q_ && !found; ++code) {
    for (int i = 0; i < k_; ++i)
      g[i] = static_cast<int>((code / pp_[i]) % p_);
    if (g[0] == 0)
      continue;
    std::vector<int> cur(k_, 0);
    cur[0] = 1;
    std::uint32_t order = 0;
    for (std::uint32_t j = 1; j < q_; ++j) {
      times_x(cur, g, p_);
      bool is_one = cur[0] == 1;
      for (int i = 1; i < k_ && is_one; ++i)
        is_one = cur[i] == 0;
      if (is_one) {
        order = j;
        break;
      }
    }
    found = order == q_ - 1;
  }
  if (!found)
    throw Error("no primitive polynomial found");
  modulus_ = g;

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  std::vector<int> cur(k_, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e + 1 < q_; ++e) {
    Elem code = from_digits(cur);
    exp_[e] = code;
    log_[code] = e;
    times_x(cur, g, p_);
  }

  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem r = 0;
    for (int i = 0; i < k_; ++i)
      r += static_cast<Elem>((p_ - digit(a, i)) % p_) * pp_[i];
    neg_[a] = r;
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) {
        Elem r = 0;
        for (int i = 0; i < k_; ++i)
          r += static_cast<Elem>((digit(a, i) + digit(b, i)) % p_) * pp_[i];
        add_table_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(r);
      }
  }
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  return static_cast<Elem>(((v % p_) + p_) % p_);
}

FiniteField::Elem FiniteField::from_digits(const std::vector<int> &d) const {
  Elem r = 0;
  for (int i = 0; i < k_ && i < static_cast<int>(d.size()); ++i)
    r += static_cast<Elem>(((d[i] % p_) + p_) % p_) * pp_[i];
  return r;
}

int FiniteField::digit(Elem a, int i) const {
  return static_cast<int>((a / pp_[i]) % p_);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Elem r = 0;
  for (int i = 0; i < k_; ++i)
    r += static_cast<Elem>((digit(a, i) + digit(b, i)) % p_) * pp_[i];
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  return add(a, neg_[b]);
}

FiniteField::Elem FiniteField::neg(Elem a) const { return neg_[a]; }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0)
    return 0;
  std::int64_t e = log_[a] + log_[b];
  if (e >= q_ - 1)
    e -= q_ - 1;
  return exp_[e];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0)
    throw InvalidArgument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0)
      throw InvalidArgument("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  std::int64_t r = static_cast<std::int64_t>(
      (static_cast<__int128>(log_[a]) * (e % n)) % n);
  if (r < 0)
    r += n;
  return exp_[r];
}

FiniteField::Elem FiniteField::frobenius(Elem a, int k) const {
  k %= k_;
  if (k < 0)
    k += k_;
  std::int64_t e = 1;
  for (int i = 0; i < k; ++i)
    e *= p_;
  return pow(a, e);
}

FiniteField::Elem FiniteField::gen_pow(std::int64_t e) const {
  const std::int64_t n = q_ - 1;
  e %= n;
  if (e < 0)
    e += n;
  return exp_[e];
}

std::int64_t FiniteField::log(Elem a) const {
  if (a == 0)
    throw InvalidArgument("log of zero");
  return log_[a];
}

bool FiniteField::in_subfield(Elem a, int sub_degree) const {
  if (k_ % sub_degree != 0)
    throw InvalidArgument("not a subfield degree");
  return frobenius(a, sub_degree) == a;
}

std::vector<FiniteField::Elem> FiniteField::subfield(int sub_degree) const {
  if (sub_degree < 1 || k_ % sub_degree != 0)
    throw InvalidArgument("not a subfield degree");
  std::uint64_t qs = 1;
  for (int i = 0; i < sub_degree; ++i)
    qs *= p_;
  const std::int64_t step = (q_ - 1) / static_cast<std::int64_t>(qs - 1);
  std::vector<Elem> out;
  out.reserve(qs);
  out.push_back(0);
  for (std::uint64_t j = 0; j + 1 < qs; ++j)
    out.push_back(exp_[static_cast<std::int64_t>(j) * step]);
  return out;
}

std::string FiniteField::to_string(Elem a) const {
  if (a < static_cast<Elem>(p_))
    return std::to_string(a);
  std::ostringstream os;
  os << "w^" << log_[a];
  return os.str();
}

} // namespace ul
