#include "ul/matrix.hpp"

#include "ul/errors.hpp"

namespace ul {

WMatrix zero_matrix(const PrimeContext &ctx, int rows, int cols) {
  return WMatrix(rows, cols, Witt(ctx));
}

WMatrix identity_matrix(const PrimeContext &ctx, int n) {
  WMatrix r = zero_matrix(ctx, n, n);
  for (int i = 0; i < n; ++i)
    r(i, i) = Witt(ctx, 1);
  return r;
}

WMatrix diagonal_matrix(const std::vector<Witt> &d) {
  const int n = static_cast<int>(d.size());
  WMatrix r = zero_matrix(d.at(0).context(), n, n);
  for (int i = 0; i < n; ++i)
    r(i, i) = d[i];
  return r;
}

WMatrix operator*(const WMatrix &a, const WMatrix &b) {
  if (a.cols() != b.rows())
    throw InvalidArgument("matrix shape mismatch");
  const PrimeContext &ctx = a(0, 0).context();
  WMatrix r = zero_matrix(ctx, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Witt &x = a(i, k);
      if (x.is_zero())
        continue;
      for (int j = 0; j < b.cols(); ++j)
        r(i, j) += x * b(k, j);
    }
  return r;
}

WMatrix operator+(const WMatrix &a, const WMatrix &b) {
  WMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) += b(i, j);
  return r;
}

WMatrix operator-(const WMatrix &a, const WMatrix &b) {
  WMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) -= b(i, j);
  return r;
}

WMatrix scale(const WMatrix &a, const Witt &s) {
  WMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = s * a(i, j);
  return r;
}

WMatrix transpose(const WMatrix &a) {
  WMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(j, i) = a(i, j);
  return r;
}

WMatrix frobenius(const WMatrix &a, int k) {
  WMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = frobenius(a(i, j), k);
  return r;
}

WMatrix mul_p_pow(const WMatrix &a, int k) {
  WMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j).mul_p_pow(k);
  return r;
}

WMatrix hconcat(const WMatrix &a, const WMatrix &b) {
  if (a.rows() != b.rows())
    throw InvalidArgument("row count mismatch");
  WMatrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j)
      r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j)
      r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

WMatrix column(const WMatrix &a, int j) {
  WMatrix r(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i)
    r(i, 0) = a(i, j);
  return r;
}

int min_valuation(const WMatrix &a) {
  int best = a(0, 0).context().N();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int v = a(i, j).valuation();
      if (v < best)
        best = v;
    }
  return best;
}

bool equal_mod(const WMatrix &a, const WMatrix &b, int v) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).equal_mod(b(i, j), v))
        return false;
  return true;
}

} // namespace ul
