#pragma once

#include "ul/witt.hpp"

#include <cassert>
#include <vector>

namespace ul {

template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, const T &fill = T())
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  T &operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T &operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  bool operator==(const Matrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using WMatrix = Matrix<Witt>;

WMatrix zero_matrix(const PrimeContext &ctx, int rows, int cols);
WMatrix identity_matrix(const PrimeContext &ctx, int n);
WMatrix diagonal_matrix(const std::vector<Witt> &d);
WMatrix operator*(const WMatrix &a, const WMatrix &b);
WMatrix operator+(const WMatrix &a, const WMatrix &b);
WMatrix operator-(const WMatrix &a, const WMatrix &b);
WMatrix scale(const WMatrix &a, const Witt &s);
WMatrix transpose(const WMatrix &a);
WMatrix frobenius(const WMatrix &a, int k = 1);
WMatrix mul_p_pow(const WMatrix &a, int k);
WMatrix hconcat(const WMatrix &a, const WMatrix &b);
WMatrix column(const WMatrix &a, int j);
int min_valuation(const WMatrix &a);
bool equal_mod(const WMatrix &a, const WMatrix &b, int v);

} // namespace ul
