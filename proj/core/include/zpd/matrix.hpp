#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zpd/field.hpp"

namespace zpd {

template <class F>
using Vector = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols);

  static Matrix identity(F field, std::size_t n);
  /// Builds a matrix from equally long rows; throws DimensionMismatch otherwise.
  static Matrix from_rows(F field, std::size_t cols, const std::vector<Vector<F>>& rows);
  static Matrix from_columns(F field, std::size_t rows, const std::vector<Vector<F>>& cols);

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector<F> column(std::size_t c) const;

  /// m * v
  Vector<F> apply(std::span<const value_type> v) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix transpose() const;
  /// Rows of *this followed by rows of below.
  Matrix vstack(const Matrix& below) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

// Vector helpers. All of them check lengths and throw DimensionMismatch.

template <class F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

template <class F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  auto v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& field, std::span<const typename F::value_type> v) {
  for (const auto& x : v) {
    if (!field.is_zero(x)) return false;
  }
  return true;
}

template <class F>
Vector<F> add(const F& field, std::span<const typename F::value_type> a,
              std::span<const typename F::value_type> b);
template <class F>
Vector<F> sub(const F& field, std::span<const typename F::value_type> a,
              std::span<const typename F::value_type> b);
template <class F>
Vector<F> scale(const F& field, const typename F::value_type& c,
                std::span<const typename F::value_type> v);
/// Standard dot product sum a_i b_i.
template <class F>
typename F::value_type dot(const F& field, std::span<const typename F::value_type> a,
                           std::span<const typename F::value_type> b);
/// a += c * b, in place.
template <class F>
void axpy(const F& field, std::span<typename F::value_type> a, const typename F::value_type& c,
          std::span<const typename F::value_type> b);

extern template class Matrix<PrimeField>;
extern template class Matrix<RationalField>;

}  // namespace zpd
