#include "zpd/matrix.hpp"

#include <string>

#include "zpd/errors.hpp"

namespace zpd {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": lengths " + std::to_string(a) + " and " +
                            std::to_string(b));
  }
}

}  // namespace

template <class F>
Matrix<F>::Matrix(F field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

template <class F>
Matrix<F> Matrix<F>::identity(F field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_rows(F field, std::size_t cols, const std::vector<Vector<F>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_length(rows[r].size(), cols, "Matrix::from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_columns(F field, std::size_t rows, const std::vector<Vector<F>>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_length(cols[c].size(), rows, "Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

template <class F>
Vector<F> Matrix<F>::column(std::size_t c) const {
  Vector<F> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

template <class F>
Vector<F> Matrix<F>::apply(std::span<const value_type> v) const {
  require_same_length(v.size(), cols_, "Matrix::apply");
  Vector<F> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(field_, row(r), v);
  return out;
}

template <class F>
Matrix<F> Matrix<F>::operator*(const Matrix& rhs) const {
  require_same_length(cols_, rhs.rows_, "Matrix::operator*");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (field_.is_zero(a)) continue;
      axpy(field_, out.row(r), a, rhs.row(k));
    }
  }
  return out;
}

template <class F>
Matrix<F> Matrix<F>::operator+(const Matrix& rhs) const {
  require_same_length(rows_, rhs.rows_, "Matrix::operator+");
  require_same_length(cols_, rhs.cols_, "Matrix::operator+");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

template <class F>
Matrix<F> Matrix<F>::operator-(const Matrix& rhs) const {
  require_same_length(rows_, rhs.rows_, "Matrix::operator-");
  require_same_length(cols_, rhs.cols_, "Matrix::operator-");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

template <class F>
Matrix<F> Matrix<F>::vstack(const Matrix& below) const {
  require_same_length(cols_, below.cols_, "Matrix::vstack");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

template <class F>
bool Matrix<F>::is_zero() const {
  return is_zero_vector(field_, std::span<const value_type>(data_));
}

template <class F>
Vector<F> add(const F& field, std::span<const typename F::value_type> a,
              std::span<const typename F::value_type> b) {
  require_same_length(a.size(), b.size(), "add");
  Vector<F> out(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

template <class F>
Vector<F> sub(const F& field, std::span<const typename F::value_type> a,
              std::span<const typename F::value_type> b) {
  require_same_length(a.size(), b.size(), "sub");
  Vector<F> out(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return out;
}

template <class F>
Vector<F> scale(const F& field, const typename F::value_type& c,
                std::span<const typename F::value_type> v) {
  Vector<F> out(v.size(), field.zero());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(c, v[i]);
  return out;
}

template <class F>
typename F::value_type dot(const F& field, std::span<const typename F::value_type> a,
                           std::span<const typename F::value_type> b) {
  require_same_length(a.size(), b.size(), "dot");
  if constexpr (std::is_same_v<F, PrimeField>) {
    // delay the reduction: p < 2^31 keeps each product below 2^62
    const std::uint64_t p = field.modulus();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc += std::uint64_t{a[i]} * b[i] % p;
      if (acc >= (std::uint64_t{1} << 62)) acc %= p;
    }
    return static_cast<typename F::value_type>(acc % p);
  } else {
    auto acc = field.zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!field.is_zero(a[i]) && !field.is_zero(b[i])) acc = field.add(acc, field.mul(a[i], b[i]));
    }
    return acc;
  }
}

template <class F>
void axpy(const F& field, std::span<typename F::value_type> a, const typename F::value_type& c,
          std::span<const typename F::value_type> b) {
  require_same_length(a.size(), b.size(), "axpy");
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!field.is_zero(b[i])) a[i] = field.add(a[i], field.mul(c, b[i]));
  }
}

#define ZPD_INSTANTIATE_VECTOR_OPS(F)                                                          \
  template Vector<F> add<F>(const F&, std::span<const F::value_type>,                          \
                            std::span<const F::value_type>);                                   \
  template Vector<F> sub<F>(const F&, std::span<const F::value_type>,                          \
                            std::span<const F::value_type>);                                   \
  template Vector<F> scale<F>(const F&, const F::value_type&, std::span<const F::value_type>); \
  template F::value_type dot<F>(const F&, std::span<const F::value_type>,                      \
                                std::span<const F::value_type>);                               \
  template void axpy<F>(const F&, std::span<F::value_type>, const F::value_type&,              \
                        std::span<const F::value_type>);

template class Matrix<PrimeField>;
template class Matrix<RationalField>;
ZPD_INSTANTIATE_VECTOR_OPS(PrimeField)
ZPD_INSTANTIATE_VECTOR_OPS(RationalField)

}  // namespace zpd
