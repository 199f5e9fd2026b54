#include "zpd/subspace.hpp"

#include <algorithm>
#include <string>

#include "zpd/errors.hpp"

namespace zpd {

namespace {

void require_ambient(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(a) +
                            " and " + std::to_string(b));
  }
}

}  // namespace

template <class F>
Subspace<F>::Subspace(F field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

template <class F>
Subspace<F>::Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

template <class F>
Subspace<F> Subspace<F>::full(F field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix<F>::identity(std::move(field), ambient_dim), std::move(pivots));
}

template <class F>
Subspace<F> Subspace<F>::span_of(const Matrix<F>& m) {
  return rref(m);
}

template <class F>
Subspace<F> Subspace<F>::span_of(F field, std::size_t ambient_dim,
                                 const std::vector<Vector<F>>& vectors) {
  return rref(Matrix<F>::from_rows(std::move(field), ambient_dim, vectors));
}

template <class F>
Vector<F> Subspace<F>::basis_vector(std::size_t i) const {
  auto r = basis_.row(i);
  return Vector<F>(r.begin(), r.end());
}

template <class F>
Vector<F> Subspace<F>::reduce(std::span<const value_type> v) const {
  require_ambient(v.size(), ambient_dim(), "Subspace::reduce");
  const F& f = field();
  Vector<F> out(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    auto c = out[pivots_[k]];
    if (f.is_zero(c)) continue;
    axpy(f, std::span<value_type>(out), f.neg(c), basis_.row(k));
  }
  return out;
}

template <class F>
bool Subspace<F>::contains(std::span<const value_type> v) const {
  auto r = reduce(v);
  return is_zero_vector(field(), std::span<const value_type>(r));
}

template <class F>
Subspace<F> rref(const Matrix<F>& m) {
  Matrix<F> a = m;
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && f.is_zero(a(sel, c))) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
    auto inv = f.inv(a(r, c));
    for (auto& x : a.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      axpy(f, a.row(i), f.neg(a(i, c)), std::span<const typename F::value_type>(a.row(r)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<F> basis(f, r, a.cols());
  for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i).begin(), a.row(i).end(), basis.row(i).begin());
  return Subspace<F>(std::move(basis), std::move(pivots));
}

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  const F& f = m.field();
  auto reduced = rref(m);
  const auto& piv = reduced.pivots();
  std::vector<Vector<F>> gens;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols(); ++col) {
    if (next < piv.size() && piv[next] == col) {
      ++next;
      continue;
    }
    auto v = zero_vector(f, m.cols());
    v[col] = f.one();
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = f.neg(reduced.basis()(k, col));
    gens.push_back(std::move(v));
  }
  auto result = Subspace<F>::span_of(f, m.cols(), gens);
  if (result.dim() + reduced.dim() != m.cols()) {
    throw InternalError("kernel: rank-nullity violated");
  }
  return result;
}

template <class F>
Subspace<F> image(const Matrix<F>& m) {
  return rref(m.transpose());
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).dim();
}

template <class F>
std::optional<Vector<F>> solve_linear(const Matrix<F>& m, std::span<const typename F::value_type> b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("solve_linear: " + std::to_string(m.rows()) + " equations but rhs of length " +
                            std::to_string(b.size()));
  }
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, m.cols()) = b[r];
  }
  auto reduced = rref(aug);
  const auto& piv = reduced.pivots();
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  auto x = zero_vector(f, m.cols());
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = reduced.basis()(k, m.cols());
  auto check = m.apply(x);
  if (!std::equal(check.begin(), check.end(), b.begin(), b.end())) {
    throw InternalError("solve_linear: substitution check failed");
  }
  return x;
}

template <class F>
bool subspace_contains(const Subspace<F>& s, std::span<const typename F::value_type> v) {
  return s.contains(v);
}

template <class F>
bool subspace_leq(const Subspace<F>& s, const Subspace<F>& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim(), "subspace_leq");
  if (s.dim() > t.dim()) return false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!t.contains(s.basis().row(i))) return false;
  }
  return true;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& s, const Subspace<F>& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim(), "subspace_sum");
  return rref(s.basis().vstack(t.basis()));
}

template <class F>
Subspace<F> annihilator(const Subspace<F>& s) {
  return kernel(s.basis());
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& s, const Subspace<F>& t) {
  require_ambient(s.ambient_dim(), t.ambient_dim(), "subspace_intersect");
  // s ∩ t is cut out by the constraints of both
  auto constraints = annihilator(s).basis().vstack(annihilator(t).basis());
  return kernel(constraints);
}

template <class F>
SpanAccumulator<F>::SpanAccumulator(F field, std::size_t ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim) {}

template <class F>
Vector<F> SpanAccumulator<F>::reduced(std::span<const value_type> v) const {
  require_ambient(v.size(), ambient_, "SpanAccumulator");
  Vector<F> out(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto c = out[pivots_[k]];
    if (field_.is_zero(c)) continue;
    axpy(field_, std::span<value_type>(out), field_.neg(c), std::span<const value_type>(rows_[k]));
  }
  return out;
}

template <class F>
bool SpanAccumulator<F>::insert(std::span<const value_type> v) {
  auto r = reduced(v);
  std::size_t lead = 0;
  while (lead < r.size() && field_.is_zero(r[lead])) ++lead;
  if (lead == r.size()) return false;
  auto inv = field_.inv(r[lead]);
  for (auto& x : r) x = field_.mul(x, inv);
  for (auto& row : rows_) {
    if (field_.is_zero(row[lead])) continue;
    axpy(field_, std::span<value_type>(row), field_.neg(row[lead]), std::span<const value_type>(r));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

template <class F>
void SpanAccumulator<F>::merge(const SpanAccumulator& other) {
  require_ambient(other.ambient_, ambient_, "SpanAccumulator::merge");
  for (const auto& row : other.rows_) insert(row);
}

template <class F>
bool SpanAccumulator<F>::contains(std::span<const value_type> v) const {
  auto r = reduced(v);
  return is_zero_vector(field_, std::span<const value_type>(r));
}

template <class F>
Subspace<F> SpanAccumulator<F>::to_subspace() const {
  return Subspace<F>(Matrix<F>::from_rows(field_, ambient_, rows_), pivots_);
}

#define ZPD_INSTANTIATE_SUBSPACE(F)                                                         \
  template class Subspace<F>;                                                               \
  template class SpanAccumulator<F>;                                                        \
  template Subspace<F> rref<F>(const Matrix<F>&);                                           \
  template Subspace<F> kernel<F>(const Matrix<F>&);                                         \
  template Subspace<F> image<F>(const Matrix<F>&);                                          \
  template std::size_t rank<F>(const Matrix<F>&);                                           \
  template std::optional<Vector<F>> solve_linear<F>(const Matrix<F>&,                       \
                                                    std::span<const F::value_type>);        \
  template bool subspace_contains<F>(const Subspace<F>&, std::span<const F::value_type>);   \
  template bool subspace_leq<F>(const Subspace<F>&, const Subspace<F>&);                    \
  template Subspace<F> subspace_sum<F>(const Subspace<F>&, const Subspace<F>&);             \
  template Subspace<F> subspace_intersect<F>(const Subspace<F>&, const Subspace<F>&);       \
  template Subspace<F> annihilator<F>(const Subspace<F>&);

ZPD_INSTANTIATE_SUBSPACE(PrimeField)
ZPD_INSTANTIATE_SUBSPACE(RationalField)

}  // namespace zpd
