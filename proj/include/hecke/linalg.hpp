#pragma once

#include "hecke/fields.hpp"

#include <cstddef>
#include <vector>

namespace hecke {

// Dense row-major matrix over a field.
template <Field F>
struct Matrix {
  using value_type = typename F::value_type;
  std::size_t rows = 0, cols = 0;
  std::vector<value_type> data;

  Matrix() = default;
  Matrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, f.zero()) {}
  static Matrix identity(const F& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  value_type& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <Field F>
Matrix<F> multiply(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  require(a.cols == b.rows, "matrix dimensions do not match");
  Matrix<F> c(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (!f.is_zero(b(k, j))) f.add_to(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

template <Field F>
bool equal(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t k = 0; k < a.data.size(); ++k)
    if (!f.equal(a.data[k], b.data[k])) return false;
  return true;
}

template <Field F>
Matrix<F> add(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> c = a;
  for (std::size_t k = 0; k < c.data.size(); ++k) c.data[k] = f.add(a.data[k], b.data[k]);
  return c;
}

template <Field F>
Matrix<F> scale(const F& f, const typename F::value_type& s, const Matrix<F>& a) {
  Matrix<F> c = a;
  for (auto& v : c.data) v = f.mul(s, v);
  return c;
}

// Reduced row echelon form in place; pivots chosen as the first nonzero entry
// scanning columns left to right. Returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!f.is_zero(m(r, j))) f.sub_mul(m(i, j), factor, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, m).size();
}

// Basis of {x : m x = 0}.
template <Field F>
std::vector<std::vector<typename F::value_type>> nullspace(const F& f, Matrix<F> m) {
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> x(m.cols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(m(r, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

// Incrementally maintained reduced echelon basis of a row space.
template <Field F>
class RowEchelon {
 public:
  using value_type = typename F::value_type;
  using Row = std::vector<value_type>;

  RowEchelon(const F& f, std::size_t width) : f_(&f), width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Companion vectors that undergo the same row operations as the rows (used to
  // track each echelon row as a combination of the vectors that produced it).
  const std::vector<Row>& aux() const { return aux_; }

  // Reduces v in place against the basis and returns the coordinates used.
  std::vector<value_type> reduce(Row& v) const {
    const F& f = *f_;
    std::vector<value_type> coeffs(rows_.size(), f.zero());
    for (std::size_t j = 0; j < rows_.size(); ++j) coeffs[j] = v[pivots_[j]];
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (f.is_zero(coeffs[j])) continue;
      for (std::size_t col : support_[j]) f.sub_mul(v[col], coeffs[j], rows_[j][col]);
    }
    return coeffs;
  }

  bool is_zero(const Row& v) const {
    for (const auto& x : v)
      if (!f_->is_zero(x)) return false;
    return true;
  }

  bool contains(Row v) const {
    reduce(v);
    return is_zero(v);
  }

  // Adds v if it is independent; returns whether the rank grew.
  bool insert(Row v) {
    reduce(v);
    return insert_reduced(std::move(v));
  }

  // v must already be reduced against the basis; `aux` is carried along.
  bool insert_reduced(Row v, Row aux = {}) {
    const F& f = *f_;
    std::size_t p = 0;
    while (p < width_ && f.is_zero(v[p])) ++p;
    if (p == width_) return false;
    auto inv = f.inv(v[p]);
    for (auto& x : v)
      if (!f.is_zero(x)) x = f.mul(x, inv);
    for (auto& x : aux)
      if (!f.is_zero(x)) x = f.mul(x, inv);
    auto sup = support_of(v);
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (f.is_zero(rows_[j][p])) continue;
      auto factor = rows_[j][p];
      for (std::size_t col : sup) f.sub_mul(rows_[j][col], factor, v[col]);
      support_[j] = support_of(rows_[j]);
      if (aux_[j].size() < aux.size()) aux_[j].resize(aux.size(), f.zero());
      for (std::size_t k = 0; k < aux.size(); ++k)
        if (!f.is_zero(aux[k])) f.sub_mul(aux_[j][k], factor, aux[k]);
    }
    aux_.push_back(std::move(aux));
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    support_.push_back(std::move(sup));
    return true;
  }

 private:
  std::vector<std::size_t> support_of(const Row& v) const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!f_->is_zero(v[k])) s.push_back(k);
    return s;
  }

  const F* f_;
  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<Row> aux_;
};

}  // namespace hecke
