#pragma once

#include <cstddef>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

// Dense row-major matrix over a field F. Desk-scale sizes; no sparsity.
template <class F>
class Matrix {
public:
  using Elem = typename F::Elem;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(const F& f, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  static Matrix from_rows(const F& f, const std::vector<std::vector<Elem>>& rows,
                          std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ModelError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  bool equal(const F& f, const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!f.eq(a_[k], o.a_[k])) return false;
    return true;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank = 0;
};

// Reduced row-echelon form with the deterministic pivot rule: leftmost
// column first, topmost available row.
template <class F>
RrefResult<F> rref(const F& f, Matrix<F> m) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && f.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    auto s = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      auto t = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = out.pivot_cols.size();
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const F& f, const Matrix<F>& m) {
  return rref(f, m).rank;
}

// Basis of the right null space, one vector per free column in increasing
// column order, with the free variable set to 1.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& f, const Matrix<F>& m) {
  auto rr = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> v(m.cols(), f.zero());
    v[fc] = f.one();
    for (std::size_t r = 0; r < rr.rank; ++r)
      v[rr.pivot_cols[r]] = f.neg(rr.reduced.at(r, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
bool member_of_span(const F& f, const std::vector<typename F::Elem>& v,
                    const std::vector<std::vector<typename F::Elem>>& basis) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw ModelError("member_of_span: dimension mismatch");
  auto rows = basis;
  auto r0 = rank(f, Matrix<F>::from_rows(f, rows, v.size()));
  rows.push_back(v);
  auto r1 = rank(f, Matrix<F>::from_rows(f, rows, v.size()));
  return r0 == r1;
}

// Reduce v against RREF rows (pivot columns given); leaves the residue.
template <class F>
std::vector<typename F::Elem> reduce_by_rref(const F& f, std::vector<typename F::Elem> v,
                                             const Matrix<F>& reduced,
                                             const std::vector<std::size_t>& pivot_cols) {
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    auto c = pivot_cols[r];
    if (f.is_zero(v[c])) continue;
    auto t = v[c];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(t, reduced.at(r, j)));
  }
  return v;
}

template <class F>
Matrix<F> matmul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw ModelError("matmul: shape mismatch");
  Matrix<F> c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
    }
  return c;
}

template <class F>
std::vector<typename F::Elem> matvec(const F& f, const Matrix<F>& a,
                                     const std::vector<typename F::Elem>& x) {
  if (a.cols() != x.size()) throw ModelError("matvec: shape mismatch");
  std::vector<typename F::Elem> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a.at(i, j))) y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
  return y;
}

template <class F>
Matrix<F> transpose(const F& f, const Matrix<F>& m) {
  Matrix<F> t(f, m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Columns of `a` followed by columns of `b`.
template <class F>
Matrix<F> hstack(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw ModelError("hstack: shape mismatch");
  Matrix<F> c(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

template <class F>
Matrix<F> from_columns(const F& f, const std::vector<std::vector<typename F::Elem>>& cols,
                       std::size_t rows) {
  Matrix<F> m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ModelError("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

template <class F>
bool is_zero_matrix(const F& f, const Matrix<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m.at(i, j))) return false;
  return true;
}

}  // namespace qhh
