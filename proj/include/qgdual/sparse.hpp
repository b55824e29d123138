// Row-major sparse matrices over an arbitrary commutative scalar ring R.
//
// The two instantiations used in practice are R = LaurentPoly (exact
// symbolic computation, where operator== is mathematical equality because
// rows are zero-pruned) and R = double (numeric cross-checks and the Markov
// machinery at fixed q).  Rows are std::map<int,R> so iteration order is
// deterministic, which keeps every report and dump byte-stable.

#pragma once

#include <qgdual/laurent.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace qgdual {

[[nodiscard]] inline bool scalar_is_zero(const LaurentPoly& v) { return v.is_zero(); }
[[nodiscard]] inline bool scalar_is_zero(double v) { return v == 0.0; }

template <class R>
class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {
    if (rows < 0 || cols < 0) throw std::domain_error("SparseMat: negative dimension");
  }

  [[nodiscard]] static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[static_cast<size_t>(i)].emplace(i, R(1));
    return m;
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] const std::map<int, R>& row(int r) const { return data_[static_cast<size_t>(r)]; }

  [[nodiscard]] R get(int r, int c) const {
    const auto& m = data_[static_cast<size_t>(r)];
    auto it = m.find(c);
    return it == m.end() ? R(0) : it->second;
  }

  void set(int r, int c, const R& v) {
    auto& m = data_[static_cast<size_t>(r)];
    if (scalar_is_zero(v))
      m.erase(c);
    else
      m[c] = v;
  }

  void add_to(int r, int c, const R& v) {
    if (scalar_is_zero(v)) return;
    auto& m = data_[static_cast<size_t>(r)];
    auto [it, inserted] = m.emplace(c, v);
    if (!inserted) {
      it->second = it->second + v;
      if (scalar_is_zero(it->second)) m.erase(it);
    }
  }

  [[nodiscard]] SparseMat operator+(const SparseMat& o) const {
    check_same_shape(o);
    SparseMat r = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [c, v] : o.row(i)) r.add_to(i, c, v);
    return r;
  }

  [[nodiscard]] SparseMat operator-(const SparseMat& o) const {
    check_same_shape(o);
    SparseMat r = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [c, v] : o.row(i)) r.add_to(i, c, R(0) - v);
    return r;
  }

  [[nodiscard]] SparseMat operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::domain_error("SparseMat: shape mismatch in product");
    SparseMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [k, a] : row(i))
        for (const auto& [j, b] : o.row(k)) r.add_to(i, j, a * b);
    return r;
  }

  [[nodiscard]] SparseMat scaled(const R& s) const {
    SparseMat r(rows_, cols_);
    if (scalar_is_zero(s)) return r;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [c, v] : row(i)) r.add_to(i, c, v * s);
    return r;
  }

  [[nodiscard]] SparseMat transpose() const {
    SparseMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [c, v] : row(i)) r.set(c, i, v);
    return r;
  }

  // Matrix · column vector.
  [[nodiscard]] std::vector<R> apply(const std::vector<R>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::domain_error("SparseMat: vector length mismatch");
    std::vector<R> out(static_cast<size_t>(rows_), R(0));
    for (int i = 0; i < rows_; ++i) {
      R acc(0);
      for (const auto& [c, a] : row(i)) acc = acc + a * v[static_cast<size_t>(c)];
      out[static_cast<size_t>(i)] = acc;
    }
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& m : data_)
      if (!m.empty()) return false;
    return true;
  }

  [[nodiscard]] std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& m : data_) n += m.size();
    return n;
  }

  // Exact structural equality (rows are zero-pruned by construction).
  [[nodiscard]] bool operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // First nonzero entry in row-major order, for failure reporting.
  [[nodiscard]] bool first_nonzero(int* r, int* c, R* v) const {
    for (int i = 0; i < rows_; ++i) {
      const auto& m = row(i);
      if (!m.empty()) {
        *r = i;
        *c = m.begin()->first;
        *v = m.begin()->second;
        return true;
      }
    }
    return false;
  }

 private:
  void check_same_shape(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::domain_error("SparseMat: shape mismatch");
  }

  int rows_, cols_;
  std::vector<std::map<int, R>> data_;
};

using LMat = SparseMat<LaurentPoly>;
using DMat = SparseMat<double>;

// Kronecker product with the row-major packing convention used everywhere in
// this project: index(i ⊗ j) = i·cols(b) + j, i.e. the LEFT factor is the
// most significant digit.
template <class R>
[[nodiscard]] SparseMat<R> kron(const SparseMat<R>& a, const SparseMat<R>& b) {
  SparseMat<R> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (const auto& [ja, va] : a.row(ia))
      for (int ib = 0; ib < b.rows(); ++ib)
        for (const auto& [jb, vb] : b.row(ib))
          r.add_to(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
  return r;
}

template <class R>
[[nodiscard]] SparseMat<R> commutator(const SparseMat<R>& a, const SparseMat<R>& b) {
  return a * b - b * a;
}

// Evaluate a symbolic matrix entrywise at a numeric q > 0.
[[nodiscard]] inline DMat eval_mat(const LMat& m, double q) {
  DMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) r.set(i, c, v.eval(q));
  return r;
}

}  // namespace qgdual
