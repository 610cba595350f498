#pragma once
// Dense matrices of polynomials with optional row/column labels; used for
// Jacobians, presentation matrices and complex differentials.

#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace reeslike {

template <class F>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(rows, std::vector<Polynomial<F>>(cols, Polynomial<F>::zero(ring_))) {}

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial<F>& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Polynomial<F>& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

  std::vector<std::string> row_labels, col_labels;

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.a_[c][r] = a_[r][c];
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix p(ring_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < o.cols_; ++c) {
        auto acc = Polynomial<F>::zero(ring_);
        for (std::size_t k = 0; k < cols_; ++k) acc = acc + a_[r][k] * o.a_[k][c];
        p.a_[r][c] = acc;
      }
    return p;
  }

  bool is_zero() const {
    for (const auto& row : a_)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rsel,
                       const std::vector<std::size_t>& csel) const {
    PolyMatrix s(ring_, rsel.size(), csel.size());
    for (std::size_t r = 0; r < rsel.size(); ++r)
      for (std::size_t c = 0; c < csel.size(); ++c) s.a_[r][c] = a_[rsel[r]][csel[c]];
    return s;
  }

  bool equals(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (a_[r][c] != o.a_[r][c]) return false;
    return true;
  }
  bool operator==(const PolyMatrix& o) const { return equals(o); }

 private:
  RingPtr<F> ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Polynomial<F>>> a_;
};

}  // namespace reeslike
