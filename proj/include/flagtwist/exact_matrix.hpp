#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagtwist/gauss_rat.hpp"

namespace flagtwist {

// Dense exact matrix over Q(i). Elimination uses partial pivoting on the
// entry of smallest bit size, which keeps coefficient growth tame at the
// problem sizes occurring here.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussRat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussRat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<GaussRat>& row);

  std::size_t rank() const;

  // Basis of {v : Mv = 0}; size is cols() - rank(). Exact.
  std::vector<std::vector<GaussRat>> nullspace() const;

  // A particular solution of Mx = rhs, or nullopt when inconsistent.
  std::optional<std::vector<GaussRat>> solve(const std::vector<GaussRat>& rhs) const;

  // Row-reduced echelon form; pivot columns reported in order.
  ExactMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

 private:
  std::size_t rows_, cols_;
  std::vector<GaussRat> a_;
};

}  // namespace flagtwist
