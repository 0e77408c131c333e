#include "flagtwist/exact_matrix.hpp"

#include <cassert>
#include <utility>

namespace flagtwist {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
  return m;
}

void ExactMatrix::append_row(const std::vector<GaussRat>& row) {
  assert(row.size() == cols_ || rows_ == 0);
  if (rows_ == 0) cols_ = row.size();
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  ExactMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    // Pick the nonzero candidate with the fewest bits.
    std::size_t best = rows_;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      std::size_t bits = m.at(i, c).bit_size();
      if (best == rows_ || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows_) continue;
    if (best != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(r, j), m.at(best, j));

    GaussRat inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      GaussRat f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<GaussRat>> ExactMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  ExactMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv) is_pivot[c] = true;

  std::vector<std::vector<GaussRat>> basis;
  basis.reserve(cols_ - piv.size());
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussRat> v(cols_);
    v[f] = GaussRat(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussRat>> ExactMatrix::solve(
    const std::vector<GaussRat>& rhs) const {
  assert(rhs.size() == rows_);
  ExactMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  std::vector<std::size_t> piv;
  ExactMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;

  std::vector<GaussRat> x(cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, cols_);
  return x;
}

}  // namespace flagtwist
