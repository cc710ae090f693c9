#pragma once

#include <cstddef>
#include <vector>

#include "chipgame/rational.hpp"

namespace chipgame {

/// Row-major dense matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Solves A X = B exactly by Gaussian elimination with partial pivoting on
/// |entry|. A is square; B has any number of right-hand-side columns. Zero
/// entries are skipped, so sparse systems stay cheap until fill-in.
/// Returns X, or throws a Domain error if A is singular.
RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b);

}  // namespace chipgame
