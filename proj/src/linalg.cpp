#include "chipgame/linalg.hpp"

#include <utility>

#include "chipgame/error.hpp"

namespace chipgame {

RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::Domain, "solve_exact: shape mismatch");
  }
  const std::size_t rhs = b.cols();

  std::vector<std::size_t> nonzero_cols;
  Rational factor;
  Rational scratch;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      if (pivot == n || cmp(abs(a(r, k)), abs(a(pivot, k))) > 0) pivot = r;
    }
    if (pivot == n) throw Error(ErrorCode::Domain, "solve_exact: singular system");
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) swap(a(k, c), a(pivot, c));
      for (std::size_t c = 0; c < rhs; ++c) swap(b(k, c), b(pivot, c));
    }

    // Normalize the pivot row so the pivot is 1.
    const Rational inv = 1 / a(k, k);
    nonzero_cols.clear();
    a(k, k) = 1;
    for (std::size_t c = k + 1; c < n; ++c) {
      if (sgn(a(k, c)) == 0) continue;
      a(k, c) *= inv;
      nonzero_cols.push_back(c);
    }
    for (std::size_t c = 0; c < rhs; ++c) {
      if (sgn(b(k, c)) != 0) b(k, c) *= inv;
    }

    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      factor = a(r, k);
      a(r, k) = 0;
      for (std::size_t c : nonzero_cols) {
        scratch = factor * a(k, c);
        a(r, c) -= scratch;
      }
      for (std::size_t c = 0; c < rhs; ++c) {
        if (sgn(b(k, c)) == 0) continue;
        scratch = factor * b(k, c);
        b(r, c) -= scratch;
      }
    }
  }

  // Back substitution over the unit upper-triangular factor.
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t c = k + 1; c < n; ++c) {
      if (sgn(a(k, c)) == 0) continue;
      for (std::size_t j = 0; j < rhs; ++j) {
        if (sgn(b(c, j)) == 0) continue;
        scratch = a(k, c) * b(c, j);
        b(k, j) -= scratch;
      }
    }
  }
  return b;
}

}  // namespace chipgame
