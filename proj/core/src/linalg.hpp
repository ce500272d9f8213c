#pragma once

#include <cstddef>
#include <vector>

#include "gsimplex/scalar.hpp"

namespace gsimplex::detail {

template <class T>
using DenseRows = std::vector<std::vector<T>>;

template <class T>
struct Kernel {
  std::size_t rank = 0;
  // Basis of the null space, one vector per free direction.
  std::vector<std::vector<T>> basis;
};

/// Rank and null space of the matrix whose rows are given, over `cols` columns.
/// Rational: exact Gauss-Jordan elimination. Double: column-pivoted Householder
/// QR of the transpose, with |R_ii| <= tol * max(1, |R_00|) treated as zero.
template <class T>
Kernel<T> kernel(const DenseRows<T>& rows, std::size_t cols, const T& tol);

/// Rank only; cheaper path used by the extreme-point test.
template <class T>
std::size_t rank(const DenseRows<T>& rows, std::size_t cols, const T& tol);

}  // namespace gsimplex::detail
