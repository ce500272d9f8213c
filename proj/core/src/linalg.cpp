#include "linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace gsimplex::detail {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(DenseRows<Rational>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    if (m[row][col] != 1) {
      Rational inv = 1 / m[row][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row][c] != 0) m[row][c] *= inv;
      }
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row][c] != 0) m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

struct QrResult {
  Eigen::MatrixXd q;
  std::size_t rank;
};

QrResult qr_of_transpose(const DenseRows<double>& rows, std::size_t cols, double tol, bool want_q) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(cols);
  Eigen::MatrixXd at(n, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) at(j, i) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  if (m == 0) return {Eigen::MatrixXd::Identity(n, n), 0};
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(at);
  const Eigen::MatrixXd& r = qr.matrixR();
  const Eigen::Index diag = std::min(n, m);
  double scale = std::max(1.0, std::fabs(r(0, 0)));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < diag; ++i) {
    if (std::fabs(r(i, i)) > tol * scale) ++rank;
  }
  if (!want_q) return {Eigen::MatrixXd(), rank};
  Eigen::MatrixXd q = qr.householderQ();
  return {std::move(q), rank};
}

}  // namespace

template <>
Kernel<Rational> kernel(const DenseRows<Rational>& rows, std::size_t cols, const Rational& /*tol*/) {
  DenseRows<Rational> m = rows;
  std::vector<std::size_t> pivots = rref(m, cols);
  Kernel<Rational> out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <>
Kernel<double> kernel(const DenseRows<double>& rows, std::size_t cols, const double& tol) {
  QrResult qr = qr_of_transpose(rows, cols, tol, true);
  Kernel<double> out;
  out.rank = qr.rank;
  for (std::size_t c = qr.rank; c < cols; ++c) {
    std::vector<double> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      v[j] = qr.q(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c));
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

template <>
std::size_t rank(const DenseRows<Rational>& rows, std::size_t cols, const Rational& /*tol*/) {
  DenseRows<Rational> m = rows;
  return rref(m, cols).size();
}

template <>
std::size_t rank(const DenseRows<double>& rows, std::size_t cols, const double& tol) {
  return qr_of_transpose(rows, cols, tol, false).rank;
}

}  // namespace gsimplex::detail
