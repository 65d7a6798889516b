#include "gwb/linalg.hpp"

#include <utility>

namespace gwb::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t pivot_col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_col_limit && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long>(m(i, j)));
  return out;
}

QMatrix to_rational(const BigMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

QMatrix vstack(std::span<const QMatrix> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidInput("vstack: column counts differ");
    rows += b.rows();
  }
  QMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(at + i, j) = b(i, j);
    at += b.rows();
  }
  return out;
}

std::size_t rank(const QMatrix& a) {
  QMatrix m = a;
  return rref(m, m.cols()).size();
}

QMatrix nullspace(const QMatrix& a) {
  QMatrix m = a;
  const auto pivots = rref(m, m.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis(a.cols(), a.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free);
    ++k;
  }
  return basis;
}

std::optional<QMatrix> solve_unique(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("solve: row counts differ");
  QMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const auto pivots = rref(aug, a.cols());
  if (pivots.size() != a.cols()) throw InvalidInput("solve: coefficient matrix lacks full column rank");
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (aug(i, a.cols() + j) != 0) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

// Column-style Hermite reduction: unimodular column operations clear each row
// to a single pivot; the transform's columns past the last pivot span the kernel.
BigMatrix integer_kernel(const BigMatrix& a) {
  const std::size_t n = a.cols();
  BigMatrix w = a;
  BigMatrix u = BigMatrix::identity(n);
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w(i, x), w(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, x), u(i, y));
  };
  auto sub_col = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < w.rows(); ++i) w(i, target) -= q * w(i, source);
    for (std::size_t i = 0; i < n; ++i) u(i, target) -= q * u(i, source);
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < w.rows() && col < n; ++row) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (w(row, j) != 0 && (best == n || abs(w(row, j)) < abs(w(row, best)))) best = j;
      if (best == n) break;
      swap_cols(col, best);
      bool others = false;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (w(row, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w(row, j).get_mpz_t(), w(row, col).get_mpz_t());
        sub_col(j, col, q);
        if (w(row, j) != 0) others = true;
      }
      if (!others) {
        ++col;
        break;
      }
    }
  }
  BigMatrix kernel(n, n - col);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = col; j < n; ++j) kernel(i, j - col) = u(i, j);
  return kernel;
}

}  // namespace gwb::linalg
