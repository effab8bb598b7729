#pragma once

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenseq/checked.hpp"
#include "greenseq/errors.hpp"

namespace greenseq {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;

enum class VertexColor { Green, Red };

inline const char* to_string(VertexColor c) { return c == VertexColor::Green ? "green" : "red"; }

template <typename Derived>
bool is_skew_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

// Nonzero and entirely >= 0 or entirely <= 0.
template <typename Derived>
bool is_sign_coherent(const Eigen::MatrixBase<Derived>& v) {
  bool pos = false, neg = false;
  for (Index i = 0; i < v.size(); ++i) {
    pos = pos || v(i) > 0;
    neg = neg || v(i) < 0;
  }
  return pos != neg;
}

/// An m x n integer matrix whose first n rows (the principal part) are
/// skew-symmetric. Entry (i, j) is the number of arrows j -> i minus the
/// number of arrows i -> j. Columns index the n mutable vertices; rows n..m-1
/// are the frozen vertices (the coefficient part).
template <ExactInteger Scalar>
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  explicit ExchangeMatrix(Matrix<Scalar> entries) : entries_(std::move(entries)) {
    if (entries_.rows() < entries_.cols())
      throw ArgumentError("exchange matrix needs at least as many rows as columns");
    if (!is_skew_symmetric(entries_.topRows(entries_.cols())))
      throw ArgumentError("principal part of exchange matrix is not skew-symmetric");
  }

  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }
  Index mutable_count() const { return entries_.cols(); }
  Index frozen_count() const { return entries_.rows() - entries_.cols(); }

  Scalar operator()(Index i, Index j) const { return entries_(i, j); }
  const Matrix<Scalar>& entries() const { return entries_; }

  auto principal() const { return entries_.topRows(cols()); }
  auto coefficients() const { return entries_.bottomRows(frozen_count()); }
  auto column(Index k) const { return entries_.col(k); }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() && a.entries_.cols() == b.entries_.cols() &&
           a.entries_ == b.entries_;
  }

 private:
  Matrix<Scalar> entries_;
};

using ExtendedExchangeMatrix = ExchangeMatrix<std::int64_t>;

namespace detail {
inline void require_mutable(Index k, Index n) {
  if (k < 0 || k >= n)
    throw ArgumentError("vertex " + std::to_string(k + 1) + " is not a mutable vertex (1.." +
                        std::to_string(n) + ")");
}
}  // namespace detail

/// Fomin-Zelevinsky matrix mutation at the mutable column k (0-based).
/// Overflow of Scalar throws OverflowError.
template <ExactInteger Scalar>
ExchangeMatrix<Scalar> mutate(const ExchangeMatrix<Scalar>& b, Index k) {
  detail::require_mutable(k, b.cols());
  const Matrix<Scalar>& in = b.entries();
  Matrix<Scalar> out(in.rows(), in.cols());
  for (Index j = 0; j < in.cols(); ++j) {
    for (Index i = 0; i < in.rows(); ++i) {
      if (i == k || j == k) {
        out(i, j) = checked_neg(in(i, j));
        continue;
      }
      const Scalar bik = in(i, k);
      const Scalar bkj = in(k, j);
      Scalar delta = 0;
      if ((bik > 0 && bkj > 0) || (bik < 0 && bkj < 0)) delta = checked_mul(bik, bkj);
      out(i, j) = checked_add(in(i, j), bik > 0 ? delta : checked_neg(delta));
    }
  }
  return ExchangeMatrix<Scalar>(std::move(out));
}

namespace detail {
template <typename Derived>
auto stacked(const Eigen::MatrixBase<Derived>& principal, typename Derived::Scalar diag) {
  using Scalar = typename Derived::Scalar;
  if (!is_skew_symmetric(principal))
    throw ArgumentError("framing requires a skew-symmetric principal matrix");
  const Index n = principal.rows();
  Matrix<Scalar> out(2 * n, n);
  out.topRows(n) = principal;
  out.bottomRows(n).setZero();
  out.bottomRows(n).diagonal().setConstant(diag);
  return ExchangeMatrix<Scalar>(std::move(out));
}
}  // namespace detail

/// Framed matrix: the principal part on top of I_n (arrows i -> i*).
template <typename Derived>
auto frame(const Eigen::MatrixBase<Derived>& principal) {
  return detail::stacked(principal, typename Derived::Scalar{1});
}

/// Coframed matrix: the principal part on top of -I_n (arrows i* -> i).
template <typename Derived>
auto coframe(const Eigen::MatrixBase<Derived>& principal) {
  return detail::stacked(principal, typename Derived::Scalar{-1});
}

/// Color of mutable vertex k in a matrix reachable from a framed one: green
/// when its c-vector is nonnegative, red when nonpositive.
template <ExactInteger Scalar>
VertexColor color_of(const ExchangeMatrix<Scalar>& b, Index k) {
  detail::require_mutable(k, b.cols());
  const auto c = b.coefficients().col(k);
  if (!is_sign_coherent(c))
    throw InvariantViolation("c-vector of vertex " + std::to_string(k + 1) + " is not sign-coherent");
  return c.maxCoeff() > 0 ? VertexColor::Green : VertexColor::Red;
}

template <ExactInteger Scalar>
bool all_red(const ExchangeMatrix<Scalar>& b) {
  for (Index k = 0; k < b.cols(); ++k)
    if (color_of(b, k) == VertexColor::Green) return false;
  return true;
}

template <ExactInteger Scalar>
std::vector<Index> green_vertices(const ExchangeMatrix<Scalar>& b) {
  std::vector<Index> out;
  for (Index k = 0; k < b.cols(); ++k)
    if (color_of(b, k) == VertexColor::Green) out.push_back(k);
  return out;
}

/// If c is a column permutation of -I_n, returns sigma with c(sigma[i], i) = -1.
template <typename Derived>
std::optional<std::vector<Index>> negative_permutation(const Eigen::MatrixBase<Derived>& c) {
  if (c.rows() != c.cols()) return std::nullopt;
  const Index n = c.cols();
  std::vector<Index> sigma(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const auto v = c(i, j);
      if (v == 0) continue;
      if (v != -1 || sigma[j] != -1 || used[i]) return std::nullopt;
      sigma[j] = i;
      used[i] = true;
    }
    if (sigma[j] == -1) return std::nullopt;
  }
  return sigma;
}

/// Exact product a^T * b with checked arithmetic.
template <ExactInteger Scalar>
Matrix<Scalar> checked_transpose_product(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows()) throw ArgumentError("dimension mismatch in product");
  Matrix<Scalar> out(a.cols(), b.cols());
  for (Index i = 0; i < a.cols(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc = 0;
      for (Index r = 0; r < a.rows(); ++r) acc = checked_add(acc, checked_mul(a(r, i), b(r, j)));
      out(i, j) = acc;
    }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <ExactInteger Scalar>
Scalar determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw ArgumentError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  Scalar sgn = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sgn = -sgn;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

}  // namespace greenseq
