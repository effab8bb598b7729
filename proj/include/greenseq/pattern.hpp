#pragma once

#include "greenseq/exchange_matrix.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

/// A vertex of the quiver pattern of a framed quiver: the 2n x n matrix at the
/// end of `path`, together with its G-matrix (columns are g-vectors).
template <ExactInteger Scalar>
class PatternState {
 public:
  /// The root t0: framed matrix, G = I_n.
  template <typename Derived>
  static PatternState root(const Eigen::MatrixBase<Derived>& principal) {
    PatternState s;
    s.root_betas_.resize(principal.rows(), principal.cols());
    s.root_betas_ = principal.template cast<Scalar>();
    s.matrix_ = frame(s.root_betas_);
    s.gmatrix_.resize(principal.rows(), principal.cols());
    s.gmatrix_.setZero();
    s.gmatrix_.diagonal().setConstant(Scalar{1});
    return s;
  }

  const ExchangeMatrix<Scalar>& matrix() const { return matrix_; }
  const Matrix<Scalar>& gmatrix() const { return gmatrix_; }
  const Matrix<Scalar>& root_betas() const { return root_betas_; }
  const MutationSequence& path() const { return path_; }
  Index size() const { return matrix_.cols(); }

  auto cmatrix() const { return matrix_.coefficients(); }

  // Test hook for corrupting a state; not used by the library.
  PatternState with_gmatrix(Matrix<Scalar> g) const {
    PatternState s = *this;
    s.gmatrix_ = std::move(g);
    return s;
  }

  template <ExactInteger S>
  friend PatternState<S> advance(const PatternState<S>& state, Index k);

 private:
  ExchangeMatrix<Scalar> matrix_;
  Matrix<Scalar> gmatrix_;
  Matrix<Scalar> root_betas_;
  MutationSequence path_;
};

/// One edge of the pattern: mutate the matrix at k and replace g_k by
///   -g_k + sum_j [b_jk]_+ g_j - sum_j [b_(n+j)k]_+ beta_j
/// using the entries before mutation.
template <ExactInteger Scalar>
PatternState<Scalar> advance(const PatternState<Scalar>& state, Index k) {
  const Index n = state.size();
  detail::require_mutable(k, n);
  const auto& b = state.matrix_;
  const auto& g = state.gmatrix_;

  Vector<Scalar> gk(n);
  for (Index r = 0; r < n; ++r) {
    Scalar acc = checked_neg(g(r, k));
    for (Index j = 0; j < n; ++j) {
      const Scalar up = positive_part(b(j, k));
      if (up != 0) acc = checked_add(acc, checked_mul(up, g(r, j)));
      const Scalar down = positive_part(b(n + j, k));
      if (down != 0) acc = checked_sub(acc, checked_mul(down, state.root_betas_(r, j)));
    }
    gk(r) = acc;
  }

  PatternState<Scalar> next;
  next.matrix_ = mutate(b, k);
  next.gmatrix_ = g;
  next.gmatrix_.col(k) = gk;
  next.root_betas_ = state.root_betas_;
  next.path_ = state.path_;
  next.path_.push_back(k);
  return next;
}

template <ExactInteger Scalar>
PatternState<Scalar> advance(PatternState<Scalar> state, const MutationSequence& s) {
  for (Index k : s) state = greenseq::advance(state, k);
  return state;
}

/// G^T C == I_n, computed exactly.
template <ExactInteger Scalar>
bool check_duality(const PatternState<Scalar>& state) {
  const Index n = state.size();
  const Matrix<Scalar> c = state.cmatrix();
  const Matrix<Scalar> p = checked_transpose_product(state.gmatrix(), c);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (p(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

/// Every c-vector (column of C) and every row of G is sign-coherent.
template <ExactInteger Scalar>
bool is_sign_coherent(const PatternState<Scalar>& state) {
  for (Index k = 0; k < state.size(); ++k) {
    if (!is_sign_coherent(state.cmatrix().col(k))) return false;
    if (!is_sign_coherent(state.gmatrix().row(k))) return false;
  }
  return true;
}

}  // namespace greenseq
