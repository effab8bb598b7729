#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "greenseq/exchange_matrix.hpp"

namespace greenseq {

/// Ordered mutation steps, applied first to last. Steps are stored 0-based;
/// text forms are 1-based.
class MutationSequence {
 public:
  MutationSequence() = default;
  MutationSequence(std::initializer_list<Index> zero_based) : steps_(zero_based) {}
  explicit MutationSequence(std::vector<Index> zero_based) : steps_(std::move(zero_based)) {}

  static MutationSequence from_one_based(const std::vector<Index>& one_based) {
    MutationSequence s;
    for (Index v : one_based) s.steps_.push_back(v - 1);
    return s;
  }

  std::vector<Index> one_based() const {
    std::vector<Index> out;
    out.reserve(steps_.size());
    for (Index v : steps_) out.push_back(v + 1);
    return out;
  }

  const std::vector<Index>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Index operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const { return steps_.begin(); }
  auto end() const { return steps_.end(); }

  void push_back(Index k) { steps_.push_back(k); }
  MutationSequence& append(const MutationSequence& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
  }

  // Every step lies in [0, n).
  bool valid_for(Index n) const {
    for (Index k : steps_)
      if (k < 0 || k >= n) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(steps_[i] + 1);
    }
    return out;
  }

  friend bool operator==(const MutationSequence&, const MutationSequence&) = default;
  friend auto operator<=>(const MutationSequence&, const MutationSequence&) = default;

 private:
  std::vector<Index> steps_;
};

template <ExactInteger Scalar>
ExchangeMatrix<Scalar> mutate(ExchangeMatrix<Scalar> b, const MutationSequence& s) {
  for (Index k : s) b = mutate(b, k);
  return b;
}

}  // namespace greenseq
