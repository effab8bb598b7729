#include "greenseq/weights.hpp"

#include <algorithm>
#include <numeric>

#include "greenseq/checked.hpp"
#include "greenseq/errors.hpp"

namespace greenseq {

const char* to_string(WplType type) {
  switch (type) {
    case WplType::Domestic: return "domestic";
    case WplType::Tubular: return "tubular";
    case WplType::Wild: return "wild";
  }
  return "?";
}

WeightSequence::WeightSequence(std::initializer_list<int> weights) : WeightSequence(std::vector<int>(weights)) {}

WeightSequence::WeightSequence(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw ArgumentError("a weight sequence needs at least two weights");
  for (int w : weights_)
    if (w < 1) throw ArgumentError("weights must be positive integers");
}

std::vector<int> WeightSequence::normalized() const {
  auto out = weights_;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::int64_t WeightSequence::lcm() const {
  std::int64_t acc = 1;
  for (int w : weights_) acc = checked_mul(acc / std::gcd(acc, std::int64_t{w}), std::int64_t{w});
  return acc;
}

std::string WeightSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) out += (i ? "," : "") + std::to_string(weights_[i]);
  return out + ")";
}

Rational genus(const WeightSequence& p) {
  const std::int64_t l = p.lcm();
  std::int64_t twice = checked_mul(std::int64_t{p.t() - 2}, l);
  for (int w : p.weights()) twice = checked_sub(twice, l / w);
  return Rational(1) + Rational(twice, 2);
}

WplType classify(const WeightSequence& p) {
  const Rational g = genus(p);
  if (g < Rational(1)) return WplType::Domestic;
  if (g == Rational(1)) return WplType::Tubular;
  return WplType::Wild;
}

WplType listed_type(const WeightSequence& p) {
  std::vector<int> w;
  for (int x : p.normalized())
    if (x > 1) w.push_back(x);
  std::sort(w.begin(), w.end());
  using V = std::vector<int>;
  // (1,p) and (p,q) reduce to at most two weights.
  if (w.size() <= 2) return WplType::Domestic;
  if (w.size() == 3) {
    if (w[0] == 2 && w[1] == 2) return WplType::Domestic;
    if (w == V{2, 3, 3} || w == V{2, 3, 4} || w == V{2, 3, 5}) return WplType::Domestic;
    if (w == V{3, 3, 3} || w == V{2, 4, 4} || w == V{2, 3, 6}) return WplType::Tubular;
    return WplType::Wild;
  }
  if (w == V{2, 2, 2, 2}) return WplType::Tubular;
  return WplType::Wild;
}

const std::vector<WeightSequence>& minimal_wild_weights() {
  static const std::vector<WeightSequence> list{
      {2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {2, 2, 2, 3}, {2, 2, 2, 2, 2}};
  return list;
}

WeightSequence minimal_wild_subweight(const WeightSequence& p) {
  if (classify(p) != WplType::Wild) throw ArgumentError(p.to_string() + " is not of wild type");
  const auto big = p.normalized();
  for (const auto& candidate : minimal_wild_weights()) {
    const auto small = candidate.normalized();
    if (small.size() > big.size()) continue;
    bool dominated = true;
    for (std::size_t i = 0; i < small.size() && dominated; ++i) dominated = small[i] <= big[i];
    if (dominated) return candidate;
  }
  throw InvariantViolation("wild weight sequence " + p.to_string() + " dominates no minimal wild sequence");
}

}  // namespace greenseq
