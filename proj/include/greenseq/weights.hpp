#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace greenseq {

using Rational = boost::rational<std::int64_t>;

enum class WplType { Domestic, Tubular, Wild };

const char* to_string(WplType type);

/// Weight sequence (p_1, ..., p_t) with every p_i >= 1 and t >= 2.
class WeightSequence {
 public:
  WeightSequence(std::initializer_list<int> weights);
  explicit WeightSequence(std::vector<int> weights);

  const std::vector<int>& weights() const { return weights_; }
  int t() const { return static_cast<int>(weights_.size()); }
  int operator[](std::size_t i) const { return weights_[i]; }
  // Sorted descending.
  std::vector<int> normalized() const;
  std::int64_t lcm() const;
  std::string to_string() const;

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

 private:
  std::vector<int> weights_;
};

/// 1 + ((t - 2) p - sum p / p_i) / 2 with p the lcm of the weights.
Rational genus(const WeightSequence& p);

WplType classify(const WeightSequence& p);

/// Classification read off the explicit domestic and tubular lists (weights
/// equal to 1 removed first; they do not change the genus).
WplType listed_type(const WeightSequence& p);

/// The five minimal wild weight sequences.
const std::vector<WeightSequence>& minimal_wild_weights();

/// First minimal wild sequence dominated by p (both sorted descending, the
/// minimal one having no more parts). Throws ArgumentError if p is not wild.
WeightSequence minimal_wild_subweight(const WeightSequence& p);

}  // namespace greenseq
