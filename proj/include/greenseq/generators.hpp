#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greenseq/quiver.hpp"
#include "greenseq/weights.hpp"

namespace greenseq {

// Vertex order of the builders below: O first, then the branch vertices of
// branch 1, 2, ..., t in order of increasing distance from O, then O(c).
// Sequences quoted by label are resolved against this order.

/// Canonical tilting quiver. Labels "O", "O(x1)", "O(2x1)", ..., "O(c)".
/// Chains O -> O(x_i) -> ... -> O((p_i-1)x_i) -> O(c) and t-2 arrows
/// O(c) -> O. A weight p_i = 1 contributes no vertex, only the arrow O -> O(c).
LabeledQuiver build_canonical_quiver(const WeightSequence& p);

/// Squid quiver. Labels "O", "S<i>[<j>]", "O(c)". Two arrows O -> O(c),
/// O(c) -> S_i[p_i-1] -> O and the tail S_i[p_i-1] -> ... -> S_i[1].
LabeledQuiver build_squid_quiver(const WeightSequence& p);

/// Squid quiver of weights (2, ..., 2) with t parts, labelled "diamond"
/// (for O), "1", ..., "t" and "star" (for O(c)).
LabeledQuiver build_hyperbolic_quiver(int t);

/// a arrows 1 -> 2, b arrows 2 -> 3, c arrows 3 -> 1.
LabeledQuiver build_qabc(std::int64_t a, std::int64_t b, std::int64_t c);

/// (b_k, c_k) for k = 1..steps from b_k = a c_{k-1} - b_{k-1},
/// c_k = a b_k - c_{k-1}. Each pair is checked against (mu_2 mu_1)^k applied to
/// build_qabc(a, b, c), together with 0 < b_1 < c_1 < b_2 < ...
/// Requires 2 <= c <= b <= a and a >= 3.
std::vector<std::pair<std::int64_t, std::int64_t>> qabc_power_mutation(std::int64_t a, std::int64_t b,
                                                                       std::int64_t c, int steps);

struct WildWitness {
  WeightSequence weights;
  std::vector<std::string> labels;
  MutationSequence sequence;  // resolved against build_canonical_quiver(weights)
  std::vector<std::int64_t> expected;  // multiplicities of the embedded 3-cycle, ascending
};

/// Mutation sequence on the canonical quiver of a minimal wild weight
/// sequence that produces a full subquiver Q_{a,b,c} with a, b, c >= 2.
WildWitness wild_witness_sequence(const WeightSequence& p);

}  // namespace greenseq
