#include "greenseq/generators.hpp"

#include <algorithm>

#include "greenseq/checked.hpp"
#include "greenseq/errors.hpp"

namespace greenseq {
namespace {

std::string line_bundle(int multiple, int branch) {
  return "O(" + (multiple == 1 ? std::string() : std::to_string(multiple)) + "x" + std::to_string(branch) + ")";
}

}  // namespace

LabeledQuiver build_canonical_quiver(const WeightSequence& p) {
  std::vector<std::string> labels{"O"};
  std::vector<std::vector<Index>> branches;
  for (int i = 0; i < p.t(); ++i) {
    std::vector<Index> ids;
    for (int j = 1; j < p[i]; ++j) {
      ids.push_back(static_cast<Index>(labels.size()));
      labels.push_back(line_bundle(j, i + 1));
    }
    branches.push_back(std::move(ids));
  }
  const Index top = static_cast<Index>(labels.size());
  labels.push_back("O(c)");

  std::vector<Arrow> arrows;
  for (const auto& ids : branches) {
    Index prev = 0;
    for (Index v : ids) {
      arrows.push_back({prev, v, 1});
      prev = v;
    }
    arrows.push_back({prev, top, 1});
  }
  if (p.t() > 2) arrows.push_back({top, 0, p.t() - 2});
  return LabeledQuiver::from_arrows(top + 1, arrows, 0, std::move(labels));
}

LabeledQuiver build_squid_quiver(const WeightSequence& p) {
  std::vector<std::string> labels{"O"};
  std::vector<std::vector<Index>> tails;
  for (int i = 0; i < p.t(); ++i) {
    std::vector<Index> ids;
    for (int j = p[i] - 1; j >= 1; --j) {
      ids.push_back(static_cast<Index>(labels.size()));
      labels.push_back("S" + std::to_string(i + 1) + "[" + std::to_string(j) + "]");
    }
    tails.push_back(std::move(ids));
  }
  const Index top = static_cast<Index>(labels.size());
  labels.push_back("O(c)");

  std::vector<Arrow> arrows{{0, top, 2}};
  for (const auto& ids : tails) {
    if (ids.empty()) continue;
    arrows.push_back({top, ids.front(), 1});
    arrows.push_back({ids.front(), 0, 1});
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) arrows.push_back({ids[k], ids[k + 1], 1});
  }
  return LabeledQuiver::from_arrows(top + 1, arrows, 0, std::move(labels));
}

LabeledQuiver build_hyperbolic_quiver(int t) {
  if (t < 2) throw ArgumentError("hyperbolic quiver needs t >= 2");
  auto q = build_squid_quiver(WeightSequence(std::vector<int>(static_cast<std::size_t>(t), 2)));
  std::vector<std::string> labels{"diamond"};
  for (int i = 1; i <= t; ++i) labels.push_back(std::to_string(i));
  labels.push_back("star");
  return q.relabeled(std::move(labels));
}

LabeledQuiver build_qabc(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0) throw ArgumentError("Q_{a,b,c} needs nonnegative multiplicities");
  return LabeledQuiver::from_arrows(3, {{0, 1, a}, {1, 2, b}, {2, 0, c}});
}

std::vector<std::pair<std::int64_t, std::int64_t>> qabc_power_mutation(std::int64_t a, std::int64_t b,
                                                                       std::int64_t c, int steps) {
  if (!(2 <= c && c <= b && b <= a && a >= 3)) throw ArgumentError("requires 2 <= c <= b <= a and a >= 3");
  if (steps < 0) throw ArgumentError("steps must be nonnegative");

  std::vector<std::pair<std::int64_t, std::int64_t>> values;
  auto quiver = build_qabc(a, b, c);
  std::int64_t bk = b, ck = c, last = 0;
  for (int k = 1; k <= steps; ++k) {
    bk = checked_sub(checked_mul(a, ck), bk);
    ck = checked_sub(checked_mul(a, bk), ck);
    if (!(last < bk && bk < ck))
      throw InvariantViolation("monotonicity 0 < b_1 < c_1 < ... fails at step " + std::to_string(k));
    last = ck;
    quiver = mutate(mutate(quiver, 0), 1);
    if (!(quiver == build_qabc(a, bk, ck)))
      throw InvariantViolation("(mu_2 mu_1)^" + std::to_string(k) + " does not give Q_{a,b_k,c_k}");
    values.emplace_back(bk, ck);
  }
  return values;
}

WildWitness wild_witness_sequence(const WeightSequence& p) {
  using L = std::vector<std::string>;
  const auto w = p.weights();
  WildWitness out{p, {}, {}, {2, 2, 3}};
  if (w == std::vector<int>{2, 3, 7}) {
    out.labels = L{"O", "O(6x3)", "O(c)", "O(2x3)", "O(x3)", "O(2x2)", "O(6x3)",
                   "O(5x3)", "O(x2)", "O(2x3)", "O(3x3)", "O(2x2)", "O(x3)", "O(c)"};
  } else if (w == std::vector<int>{2, 4, 5}) {
    out.labels = L{"O", "O(c)", "O(x3)", "O(2x3)", "O(3x3)", "O(3x2)",
                   "O(c)", "O(3x3)", "O(4x3)", "O(x2)", "O(2x3)"};
  } else if (w == std::vector<int>{3, 3, 4}) {
    out.labels = L{"O", "O(x1)", "O(x2)", "O(x3)", "O(c)", "O"};
  } else if (w == std::vector<int>{2, 2, 2, 3}) {
    out.labels = L{"O(c)", "O"};
  } else if (w == std::vector<int>{2, 2, 2, 2, 2}) {
    out.labels = L{"O(c)", "O"};
    out.expected = {2, 3, 5};
  } else {
    throw ArgumentError(p.to_string() + " is not one of the five minimal wild weight sequences");
  }
  out.sequence = build_canonical_quiver(p).resolve(out.labels);
  return out;
}

}  // namespace greenseq
