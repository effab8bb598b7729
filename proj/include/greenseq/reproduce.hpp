#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenseq/quiver.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

/// A replayable certificate. Kinds:
///   green, maximal-green, green-to-red   verify_sequence confirms the kind
///   obstruction   mu_sequence(quiver) has a full Q_{a,b,c}, a,b,c >= 2
///                 (with multiset `expect` when given)
///   infinite      mu_sequence(quiver) exceeds multiplicity 2 on >= 3 vertices
///   path          mu_sequence(quiver) is isomorphic to target
///   equal         mu_sequence(quiver) equals target exactly
///   duality       G^T C = I and sign coherence after every step
struct Witness {
  std::string kind;
  LabeledQuiver quiver;
  MutationSequence sequence;
  std::optional<LabeledQuiver> target;
  std::vector<std::int64_t> expect;
};

const std::vector<std::string>& witness_kinds();

/// Replays the witness. Returns true if it holds; `detail` receives a short
/// human-readable account either way.
bool check_witness(const Witness& w, std::string& detail);

enum class ClaimStatus { Confirmed, Inconclusive, Failed };

const char* to_string(ClaimStatus status);

struct Claim {
  std::string scenario;
  std::string name;
  ClaimStatus status = ClaimStatus::Failed;
  std::string detail;
  std::vector<Witness> witnesses;
};

struct ReproduceOptions {
  int t = 12;                    // hyperbolic
  std::size_t bound = 12;        // markov-negative
  std::uint64_t seed = 20240611;  // duality, heredity
  std::size_t max_states = 200000;
  unsigned workers = 1;
};

const std::vector<std::string>& scenario_names();

/// Runs one scenario or "all". Exceptions raised inside a claim mark it
/// Failed. Throws ArgumentError for an unknown scenario.
std::vector<Claim> reproduce(std::string_view scenario, const ReproduceOptions& options);

}  // namespace greenseq
