#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/exchange_matrix.hpp"
#include "greenseq/quiver.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

enum class SequenceKind { Green, MaximalGreen, GreenToRed, Invalid };

const char* to_string(SequenceKind kind);
std::optional<SequenceKind> parse_sequence_kind(std::string_view text);

struct SequenceVerdict {
  SequenceKind kind = SequenceKind::Invalid;
  // 1-based position of the offending step; size() + 1 when the final
  // all-red check failed.
  std::optional<std::size_t> failure_step;
  // sigma(i) = j when column i of the final C-matrix is -e_j (0-based).
  std::optional<std::vector<Index>> permutation;
  ExtendedExchangeMatrix final_matrix;

  // Whether this verdict confirms a request for `requested`.
  bool confirms(SequenceKind requested) const;
};

/// Frame the mutable part of q and replay s. Green and MaximalGreen requests
/// check that every step mutates a green vertex; MaximalGreen and GreenToRed
/// requests check that the final C-matrix is a permutation of -I_n. The
/// reported kind is the strongest one that holds (MaximalGreen over Green or
/// GreenToRed). Throws ArgumentError on an out-of-range step.
SequenceVerdict verify_sequence(const LabeledQuiver& q, const MutationSequence& s,
                                SequenceKind requested = SequenceKind::MaximalGreen);

/// For a maximal green verdict: the final framed quiver is the coframed quiver
/// relabelled by sigma with frozen vertices fixed, i.e. the final principal
/// part R satisfies R(a, b) = B(sigma(a), sigma(b)).
bool final_state_is_coframed(const LabeledQuiver& q, const SequenceVerdict& verdict);

enum class SearchStatus { Found, ExhaustedNoneExists, BoundReached };

const char* to_string(SearchStatus status);

struct SearchStats {
  std::size_t states_expanded = 0;
  std::size_t distinct_states = 0;
  std::size_t max_depth = 0;
  std::size_t overflow_pruned = 0;  // children dropped because an entry left int64
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::BoundReached;
  std::optional<MutationSequence> sequence;
  SearchStats stats;
};

struct SearchOptions {
  std::size_t max_len = 20;
  bool dedupe = true;
  unsigned workers = 1;
  // Stop with BoundReached once this many distinct states are stored (0 = no cap).
  std::size_t max_states = 0;
};

/// Breadth-first search over green mutations from the framed quiver. The
/// first all-red state in (depth, path-lexicographic) order is returned, so
/// the result is a shortest maximal green sequence and does not depend on
/// the worker count. ExhaustedNoneExists is reported only if no state was cut
/// off by max_len, max_states or int64 overflow.
SearchOutcome search_mgs(const LabeledQuiver& q, const SearchOptions& options);
SearchOutcome search_mgs(const LabeledQuiver& q, std::size_t max_len, bool dedupe = true);

/// Same search over arbitrary mutations, looking for a green-to-red sequence.
SearchOutcome search_green_to_red(const LabeledQuiver& q, const SearchOptions& options);

/// Sources-first order of an acyclic quiver; verified before returning.
/// Throws ArgumentError if q has an oriented cycle.
MutationSequence acyclic_mgs(const LabeledQuiver& q);

/// Combine maximal green sequences of the two parts of a triangular
/// extension. Tries lower-then-upper, then upper-then-lower, and returns the
/// first that verifies; throws ConstructionError if neither does.
MutationSequence compose_triangular_mgs(const LabeledQuiver& q, const TriangularSplit& split,
                                        const MutationSequence& upper_mgs, const MutationSequence& lower_mgs);

struct HyperbolicStage {
  int t = 0;
  std::vector<std::string> labels;  // the sequence, by label of build_hyperbolic_quiver(t)
  MutationSequence sequence;        // resolved against build_hyperbolic_quiver(t)
  std::string double_source;        // the unique double arrow of the mutated quiver
  std::string double_target;
};

/// Maximal green sequences of Q_3, ..., Q_t. Q_3 starts from the explicit
/// ten-step sequence; each later stage appends (s+1, target, source) where
/// source => target is the unique double arrow after the previous stage.
/// Every stage is verified and the uniqueness of the double arrow checked;
/// failures throw ConstructionError naming the stage.
std::vector<HyperbolicStage> hyperbolic_chain(int t);
MutationSequence hyperbolic_mgs(int t);

/// Builds a maximal green sequence by splitting off sink components and
/// composing; strongly connected pieces are handled as a single vertex, a
/// hyperbolic quiver Q_t (t >= 3, via hyperbolic_mgs), or by search_mgs with
/// the given bound. Returns nullopt if some piece has no sequence within bound.
std::optional<MutationSequence> construct_mgs(const LabeledQuiver& q, std::size_t search_len = 12);

}  // namespace greenseq
