#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "greenseq/quiver.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

/// One record per isomorphism class, stored as a text file named by a
/// digest of the canonical form:
///
///   n m
///   m rows of n integers (extended exchange matrix of the representative)
///   discovery path, 1-based, space separated (empty line for the root)
class ClassStore {
 public:
  struct Record {
    ExtendedExchangeMatrix matrix;
    MutationSequence path;
  };

  explicit ClassStore(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }

  // Writes the record unless one with the same canonical form exists.
  // Returns true if a new file was written.
  bool put(const LabeledQuiver& representative, const MutationSequence& path,
           Index canonical_limit = 16);
  std::optional<Record> get(const LabeledQuiver& q, Index canonical_limit = 16) const;
  std::vector<Record> records() const;

  static std::string digest(const CanonicalForm& form);
  static Record read_record(const std::filesystem::path& file);

 private:
  std::filesystem::path dir_;
};

enum class ClassStatus { Finite, InfiniteWitness, BoundReached };

const char* to_string(ClassStatus status);

struct ClassReport {
  ClassStatus status = ClassStatus::BoundReached;
  std::size_t class_size = 0;             // Finite
  std::optional<MutationSequence> witness;  // InfiniteWitness
  std::int64_t max_multiplicity = 0;      // of the witness quiver
  std::size_t visited = 0;                // distinct classes seen
  double elapsed_seconds = 0;
};

/// Order in which discovered classes are expanded. Breadth expands whole
/// levels; MostArrows repeatedly expands the (up to 64) pending classes with
/// the most arrows, earliest discovery first. Both visit the full closure
/// when it is finite; they differ in which witness is met first.
enum class ExploreOrder { Breadth, MostArrows };

const char* to_string(ExploreOrder order);

struct ExploreOptions {
  std::size_t max_states = 100000;
  ExploreOrder order = ExploreOrder::MostArrows;
  std::int64_t max_mult = 3;
  unsigned workers = 1;
  Index canonical_limit = 16;
  ClassStore* store = nullptr;
};

/// Some arrow of multiplicity >= max_mult lies in a connected component with
/// at least three vertices.
bool exceeds_multiplicity(const LabeledQuiver& q, std::int64_t max_mult);

/// Walk over isomorphism classes reachable by mutation. Returns
/// InfiniteWitness as soon as a reached quiver exceeds max_mult, Finite with
/// the exact class size once the closure is complete, and BoundReached when
/// max_states classes were seen first. With ExploreOrder::Breadth the witness
/// is the lexicographically least among shortest witnesses. Results do not
/// depend on the worker count.
ClassReport explore_class(const LabeledQuiver& q, const ExploreOptions& options);
ClassReport explore_class(const LabeledQuiver& q, std::size_t max_states, std::int64_t max_mult = 3);

struct PathOutcome {
  std::optional<MutationSequence> path;  // mu_path(q1) is isomorphic to q2
  bool class_closed = false;             // no path exists at all
  std::size_t visited = 0;
};

/// Bidirectional breadth-first search up to isomorphism. Throws
/// ArgumentError when the vertex or frozen counts differ.
PathOutcome find_mutation_path(const LabeledQuiver& q1, const LabeledQuiver& q2, std::size_t max_states,
                               Index canonical_limit = 16);

struct Obstruction {
  std::optional<MutationSequence> path;
  std::optional<EmbeddedCycle> cycle;  // in mu_path(q)
  bool class_closed = false;           // whole class scanned without a hit
  std::size_t visited = 0;
};

/// Searches the mutation class for a quiver with a full subquiver Q_{a,b,c},
/// a, b, c >= 2. Such a quiver admits no maximal green sequence.
Obstruction find_obstruction(const LabeledQuiver& q, std::size_t max_states,
                             ExploreOrder order = ExploreOrder::MostArrows, Index canonical_limit = 16);

}  // namespace greenseq
