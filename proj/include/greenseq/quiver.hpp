#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greenseq/exchange_matrix.hpp"
#include "greenseq/sequence.hpp"

namespace greenseq {

struct Arrow {
  Index from;
  Index to;
  std::int64_t multiplicity;
};

/// Sorted set of vertex positions.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Index> members);
  explicit VertexSet(std::vector<Index> members);

  static VertexSet all(Index n);

  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Index v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Index operator[](std::size_t i) const { return members_[i]; }

  // Position of v within the set, if present.
  std::optional<Index> position(Index v) const;
  VertexSet complement(Index n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Index> members_;
};

/// A quiver without loops or 2-cycles. The last frozen_count() vertices are
/// frozen and carry no arrows between themselves. Arrows are held as a square
/// skew-symmetric matrix with entry (i, j) = #(j -> i) - #(i -> j). Labels are
/// metadata only and do not take part in equality.
class LabeledQuiver {
 public:
  LabeledQuiver() = default;
  LabeledQuiver(IntMatrix skew, Index frozen_count = 0, std::vector<std::string> labels = {});

  static LabeledQuiver from_arrows(Index vertex_count, const std::vector<Arrow>& arrows,
                                   Index frozen_count = 0, std::vector<std::string> labels = {});

  Index vertex_count() const { return skew_.rows(); }
  Index frozen_count() const { return frozen_; }
  Index mutable_count() const { return vertex_count() - frozen_; }
  bool is_frozen(Index v) const { return v >= mutable_count(); }

  const IntMatrix& skew() const { return skew_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index v) const { return labels_[static_cast<std::size_t>(v)]; }

  // Number of arrows from -> to (zero if the arrows run the other way).
  std::int64_t arrows(Index from, Index to) const;
  std::vector<Arrow> arrow_list() const;
  std::int64_t max_multiplicity() const;

  std::optional<Index> find(std::string_view label) const;
  // Like find, but throws ArgumentError naming the known labels.
  Index index_of(std::string_view label) const;
  MutationSequence resolve(const std::vector<std::string>& labels) const;

  LabeledQuiver relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const LabeledQuiver& a, const LabeledQuiver& b) {
    return a.frozen_ == b.frozen_ && a.skew_.rows() == b.skew_.rows() && a.skew_ == b.skew_;
  }

 private:
  IntMatrix skew_;
  Index frozen_ = 0;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(Index n);

/// m x n extended exchange matrix (n mutable columns, frozen rows last).
ExtendedExchangeMatrix to_matrix(const LabeledQuiver& q);
LabeledQuiver from_matrix(const ExtendedExchangeMatrix& b, std::vector<std::string> labels = {});

LabeledQuiver mutate(const LabeledQuiver& q, Index k);
LabeledQuiver mutate(LabeledQuiver q, const MutationSequence& s);

/// Unframed quiver of the principal part.
LabeledQuiver mutable_part(const LabeledQuiver& q);

LabeledQuiver full_subquiver(const LabeledQuiver& q, const VertexSet& vertices);
LabeledQuiver disjoint_union(const LabeledQuiver& a, const LabeledQuiver& b);
LabeledQuiver permuted(const LabeledQuiver& q, const std::vector<Index>& order);

bool is_acyclic(const LabeledQuiver& q);
// Sources first; nullopt if the quiver has an oriented cycle.
std::optional<std::vector<Index>> topological_order(const LabeledQuiver& q);
std::vector<VertexSet> connected_components(const LabeledQuiver& q);

/// matrix(i, j) = q.skew()(order[i], order[j]).
struct CanonicalForm {
  IntMatrix matrix;
  Index frozen_count = 0;
  std::vector<Index> order;

  // Key ignoring the witnessing permutation.
  std::vector<std::int64_t> key() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.frozen_count == b.frozen_count && a.matrix.rows() == b.matrix.rows() &&
           a.matrix == b.matrix;
  }
};

inline constexpr Index kDefaultCanonicalLimit = 10;

/// Complete isomorphism invariant. Vertices are first ordered by an
/// invariant colour refinement, then the row-major lexicographically least
/// matrix over all orders consistent with that refinement is chosen by
/// individualisation. Frozen vertices only map to frozen vertices.
/// Throws CapabilityError above max_vertices.
CanonicalForm canonical_form(const LabeledQuiver& q, Index max_vertices = kDefaultCanonicalLimit);
bool isomorphic(const LabeledQuiver& a, const LabeledQuiver& b,
                Index max_vertices = kDefaultCanonicalLimit);

/// Q is a triangular extension of upper by lower: no arrows lower -> upper.
struct TriangularSplit {
  VertexSet upper;
  VertexSet lower;
  friend bool operator==(const TriangularSplit&, const TriangularSplit&) = default;
};

bool is_triangular_split(const LabeledQuiver& q, const TriangularSplit& split);

/// Every split whose lower part is a sink strongly connected component; these
/// are exactly the splits with a maximal upper part.
std::vector<TriangularSplit> maximal_triangular_splits(const LabeledQuiver& q);

/// The split with the largest upper part, ties broken by the lexicographically
/// smallest lower part. nullopt when Q is strongly connected.
std::optional<TriangularSplit> find_triangular_split(const LabeledQuiver& q);

/// Three vertices spanning an oriented 3-cycle a: v0 -> v1, b: v1 -> v2,
/// c: v2 -> v0 with every multiplicity >= min_mult. v0 is the smallest vertex.
struct EmbeddedCycle {
  Index v0, v1, v2;
  std::int64_t a, b, c;
  VertexSet vertices() const { return VertexSet{v0, v1, v2}; }
  // Multiplicities sorted ascending.
  std::vector<std::int64_t> multiset() const;
};

std::optional<EmbeddedCycle> find_embedded_qabc(const LabeledQuiver& q, std::int64_t min_mult = 2);

}  // namespace greenseq
