#include "greenseq/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace greenseq {

VertexSet::VertexSet(std::initializer_list<Index> members) : VertexSet(std::vector<Index>(members)) {}

VertexSet::VertexSet(std::vector<Index> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Index{0});
  return VertexSet(std::move(v));
}

bool VertexSet::contains(Index v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::optional<Index> VertexSet::position(Index v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<Index>(it - members_.begin());
}

VertexSet VertexSet::complement(Index n) const {
  std::vector<Index> out;
  for (Index v = 0; v < n; ++v)
    if (!contains(v)) out.push_back(v);
  return VertexSet(std::move(out));
}

std::vector<std::string> default_labels(Index n) {
  std::vector<std::string> out;
  for (Index i = 0; i < n; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

LabeledQuiver::LabeledQuiver(IntMatrix skew, Index frozen_count, std::vector<std::string> labels)
    : skew_(std::move(skew)), frozen_(frozen_count), labels_(std::move(labels)) {
  if (!is_skew_symmetric(skew_)) throw ArgumentError("quiver matrix must be skew-symmetric with zero diagonal");
  const Index m = skew_.rows();
  if (frozen_ < 0 || frozen_ > m) throw ArgumentError("frozen count out of range");
  for (Index i = m - frozen_; i < m; ++i)
    for (Index j = m - frozen_; j < m; ++j)
      if (skew_(i, j) != 0) throw ArgumentError("arrows between frozen vertices are not allowed");
  if (labels_.empty()) labels_ = default_labels(m);
  if (static_cast<Index>(labels_.size()) != m) throw ArgumentError("label count does not match vertex count");
}

LabeledQuiver LabeledQuiver::from_arrows(Index vertex_count, const std::vector<Arrow>& arrows,
                                         Index frozen_count, std::vector<std::string> labels) {
  IntMatrix skew = IntMatrix::Zero(vertex_count, vertex_count);
  for (const Arrow& a : arrows) {
    if (a.from < 0 || a.from >= vertex_count || a.to < 0 || a.to >= vertex_count)
      throw ArgumentError("arrow endpoint out of range");
    if (a.from == a.to) throw ArgumentError("loops are not allowed");
    if (a.multiplicity < 0) throw ArgumentError("negative arrow multiplicity");
    skew(a.to, a.from) = checked_add(skew(a.to, a.from), a.multiplicity);
    skew(a.from, a.to) = checked_sub(skew(a.from, a.to), a.multiplicity);
  }
  return LabeledQuiver(std::move(skew), frozen_count, std::move(labels));
}

std::int64_t LabeledQuiver::arrows(Index from, Index to) const { return positive_part(skew_(to, from)); }

std::vector<Arrow> LabeledQuiver::arrow_list() const {
  std::vector<Arrow> out;
  for (Index i = 0; i < vertex_count(); ++i)
    for (Index j = 0; j < vertex_count(); ++j)
      if (skew_(j, i) > 0) out.push_back({i, j, skew_(j, i)});
  return out;
}

std::int64_t LabeledQuiver::max_multiplicity() const {
  return skew_.size() == 0 ? 0 : skew_.cwiseAbs().maxCoeff();
}

std::optional<Index> LabeledQuiver::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Index>(i);
  return std::nullopt;
}

Index LabeledQuiver::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  std::string known;
  for (const auto& l : labels_) known += (known.empty() ? "" : ", ") + l;
  throw ArgumentError("unknown vertex label '" + std::string(label) + "'; known labels: " + known);
}

MutationSequence LabeledQuiver::resolve(const std::vector<std::string>& labels) const {
  MutationSequence s;
  for (const auto& l : labels) s.push_back(index_of(l));
  return s;
}

LabeledQuiver LabeledQuiver::relabeled(std::vector<std::string> labels) const {
  return LabeledQuiver(skew_, frozen_, std::move(labels));
}

ExtendedExchangeMatrix to_matrix(const LabeledQuiver& q) {
  return ExtendedExchangeMatrix(q.skew().leftCols(q.mutable_count()));
}

LabeledQuiver from_matrix(const ExtendedExchangeMatrix& b, std::vector<std::string> labels) {
  const Index m = b.rows(), n = b.cols();
  IntMatrix skew = IntMatrix::Zero(m, m);
  skew.leftCols(n) = b.entries();
  skew.bottomRightCorner(m - n, m - n).setZero();
  skew.topRightCorner(n, m - n) = -b.coefficients().transpose();
  return LabeledQuiver(std::move(skew), m - n, std::move(labels));
}

LabeledQuiver mutate(const LabeledQuiver& q, Index k) {
  return from_matrix(mutate(to_matrix(q), k), q.labels());
}

LabeledQuiver mutate(LabeledQuiver q, const MutationSequence& s) {
  if (s.empty()) return q;
  auto b = mutate(to_matrix(q), s);
  return from_matrix(b, q.labels());
}

LabeledQuiver mutable_part(const LabeledQuiver& q) {
  return full_subquiver(q, VertexSet::all(q.mutable_count()));
}

LabeledQuiver full_subquiver(const LabeledQuiver& q, const VertexSet& vertices) {
  const Index k = static_cast<Index>(vertices.size());
  IntMatrix skew(k, k);
  std::vector<std::string> labels;
  Index frozen = 0;
  for (Index i = 0; i < k; ++i) {
    const Index vi = vertices[static_cast<std::size_t>(i)];
    if (vi < 0 || vi >= q.vertex_count()) throw ArgumentError("vertex set out of range");
    labels.push_back(q.label(vi));
    frozen += q.is_frozen(vi) ? 1 : 0;
    for (Index j = 0; j < k; ++j) skew(i, j) = q.skew()(vi, vertices[static_cast<std::size_t>(j)]);
  }
  return LabeledQuiver(std::move(skew), frozen, std::move(labels));
}

LabeledQuiver disjoint_union(const LabeledQuiver& a, const LabeledQuiver& b) {
  if (a.frozen_count() != 0 || b.frozen_count() != 0)
    throw ArgumentError("disjoint union is defined for quivers without frozen vertices");
  const Index na = a.vertex_count(), nb = b.vertex_count();
  IntMatrix skew = IntMatrix::Zero(na + nb, na + nb);
  skew.topLeftCorner(na, na) = a.skew();
  skew.bottomRightCorner(nb, nb) = b.skew();
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LabeledQuiver(std::move(skew), 0, std::move(labels));
}

LabeledQuiver permuted(const LabeledQuiver& q, const std::vector<Index>& order) {
  const Index n = q.vertex_count();
  if (static_cast<Index>(order.size()) != n) throw ArgumentError("permutation has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  IntMatrix skew(n, n);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    const Index oi = order[static_cast<std::size_t>(i)];
    if (oi < 0 || oi >= n || seen[static_cast<std::size_t>(oi)]) throw ArgumentError("not a permutation");
    if (q.is_frozen(oi) != (i >= q.mutable_count()))
      throw ArgumentError("permutation must keep frozen vertices last");
    seen[static_cast<std::size_t>(oi)] = true;
    labels.push_back(q.label(oi));
    for (Index j = 0; j < n; ++j) skew(i, j) = q.skew()(oi, order[static_cast<std::size_t>(j)]);
  }
  return LabeledQuiver(std::move(skew), q.frozen_count(), std::move(labels));
}

std::optional<std::vector<Index>> topological_order(const LabeledQuiver& q) {
  const Index n = q.vertex_count();
  std::vector<Index> indegree(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (q.skew()(i, j) > 0) ++indegree[static_cast<std::size_t>(i)];
  std::vector<Index> order;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  while (static_cast<Index>(order.size()) < n) {
    Index next = -1;
    for (Index v = 0; v < n && next < 0; ++v)
      if (!done[static_cast<std::size_t>(v)] && indegree[static_cast<std::size_t>(v)] == 0) next = v;
    if (next < 0) return std::nullopt;
    done[static_cast<std::size_t>(next)] = true;
    order.push_back(next);
    for (Index j = 0; j < n; ++j)
      if (q.skew()(j, next) > 0) --indegree[static_cast<std::size_t>(j)];
  }
  return order;
}

bool is_acyclic(const LabeledQuiver& q) { return topological_order(q).has_value(); }

std::vector<VertexSet> connected_components(const LabeledQuiver& q) {
  const Index n = q.vertex_count();
  std::vector<Index> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  for (Index s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const Index id = static_cast<Index>(out.size());
    std::vector<Index> stack{s}, members;
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Index u = 0; u < n; ++u)
        if (q.skew()(u, v) != 0 && comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = id;
          stack.push_back(u);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_triangular_split(const LabeledQuiver& q, const TriangularSplit& split) {
  if (split.upper.empty() || split.lower.empty()) return false;
  if (split.upper.size() + split.lower.size() != static_cast<std::size_t>(q.vertex_count())) return false;
  for (Index v : split.lower)
    if (split.upper.contains(v)) return false;
  for (Index lo : split.lower)
    for (Index up : split.upper)
      if (q.arrows(lo, up) > 0) return false;
  return true;
}

std::vector<TriangularSplit> maximal_triangular_splits(const LabeledQuiver& q) {
  const Index n = q.vertex_count();
  // reach(i, j): a path i -> ... -> j of length >= 0.
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (Index j = 0; j < n; ++j)
      if (q.arrows(i, j) > 0) reach[i][j] = true;
  }
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (reach[i][k])
        for (Index j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<TriangularSplit> out;
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  for (Index v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<Index> scc;
    for (Index u = 0; u < n; ++u)
      if (reach[v][u] && reach[u][v]) {
        scc.push_back(u);
        assigned[u] = true;
      }
    // Sink component: everything reachable from v lies inside it.
    bool sink = true;
    for (Index u = 0; u < n && sink; ++u)
      if (reach[v][u] && !reach[u][v]) sink = false;
    if (!sink || static_cast<Index>(scc.size()) == n) continue;
    VertexSet lower(std::move(scc));
    out.push_back({lower.complement(n), lower});
  }
  return out;
}

std::optional<TriangularSplit> find_triangular_split(const LabeledQuiver& q) {
  auto splits = maximal_triangular_splits(q);
  if (splits.empty()) return std::nullopt;
  return *std::min_element(splits.begin(), splits.end(), [](const auto& a, const auto& b) {
    if (a.lower.size() != b.lower.size()) return a.lower.size() < b.lower.size();
    return a.lower < b.lower;
  });
}

std::vector<std::int64_t> EmbeddedCycle::multiset() const {
  std::vector<std::int64_t> m{a, b, c};
  std::sort(m.begin(), m.end());
  return m;
}

std::optional<EmbeddedCycle> find_embedded_qabc(const LabeledQuiver& q, std::int64_t min_mult) {
  if (min_mult < 2) throw ArgumentError("min_mult must be at least 2");
  const Index n = q.vertex_count();
  const auto& s = q.skew();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      if (std::abs(s(j, i)) < min_mult) continue;
      for (Index k = j + 1; k < n; ++k) {
        // Orientation i -> j -> k -> i, or i -> k -> j -> i.
        const std::int64_t ij = s(j, i), jk = s(k, j), ki = s(i, k);
        if (std::min({std::abs(ij), std::abs(jk), std::abs(ki)}) < min_mult) continue;
        if (ij > 0 && jk > 0 && ki > 0) return EmbeddedCycle{i, j, k, ij, jk, ki};
        if (ij < 0 && jk < 0 && ki < 0) return EmbeddedCycle{i, k, j, -ki, -jk, -ij};
      }
    }
  return std::nullopt;
}

}  // namespace greenseq
