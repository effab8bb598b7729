#include <algorithm>

#include "greenseq/quiver.hpp"

namespace greenseq {
namespace {

using Colors = std::vector<Index>;

// Relabel colours to 0..k-1 preserving their relative order.
Index compress(Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& c : colors) c = std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin();
  return static_cast<Index>(sorted.size());
}

// Colour refinement by the multiset of (neighbour colour, signed multiplicity).
// Signatures start with the old colour, so the old cell order is kept.
void refine(const IntMatrix& s, Colors& colors) {
  const Index n = s.rows();
  Index cells = compress(colors);
  while (cells < n) {
    using Signature = std::pair<Index, std::vector<std::pair<Index, std::int64_t>>>;
    std::vector<Signature> sig(static_cast<std::size_t>(n));
    for (Index v = 0; v < n; ++v) {
      auto& [own, nbrs] = sig[v];
      own = colors[v];
      for (Index u = 0; u < n; ++u)
        if (s(v, u) != 0) nbrs.emplace_back(colors[u], s(v, u));
      std::sort(nbrs.begin(), nbrs.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<Index>(distinct.size()) == cells) return;
    for (Index v = 0; v < n; ++v)
      colors[v] = std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin();
    cells = static_cast<Index>(distinct.size());
  }
}

// u and v are interchangeable: no arrows between them and identical arrows
// to every other vertex.
bool twins(const IntMatrix& s, Index u, Index v) {
  if (s(u, v) != 0) return false;
  for (Index x = 0; x < s.rows(); ++x)
    if (x != u && x != v && s(u, x) != s(v, x)) return false;
  return true;
}

struct Search {
  const IntMatrix& s;
  bool have_best = false;
  IntMatrix best;
  std::vector<Index> best_order;

  void leaf(const Colors& colors) {
    const Index n = s.rows();
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index v = 0; v < n; ++v) order[colors[v]] = v;
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = s(order[i], order[j]);
    if (!have_best || std::lexicographical_compare(m.reshaped<Eigen::RowMajor>().begin(),
                                                   m.reshaped<Eigen::RowMajor>().end(),
                                                   best.reshaped<Eigen::RowMajor>().begin(),
                                                   best.reshaped<Eigen::RowMajor>().end())) {
      best = std::move(m);
      best_order = std::move(order);
      have_best = true;
    }
  }

  void run(Colors colors) {
    refine(s, colors);
    const Index n = s.rows();
    // First non-singleton cell.
    std::vector<Index> count(static_cast<std::size_t>(n), 0);
    for (Index c : colors) ++count[c];
    Index target = -1;
    for (Index c = 0; c < n && target < 0; ++c)
      if (count[c] > 1) target = c;
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Index> tried;
    for (Index v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Index t) { return twins(s, t, v); })) continue;
      tried.push_back(v);
      Colors next(colors.size());
      for (Index x = 0; x < n; ++x) next[x] = 2 * colors[x] + (colors[x] == target && x != v ? 1 : 0);
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<std::int64_t> CanonicalForm::key() const {
  std::vector<std::int64_t> k;
  k.reserve(static_cast<std::size_t>(matrix.size() + 2));
  k.push_back(matrix.rows());
  k.push_back(frozen_count);
  for (Index i = 0; i < matrix.rows(); ++i)
    for (Index j = 0; j < matrix.cols(); ++j) k.push_back(matrix(i, j));
  return k;
}

CanonicalForm canonical_form(const LabeledQuiver& q, Index max_vertices) {
  const Index n = q.vertex_count();
  if (n > max_vertices)
    throw CapabilityError("canonical form limited to " + std::to_string(max_vertices) + " vertices, got " +
                          std::to_string(n));
  if (n == 0) return CanonicalForm{IntMatrix(0, 0), 0, {}};
  Colors colors(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) colors[v] = q.is_frozen(v) ? 1 : 0;
  Search search{q.skew(), false, {}, {}};
  search.run(std::move(colors));
  return CanonicalForm{std::move(search.best), q.frozen_count(), std::move(search.best_order)};
}

bool isomorphic(const LabeledQuiver& a, const LabeledQuiver& b, Index max_vertices) {
  if (a.vertex_count() != b.vertex_count() || a.frozen_count() != b.frozen_count()) return false;
  return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace greenseq
