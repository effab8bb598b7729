#include "greenseq/green.hpp"

#include <unordered_set>

#include "greenseq/generators.hpp"
#include "parallel.hpp"

namespace greenseq {

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Green: return "green";
    case SequenceKind::MaximalGreen: return "maximal-green";
    case SequenceKind::GreenToRed: return "green-to-red";
    case SequenceKind::Invalid: return "invalid";
  }
  return "?";
}

std::optional<SequenceKind> parse_sequence_kind(std::string_view text) {
  if (text == "green") return SequenceKind::Green;
  if (text == "maximal-green" || text == "mgs") return SequenceKind::MaximalGreen;
  if (text == "green-to-red" || text == "g2r") return SequenceKind::GreenToRed;
  return std::nullopt;
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNoneExists: return "exhausted-none-exists";
    case SearchStatus::BoundReached: return "bound-reached";
  }
  return "?";
}

bool SequenceVerdict::confirms(SequenceKind requested) const {
  if (kind == SequenceKind::Invalid) return false;
  if (kind == SequenceKind::MaximalGreen) return true;
  return kind == requested;
}

SequenceVerdict verify_sequence(const LabeledQuiver& q, const MutationSequence& s, SequenceKind requested) {
  if (requested == SequenceKind::Invalid) throw ArgumentError("cannot request verification of kind 'invalid'");
  const auto principal = mutable_part(q).skew();
  const Index n = principal.rows();
  if (!s.valid_for(n))
    throw ArgumentError("sequence " + s.to_string() + " has a step outside 1.." + std::to_string(n));

  auto b = frame(principal);
  std::optional<std::size_t> first_red;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!first_red && color_of(b, s[i]) == VertexColor::Red) first_red = i + 1;
    b = mutate(b, s[i]);
  }

  SequenceVerdict v;
  v.permutation = negative_permutation(b.coefficients());
  v.final_matrix = b;
  const bool green = !first_red.has_value();
  const bool all_red = v.permutation.has_value();
  const std::size_t terminal = s.size() + 1;

  switch (requested) {
    case SequenceKind::Green:
      v.kind = green ? (all_red ? SequenceKind::MaximalGreen : SequenceKind::Green) : SequenceKind::Invalid;
      if (!green) v.failure_step = first_red;
      break;
    case SequenceKind::MaximalGreen:
      v.kind = green && all_red ? SequenceKind::MaximalGreen : SequenceKind::Invalid;
      if (!green) v.failure_step = first_red;
      else if (!all_red) v.failure_step = terminal;
      break;
    case SequenceKind::GreenToRed:
      v.kind = all_red ? (green ? SequenceKind::MaximalGreen : SequenceKind::GreenToRed) : SequenceKind::Invalid;
      if (!all_red) v.failure_step = terminal;
      break;
    case SequenceKind::Invalid: break;
  }
  return v;
}

bool final_state_is_coframed(const LabeledQuiver& q, const SequenceVerdict& verdict) {
  if (!verdict.permutation) return false;
  const auto b = mutable_part(q).skew();
  const auto& sigma = *verdict.permutation;
  const auto r = verdict.final_matrix.principal();
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      if (r(i, j) != b(sigma[i], sigma[j])) return false;
  return true;
}

namespace {

struct Node {
  ExtendedExchangeMatrix matrix;
  MutationSequence path;
};

std::vector<std::int64_t> state_key(const ExtendedExchangeMatrix& b) {
  const auto& e = b.entries();
  return std::vector<std::int64_t>(e.data(), e.data() + e.size());
}

SearchOutcome breadth_first(const LabeledQuiver& q, const SearchOptions& opt, bool green_only) {
  const auto principal = mutable_part(q).skew();
  const Index n = principal.rows();
  SearchOutcome out;

  Node root{frame(principal), {}};
  if (all_red(root.matrix)) {
    out.status = SearchStatus::Found;
    out.sequence = MutationSequence{};
    return out;
  }

  std::unordered_set<std::vector<std::int64_t>, detail::KeyHash> seen;
  if (opt.dedupe) seen.insert(state_key(root.matrix));
  out.stats.distinct_states = 1;

  std::vector<Node> frontier{std::move(root)};
  for (std::size_t depth = 0; depth < opt.max_len && !frontier.empty(); ++depth) {
    std::vector<std::vector<Node>> children(frontier.size());
    std::vector<std::size_t> overflowed(frontier.size(), 0);
    detail::parallel_for(frontier.size(), opt.workers, [&](std::size_t i) {
      const Node& node = frontier[i];
      const Index last = node.path.empty() ? -1 : node.path.steps().back();
      for (Index k = 0; k < n; ++k) {
        if (green_only ? color_of(node.matrix, k) == VertexColor::Red : k == last) continue;
        try {
          Node child{mutate(node.matrix, k), node.path};
          child.path.push_back(k);
          children[i].push_back(std::move(child));
        } catch (const OverflowError&) {
          ++overflowed[i];
        }
      }
    });
    for (auto c : overflowed) out.stats.overflow_pruned += c;
    out.stats.states_expanded += frontier.size();
    out.stats.max_depth = depth + 1;

    std::vector<Node> next;
    for (auto& group : children)
      for (auto& child : group) {
        if (all_red(child.matrix)) {
          if (!negative_permutation(child.matrix.coefficients()))
            throw InvariantViolation("all-red state whose C-matrix is not a permutation of -I");
          out.status = SearchStatus::Found;
          out.sequence = std::move(child.path);
          return out;
        }
        if (opt.dedupe && !seen.insert(state_key(child.matrix)).second) continue;
        ++out.stats.distinct_states;
        next.push_back(std::move(child));
        if (opt.max_states && out.stats.distinct_states >= opt.max_states) {
          out.status = SearchStatus::BoundReached;
          return out;
        }
      }
    frontier = std::move(next);
  }
  // A pruned branch might still have led somewhere.
  const bool complete = frontier.empty() && out.stats.overflow_pruned == 0;
  out.status = complete ? SearchStatus::ExhaustedNoneExists : SearchStatus::BoundReached;
  return out;
}

}  // namespace

SearchOutcome search_mgs(const LabeledQuiver& q, const SearchOptions& options) {
  if (options.max_len < 1) throw ArgumentError("max_len must be at least 1");
  auto out = breadth_first(q, options, true);
  if (out.sequence && !verify_sequence(q, *out.sequence).confirms(SequenceKind::MaximalGreen))
    throw InvariantViolation("search returned a sequence that does not verify");
  return out;
}

SearchOutcome search_mgs(const LabeledQuiver& q, std::size_t max_len, bool dedupe) {
  SearchOptions opt;
  opt.max_len = max_len;
  opt.dedupe = dedupe;
  return search_mgs(q, opt);
}

SearchOutcome search_green_to_red(const LabeledQuiver& q, const SearchOptions& options) {
  if (options.max_len < 1) throw ArgumentError("max_len must be at least 1");
  auto out = breadth_first(q, options, false);
  if (out.sequence && !verify_sequence(q, *out.sequence, SequenceKind::GreenToRed).confirms(SequenceKind::GreenToRed))
    throw InvariantViolation("search returned a sequence that does not verify");
  return out;
}

MutationSequence acyclic_mgs(const LabeledQuiver& q) {
  const auto mp = mutable_part(q);
  auto order = topological_order(mp);
  if (!order) throw ArgumentError("acyclic_mgs requires an acyclic quiver");
  MutationSequence s(std::move(*order));
  if (!verify_sequence(mp, s).confirms(SequenceKind::MaximalGreen))
    throw InvariantViolation("sources-first order of an acyclic quiver is not maximal green");
  return s;
}

MutationSequence compose_triangular_mgs(const LabeledQuiver& q, const TriangularSplit& split,
                                        const MutationSequence& upper_mgs, const MutationSequence& lower_mgs) {
  const auto mp = mutable_part(q);
  if (!is_triangular_split(mp, split)) throw ArgumentError("not a triangular split of the quiver");
  auto lift = [](const VertexSet& part, const MutationSequence& s) {
    MutationSequence out;
    for (Index k : s) {
      if (k < 0 || k >= static_cast<Index>(part.size())) throw ArgumentError("sequence step outside its part");
      out.push_back(part[static_cast<std::size_t>(k)]);
    }
    return out;
  };
  if (!verify_sequence(full_subquiver(mp, split.upper), upper_mgs).confirms(SequenceKind::MaximalGreen))
    throw ArgumentError("upper sequence is not a maximal green sequence of the upper part");
  if (!verify_sequence(full_subquiver(mp, split.lower), lower_mgs).confirms(SequenceKind::MaximalGreen))
    throw ArgumentError("lower sequence is not a maximal green sequence of the lower part");

  const auto up = lift(split.upper, upper_mgs);
  const auto lo = lift(split.lower, lower_mgs);
  for (bool lower_first : {true, false}) {
    MutationSequence s = lower_first ? lo : up;
    s.append(lower_first ? up : lo);
    if (verify_sequence(mp, s).confirms(SequenceKind::MaximalGreen)) return s;
  }
  throw ConstructionError("neither concatenation order of the part sequences is maximal green");
}

namespace {

// The unique pair carrying more than one arrow, as (source, target).
std::pair<Index, Index> unique_double_arrow(const LabeledQuiver& q, int stage) {
  std::optional<std::pair<Index, Index>> found;
  for (Index i = 0; i < q.vertex_count(); ++i)
    for (Index j = 0; j < q.vertex_count(); ++j) {
      const auto m = q.arrows(i, j);
      if (m < 2) continue;
      if (found || m != 2)
        throw ConstructionError("stage " + std::to_string(stage) + ": multiple arrows are not a unique double arrow");
      found = std::pair{i, j};
    }
  if (!found) throw ConstructionError("stage " + std::to_string(stage) + ": no double arrow");
  return *found;
}

}  // namespace

std::vector<HyperbolicStage> hyperbolic_chain(int t) {
  if (t < 3) throw ArgumentError("hyperbolic_mgs requires t >= 3");
  std::vector<HyperbolicStage> chain;
  std::vector<std::string> labels{"diamond", "1", "2", "diamond", "star", "3", "2", "1", "star", "diamond"};
  for (int s = 3; s <= t; ++s) {
    const auto q = build_hyperbolic_quiver(s);
    HyperbolicStage stage{s, labels, q.resolve(labels), {}, {}};
    if (!verify_sequence(q, stage.sequence).confirms(SequenceKind::MaximalGreen))
      throw ConstructionError("stage " + std::to_string(s) + ": sequence is not maximal green");
    const auto mutated = mutate(q, stage.sequence);
    const auto [src, dst] = unique_double_arrow(mutated, s);
    stage.double_source = q.label(src);
    stage.double_target = q.label(dst);
    // After the first extension the double arrow points into the newest vertex.
    if (s > 3 && (stage.double_source != chain.back().double_target || stage.double_target != std::to_string(s)))
      throw ConstructionError("stage " + std::to_string(s) + ": double arrow is not " + chain.back().double_target +
                              " => " + std::to_string(s));
    labels.push_back(std::to_string(s + 1));
    labels.push_back(stage.double_target);
    labels.push_back(stage.double_source);
    chain.push_back(std::move(stage));
  }
  return chain;
}

MutationSequence hyperbolic_mgs(int t) { return hyperbolic_chain(t).back().sequence; }

namespace {

std::optional<MutationSequence> strongly_connected_mgs(const LabeledQuiver& q, std::size_t search_len) {
  const Index n = q.vertex_count();
  if (n == 1) return MutationSequence{0};
  // Q_t has t + 2 vertices.
  if (n >= 5 && n <= 16) {
    const int t = static_cast<int>(n) - 2;
    const auto model = build_hyperbolic_quiver(t);
    const auto cq = canonical_form(q, n);
    const auto cm = canonical_form(model, n);
    if (cq == cm) {
      // model vertex cm.order[i] corresponds to q vertex cq.order[i]
      std::vector<Index> to_q(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) to_q[cm.order[i]] = cq.order[i];
      MutationSequence s;
      for (Index k : hyperbolic_mgs(t)) s.push_back(to_q[k]);
      return s;
    }
  }
  auto found = search_mgs(q, search_len);
  return found.sequence;
}

}  // namespace

std::optional<MutationSequence> construct_mgs(const LabeledQuiver& q, std::size_t search_len) {
  const auto mp = mutable_part(q);
  if (mp.vertex_count() == 0) return MutationSequence{};
  auto split = find_triangular_split(mp);
  if (!split) return strongly_connected_mgs(mp, search_len);
  auto upper = construct_mgs(full_subquiver(mp, split->upper), search_len);
  if (!upper) return std::nullopt;
  auto lower = construct_mgs(full_subquiver(mp, split->lower), search_len);
  if (!lower) return std::nullopt;
  return compose_triangular_mgs(mp, *split, *upper, *lower);
}

}  // namespace greenseq
