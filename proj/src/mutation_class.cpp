#include "greenseq/mutation_class.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "parallel.hpp"

namespace greenseq {

const char* to_string(ExploreOrder order) {
  return order == ExploreOrder::Breadth ? "breadth" : "most-arrows";
}

const char* to_string(ClassStatus status) {
  switch (status) {
    case ClassStatus::Finite: return "finite";
    case ClassStatus::InfiniteWitness: return "infinite-witness";
    case ClassStatus::BoundReached: return "bound-reached";
  }
  return "?";
}

// ---------------------------------------------------------------- store

ClassStore::ClassStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ClassStore::digest(const CanonicalForm& form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : form.key()) {
    auto u = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (u >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ClassStore::Record ClassStore::read_record(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ArgumentError("cannot open class record " + file.string());
  Index n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < n) throw ArgumentError("bad class record header in " + file.string());
  IntMatrix e(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (!(in >> e(i, j))) throw ArgumentError("truncated class record " + file.string());
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::istringstream steps(line);
  std::vector<Index> one_based;
  for (Index k; steps >> k;) one_based.push_back(k);
  return Record{ExtendedExchangeMatrix(std::move(e)), MutationSequence::from_one_based(one_based)};
}

namespace {

void write_record(const std::filesystem::path& file, const ExtendedExchangeMatrix& b, const MutationSequence& path) {
  std::ofstream out(file);
  out << b.cols() << ' ' << b.rows() << '\n';
  for (Index i = 0; i < b.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) out << (j ? " " : "") << b(i, j);
    out << '\n';
  }
  out << path.to_string() << '\n';
  if (!out) throw std::runtime_error("failed writing class record " + file.string());
}

}  // namespace

bool ClassStore::put(const LabeledQuiver& representative, const MutationSequence& path, Index canonical_limit) {
  const auto form = canonical_form(representative, canonical_limit);
  const auto base = digest(form);
  for (int suffix = 0;; ++suffix) {
    auto file = dir_ / (base + (suffix ? "-" + std::to_string(suffix) : std::string()) + ".quiver");
    if (!std::filesystem::exists(file)) {
      write_record(file, to_matrix(representative), path);
      return true;
    }
    const auto existing = read_record(file);
    if (canonical_form(from_matrix(existing.matrix), canonical_limit) == form) return false;
  }
}

std::optional<ClassStore::Record> ClassStore::get(const LabeledQuiver& q, Index canonical_limit) const {
  const auto form = canonical_form(q, canonical_limit);
  const auto base = digest(form);
  for (int suffix = 0;; ++suffix) {
    auto file = dir_ / (base + (suffix ? "-" + std::to_string(suffix) : std::string()) + ".quiver");
    if (!std::filesystem::exists(file)) return std::nullopt;
    auto record = read_record(file);
    if (canonical_form(from_matrix(record.matrix), canonical_limit) == form) return record;
  }
}

std::vector<ClassStore::Record> ClassStore::records() const {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir_))
    if (entry.path().extension() == ".quiver") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Record> out;
  for (const auto& f : files) out.push_back(read_record(f));
  return out;
}

// --------------------------------------------------------------- walker

namespace {

struct Entry {
  LabeledQuiver rep;
  MutationSequence path;
  std::vector<Index> order;  // canonical order of rep
};

// Search over isomorphism classes. Each step expands a batch of pending
// classes: a whole level for Breadth, the 64 best for MostArrows. Children
// are generated in parallel and merged in (batch position, vertex) order,
// so the outcome does not depend on the worker count.
class Walker {
 public:
  Walker(const LabeledQuiver& root, Index limit, unsigned workers, ExploreOrder order)
      : limit_(limit), workers_(workers), order_(order) {
    auto form = canonical_form(root, limit_);
    index_.emplace(form.key(), 0);
    entries_.push_back(Entry{root, {}, std::move(form.order)});
    enqueue(0);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool closed() const { return pending_.empty(); }

  std::optional<std::size_t> lookup(const std::vector<std::int64_t>& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  enum class Stop { None, Hit, Bound };

  // on_new returns true to stop immediately. A class beyond max_states is
  // not recorded and stops the walk with Bound.
  Stop step(std::size_t max_states, const std::function<bool(std::size_t)>& on_new) {
    std::vector<std::size_t> batch;
    const auto first_rank = pending_.begin()->first;
    while (!pending_.empty()) {
      auto it = pending_.begin();
      if (order_ == ExploreOrder::Breadth ? it->first != first_rank : batch.size() == kBatch) break;
      batch.push_back(it->second);
      pending_.erase(it);
    }

    struct Child {
      LabeledQuiver q;
      CanonicalForm form;
      std::size_t parent;
      Index k;
    };
    std::vector<std::vector<Child>> kids(batch.size());
    detail::parallel_for(batch.size(), workers_, [&](std::size_t i) {
      const auto& e = entries_[batch[i]];
      for (Index k = 0; k < e.rep.mutable_count(); ++k) {
        auto child = mutate(e.rep, k);
        auto form = canonical_form(child, limit_);
        kids[i].push_back(Child{std::move(child), std::move(form), batch[i], k});
      }
    });
    for (auto& group : kids)
      for (auto& c : group) {
        auto key = c.form.key();
        if (index_.count(key)) continue;
        if (entries_.size() >= max_states) return Stop::Bound;
        MutationSequence path = entries_[c.parent].path;
        path.push_back(c.k);
        index_.emplace(std::move(key), entries_.size());
        entries_.push_back(Entry{std::move(c.q), std::move(path), std::move(c.form.order)});
        enqueue(entries_.size() - 1);
        if (on_new(entries_.size() - 1)) return Stop::Hit;
      }
    return Stop::None;
  }

 private:
  static constexpr std::size_t kBatch = 64;

  void enqueue(std::size_t id) {
    const auto& e = entries_[id];
    std::int64_t rank = 0;
    if (order_ == ExploreOrder::Breadth) {
      rank = static_cast<std::int64_t>(e.path.size());
    } else {
      for (const auto& a : e.rep.arrow_list()) rank -= a.multiplicity;
    }
    pending_.emplace(rank, id);
  }

  Index limit_;
  unsigned workers_;
  ExploreOrder order_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, detail::KeyHash> index_;
  std::vector<Entry> entries_;
  std::set<std::pair<std::int64_t, std::size_t>> pending_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool exceeds_multiplicity(const LabeledQuiver& q, std::int64_t max_mult) {
  if (q.max_multiplicity() < max_mult) return false;
  for (const auto& comp : connected_components(q)) {
    if (comp.size() < 3) continue;
    for (Index u : comp)
      for (Index v : comp)
        if (q.arrows(u, v) >= max_mult) return true;
  }
  return false;
}

ClassReport explore_class(const LabeledQuiver& q, const ExploreOptions& options) {
  if (options.max_states < 1) throw ArgumentError("max_states must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  ClassReport report;
  Walker walker(q, options.canonical_limit, options.workers, options.order);

  auto record = [&](std::size_t i) {
    const auto& e = walker.entries()[i];
    if (options.store) options.store->put(e.rep, e.path, options.canonical_limit);
    if (!exceeds_multiplicity(e.rep, options.max_mult)) return false;
    if (!exceeds_multiplicity(mutate(q, e.path), options.max_mult))
      throw InvariantViolation("infinite-type witness does not replay");
    report.status = ClassStatus::InfiniteWitness;
    report.witness = e.path;
    report.max_multiplicity = e.rep.max_multiplicity();
    return true;
  };

  if (!record(0)) {
    while (!walker.closed()) {
      auto stop = walker.step(options.max_states, record);
      if (stop == Walker::Stop::Hit) break;
      if (stop == Walker::Stop::Bound) {
        report.status = ClassStatus::BoundReached;
        break;
      }
    }
    if (walker.closed()) {
      report.status = ClassStatus::Finite;
      report.class_size = walker.entries().size();
    }
  }
  report.visited = walker.entries().size();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ClassReport explore_class(const LabeledQuiver& q, std::size_t max_states, std::int64_t max_mult) {
  ExploreOptions opt;
  opt.max_states = max_states;
  opt.max_mult = max_mult;
  return explore_class(q, opt);
}

PathOutcome find_mutation_path(const LabeledQuiver& q1, const LabeledQuiver& q2, std::size_t max_states,
                               Index canonical_limit) {
  if (q1.vertex_count() != q2.vertex_count() || q1.frozen_count() != q2.frozen_count())
    throw ArgumentError("find_mutation_path needs quivers with the same vertex and frozen counts");
  PathOutcome out;
  Walker fwd(q1, canonical_limit, 1, ExploreOrder::Breadth);
  Walker bwd(q2, canonical_limit, 1, ExploreOrder::Breadth);

  // fwd entry a and bwd entry b are isomorphic classes.
  auto join = [&](std::size_t a, std::size_t b) {
    const auto& ea = fwd.entries()[a];
    const auto& eb = bwd.entries()[b];
    std::vector<Index> to_a(eb.order.size());
    for (std::size_t i = 0; i < eb.order.size(); ++i) to_a[eb.order[i]] = ea.order[i];
    MutationSequence path = ea.path;
    for (auto it = eb.path.steps().rbegin(); it != eb.path.steps().rend(); ++it) path.push_back(to_a[*it]);
    if (!isomorphic(mutate(q1, path), q2, canonical_limit))
      throw InvariantViolation("mutation path does not replay to the target quiver");
    return path;
  };

  if (auto b = bwd.lookup(canonical_form(q1, canonical_limit).key())) {
    out.path = join(0, *b);
    out.visited = 2;
    return out;
  }
  std::optional<std::pair<std::size_t, std::size_t>> meet;
  auto half = std::max<std::size_t>(1, max_states / 2);
  while (!meet) {
    Walker& side = fwd.entries().size() <= bwd.entries().size() ? fwd : bwd;
    const bool forward = &side == &fwd;
    if (side.closed()) {
      out.class_closed = true;
      break;
    }
    auto stop = side.step(half, [&](std::size_t i) {
      const auto& e = side.entries()[i];
      const auto& other = forward ? bwd : fwd;
      auto hit = other.lookup(canonical_form(e.rep, canonical_limit).key());
      if (!hit) return false;
      meet = forward ? std::pair{i, *hit} : std::pair{*hit, i};
      return true;
    });
    if (stop == Walker::Stop::Bound) break;
  }
  if (meet) out.path = join(meet->first, meet->second);
  out.visited = fwd.entries().size() + bwd.entries().size();
  return out;
}

Obstruction find_obstruction(const LabeledQuiver& q, std::size_t max_states, ExploreOrder order,
                             Index canonical_limit) {
  Obstruction out;
  Walker walker(q, canonical_limit, 1, order);
  auto check = [&](std::size_t i) {
    const auto& e = walker.entries()[i];
    auto cycle = find_embedded_qabc(e.rep, 2);
    if (!cycle) return false;
    out.path = e.path;
    out.cycle = cycle;
    return true;
  };
  if (!check(0)) {
    while (!walker.closed()) {
      if (walker.step(max_states, check) != Walker::Stop::None) break;
    }
    out.class_closed = !out.path && walker.closed();
  }
  out.visited = walker.entries().size();
  return out;
}

}  // namespace greenseq
