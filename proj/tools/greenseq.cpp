// greenseq: quiver mutation, maximal green sequences and mutation classes.
//
// Exit codes: 0 confirmed/success, 1 negative verdict, 2 usage error,
// 3 internal invariant violation, 4 integer overflow.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "greenseq/generators.hpp"
#include "greenseq/green.hpp"
#include "greenseq/mutation_class.hpp"
#include "greenseq/quiver_file.hpp"
#include "greenseq/reproduce.hpp"
#include "greenseq/weights.hpp"

using namespace greenseq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Context {
  bool structured = false;
  std::string command;
  std::string inputs;  // bytes of every input, for the digest
};

json seq_json(const MutationSequence& s) { return s.one_based(); }

json labels_json(const LabeledQuiver& q, const MutationSequence& s) {
  json out = json::array();
  for (Index k : s) out.push_back(q.label(k));
  return out;
}

json witness_json(const Witness& w) {
  json j{{"kind", w.kind},
         {"quiver", format_quiver(w.quiver)},
         {"sequence", seq_json(w.sequence)},
         {"labels", labels_json(w.quiver, w.sequence)}};
  if (w.target) j["target"] = format_quiver(*w.target);
  if (!w.expect.empty()) j["expect"] = w.expect;
  return j;
}

// Prints the report (structured) or the text lines, and returns `code`.
int emit(const Context& ctx, json result, const std::vector<Witness>& witnesses, const std::string& text, int code) {
  if (ctx.structured) {
    json report{{"schema_version", kSchemaVersion},
                {"command", ctx.command},
                {"input_digest", text_digest(ctx.inputs)},
                {"result", std::move(result)},
                {"witnesses", json::array()},
                {"exit_code", code}};
    for (const auto& w : witnesses) report["witnesses"].push_back(witness_json(w));
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  return code;
}

LabeledQuiver load(Context& ctx, const std::string& path) {
  std::string bytes;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open quiver file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
  }
  ctx.inputs += bytes;
  return parse_quiver(bytes);
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string buf = text;
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream in(buf);
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw ArgumentError("expected integers, got '" + tok + "'");
    }
  }
  return out;
}

std::string sigma_text(const LabeledQuiver& q, const std::vector<Index>& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    out += (i ? " " : "") + q.label(static_cast<Index>(i)) + "->" + q.label(sigma[i]);
  return out;
}

// ------------------------------------------------------------- commands

struct GenArgs {
  std::string kind;
  std::vector<int> params;
  std::string output;
};

int cmd_gen(Context& ctx, const GenArgs& a) {
  auto need = [&](bool ok, const char* usage) {
    if (!ok) throw ArgumentError(std::string("usage: gen ") + usage);
  };
  LabeledQuiver q;
  if (a.kind == "canonical" || a.kind == "squid") {
    need(a.params.size() >= 2, "canonical|squid p1 p2 ... (at least two weights)");
    WeightSequence p(a.params);
    q = a.kind == "canonical" ? build_canonical_quiver(p) : build_squid_quiver(p);
  } else if (a.kind == "hyperbolic") {
    need(a.params.size() == 1, "hyperbolic t");
    q = build_hyperbolic_quiver(a.params[0]);
  } else if (a.kind == "qabc") {
    need(a.params.size() == 3, "qabc a b c");
    q = build_qabc(a.params[0], a.params[1], a.params[2]);
  } else {
    throw ArgumentError("unknown quiver kind '" + a.kind + "'; known kinds: canonical, squid, hyperbolic, qabc");
  }
  const auto text = format_quiver(q);
  ctx.inputs += text;
  if (!a.output.empty()) {
    std::ofstream out(a.output);
    out << text;
    if (!out) throw ArgumentError("cannot write '" + a.output + "'");
  }
  json r{{"kind", a.kind}, {"params", a.params}, {"quiver", text}};
  return emit(ctx, r, {}, a.output.empty() ? text : "", 0);
}

struct SeqArgs {
  std::string file;
  std::string sequence;
  bool indices = false;
};

int cmd_mutate(Context& ctx, const SeqArgs& a) {
  const auto q = load(ctx, a.file);
  const auto s = parse_sequence(q, a.sequence, a.indices);
  if (!s.valid_for(q.mutable_count())) throw ArgumentError("sequence has a frozen vertex");
  const auto out = mutate(q, s);
  json r{{"sequence", seq_json(s)}, {"quiver", format_quiver(out)}};
  return emit(ctx, r, {}, format_quiver(out), 0);
}

struct VerifyArgs {
  SeqArgs seq;
  std::string kind = "maximal-green";
  std::string target;
  std::string expect;
};

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  const auto q = load(ctx, a.seq.file);
  const auto s = parse_sequence(q, a.seq.sequence, a.seq.indices);
  if (!s.valid_for(q.mutable_count())) throw ArgumentError("sequence has a frozen vertex");
  const auto& kinds = witness_kinds();
  if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) {
    std::string known;
    for (const auto& k : kinds) known += (known.empty() ? "" : ", ") + k;
    throw ArgumentError("unknown kind '" + a.kind + "'; known kinds: " + known);
  }
  Witness w{a.kind, q, s, {}, parse_list(a.expect)};
  if (!a.target.empty()) w.target = load(ctx, a.target);
  if ((a.kind == "path" || a.kind == "equal") && !w.target)
    throw ArgumentError("kind '" + a.kind + "' needs --target");

  json r{{"kind", a.kind}, {"sequence", seq_json(s)}, {"labels", labels_json(q, s)}};
  std::string text;
  bool ok = false;
  if (auto requested = parse_sequence_kind(a.kind)) {
    const auto v = verify_sequence(q, s, *requested);
    ok = v.confirms(*requested);
    r["verdict"] = to_string(v.kind);
    text = std::string("verdict: ") + to_string(v.kind) + "\n";
    if (v.failure_step) {
      r["failure_step"] = *v.failure_step;
      text += "failure step: " + std::to_string(*v.failure_step) + "\n";
    }
    if (v.permutation) {
      json sigma = json::array();
      for (Index j : *v.permutation) sigma.push_back(j + 1);
      r["permutation"] = sigma;
      text += "sigma: " + sigma_text(q, *v.permutation) + "\n";
    }
  } else {
    std::string detail;
    ok = check_witness(w, detail);
    r["verdict"] = ok ? "holds" : "fails";
    r["detail"] = detail;
    text = std::string("verdict: ") + (ok ? "holds" : "fails") + "\n" + detail + "\n";
  }
  r["confirmed"] = ok;
  return emit(ctx, r, ok ? std::vector<Witness>{w} : std::vector<Witness>{}, text, ok ? 0 : 1);
}

struct SearchArgs {
  std::string file;
  std::size_t max_len = 20;
  std::size_t max_states = 0;
  unsigned workers = 1;
  bool no_dedupe = false;
};

int cmd_search(Context& ctx, const SearchArgs& a, bool mgs) {
  const auto q = load(ctx, a.file);
  SearchOptions opt;
  opt.max_len = a.max_len;
  opt.max_states = a.max_states;
  opt.workers = a.workers;
  opt.dedupe = !a.no_dedupe;
  const auto r = mgs ? search_mgs(q, opt) : search_green_to_red(q, opt);
  json j{{"status", to_string(r.status)},
         {"states_expanded", r.stats.states_expanded},
         {"distinct_states", r.stats.distinct_states},
         {"max_depth", r.stats.max_depth}};
  std::string text = std::string("status: ") + to_string(r.status) + "\n";
  std::vector<Witness> ws;
  if (r.sequence) {
    j["sequence"] = seq_json(*r.sequence);
    j["labels"] = labels_json(q, *r.sequence);
    text += "sequence: " + r.sequence->to_string() + "\n";
    ws.push_back({mgs ? "maximal-green" : "green-to-red", q, *r.sequence, {}, {}});
  }
  text += "states: " + std::to_string(r.stats.distinct_states) + ", depth " + std::to_string(r.stats.max_depth) + "\n";
  return emit(ctx, j, ws, text, r.sequence ? 0 : 1);
}

struct ExploreArgs {
  std::string file;
  std::size_t max_states = 100000;
  std::int64_t max_mult = 3;
  unsigned workers = 1;
  std::string order = "most-arrows";
  std::string store;
  Index canonical_limit = 16;
};

ExploreOrder parse_order(const std::string& s) {
  if (s == "breadth") return ExploreOrder::Breadth;
  if (s == "most-arrows") return ExploreOrder::MostArrows;
  throw ArgumentError("unknown order '" + s + "'; known orders: breadth, most-arrows");
}

int cmd_explore(Context& ctx, const ExploreArgs& a) {
  const auto q = load(ctx, a.file);
  ExploreOptions opt;
  opt.max_states = a.max_states;
  opt.max_mult = a.max_mult;
  opt.workers = a.workers;
  opt.order = parse_order(a.order);
  opt.canonical_limit = a.canonical_limit;
  std::optional<ClassStore> store;
  if (!a.store.empty()) {
    store.emplace(a.store);
    opt.store = &*store;
  }
  const auto r = explore_class(q, opt);
  json j{{"status", to_string(r.status)}, {"visited", r.visited}, {"elapsed_seconds", r.elapsed_seconds}};
  std::string text = std::string("status: ") + to_string(r.status) + "\n";
  std::vector<Witness> ws;
  if (r.status == ClassStatus::Finite) {
    j["class_size"] = r.class_size;
    text += "class size: " + std::to_string(r.class_size) + "\n";
  }
  if (r.witness) {
    j["sequence"] = seq_json(*r.witness);
    j["max_multiplicity"] = r.max_multiplicity;
    text += "witness: " + r.witness->to_string() + " (multiplicity " + std::to_string(r.max_multiplicity) + ")\n";
    ws.push_back({"infinite", q, *r.witness, {}, {}});
  }
  text += "visited: " + std::to_string(r.visited) + "\n";
  return emit(ctx, j, ws, text, r.status == ClassStatus::BoundReached ? 1 : 0);
}

int cmd_classify(Context& ctx, const std::vector<int>& weights) {
  const WeightSequence p(weights);
  ctx.inputs += p.to_string();
  const auto g = genus(p);
  const auto type = classify(p);
  std::string gtext = std::to_string(g.numerator()) + (g.denominator() == 1 ? "" : "/" + std::to_string(g.denominator()));
  json j{{"weights", weights}, {"genus", gtext}, {"type", to_string(type)}, {"listed_type", to_string(listed_type(p))}};
  std::string text = "weights: " + p.to_string() + "\ngenus: " + gtext + "\ntype: " + to_string(type) + "\n";
  if (type == WplType::Wild) {
    const auto m = minimal_wild_subweight(p);
    j["minimal_wild_subweight"] = m.weights();
    text += "minimal wild subweight: " + m.to_string() + "\n";
  }
  return emit(ctx, j, {}, text, 0);
}

int cmd_obstruct(Context& ctx, const ExploreArgs& a) {
  const auto q = load(ctx, a.file);
  const auto o = find_obstruction(q, a.max_states, parse_order(a.order), a.canonical_limit);
  json j{{"found", o.path.has_value()}, {"class_closed", o.class_closed}, {"visited", o.visited}};
  std::string text;
  std::vector<Witness> ws;
  if (o.path) {
    const auto end = mutate(q, *o.path);
    json verts = json::array();
    for (Index v : o.cycle->vertices()) verts.push_back(end.label(v));
    j["sequence"] = seq_json(*o.path);
    j["labels"] = labels_json(q, *o.path);
    j["vertices"] = verts;
    j["multiplicities"] = o.cycle->multiset();
    text = "obstruction after (" + o.path->to_string() + "): Q_{" + std::to_string(o.cycle->multiset()[0]) + "," +
           std::to_string(o.cycle->multiset()[1]) + "," + std::to_string(o.cycle->multiset()[2]) + "} on " +
           end.label(o.cycle->v0) + " " + end.label(o.cycle->v1) + " " + end.label(o.cycle->v2) + "\n";
    ws.push_back({"obstruction", q, *o.path, {}, {}});
  } else {
    text = o.class_closed ? "none: whole class scanned\n" : "none within bound\n";
  }
  text += "visited: " + std::to_string(o.visited) + "\n";
  return emit(ctx, j, ws, text, o.path ? 0 : 1);
}

struct PathArgs {
  std::string from, to;
  std::size_t max_states = 100000;
};

int cmd_path(Context& ctx, const PathArgs& a) {
  const auto q1 = load(ctx, a.from);
  const auto q2 = load(ctx, a.to);
  const auto r = find_mutation_path(q1, q2, a.max_states);
  json j{{"found", r.path.has_value()}, {"class_closed", r.class_closed}, {"visited", r.visited}};
  std::string text;
  std::vector<Witness> ws;
  if (r.path) {
    j["sequence"] = seq_json(*r.path);
    j["labels"] = labels_json(q1, *r.path);
    text = "path: " + r.path->to_string() + "\n";
    ws.push_back({"path", q1, *r.path, q2, {}});
  } else {
    text = r.class_closed ? "none: the classes differ\n" : "none within bound\n";
  }
  return emit(ctx, j, ws, text, r.path ? 0 : 1);
}

struct ReproduceArgs {
  std::string scenario;
  ReproduceOptions opt;
};

int cmd_reproduce(Context& ctx, const ReproduceArgs& a) {
  const auto claims = reproduce(a.scenario, a.opt);
  std::size_t counts[3] = {0, 0, 0};
  json list = json::array();
  std::vector<Witness> all;
  std::string text;
  for (const auto& c : claims) {
    ++counts[static_cast<int>(c.status)];
    json cj{{"scenario", c.scenario}, {"claim", c.name}, {"status", to_string(c.status)}, {"detail", c.detail},
            {"witnesses", json::array()}};
    for (const auto& w : c.witnesses) {
      cj["witnesses"].push_back(witness_json(w));
      all.push_back(w);
    }
    list.push_back(std::move(cj));
    text += std::string(to_string(c.status)) + "  [" + c.scenario + "] " + c.name + ": " + c.detail + "\n";
  }
  text += std::to_string(counts[0]) + " confirmed, " + std::to_string(counts[1]) + " inconclusive, " +
          std::to_string(counts[2]) + " failed\n";
  json j{{"scenario", a.scenario},
         {"options",
          {{"t", a.opt.t}, {"bound", a.opt.bound}, {"seed", a.opt.seed}, {"max_states", a.opt.max_states}}},
         {"claims", list},
         {"summary", {{"confirmed", counts[0]}, {"inconclusive", counts[1]}, {"failed", counts[2]}}}};
  ctx.inputs += a.scenario + " " + j["options"].dump();
  return emit(ctx, j, all, text, counts[2] ? 1 : 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver mutation, maximal green sequences and mutation classes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  Context ctx;
  for (int i = 0; i < argc; ++i) ctx.command += (i ? " " : "") + std::string(argv[i]);
  std::function<int()> run;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a quiver: canonical|squid p1 p2 ..., hyperbolic t, qabc a b c");
  g->add_option("kind", gen.kind, "canonical, squid, hyperbolic or qabc")->required();
  g->add_option("params", gen.params, "Weights or parameters");
  g->add_option("-o,--output", gen.output, "Write the quiver file here instead of stdout");
  g->callback([&] { run = [&] { return cmd_gen(ctx, gen); }; });

  SeqArgs mut;
  auto* m = app.add_subcommand("mutate", "Apply a mutation sequence");
  m->add_option("file", mut.file, "Quiver file ('-' for stdin)")->required();
  m->add_option("sequence", mut.sequence, "Labels or 1-based indices, comma or space separated")->required();
  m->add_flag("--indices", mut.indices, "Read every step as a 1-based index");
  m->callback([&] { run = [&] { return cmd_mutate(ctx, mut); }; });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Verify a sequence or another witness");
  v->add_option("file", ver.seq.file, "Quiver file ('-' for stdin)")->required();
  v->add_option("sequence", ver.seq.sequence, "Labels or 1-based indices (may be empty)");
  v->add_flag("--indices", ver.seq.indices, "Read every step as a 1-based index");
  v->add_option("--kind", ver.kind, "green, maximal-green, green-to-red, obstruction, infinite, path, equal, duality")
      ->capture_default_str();
  v->add_option("--target", ver.target, "Target quiver file for path and equal");
  v->add_option("--expect", ver.expect, "Expected multiplicities for obstruction, e.g. 2,2,3");
  v->callback([&] { run = [&] { return cmd_verify(ctx, ver); }; });

  SearchArgs srch;
  bool search_is_mgs = true;
  for (const char* name : {"search-mgs", "search-g2r"}) {
    const bool is_mgs = std::string(name) == "search-mgs";
    auto* s = app.add_subcommand(name, is_mgs ? "Breadth-first search for a maximal green sequence"
                                              : "Breadth-first search for a green-to-red sequence");
    s->add_option("file", srch.file, "Quiver file ('-' for stdin)")->required();
    s->add_option("--max-len", srch.max_len, "Maximum sequence length")->capture_default_str();
    s->add_option("--max-states", srch.max_states, "Stop after this many distinct states (0 = no cap)")
        ->capture_default_str();
    s->add_option("--workers", srch.workers, "Worker threads")->capture_default_str();
    s->add_flag("--no-dedupe", srch.no_dedupe, "Do not merge equal states");
    s->callback([&, is_mgs] {
      search_is_mgs = is_mgs;
      run = [&] { return cmd_search(ctx, srch, search_is_mgs); };
    });
  }

  ExploreArgs exp;
  auto* e = app.add_subcommand("explore", "Explore the mutation class up to isomorphism");
  e->add_option("file", exp.file, "Quiver file ('-' for stdin)")->required();
  e->add_option("--max-states", exp.max_states, "Maximum number of classes")->capture_default_str();
  e->add_option("--max-mult", exp.max_mult, "Multiplicity that certifies infinite type")->capture_default_str();
  e->add_option("--workers", exp.workers, "Worker threads")->capture_default_str();
  e->add_option("--order", exp.order, "breadth or most-arrows")->capture_default_str();
  e->add_option("--store", exp.store, "Directory for class records");
  e->add_option("--canonical-limit", exp.canonical_limit, "Largest quiver to canonicalise")->capture_default_str();
  e->callback([&] { run = [&] { return cmd_explore(ctx, exp); }; });

  std::vector<int> weights;
  auto* c = app.add_subcommand("classify", "Genus and type of a weight sequence");
  c->add_option("weights", weights, "p1 p2 ...")->required();
  c->callback([&] { run = [&] { return cmd_classify(ctx, weights); }; });

  ExploreArgs obs;
  auto* o = app.add_subcommand("obstruct", "Search the class for a full subquiver Q_{a,b,c}, a,b,c >= 2");
  o->add_option("file", obs.file, "Quiver file ('-' for stdin)")->required();
  o->add_option("--max-states", obs.max_states, "Maximum number of classes")->capture_default_str();
  o->add_option("--order", obs.order, "breadth or most-arrows")->capture_default_str();
  o->add_option("--canonical-limit", obs.canonical_limit, "Largest quiver to canonicalise")->capture_default_str();
  o->callback([&] { run = [&] { return cmd_obstruct(ctx, obs); }; });

  PathArgs pth;
  auto* p = app.add_subcommand("path", "Find a mutation sequence between two quivers up to isomorphism");
  p->add_option("from", pth.from, "Source quiver file")->required();
  p->add_option("to", pth.to, "Target quiver file")->required();
  p->add_option("--max-states", pth.max_states, "Maximum number of classes")->capture_default_str();
  p->callback([&] { run = [&] { return cmd_path(ctx, pth); }; });

  ReproduceArgs rep;
  std::string scenarios;
  for (const auto& s : scenario_names()) scenarios += (scenarios.empty() ? "" : ", ") + s;
  auto* r = app.add_subcommand("reproduce", "Replay the explicit computations: " + scenarios);
  r->add_option("scenario", rep.scenario, "Scenario name or 'all'")->required();
  r->add_option("--t", rep.opt.t, "Largest hyperbolic stage")->capture_default_str();
  r->add_option("--bound", rep.opt.bound, "Search length for markov-negative")->capture_default_str();
  r->add_option("--seed", rep.opt.seed, "Seed for randomized scenarios")->capture_default_str();
  r->add_option("--max-states", rep.opt.max_states, "Class and search state bound")->capture_default_str();
  r->add_option("--workers", rep.opt.workers, "Worker threads")->capture_default_str();
  r->callback([&] { run = [&] { return cmd_reproduce(ctx, rep); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }
  ctx.structured = format == "structured";

  try {
    return run();
  } catch (const ArgumentError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const CapabilityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const OverflowError& err) {
    std::cerr << "overflow: " << err.what() << '\n';
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 3;
  }
}
