// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "greenseq/bigint.hpp"
#include "greenseq/generators.hpp"
#include "greenseq/green.hpp"
#include "greenseq/mutation_class.hpp"
#include "greenseq/pattern.hpp"
#include "greenseq/quiver_file.hpp"
#include "greenseq/weights.hpp"

using namespace greenseq;
namespace fs = std::filesystem;

namespace {

constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 10.0;
constexpr double kLimit3 = 1.0;
constexpr double kLimit5 = 30.0;
constexpr double kLimit7 = 60.0;

constexpr std::uint64_t kSeedDuality = 0x5eed0005;
constexpr std::uint64_t kSeedHeredity = 0x5eed0010;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) {
    o.pass = false;
    o.detail += " [over the " + std::to_string(limit) + " s limit]";
  }
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.3f s", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " -- " << o.detail
            << " (" << time << ")" << std::endl;
}

// Pairs carrying more than one arrow.
std::vector<std::pair<Index, Index>> multiple_arrows(const LabeledQuiver& q) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < q.vertex_count(); ++i)
    for (Index j = 0; j < q.vertex_count(); ++j)
      if (q.arrows(i, j) > 1) out.push_back({i, j});
  return out;
}

Outcome c1() {
  const auto q = build_hyperbolic_quiver(3);
  const auto s = q.resolve({"diamond", "1", "2", "diamond", "star", "3", "2", "1", "star", "diamond"});
  const auto v = verify_sequence(q, s);
  return {v.kind == SequenceKind::MaximalGreen, std::string("verdict ") + to_string(v.kind)};
}

Outcome c2() {
  int ok = 0;
  std::string bad;
  for (int t = 3; t <= 12; ++t) {
    const auto q = build_hyperbolic_quiver(t);
    const auto s = hyperbolic_mgs(t);
    const bool green = verify_sequence(q, s).confirms(SequenceKind::MaximalGreen);
    const auto end = mutate(q, s);
    const auto multi = multiple_arrows(end);
    const bool unique = multi.size() == 1 && end.arrows(multi[0].first, multi[0].second) == 2;
    if (green && s.size() == static_cast<std::size_t>(3 * t + 1) && unique)
      ++ok;
    else
      bad += " t=" + std::to_string(t);
  }
  return {ok == 10, std::to_string(ok) + "/10 stages" + (bad.empty() ? "" : ", failing:" + bad)};
}

Outcome c3() {
  using L = std::vector<std::string>;
  const std::vector<std::tuple<WeightSequence, L, std::vector<std::int64_t>>> cases{
      {{2, 3, 7},
       L{"O", "O(6x3)", "O(c)", "O(2x3)", "O(x3)", "O(2x2)", "O(6x3)", "O(5x3)", "O(x2)", "O(2x3)", "O(3x3)",
         "O(2x2)", "O(x3)", "O(c)"},
       {2, 2, 3}},
      {{2, 4, 5},
       L{"O", "O(c)", "O(x3)", "O(2x3)", "O(3x3)", "O(3x2)", "O(c)", "O(3x3)", "O(4x3)", "O(x2)", "O(2x3)"},
       {2, 2, 3}},
      {{3, 3, 4}, L{"O", "O(x1)", "O(x2)", "O(x3)", "O(c)", "O"}, {2, 2, 3}},
      {{2, 2, 2, 3}, L{"O(c)", "O"}, {2, 2, 3}},
      {{2, 2, 2, 2, 2}, L{"O(c)", "O"}, {2, 3, 5}},
  };
  int confirmed = 0;
  std::string lines;
  for (const auto& [p, labels, want] : cases) {
    const auto q = build_canonical_quiver(p);
    const auto c = find_embedded_qabc(mutate(q, q.resolve(labels)));
    const bool ok = c && c->multiset() == want;
    confirmed += ok;
    lines += std::string(" ") + p.to_string() + (ok ? " CONFIRMED" : " FAILED");
  }
  return {confirmed == 5, std::to_string(confirmed) + "/5:" + lines};
}

Outcome c4() {
  std::string detail;
  bool ok = true;
  for (auto [a, b, c] : {std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 2, 2}, {4, 3, 2}}) {
    const auto lib = qabc_power_mutation(a, b, c, 8);
    auto q = build_qabc(a, b, c);
    std::int64_t bk = b, ck = c, last = 0;
    for (int k = 1; k <= 8; ++k) {
      bk = a * ck - bk;
      ck = a * bk - ck;
      q = mutate(mutate(q, 0), 1);
      std::multiset<std::int64_t> got{q.arrows(0, 1) + q.arrows(1, 0), q.arrows(1, 2) + q.arrows(2, 1),
                                      q.arrows(0, 2) + q.arrows(2, 0)};
      const bool step = lib[static_cast<std::size_t>(k - 1)] == std::pair{bk, ck} &&
                        got == std::multiset<std::int64_t>{a, bk, ck} && last < bk && bk < ck;
      ok = ok && step;
      last = ck;
    }
    detail += "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
              ") k=8: b_8=" + std::to_string(bk) + " c_8=" + std::to_string(ck) + "; ";
  }
  return {ok, detail + (ok ? "exact match" : "mismatch")};
}

Outcome c5() {
  std::mt19937_64 rng(kSeedDuality);
  std::size_t states = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = std::uniform_int_distribution<Index>(1, 6)(rng);
    std::uniform_int_distribution<int> entry(-3, 3);
    IntMatrix b = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        b(i, j) = entry(rng);
        b(j, i) = -b(i, j);
      }
    auto s = PatternState<BigInt>::root(b);
    const int len = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int step = 0; step <= len; ++step) {
      ++states;
      if (!check_duality(s) || !is_sign_coherent(s))
        return {false, "trial " + std::to_string(trial) + " step " + std::to_string(step)};
      if (step < len) s = greenseq::advance(s, std::uniform_int_distribution<Index>(0, n - 1)(rng));
    }
  }
  return {true, "200 quivers, " + std::to_string(states) + " states, G^T C = I and sign-coherent"};
}

Outcome c6() {
  static const std::set<std::vector<int>> domestic{{2, 3, 3}, {2, 3, 4}, {2, 3, 5}};
  static const std::set<std::vector<int>> tubular{{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
  int swept = 0, wrong = 0;
  for (int t = 2; t <= 4; ++t) {
    std::vector<int> p(static_cast<std::size_t>(t), 1);
    for (bool more = true; more;) {
      std::vector<int> w;
      for (int x : p)
        if (x > 1) w.push_back(x);
      std::sort(w.begin(), w.end());
      WplType listed = WplType::Wild;
      if (w.size() <= 2 || (w.size() == 3 && w[0] == 2 && w[1] == 2) || domestic.count(w))
        listed = WplType::Domestic;
      else if (tubular.count(w))
        listed = WplType::Tubular;
      wrong += classify(WeightSequence(p)) != listed;
      ++swept;
      std::size_t i = 0;
      while (i < p.size() && p[i] == 9) p[i++] = 1;
      more = i < p.size();
      if (more) ++p[i];
    }
  }
  return {wrong == 0, std::to_string(swept) + " sequences, " + std::to_string(wrong) + " discrepancies"};
}

Outcome c7() {
  const std::vector<std::pair<WeightSequence, std::size_t>> golden{
      {{2, 2, 2, 2}, 4}, {{3, 3, 3}, 49}, {{2, 4, 4}, 506}, {{2, 3, 6}, 5739},
      {{2, 2, 2}, 10}, {{2, 2, 3}, 40}, {{2, 2, 4}, 146}, {{2, 2, 5}, 504}};
  bool ok = true;
  std::string detail;
  for (const auto& [p, size] : golden) {
    const auto r = explore_class(build_squid_quiver(p), 200000);
    const bool hit = r.status == ClassStatus::Finite && r.class_size == size;
    ok = ok && hit;
    detail += p.to_string() + "=" + (r.status == ClassStatus::Finite ? std::to_string(r.class_size) : to_string(r.status)) + " ";
  }
  const auto q = build_squid_quiver({2, 3, 7});
  const auto wild = explore_class(q, 200000);
  const bool witnessed = wild.status == ClassStatus::InfiniteWitness && exceeds_multiplicity(mutate(q, *wild.witness), 3);
  detail += std::string("(2,3,7)=") + to_string(wild.status);
  return {ok && witnessed, detail};
}

Outcome c8() {
  const auto can = build_canonical_quiver({2, 2, 2}), sq = build_squid_quiver({2, 2, 2});
  const auto closure = explore_class(can, 10000);
  const auto r = find_mutation_path(can, sq, 10000);
  if (!r.path) return {false, "no path"};
  const bool replays = isomorphic(mutate(can, *r.path), sq);
  return {replays && closure.status == ClassStatus::Finite,
          "path (" + r.path->to_string() + "), class of " + std::to_string(closure.class_size) +
              (replays ? ", replays" : ", does not replay")};
}

Outcome c9() {
  SearchOptions opt;
  opt.max_len = 12;
  const auto r = search_mgs(build_qabc(2, 2, 2), opt);
  const char* verdict = r.status == SearchStatus::ExhaustedNoneExists ? "CONFIRMED-exhausted" : "INCONCLUSIVE(bound)";
  return {r.status != SearchStatus::Found, std::string(r.status == SearchStatus::Found ? "FOUND" : verdict) + ", " +
                                               std::to_string(r.stats.distinct_states) + " states"};
}

Outcome c10() {
  std::mt19937_64 rng(kSeedHeredity);
  SearchOptions base;
  base.max_len = 14;
  base.max_states = 20000;
  SearchOptions wide = base;
  wide.max_len = 18;
  wide.max_states = 60000;
  int sampled = 0, found = 0, inconclusive = 0, failed = 0;
  for (int attempt = 0; attempt < 1000 && sampled < 20; ++attempt) {
    const Index n = std::uniform_int_distribution<Index>(2, 5)(rng);
    std::uniform_int_distribution<int> entry(-2, 2);
    IntMatrix b = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        b(i, j) = entry(rng);
        b(j, i) = -b(i, j);
      }
    const LabeledQuiver q(b);
    if (!search_mgs(q, base).sequence) continue;
    ++sampled;
    for (Index v = 0; v < n; ++v) {
      const auto r = search_mgs(full_subquiver(q, VertexSet{v}.complement(n)), wide);
      if (r.sequence)
        ++found;
      else if (r.status == SearchStatus::ExhaustedNoneExists)
        ++failed;
      else
        ++inconclusive;
    }
  }
  return {sampled == 20 && failed == 0, std::to_string(sampled) + " quivers; subquivers: " + std::to_string(found) +
                                            " found, " + std::to_string(inconclusive) + " inconclusive, " +
                                            std::to_string(failed) + " failed"};
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

int shell(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::string text;
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) text.append(buf, got);
  const int status = ::pclose(pipe);
  if (out) *out = std::move(text);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome c11() {
  const std::string cli = GREENSEQ_CLI;
  std::string report;
  const int rc = shell(quote(cli) + " --format structured reproduce all 2>/dev/null", &report);
  const auto j = nlohmann::json::parse(report);
  const fs::path dir = fs::temp_directory_path() / ("greenseq_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int total = 0, passed = 0;
  std::string first_bad;
  for (const auto& w : j.at("witnesses")) {
    ++total;
    const auto qfile = dir / ("w" + std::to_string(total) + ".quiver");
    std::ofstream(qfile) << w.at("quiver").get<std::string>();
    std::string seq;
    for (const auto& k : w.at("sequence")) seq += (seq.empty() ? "" : ",") + std::to_string(k.get<int>());
    std::string cmd = quote(cli) + " verify " + quote(qfile.string()) + " " + quote(seq) + " --indices --kind " +
                      quote(w.at("kind").get<std::string>());
    if (w.contains("target")) {
      const auto tfile = dir / ("w" + std::to_string(total) + ".target");
      std::ofstream(tfile) << w.at("target").get<std::string>();
      cmd += " --target " + quote(tfile.string());
    }
    if (w.contains("expect")) {
      std::string e;
      for (const auto& x : w.at("expect")) e += (e.empty() ? "" : ",") + std::to_string(x.get<std::int64_t>());
      cmd += " --expect " + quote(e);
    }
    if (shell(cmd + " >/dev/null 2>&1") == 0)
      ++passed;
    else if (first_bad.empty())
      first_bad = "; first failure: " + cmd;
  }
  fs::remove_all(dir);
  const auto& s = j.at("result").at("summary");
  std::ostringstream detail;
  detail << "reproduce exit " << rc << " (" << s.at("confirmed") << " confirmed, " << s.at("inconclusive")
         << " inconclusive, " << s.at("failed") << " failed); " << passed << "/" << total
         << " witnesses re-verify with exit 0" << first_bad;
  return {rc == 0 && total > 0 && passed == total, detail.str()};
}

}  // namespace

int main() {
  criterion(1, "Q_3 base sequence is maximal green", kLimit1, c1);
  criterion(2, "hyperbolic induction for 3 <= t <= 12", kLimit2, c2);
  criterion(3, "wild witnesses embed Q_{a,b,c}", kLimit3, c3);
  criterion(4, "Q_{a,b,c} recursion under (mu_2 mu_1)^k", 0, c4);
  criterion(5, "G^T C = I and sign coherence on random paths", kLimit5, c5);
  criterion(6, "genus classification sweep", 0, c6);
  criterion(7, "finite mutation type of squid quivers", kLimit7, c7);
  criterion(8, "canonical and squid quivers are mutation equivalent", 0, c8);
  criterion(9, "Markov quiver has no all-red state within length 12", 0, c9);
  criterion(10, "heredity to vertex-deleted subquivers", 0, c10);
  criterion(11, "CLI re-verifies every reproduce witness", 0, c11);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
