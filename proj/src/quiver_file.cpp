#include "greenseq/quiver_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace greenseq {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ArgumentError("quiver file line " + std::to_string(line) + ": " + what);
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

LabeledQuiver parse_quiver(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::optional<Index> n;
  Index frozen = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> label_lines;
  std::map<std::pair<Index, Index>, std::int64_t> arrows;

  auto vertex = [&](const std::string& tok, std::size_t line) {
    auto v = to_int(tok);
    if (!v || *v < 1 || *v > *n) fail(line, "vertex '" + tok + "' not in 1.." + std::to_string(*n));
    return static_cast<Index>(*v - 1);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string word;
    words >> word;
    if (!n) {
      std::string a, b, extra;
      if (word != "quiver" || !(words >> a >> b) || (words >> extra)) fail(lineno, "expected 'quiver <n> <f>'");
      auto nv = to_int(a), fv = to_int(b);
      if (!nv || !fv || *nv < 0 || *fv < 0 || *fv > *nv) fail(lineno, "bad vertex or frozen count");
      n = static_cast<Index>(*nv);
      frozen = static_cast<Index>(*fv);
      labels = default_labels(*n);
      label_lines.assign(labels.size(), lineno);
      continue;
    }
    if (word == "label") {
      std::string idx;
      if (!(words >> idx)) fail(lineno, "expected 'label <index> <text>'");
      const Index v = vertex(idx, lineno);
      std::string text;
      std::getline(words, text);
      text = trim(text);
      if (text.empty()) fail(lineno, "empty label");
      if (text.find_first_of(" \t,") != std::string::npos) fail(lineno, "labels may not contain spaces or commas");
      labels[static_cast<std::size_t>(v)] = text;
      label_lines[static_cast<std::size_t>(v)] = lineno;
    } else if (word == "arrow") {
      std::string s, d, m, extra;
      if (!(words >> s >> d >> m) || (words >> extra)) fail(lineno, "expected 'arrow <src> <dst> <multiplicity>'");
      const Index from = vertex(s, lineno), to = vertex(d, lineno);
      auto mult = to_int(m);
      if (!mult || *mult < 1) fail(lineno, "multiplicity must be a positive integer");
      if (from == to) fail(lineno, "loops are not allowed");
      if (arrows.count({to, from})) fail(lineno, "arrows in both directions form 2-cycles");
      if (from >= *n - frozen && to >= *n - frozen) fail(lineno, "arrows between frozen vertices are not allowed");
      auto& slot = arrows[{from, to}];
      slot = checked_add(slot, *mult);
    } else {
      fail(lineno, "unknown directive '" + word + "'");
    }
  }
  if (!n) throw ArgumentError("quiver file has no 'quiver <n> <f>' header");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        fail(std::max(label_lines[i], label_lines[j]), "duplicate vertex label '" + labels[i] + "'");
  std::vector<Arrow> list;
  for (const auto& [key, m] : arrows) list.push_back({key.first, key.second, m});
  return LabeledQuiver::from_arrows(*n, list, frozen, std::move(labels));
}

LabeledQuiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_quiver(in);
}

LabeledQuiver read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open quiver file '" + path + "'");
  return parse_quiver(in);
}

std::string format_quiver(const LabeledQuiver& q) {
  std::ostringstream out;
  out << "quiver " << q.vertex_count() << ' ' << q.frozen_count() << '\n';
  for (Index v = 0; v < q.vertex_count(); ++v) out << "label " << v + 1 << ' ' << q.label(v) << '\n';
  for (const auto& a : q.arrow_list()) out << "arrow " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.multiplicity << '\n';
  return out.str();
}

MutationSequence parse_sequence(const LabeledQuiver& q, std::string_view text, bool indices_only) {
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream words(buf);
  MutationSequence s;
  for (std::string tok; words >> tok;) {
    if (!indices_only) {
      if (auto v = q.find(tok)) {
        s.push_back(*v);
        continue;
      }
    }
    auto v = to_int(tok);
    if (!v && indices_only) throw ArgumentError("step '" + tok + "' is not a vertex index");
    if (!v) q.index_of(tok);  // throws, listing the known labels
    if (*v < 1 || *v > q.mutable_count())
      throw ArgumentError("step " + tok + " is not a mutable vertex (1.." + std::to_string(q.mutable_count()) + ")");
    s.push_back(static_cast<Index>(*v - 1));
  }
  return s;
}

std::string text_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace greenseq
