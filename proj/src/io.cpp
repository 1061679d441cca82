#include "uec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "uec/error.hpp"

namespace uec {

namespace {

constexpr int kGraph6MaxOrder = 62;

std::string position(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw InputError("graph6: byte " + std::to_string(i) + " is not a graph6 character");
  }
  const int n = text[0] - 63;
  if (n > kGraph6MaxOrder)
    throw InputError("graph6: long-form header (n > 62) is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw InputError("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    const int chunk = text[1 + k / 6] - 63;
    if ((chunk >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InputError("graph6: n > 62 is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> six((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.has_edge(i, j)) six[k / 6] |= 1 << (5 - k % 6);
  std::string out(1, static_cast<char>(63 + n));
  for (int v : six) out.push_back(static_cast<char>(63 + v));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  int declared = -1;
  std::vector<std::pair<Edge, std::size_t>> pairs;
  int max_vertex = -1;
  bool seen_pair = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto to_int = [&](const std::string& s, std::size_t col) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
        throw InputError("edge list: bad integer '" + s + "' at " + position(line_no, col));
      return value;
    };
    if (tok[0] == "n") {
      if (seen_pair || declared >= 0 || tok.size() != 2)
        throw InputError("edge list: misplaced 'n' header at " + position(line_no, 1));
      declared = to_int(tok[1], line.find(tok[1]) + 1);
      continue;
    }
    if (tok.size() != 2)
      throw InputError("edge list: expected 'u v' at " + position(line_no, 1));
    const int a = to_int(tok[0], line.find(tok[0]) + 1);
    const int b = to_int(tok[1], line.rfind(tok[1]) + 1);
    if (a == b) throw InputError("edge list: loop at " + position(line_no, 1));
    pairs.push_back({make_edge(a, b), line_no});
    max_vertex = std::max({max_vertex, a, b});
    seen_pair = true;
  }
  const int n = declared >= 0 ? declared : max_vertex + 1;
  if (n > kMaxOrder) throw InputError("edge list: more than 64 vertices");
  Graph g(n);
  for (const auto& [e, at] : pairs) {
    if (e.v >= n)
      throw InputError("edge list: vertex " + std::to_string(e.v) + " out of range at " +
                       position(at, 1));
    if (g.has_edge(e)) throw InputError("edge list: duplicate edge at " + position(at, 1));
    g.add_edge(e.u, e.v);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

namespace {

struct FixtureDef {
  int n;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

const std::map<std::string, FixtureDef>& catalog() {
  static const std::map<std::string, FixtureDef> defs = {
      {"k3", {3, {{0, 1}, {0, 2}, {1, 2}}}},
      {"p3", {3, {{0, 1}, {1, 2}}}},
      {"c4", {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}},
      {"c5", {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}}},
      {"c6", {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}}},
      {"k4", {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}},
      {"k5",
       {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}},
      {"k33",
       {6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}}},
      {"diamond", {4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}}},
      {"bowtie", {5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}}},
      {"fan5", {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}}},
      {"fan6",
       {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}}},
      {"w4", {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}}},
      {"oct",
       {6,
        {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
         {3, 4}, {3, 5}}}},
      {"twok4",
       {5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}}}},
  };
  return defs;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::ranges::transform(out, out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, def] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

Graph fixture(std::string_view name) {
  const auto it = catalog().find(lower(name));
  if (it == catalog().end()) throw InputError("unknown fixture '" + std::string(name) + "'");
  Graph g(it->second.n);
  for (auto [a, b] : it->second.edges) g.add_edge(a, b);
  return g;
}

std::string fixture_text(std::string_view name) {
  const std::string key = lower(name);
  return "# fixture " + key + "\n" + emit_edge_list(fixture(key));
}

}  // namespace uec
