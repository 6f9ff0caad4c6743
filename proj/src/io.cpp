#include "nearbip/io.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>
#include <vector>

#include "nearbip/errors.hpp"

namespace nearbip {

namespace {

bool parse_unsigned(const std::string& token, std::size_t& out) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char ch) {
        return ch >= '0' && ch <= '9';
      }))
    return false;
  try {
    out = std::stoull(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip_comment(line));
    std::string first;
    if (!(tokens >> first)) continue;
    std::string second, extra;
    if (!(tokens >> second) || (tokens >> extra))
      throw SyntaxError(line_no, "expected two fields");
    if (!n) {
      std::size_t count = 0;
      if (first != "n" || !parse_unsigned(second, count))
        throw SyntaxError(line_no, "expected header 'n <count>'");
      n = count;
      continue;
    }
    std::size_t u = 0;
    std::size_t v = 0;
    if (!parse_unsigned(first, u) || !parse_unsigned(second, v))
      throw SyntaxError(line_no, "expected 'u v' with non-negative integer ids");
    if (u >= *n || v >= *n)
      throw SyntaxError(line_no, "vertex id out of range for n = " + std::to_string(*n));
    if (u == v) throw SyntaxError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw SyntaxError(line_no, "missing header 'n <count>'");
  return Graph::from_edge_list(*n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

VertexSet parse_vertex_set(std::istream& in, std::size_t n) {
  VertexSet s(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip_comment(line));
    std::string token;
    while (tokens >> token) {
      std::size_t v = 0;
      if (!parse_unsigned(token, v)) throw SyntaxError(line_no, "bad vertex id '" + token + "'");
      if (v >= n) throw SyntaxError(line_no, "vertex " + token + " out of range");
      s.insert(static_cast<Vertex>(v));
    }
  }
  return s;
}

std::string format_vertex_set(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  s.for_each([&](Vertex v) {
    out << (first ? "" : " ") << v;
    first = false;
  });
  return out.str();
}

Assignment parse_assignment(std::istream& in, std::size_t variables) {
  Assignment value(variables, false);
  std::vector<bool> seen(variables, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(strip_comment(line));
    std::string token, extra;
    if (!(tokens >> token)) continue;
    if (tokens >> extra) throw SyntaxError(line_no, "expected a single 'v<i>=0|1' entry");
    const auto eq = token.find('=');
    std::size_t var = 0;
    if (token.size() < 4 || token.front() != 'v' || eq == std::string::npos ||
        !parse_unsigned(token.substr(1, eq - 1), var) || eq + 2 != token.size() ||
        (token.back() != '0' && token.back() != '1'))
      throw SyntaxError(line_no, "expected 'v<i>=0|1', got '" + token + "'");
    if (var < 1 || var > variables)
      throw SyntaxError(line_no, "variable " + std::to_string(var) + " out of range");
    if (seen[var - 1]) throw SyntaxError(line_no, "variable " + std::to_string(var) + " repeated");
    seen[var - 1] = true;
    value[var - 1] = token.back() == '1';
  }
  for (std::size_t i = 0; i < variables; ++i)
    if (!seen[i]) throw SyntaxError(line_no, "variable " + std::to_string(i + 1) + " unassigned");
  return value;
}

std::string format_assignment(const Assignment& value) {
  std::ostringstream out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out << 'v' << (i + 1) << '=' << (value[i] ? 1 : 0) << '\n';
  return out.str();
}

std::string serialize_coordinate_map(const HphiInstance& h) {
  std::ostringstream out;
  for (std::size_t id = 0; id < h.coord_of.size(); ++id) {
    const Coordinate& c = h.coord_of[id];
    out << id << ' ';
    switch (c.kind) {
      case Coordinate::Kind::Cell:
        out << c.clause << ' ' << c.row << ' ' << c.column << ' ' << (c.is_true ? "true" : "false");
        break;
      case Coordinate::Kind::Dominating:
        out << c.clause << ' ' << c.row << ' ' << c.column << " dominating";
        break;
      case Coordinate::Kind::Root:
        out << "0 0 0 v0";
        break;
    }
    out << '\n';
  }
  return out.str();
}

Graph random_diameter_two_graph(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("no graph on fewer than 3 vertices has diameter 2");
  std::mt19937_64 rng(seed);
  double p = 0.5;
  std::vector<Edge> edges;
  while (true) {
    // Raw engine output against a fixed threshold keeps samples identical
    // across standard library implementations.
    const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0L);
    edges.clear();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() < threshold) edges.emplace_back(u, v);
    Graph g = Graph::from_edge_list(n, edges);
    const auto d = diameter(g);
    if (d && *d == 2) return g;
    if (!d || *d > 2) p = std::min(0.95, p + 0.02);
  }
}

}  // namespace nearbip
