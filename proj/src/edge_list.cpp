#include "edgeideal/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on runs of blanks and parses every token as a nonnegative int.
std::vector<long long> integers(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    const std::string_view tok = line.substr(i, j - i);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(lineno, "not an integer: '" + std::string(tok) + "'");
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<VertexSet> seen;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto nums = integers(line, lineno);
    if (!n) {
      if (nums.size() != 1) throw ParseError(lineno, "expected the vertex count on its own line");
      if (nums[0] < 0 || nums[0] > kMaxVertices)
        throw ParseError(lineno, "vertex count must lie in [0, 64]");
      n = static_cast<int>(nums[0]);
      seen.assign(static_cast<std::size_t>(*n), VertexSet{});
      continue;
    }
    if (nums.size() != 2) throw ParseError(lineno, "expected an edge 'u v'");
    const long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= *n || v >= *n) throw ParseError(lineno, "vertex out of range");
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    if (seen[u].contains(static_cast<Vertex>(v)))
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    seen[u] = seen[u].with(static_cast<Vertex>(v));
    seen[v] = seen[v].with(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError(lineno, "missing vertex count");
  return Graph(*n, edges);
}

Graph parse_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_edge_list(g);
}

}  // namespace edgeideal
