#include "szreg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "szreg/error.hpp"

namespace szreg::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
      ++end;
    if (end > pos)
      out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
}

std::uint64_t parse_index(std::string_view token, std::size_t lineno) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value > 0xFFFFFFFEULL)
    bad_line(lineno, "expected a vertex index, got '" + std::string(token) + "'");
  return value;
}

bool blank(std::string_view line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t declared = 0;
  bool has_header = false;
  std::size_t max_plus_one = 0;

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank(line))
      continue;
    auto tokens = split_ws(line);
    if (tokens.front().front() == '#') {
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "vertices") {
        declared = parse_index(tokens[2], lineno);
        has_header = true;
      } else if (tokens.size() == 2 && tokens[0] == "#vertices") {
        declared = parse_index(tokens[1], lineno);
        has_header = true;
      }
      continue;
    }
    if (tokens.size() != 2)
      bad_line(lineno, "expected 'u v', got '" + line + "'");
    const auto u = static_cast<Vertex>(parse_index(tokens[0], lineno));
    const auto v = static_cast<Vertex>(parse_index(tokens[1], lineno));
    if (u == v)
      bad_line(lineno, "loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    edge_lines.push_back(lineno);
    max_plus_one = std::max<std::size_t>(max_plus_one, std::max(u, v) + std::size_t{1});
  }

  const std::size_t n = has_header ? declared : max_plus_one;
  if (has_header && max_plus_one > declared)
    throw Error(ErrorCode::ParseError, "edge endpoint exceeds declared vertex count " + std::to_string(declared));

  // Report duplicates with the line that introduced them.
  std::vector<VertexSet> seen(n, VertexSet(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (seen[u].contains(v))
      bad_line(edge_lines[e], "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    seen[u].insert(v);
    seen[v].insert(u);
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges())
    out << u << ' ' << v << '\n';
}

Partition read_partition(std::istream& in, std::size_t n) {
  std::vector<VertexSet> classes;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (blank(line) || line.find_first_not_of(" \t") == line.find('#'))
      continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      bad_line(lineno, "expected 'k: v1 v2 ...'");
    auto head = split_ws(std::string_view(line).substr(0, colon));
    if (head.size() != 1)
      bad_line(lineno, "expected a class index before ':'");
    if (parse_index(head[0], lineno) != classes.size())
      bad_line(lineno, "class index " + std::string(head[0]) + " out of sequence, expected " +
                           std::to_string(classes.size()));
    VertexSet c(n);
    for (auto token : split_ws(std::string_view(line).substr(colon + 1))) {
      const auto v = parse_index(token, lineno);
      if (v >= n)
        bad_line(lineno, "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
      if (c.contains(static_cast<Vertex>(v)))
        bad_line(lineno, "vertex " + std::to_string(v) + " repeated");
      c.insert(static_cast<Vertex>(v));
    }
    if (c.empty())
      bad_line(lineno, "empty class");
    classes.push_back(std::move(c));
  }
  return Partition(n, std::move(classes));
}

void write_partition(std::ostream& out, const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    out << k << ':';
    for (Vertex v : p[k].members())
      out << ' ' << v;
    out << '\n';
  }
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return read_edge_list(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

Partition load_partition(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return read_partition(in, n);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out)
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  save_text(path, os.str());
}

void save_partition(const std::filesystem::path& path, const Partition& p) {
  std::ostringstream os;
  write_partition(os, p);
  save_text(path, os.str());
}

} // namespace szreg::io
