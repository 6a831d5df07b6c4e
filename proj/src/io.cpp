#include "kham/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "kham/error.hpp"

namespace kham {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<int> to_int(std::string_view token) {
  int value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return value;
}

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text, int& last_line) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    pos = end + 1;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    lines.push_back({number, std::move(tokens)});
  }
  last_line = number;
  return lines;
}

KPartiteGraph parse_one(const std::vector<Line>& lines, std::size_t& at, int last_line) {
  const Line& header = lines[at++];
  if (header.tokens.size() != 4 || header.tokens[0] != "kpartite") {
    throw ParseError(header.number, "expected header `kpartite <k> <n> <m>`");
  }
  auto k = to_int(header.tokens[1]);
  auto n = to_int(header.tokens[2]);
  auto m = to_int(header.tokens[3]);
  if (!k || !n || !m) throw ParseError(header.number, "header fields must be integers");
  if (*k < 2 || *n < 1 || *m < 0) {
    throw ParseError(header.number, "need k >= 2, n >= 1, m >= 0");
  }
  if (*k * *n > kMaxVertices) {
    throw ParseError(header.number, "k*n exceeds the " + std::to_string(kMaxVertices) +
                                        "-vertex cap");
  }

  std::vector<Edge> edges;
  edges.reserve(*m);
  const int order = *k * *n;
  for (int i = 0; i < *m; ++i) {
    if (at >= lines.size()) {
      throw ParseError(last_line, "expected " + std::to_string(*m) + " edges, found " +
                                      std::to_string(i));
    }
    const Line& line = lines[at++];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected `<u> <v>`");
    auto u = to_int(line.tokens[0]);
    auto v = to_int(line.tokens[1]);
    if (!u || !v) throw ParseError(line.number, "vertex ids must be integers");
    const std::string pair = "(" + std::to_string(*u) + "," + std::to_string(*v) + ")";
    if (*u < 0 || *v < 0 || *u >= order || *v >= order) {
      throw ParseError(line.number, "vertex id out of range in " + pair);
    }
    if (*u / *n == *v / *n) throw ParseError(line.number, "intra-part edge " + pair);
    if (*u > *v) throw ParseError(line.number, "expected u < v in " + pair);
    edges.push_back({*u, *v});
  }
  return from_edge_list(*k, *n, edges);
}

}  // namespace

std::vector<KPartiteGraph> parse_graphs(std::string_view text) {
  int last_line = 0;
  const auto lines = content_lines(text, last_line);
  std::vector<KPartiteGraph> graphs;
  std::size_t at = 0;
  while (at < lines.size()) graphs.push_back(parse_one(lines, at, last_line));
  return graphs;
}

KPartiteGraph parse_graph(std::string_view text) {
  int last_line = 0;
  const auto lines = content_lines(text, last_line);
  if (lines.empty()) throw ParseError(last_line == 0 ? 1 : last_line, "no graph header");
  std::size_t at = 0;
  KPartiteGraph g = parse_one(lines, at, last_line);
  if (at < lines.size()) throw ParseError(lines[at].number, "unexpected content after edges");
  return g;
}

std::string write_graph(const KPartiteGraph& g) {
  const auto edges = g.edges();
  std::string out = "kpartite " + std::to_string(g.k()) + " " + std::to_string(g.n()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

HamCycle parse_cycle(std::string_view text) {
  HamCycle cycle;
  std::string normalized(text);
  for (char& c : normalized)
    if (c == ',' || c == '\n' || c == '\r') c = ' ';
  for (auto token : split_ws(normalized)) {
    auto v = to_int(token);
    if (!v) {
      throw Error(ErrorKind::InvalidArgument, "bad vertex id `" + std::string(token) + "`");
    }
    cycle.vertices.push_back(*v);
  }
  return cycle;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path.string());
}

}  // namespace kham
