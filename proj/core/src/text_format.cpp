#include "hyperpath/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "hyperpath/error.hpp"

namespace hyperpath {

std::string serialize(const Hypergraph& h) {
  std::string out = "p h" + std::to_string(h.uniformity()) + " " + std::to_string(h.order()) +
                    " " + std::to_string(h.size()) + "\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += 'e';
    for (Vertex v : h.edge(i)) {
      out += ' ';
      out += std::to_string(v + 1);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Hypergraph parse(std::string_view text) {
  int r = 0;
  long long n = 0;
  long long m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (have_header) throw Error(ErrorCode::ParseError, "second header line", line_no);
      if (tokens.size() != 4 || tokens[1].size() < 2 || tokens[1][0] != 'h') {
        throw Error(ErrorCode::ParseError, "expected 'p h<r> <n> <m>'", line_no);
      }
      auto rv = to_integer(tokens[1].substr(1));
      auto nv = to_integer(tokens[2]);
      auto mv = to_integer(tokens[3]);
      if (!rv || !nv || !mv || *rv < 2 || *nv < *rv || *mv < 0 || *nv > (1LL << 24)) {
        throw Error(ErrorCode::ParseError, "bad header values", line_no);
      }
      r = static_cast<int>(*rv);
      n = *nv;
      m = *mv;
      have_header = true;
      continue;
    }

    if (tokens[0] == "e") {
      if (!have_header) throw Error(ErrorCode::ParseError, "edge before header", line_no);
      if (tokens.size() != static_cast<std::size_t>(r) + 1) {
        throw Error(ErrorCode::EdgeArity,
                    "expected " + std::to_string(r) + " vertices, got " +
                        std::to_string(tokens.size() - 1),
                    line_no);
      }
      Edge e;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto v = to_integer(tokens[i]);
        if (!v) throw Error(ErrorCode::ParseError, "bad vertex label", line_no);
        if (*v < 1 || *v > n) {
          throw Error(ErrorCode::VertexOutOfRange,
                      "label " + std::string(tokens[i]) + " not in [1, " + std::to_string(n) + "]",
                      line_no);
        }
        e.push_back(static_cast<Vertex>(*v - 1));
      }
      Edge sorted = e;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::RepeatedVertexInEdge, "repeated vertex in edge", line_no);
      }
      if (sorted != e) {
        throw Error(ErrorCode::ParseError, "edge labels must be strictly increasing", line_no);
      }
      if (!seen.insert(sorted).second) {
        throw Error(ErrorCode::DuplicateEdge, "edge listed twice", line_no);
      }
      edges.push_back(std::move(e));
      continue;
    }

    throw Error(ErrorCode::ParseError, "unknown line type '" + std::string(tokens[0]) + "'",
                line_no);
  }

  if (!have_header) throw Error(ErrorCode::ParseError, "missing header", line_no);
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorCode::ParseError,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                line_no);
  }
  return Hypergraph::build(r, static_cast<int>(n), edges);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(h);
}

}  // namespace hyperpath
