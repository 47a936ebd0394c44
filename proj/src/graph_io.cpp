#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "critbound/errors.hpp"
#include "critbound/graph.hpp"

namespace critbound {

namespace {

constexpr int kBias = 63;

ParseError byte_error(const std::string& what, std::size_t offset) {
  return ParseError("graph6: " + what + " at byte offset " + std::to_string(offset),
                    ParseError::Kind::ByteOffset, offset);
}

ParseError line_error(const std::string& what, std::size_t line) {
  return ParseError("edge list: " + what + " on line " + std::to_string(line),
                    ParseError::Kind::Line, line);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

// Bits of the upper triangle are taken column by column: (0,1), (0,2),
// (1,2), (0,3), ... six per byte, most significant first, biased by 63.
Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw byte_error("empty record", 0);
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw byte_error("long-form order (n > 62) is unsupported", 0);
  if (header < kBias || header > 126) throw byte_error("malformed header byte", 0);
  const int n = header - kBias;
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body_bytes = (bit_count + 5) / 6;
  if (text.size() < 1 + body_bytes) throw byte_error("truncated bit stream", text.size());
  if (text.size() > 1 + body_bytes) throw byte_error("trailing garbage", 1 + body_bytes);

  for (std::size_t offset = 1; offset <= body_bytes; ++offset) {
    const int byte = static_cast<unsigned char>(text[offset]);
    if (byte < kBias || byte > 126) throw byte_error("invalid body byte", offset);
  }
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = static_cast<unsigned char>(text[body_bytes]) - kBias;
    const int pad_mask = (1 << (6 - bit_count % 6)) - 1;
    if (last & pad_mask) throw byte_error("nonzero padding bits", body_bytes);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw PreconditionError("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      const std::string_view raw =
          text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;
      line = trim(raw);
      if (!line.empty()) return true;
    }
    return false;
  };
  auto read_pair = [&](std::string_view line, long& a, long& b) {
    std::istringstream in{std::string(line)};
    std::string extra;
    if (!(in >> a >> b)) throw line_error("expected two integers", line_no);
    if (in >> extra) throw line_error("unexpected trailing token '" + extra + "'", line_no);
  };

  std::string_view line;
  if (!next_line(line)) throw line_error("missing header", 1);
  long n = 0;
  long m = 0;
  read_pair(line, n, m);
  if (n < 0 || n > kMaxVertices) throw line_error("vertex count outside 0..128", line_no);
  if (m < 0) throw line_error("negative edge count", line_no);

  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    if (!next_line(line)) throw line_error("expected " + std::to_string(m) + " edges", line_no);
    long u = 0;
    long v = 0;
    read_pair(line, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw line_error("endpoint out of range", line_no);
    if (u == v) throw line_error("self-loop", line_no);
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw line_error("duplicate edge", line_no);
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(line)) throw line_error("more lines than the declared edge count", line_no);
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.find_first_of(" \t\n") != std::string_view::npos) return parse_edge_list(text);
  return parse_graph6(body);
}

}  // namespace critbound
