#pragma once

// Edge-list and graph6 text formats.
//
// Edge list: an optional first content line "n <count>", then one "u v" pair
// per line. '#' starts a comment that runs to end of line. Without a header
// the vertex count is 1 + the largest label.
//
// graph6: size byte n+63 followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six
// bits per byte, high bit first, each byte offset by 63. Only the single-byte
// size form (n <= 62) is supported.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edgegp/graph.hpp"

namespace edgegp {

inline constexpr std::size_t kMaxGraph6Order = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

enum class Format { EdgeList, Graph6 };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

inline std::uint64_t parse_label(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error(ErrorCode::Malformed,
                "line " + std::to_string(line_no) + ": expected non-negative integer, got '" +
                    std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline Graph parse_edgelist(std::string_view text) {
  std::optional<std::uint64_t> declared;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::size_t line_no = 0;
  for (auto raw : detail::lines(text)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    const auto toks = detail::split_ws(line);
    if (toks.size() != 2)
      throw Error(ErrorCode::Malformed,
                  "line " + std::to_string(line_no) + ": expected two fields");
    if (toks[0] == "n") {
      if (declared || !pairs.empty())
        throw Error(ErrorCode::Malformed,
                    "line " + std::to_string(line_no) + ": header must be the first entry");
      declared = detail::parse_label(toks[1], line_no);
      if (*declared > (1u << 16))
        throw Error(ErrorCode::TooLarge, "declared vertex count too large");
      continue;
    }
    const auto u = detail::parse_label(toks[0], line_no);
    const auto v = detail::parse_label(toks[1], line_no);
    if (u == v)
      throw Error(ErrorCode::Loop, "line " + std::to_string(line_no) + ": loop at " +
                                       std::to_string(u));
    if (declared && (u >= *declared || v >= *declared))
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": label exceeds declared count");
    if (u > (1u << 16) || v > (1u << 16))
      throw Error(ErrorCode::TooLarge, "line " + std::to_string(line_no) + ": label too large");
    pairs.emplace_back(u, v);
  }
  std::uint64_t n = declared.value_or(0);
  if (!declared)
    for (auto [u, v] : pairs) n = std::max({n, u + 1, v + 1});
  Graph g(n);
  for (auto [u, v] : pairs) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

inline std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Parses one graph6 string. Leading ">>graph6<<" and surrounding whitespace
/// are accepted. Edges are numbered in bit order (column-major upper triangle).
inline Graph parse_graph6(std::string_view text) {
  auto s = detail::trim(text);
  if (s.starts_with(kGraph6Header)) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw Error(ErrorCode::Truncated, "empty graph6 string");
  for (char c : s)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw Error(ErrorCode::BadCharacter,
                  "byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
  const std::size_t n = static_cast<unsigned char>(s[0]) - 63;
  if (n > kMaxGraph6Order)
    throw Error(ErrorCode::UnsupportedSize, "multi-byte graph6 size field");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - 1 < bytes)
    throw Error(ErrorCode::Truncated, "expected " + std::to_string(bytes) + " data bytes, got " +
                                          std::to_string(s.size() - 1));
  if (s.size() - 1 > bytes) throw Error(ErrorCode::Malformed, "trailing bytes after graph6 data");
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(s[1 + k / 6]) - 63;
      if (chunk & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order)
    throw Error(ErrorCode::UnsupportedSize, "graph6 output limited to 62 vertices");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned char> groups((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) groups[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  std::string out(1, static_cast<char>(63 + n));
  for (unsigned char c : groups) out.push_back(static_cast<char>(63 + c));
  return out;
}

/// All graphs in a graph6 stream, one per non-empty line.
inline std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  for (auto line : detail::lines(text)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

/// graph6 if the first content line is a single whitespace-free token or
/// carries the graph6 header; edge list otherwise.
inline Format detect_format(std::string_view text) {
  for (auto line : detail::lines(text)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with(kGraph6Header)) return Format::Graph6;
    return detail::split_ws(line).size() == 1 ? Format::Graph6 : Format::EdgeList;
  }
  return Format::EdgeList;
}

}  // namespace edgegp
