#include "csf/graph6.hpp"

#include "csf/sympoly.hpp"  // ParseError

namespace csf {

namespace {

constexpr std::string_view header_tag = ">>graph6<<";

[[noreturn]] void fail(size_t offset, const std::string& what) {
  throw ParseError("graph6: byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n >= 63) {
    throw std::invalid_argument("graph6_encode: only the single-byte order form (n < 63) is supported");
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 0;
  int acc = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bit = 0;
      }
    }
  }
  if (bit) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.empty()) throw ParseError("graph6: empty line");
  size_t pos = 0;
  int first = static_cast<unsigned char>(line[0]);
  if (first < 63 || first > 126) fail(pos, "byte out of graph6 range");
  if (first == 126) fail(pos, "multi-byte vertex counts (n >= 63) are not supported");
  int n = first - 63;
  ++pos;

  int needed_bits = n * (n - 1) / 2;
  size_t needed_bytes = static_cast<size_t>((needed_bits + 5) / 6);
  if (line.size() - 1 < needed_bytes) {
    fail(line.size(), "line truncated: expected " + std::to_string(needed_bytes) +
                          " data bytes for n=" + std::to_string(n));
  }
  if (line.size() - 1 > needed_bytes) {
    fail(1 + needed_bytes, "trailing bytes after graph data");
  }

  Graph g(n);
  int bit = 0;
  int acc = 0;
  int have = 0;
  int i = 0, j = 1;
  for (int b = 0; b < needed_bits; ++b) {
    if (have == 0) {
      int c = static_cast<unsigned char>(line[pos]);
      if (c < 63 || c > 126) fail(pos, "byte out of graph6 range");
      acc = c - 63;
      have = 6;
      ++pos;
    }
    bit = (acc >> (have - 1)) & 1;
    --have;
    if (bit) g.add_edge(i, j);
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  // Padding bits must be zero for a bit-exact round trip.
  if (have > 0 && (acc & ((1 << have) - 1)) != 0) {
    fail(pos - 1, "nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6(std::string_view text) {
  std::vector<Graph> out;
  size_t pos = 0;
  int lineno = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (lineno == 1 && line.substr(0, header_tag.size()) == header_tag) {
      line.remove_prefix(header_tag.size());
    }
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

std::string write_graph6(std::span<const Graph> graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += graph6_encode(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace csf
