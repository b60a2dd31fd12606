#pragma once

#include "homspec/graph.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homspec {

/// Malformed graph6 input. offset is the 0-based byte position of the fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

inline std::string write_graph6(const Graph& g) {
  std::string out;
  detail::append_order(out, g.order());
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. A trailing "\n" or "\r\n" is tolerated.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("non-printable or out-of-range character", i);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t pos = 0;
  auto take = [&](int count) {
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= text.size()) throw Graph6Error("truncated length header", pos);
      v = (v << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    }
    return v;
  };

  std::uint64_t n;
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
    if (n <= 258047) throw Graph6Error("non-minimal long length header", 0);
  } else {
    pos = 1;
    n = take(3);
    if (n <= 62) throw Graph6Error("non-minimal length header", 0);
  }
  if (n == 0) throw Graph6Error("graph6 order 0 is not a valid graph here", 0);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Graph6Error("expected " + std::to_string(bytes) + " data bytes, found " +
                          std::to_string(text.size() - pos),
                      text.size() < pos + bytes ? text.size() : pos + bytes);

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    auto last = static_cast<unsigned>(text.back() - 63);
    auto pad = 6 - bits % 6;
    if (last & ((1u << pad) - 1)) throw Graph6Error("nonzero padding bits", text.size() - 1);
  }
  return g;
}

/// Reads newline-separated graph6 lines; blank lines are skipped.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace homspec
