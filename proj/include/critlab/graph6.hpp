#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "critlab/errors.hpp"
#include "critlab/graph.hpp"

namespace critlab {

namespace detail {

inline constexpr int kG6Bias = 63;
inline constexpr int kG6MaxByte = 126;
inline constexpr int kG6ShortLimit = 62;
inline constexpr int kG6MediumLimit = 258047;

inline std::size_t g6_data_bytes(std::int64_t n) {
  std::int64_t bits = n * (n - 1) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace detail

// graph6: size header then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte + 63.
inline Graph from_graph6(std::string_view text) {
  using namespace detail;
  std::size_t pos = 0;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError(i, "unexpected end of input");
    int c = static_cast<unsigned char>(text[i]);
    if (c < kG6Bias || c > kG6MaxByte) throw ParseError(i, "byte " + std::to_string(c) + " outside 63..126");
    return c - kG6Bias;
  };

  std::int64_t n = 0;
  if (text.empty()) throw ParseError(0, "empty input");
  int first = byte_at(0);
  if (first < kG6MaxByte - kG6Bias) {
    n = first;
    pos = 1;
  } else {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kG6MaxByte)
      throw ParseError(1, "orders above 258047 are not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    if (n <= kG6ShortLimit) throw ParseError(1, "extended size header used for order " + std::to_string(n));
    pos = 4;
  }

  const std::size_t data = g6_data_bytes(n);
  if (text.size() < pos + data) throw ParseError(text.size(), "truncated: expected " + std::to_string(data) + " data bytes");
  if (text.size() > pos + data) throw ParseError(pos + data, "trailing bytes after graph data");

  GraphBuilder b(static_cast<int>(n));
  std::int64_t bit = 0;
  const std::int64_t total = n * (n - 1) / 2;
  for (std::int64_t j = 1; j < n; ++j)
    for (std::int64_t i = 0; i < j; ++i, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      int value = byte_at(at);
      if ((value >> (5 - bit % 6)) & 1) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (data > 0) {
    std::size_t last = pos + data - 1;
    int pad = static_cast<int>(data * 6 - total);
    if (byte_at(last) & ((1 << pad) - 1)) throw ParseError(last, "non-zero padding bits");
  }
  return std::move(b).build();
}

inline std::string to_graph6(const Graph& g) {
  using namespace detail;
  const std::int64_t n = g.order();
  if (n > kG6MediumLimit) throw ParameterError("graph6 output limited to 258047 vertices");
  std::string out;
  if (n <= kG6ShortLimit) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back(static_cast<char>(kG6MaxByte));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

}  // namespace critlab
