#include "lapspread/graph6.hpp"

namespace lapspread {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 0x3F || u > 0x7E) {
    throw ParseError("graph6: byte 0x" + std::to_string(u) + " outside 0x3F..0x7E");
  }
  return u - kBias;
}

std::size_t read_big_endian(std::string_view text, std::size_t pos, std::size_t count) {
  if (text.size() < pos + count) throw ParseError("graph6: truncated order prefix");
  std::size_t v = 0;
  for (std::size_t k = 0; k < count; ++k) v = (v << 6) | static_cast<std::size_t>(sextet(text[pos + k]));
  return v;
}

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    n = read_big_endian(text, 2, 6);
    pos = 8;
    if (n <= 258047) throw ParseError("graph6: non-canonical 8-byte order prefix");
  } else {
    n = read_big_endian(text, 1, 3);
    pos = 4;
    if (n <= 62) throw ParseError("graph6: non-canonical 4-byte order prefix");
  }
  if (n == 0) throw ParseError("graph6: order 0 is not supported");
  if (n > kMaxGraph6Order) throw ParseError("graph6: order " + std::to_string(n) + " too large");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body_len = (bits + 5) / 6;
  const std::string_view body = text.substr(pos);
  if (body.size() < body_len) {
    throw ParseError("graph6: body has " + std::to_string(body.size()) + " bytes, expected " +
                     std::to_string(body_len));
  }
  if (body.size() > body_len) throw ParseError("graph6: trailing bytes after body");

  GraphBuilder b(n);
  std::size_t k = 0;
  int current = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = sextet(body[k / 6]);
      if ((current >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0 && (current & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw ParseError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    const std::size_t groups = n <= 258047 ? 3 : 6;
    out.append(groups == 3 ? "~" : "~~");
    for (std::size_t k = groups; k-- > 0;) out.push_back(static_cast<char>(((n >> (6 * k)) & 0x3F) + kBias));
  }
  int current = 0;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) current |= 1 << (5 - k % 6);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(current + kBias));
        current = 0;
      }
    }
  }
  if (k % 6 != 0) out.push_back(static_cast<char>(current + kBias));
  return out;
}

}  // namespace lapspread
