#include "gspec/graph6.hpp"

#include "gspec/errors.hpp"

#include <cstdint>

namespace gspec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = 68719476735ULL;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t base = 0;  // bytes consumed by a header, for error positions

  std::size_t offset() const { return base + pos + 1; }

  int next_sextet(const char* what) {
    if (pos >= text.size()) throw ParseError(std::string("unexpected end of input in ") + what, offset());
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(std::string("byte ") + std::to_string(c) + " is not a graph6 character in " + what,
                       offset());
    }
    ++pos;
    return c - 63;
  }
};

void append_sextet(std::string& out, unsigned value) { out.push_back(static_cast<char>(value + 63)); }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  Cursor cur{text, 0, base};
  if (text.empty()) throw ParseError("empty graph6 record", cur.offset());

  std::uint64_t n = 0;
  const auto first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first > 126) {
    throw ParseError("malformed length byte " + std::to_string(first), cur.offset());
  }
  if (first != 126) {
    n = static_cast<std::uint64_t>(cur.next_sextet("size field"));
  } else {
    ++cur.pos;
    const bool long_form = cur.pos < text.size() && static_cast<unsigned char>(text[cur.pos]) == 126;
    int sextets = 3;
    if (long_form) {
      ++cur.pos;
      sextets = 6;
    }
    for (int i = 0; i < sextets; ++i) n = (n << 6) | static_cast<std::uint64_t>(cur.next_sextet("size field"));
    if (n > kMaxOrder) throw ParseError("graph order out of range", cur.offset());
  }
  if (n > static_cast<std::uint64_t>(1) << 20) {
    throw ParseError("graph order " + std::to_string(n) + " is too large to materialize", cur.offset());
  }

  const int order = static_cast<int>(n);
  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t sextets = (bit_count + 5) / 6;
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  Vertex row = 0;
  Vertex col = 1;
  for (std::uint64_t s = 0; s < sextets; ++s) {
    const std::size_t at = cur.offset();
    const int value = cur.next_sextet("edge data");
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= bit_count) {
        if (set) throw ParseError("nonzero padding bit", at);
        continue;
      }
      if (set) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  if (cur.pos != text.size()) throw ParseError("trailing bytes after graph6 record", cur.offset());
  return Graph(order, edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    append_sextet(out, static_cast<unsigned>(n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) append_sextet(out, static_cast<unsigned>((n >> shift) & 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) append_sextet(out, static_cast<unsigned>((n >> shift) & 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex col = 1; col < g.order(); ++col) {
    for (Vertex row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1u : 0u);
      if (++filled == 6) {
        append_sextet(out, acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) append_sextet(out, acc << (6 - filled));
  return out;
}

}  // namespace gspec
