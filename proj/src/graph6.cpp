#include "trt/graph6.hpp"

#include <istream>

#include "trt/errors.hpp"

namespace trt {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
  out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
  out.push_back(static_cast<char>((n & 0x3f) + kBias));
}

int six_bits(std::string_view s, std::size_t pos, std::size_t base) {
  const unsigned char c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character", base + pos);
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
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

Graph decode_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.ends_with('\n')) line.remove_suffix(1);
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", base);
  for (std::size_t i = 0; i < line.size(); ++i) six_bits(line, i, base);

  std::size_t pos = 0;
  int n = 0;
  if (line[0] != '~') {
    n = six_bits(line, 0, base);
    pos = 1;
  } else {
    if (line.size() < 4) throw Graph6Error("truncated graph6 size field", base + line.size());
    if (line[1] == '~') throw Graph6Error("graph6 order exceeds the 128-vertex cap", base + 1);
    n = (six_bits(line, 1, base) << 12) | (six_bits(line, 2, base) << 6) | six_bits(line, 3, base);
    pos = 4;
  }
  if (n > kMaxOrder) throw Graph6Error("graph6 order exceeds the 128-vertex cap", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() - pos < body) throw Graph6Error("graph6 body too short", base + line.size());
  if (line.size() - pos > body) throw Graph6Error("unexpected trailing graph6 bytes", base + pos + body);

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = six_bits(line, pos + k / 6, base);
      if ((word >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int pad = static_cast<int>(body * 6 - bits);
    if (six_bits(line, last, base) & ((1 << pad) - 1))
      throw Graph6Error("nonzero graph6 padding bits", base + last);
  }
  return b.build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace trt
