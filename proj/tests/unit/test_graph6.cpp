#include <doctest.h>

#include <random>
#include <sstream>

#include "trt/errors.hpp"
#include "trt/graph.hpp"
#include "trt/graph6.hpp"

using namespace trt;

namespace {

// Straight transcription of the format: N(n) then the upper triangle in
// column order, six bits per byte, offset by 63.
std::string reference_encode(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) v = (v << 1) | bits[k + static_cast<std::size_t>(t)];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

Graph random_graph(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

}  // namespace

TEST_SUITE("graph6") {
  TEST_CASE("known encodings") {
    CHECK(encode_graph6(empty_graph(0)) == "?");
    CHECK(encode_graph6(complete(5)) == "D~{");
    CHECK(encode_graph6(path_graph(2)) == "A_");
    CHECK(decode_graph6("D~{") == complete(5));
  }

  TEST_CASE("matches the reference encoder and round-trips") {
    std::mt19937 rng(7);
    for (int n = 0; n <= 128; ++n) {
      for (double density : {0.1, 0.5, 0.9}) {
        const Graph g = random_graph(rng, n, density);
        const std::string s = encode_graph6(g);
        CHECK(s == reference_encode(g));
        CHECK(decode_graph6(s) == g);
      }
    }
  }

  TEST_CASE("header and line endings") {
    CHECK(decode_graph6(">>graph6<<D~{") == complete(5));
    CHECK(decode_graph6("D~{\n") == complete(5));
    CHECK(decode_graph6("D~{\r\n") == complete(5));
  }

  TEST_CASE("error offsets") {
    auto offset_of = [](std::string_view s) -> std::size_t {
      try {
        decode_graph6(s);
      } catch (const Graph6Error& e) {
        return e.offset();
      }
      return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("D~ {") == 2);   // bad character
    CHECK(offset_of("D~") == 2);     // body too short
    CHECK(offset_of("D~{{") == 3);   // body too long
    CHECK(offset_of("D~|") == 2);    // nonzero padding
    CHECK(offset_of("") == 0);
  }

  TEST_CASE("stream reader skips blank lines") {
    std::istringstream in("D~{\n\nA_\n");
    const auto gs = read_graph6_stream(in);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == complete(5));
    CHECK(gs[1] == path_graph(2));
  }
}
