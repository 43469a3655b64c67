#include <gtest/gtest.h>

#include <map>
#include <set>

#include "linetrees/db_codec.hpp"
#include "linetrees/line_bijection.hpp"
#include "oracles.hpp"

using namespace linetrees;

namespace {

std::vector<std::string> all_strings(std::size_t length) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < (std::size_t{1} << length); ++x) {
    std::string s(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
      if ((x >> (length - 1 - i)) & 1) s[i] = '1';
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(is_de_bruijn("0011", 2));
  EXPECT_FALSE(is_de_bruijn("0101", 2));
  EXPECT_TRUE(is_de_bruijn("00010111", 3));
  EXPECT_THROW(is_de_bruijn("001", 2), CodecError);
  EXPECT_THROW(is_de_bruijn("0021", 2), CodecError);
  EXPECT_THROW(make_sequence("0101", 2), CodecError);
}

TEST(Validate, AgreesWithWindowOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : all_strings(std::size_t{1} << n)) EXPECT_EQ(is_de_bruijn(s, n), oracle::is_de_bruijn(s, n)) << s;
  }
}

TEST(Paths, Examples) {
  HamPath p = seq_to_path(make_sequence("0011", 2));
  std::vector<std::size_t> ids;
  for (auto v : p.vertices) ids.push_back(v.index());
  EXPECT_EQ(ids, (std::vector<std::size_t>{0b00, 0b01, 0b11, 0b10}));
  EXPECT_EQ(path_to_seq(p).bits, "0011");
  for (const auto& b : enumerate_db_sequences(3)) EXPECT_EQ(path_to_seq(seq_to_path(b)), b);
  HamPath broken = p;
  std::swap(broken.vertices[1], broken.vertices[2]);
  EXPECT_THROW(path_to_seq(broken), CodecError);
}

TEST(Paths, AreSpanningTreesOfTheGraph) {
  for (unsigned n = 2; n <= 4; ++n) {
    DiGraph g = debruijn(2, n);
    for (const auto& b : enumerate_db_sequences(n)) {
      HamPath p = seq_to_path(b);
      SpanningTree t{p.vertices.back(), std::vector<std::optional<EdgeId>>(g.num_vertices())};
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        t.out_edge[p.vertices[i].index()] = g.edge_between(p.vertices[i], p.vertices[i + 1]);
      }
      EXPECT_TRUE(is_spanning_tree(g, t)) << b.bits;
    }
  }
}

TEST(Enumerate, CountsMatchFilterOracle) {
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<std::string> expected;
    for (const auto& s : all_strings(std::size_t{1} << n)) {
      if (oracle::is_de_bruijn(s, static_cast<int>(n))) expected.push_back(s);
    }
    std::vector<std::string> got;
    for (const auto& b : enumerate_db_sequences(n)) got.push_back(b.bits);
    EXPECT_EQ(got, expected);
  }
  EXPECT_EQ(enumerate_db_sequences(2).size(), 4u);
  EXPECT_EQ(enumerate_db_sequences(3).size(), 16u);
  EXPECT_EQ(enumerate_db_sequences(4).size(), 256u);
  EXPECT_THROW(enumerate_db_sequences(5), CodecError);
}

TEST(Codec, DegreeTwoTable) {
  std::map<std::string, std::string> table;
  for (const auto& b : enumerate_db_sequences(2)) table[b.bits] = encode(b);
  EXPECT_EQ(table, (std::map<std::string, std::string>{{"0011", "01"}, {"0110", "00"}, {"1001", "11"}, {"1100", "10"}}));
}

TEST(Codec, BijectiveForSmallDegrees) {
  for (unsigned n = 2; n <= 4; ++n) {
    std::set<std::string> image;
    for (const auto& b : enumerate_db_sequences(n)) {
      std::string code = encode(b);
      EXPECT_EQ(code.size(), std::size_t{1} << (n - 1));
      image.insert(code);
      EXPECT_EQ(decode(code, n), b);
    }
    auto strings = all_strings(std::size_t{1} << (n - 1));
    EXPECT_EQ(image, std::set<std::string>(strings.begin(), strings.end())) << "degree " << n;
    std::set<std::string> decoded;
    for (const auto& s : strings) {
      DeBruijnSequence b = decode(s, n);
      EXPECT_TRUE(oracle::is_de_bruijn(b.bits, static_cast<int>(n)));
      EXPECT_EQ(encode(b), s);
      decoded.insert(b.bits);
    }
    EXPECT_EQ(decoded.size(), strings.size());
  }
}

TEST(Codec, LargerDegreeRoundTrips) {
  for (const char* code : {"0000000000000000", "1011001110001011", "1111111111111111"}) {
    DeBruijnSequence b = decode(code, 5);
    EXPECT_TRUE(oracle::is_de_bruijn(b.bits, 5));
    EXPECT_EQ(encode(b), code);
  }
}

TEST(Codec, Errors) {
  EXPECT_THROW(encode(make_sequence("01", 1)), CodecError);
  EXPECT_THROW(decode("010", 3), CodecError);
  EXPECT_THROW(decode("01", 1), CodecError);
  EXPECT_THROW(decode("0a", 2), CodecError);
}

// Reading the last bit at the source of the final path edge instead of the
// root of the top tree array loses injectivity from degree 3 on.
TEST(Codec, LastBitMustComeFromTheArrayRoot) {
  const std::map<unsigned, std::size_t> expected_sizes{{2, 4}, {3, 12}, {4, 160}};
  for (auto [n, size] : expected_sizes) {
    DiGraph g = debruijn(2, n - 1);
    LineTreeBijection bij(g);
    std::set<std::string> image;
    for (const auto& b : enumerate_db_sequences(n)) {
      HamPath p = seq_to_path(b);
      SpanningTree t{p.vertices.back(), std::vector<std::optional<EdgeId>>(p.vertices.size())};
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        t.out_edge[p.vertices[i].index()] = bij.line_edge(EdgeId{p.vertices[i].index()}, EdgeId{p.vertices[i + 1].index()});
      }
      TreeArray a = bij.pi(t);
      std::size_t src = g.source(EdgeId{p.vertices.back().index()}).index();
      std::string code = encode(b);
      code.back() = a.lists[src].front().edge() == EdgeId{2 * src} ? '0' : '1';
      image.insert(code);
    }
    EXPECT_EQ(image.size(), size) << "degree " << n;
  }
}
