#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "pfg/io.hpp"

namespace pfg {
namespace {

TEST(EdgeList, ParsesWithComments) {
  std::istringstream in("# branching example\n5\n1 2\n1 3 # branch\n\n1 4\n2 5\n3 2\n4 5\n");
  EXPECT_EQ(read_edge_list(in), fixtures::branching());
}

TEST(EdgeList, RoundTrips) {
  const Digraph d = fixtures::shared_mapping().inverse_digraph();
  std::istringstream in(format_edge_list(d));
  EXPECT_EQ(read_edge_list(in), d);
}

TEST(EdgeList, ReportsLineNumbers) {
  std::istringstream in("3\n1 2\n1 9\n");
  try {
    read_edge_list(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::istringstream dup("2\n1 2\n1 2\n");
  EXPECT_THROW(read_edge_list(dup), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_edge_list(empty), ParseError);
  std::istringstream junk("2\n1 x\n");
  EXPECT_THROW(read_edge_list(junk), ParseError);
}

TEST(Tree, ParseAndFormat) {
  const RootedTree t = parse_tree("3; 3 1 0 1 4 3 1", Orientation::source);
  EXPECT_EQ(t, fixtures::shared_tree());
  EXPECT_EQ(format_tree(t), "3; 3 1 0 1 4 3 1");
  EXPECT_THROW(parse_tree("3 1 0", Orientation::sink), ParseError);
  EXPECT_THROW(parse_tree("1; 0 3 2", Orientation::sink), ParseError);
}

TEST(Mapping, ParseAndFormat) {
  EXPECT_EQ(parse_mapping("4 1 3 1 5 3 1"), fixtures::shared_mapping());
  EXPECT_EQ(format_mapping(fixtures::shared_mapping()), "4 1 3 1 5 3 1");
  EXPECT_THROW(parse_mapping("1 7"), ParseError);
}

TEST(Sequence, ParseAndFormat) {
  EXPECT_EQ(parse_sequence("1,1,3,2,1"), fixtures::branching_seq());
  EXPECT_EQ(parse_sequence(" 1, 2 "), (PreferenceSequence{1, 2}));
  EXPECT_TRUE(parse_sequence("").empty());
  EXPECT_EQ(format_sequence(fixtures::branching_seq()), "1,1,3,2,1");
  EXPECT_THROW(parse_sequence("1,,2"), ParseError);
  EXPECT_THROW(parse_sequence("1;2"), ParseError);
}

TEST(Distribution, Parse) {
  const auto f = parse_distribution("1:1,3:2", 3);
  EXPECT_EQ(f.counts(), (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(parse_distribution("", 2).total(), 0);
  EXPECT_THROW(parse_distribution("4:1", 3), ParseError);
  EXPECT_THROW(parse_distribution("1:-1", 3), ParseError);
  EXPECT_THROW(parse_distribution("1", 3), ParseError);
}

TEST(Range, Parse) {
  EXPECT_EQ(parse_range("1..3").lo, 1);
  EXPECT_EQ(parse_range("1..3").hi, 3);
  EXPECT_EQ(parse_range("4").lo, 4);
  EXPECT_EQ(parse_range("4").hi, 4);
  EXPECT_THROW(parse_range("3..1"), ParseError);
  EXPECT_THROW(parse_range("a..b"), ParseError);
}

}  // namespace
}  // namespace pfg
