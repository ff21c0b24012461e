#include <gtest/gtest.h>

#include "bcr/enumerate.hpp"
#include "bcr/text_format.hpp"
#include "helpers.hpp"

using namespace bcr;
using namespace testing_graphs;

TEST(TextFormat, ParsesStrut) {
  auto gs = parse_graphs("parity even\next a b\ndashed (1) a-b\n");
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0], strut());
}

TEST(TextFormat, CommentsAndSeveralBlocks) {
  auto gs = parse_graphs(
      "# two graphs\n"
      "parity even\n"
      "ext a b   # the ends\n"
      "dashed (1) a-b\n"
      "\n"
      "parity even\n"
      "int w\n"
      "ext x y z\n"
      "dashed (1) w-x (2) w-y (3) w-z\n");
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1], tripod());
}

TEST(TextFormat, LabelsGiveTheEdgeOrder) {
  auto gs = parse_graphs("parity even\next a b c d\ndashed (3) b-d (2) a-c\nsolid (1) a-b\n");
  EXPECT_EQ(gs[0], hairy_pair());
}

TEST(TextFormat, DuplicateLabelIsNamed) {
  try {
    parse_graphs("parity even\next a b c\nsolid (1) a-b\ndashed (1) b-c\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("duplicate edge label (1)"), std::string::npos) << e.what();
  }
}

TEST(TextFormat, ReportsLineAndColumn) {
  try {
    parse_graphs("parity even\next a b\ndashed (1) a-q\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
    EXPECT_EQ(std::string(e.what()).rfind("line 3, column ", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_graphs("parity sideways\n"), ParseError);
  EXPECT_THROW(parse_graphs("parity even\next a b\ndashed (2) a-b\n"), ParseError);
}

TEST(TextFormat, OddParityNeedsOrientation) {
  EXPECT_THROW(parse_graphs("parity odd\next a b\ndashed (1) a-b\nvlabel a=1 b=2\n"), ParseError);
  EXPECT_THROW(parse_graphs("parity odd\next a b\ndashed (1) a-b\norient 1 a->b\n"), ParseError);
  auto gs = parse_graphs("parity odd\next a b\ndashed (1) a-b\norient 1 b->a\nvlabel a=2 b=1\n");
  EXPECT_EQ(gs[0], ColoredGraph(Parity::Odd, {X, X}, {{0, 1, D}}));
}

TEST(TextFormat, InvalidGraphsAreRejected) {
  EXPECT_THROW(parse_graphs("parity even\next a b c\ndashed (1) a-b (2) a-c\n"), ValidationError);
  EXPECT_THROW(parse_graphs("parity even\nint w\next x y z\ndashed (1) w-x (2) w-y (3) w-z\n", GraphClass::Chord),
               ValidationError);
}

TEST(TextFormat, PrintParseRoundTrip) {
  int checked = 0;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int v = 2; v <= 8; v += 2)
      for (int e = v - 1; e <= 8; ++e) {
        std::vector<ColoredGraph> gs;
        for (const auto& c : enumerate_classes(v, e, p)) gs.push_back(c.graph);
        if (gs.empty()) continue;
        const std::string text = print_graphs(gs);
        auto back = parse_graphs(text);
        ASSERT_EQ(back, gs);
        ASSERT_EQ(print_graphs(back), text);
        checked += static_cast<int>(gs.size());
      }
  EXPECT_GT(checked, 100);
}
