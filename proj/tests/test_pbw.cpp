#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bcr/pbw.hpp"
#include "helpers.hpp"

using namespace bcr;
using namespace testing_graphs;

namespace {

ColoredGraph line_of_three(Parity p = Parity::Even) {
  return ColoredGraph(p, {X, X, X, X, X, X}, {{0, 1, S}, {1, 2, S}, {0, 3, D}, {1, 4, D}, {2, 5, D}});
}

}  // namespace

TEST(Inclusions, ClassChecks) {
  auto s = DiagramVector::of_graph(strut());
  EXPECT_EQ(chi(s, Parity::Even), s);
  EXPECT_EQ(iota(s, Parity::Even), s);
  auto line = DiagramVector::of_graph(line_of_three());
  ASSERT_FALSE(line.is_zero());
  EXPECT_THROW(chi(line, Parity::Even), std::invalid_argument);
  EXPECT_EQ(iota(line, Parity::Even), line);
}

TEST(Words, Examples) {
  // leg positions run along the solid lines first, then the isolated externals
  EXPECT_TRUE(word_for({0, 1, 2, 3}, hairy_pair()).empty());
  EXPECT_EQ(word_for({1, 0, 2, 3}, hairy_pair()), (TranspositionWord{0}));
  auto w = word_for({1, 2, 0, 3, 4, 5}, line_of_three());
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(word_permutation(6, w), (std::vector<int>{1, 2, 0, 3, 4, 5}));
  EXPECT_THROW(word_for({0, 1, 3, 2}, hairy_pair()), std::invalid_argument);
}

TEST(Words, RoundTripEveryPermutation) {
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  do {
    EXPECT_EQ(word_permutation(6, word_for(perm, line_of_three())), perm);
  } while (std::next_permutation(perm.begin(), perm.begin() + 3));
}

TEST(Gamma, Examples) {
  EXPECT_TRUE(gamma(hairy_pair(Parity::Odd), {}).is_zero());
  auto g = line_of_three(Parity::Odd);
  EXPECT_EQ(gamma(g, {1}), DiagramVector::of_graph(merge_external_pair(g, 1)));
  EXPECT_THROW(gamma(strut(), {0}), std::invalid_argument);
}

// With a single solid edge the average runs over two orderings, one of which
// contributes nothing.
TEST(Sigma, TwoLegAverage) {
  int checked = 0;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (auto c : components_within(8, 8, p)) {
      Component comp(c);
      SigmaEngine se(comp);
      for (const auto& cl : comp.classes()) {
        if (cl.zero) continue;
        auto layout = leg_layout(cl.graph);
        int adjacent = -1, count = 0;
        for (int i = 0; i + 1 < layout.size(); ++i)
          if (layout.adjacent(i)) adjacent = i, ++count;
        if (count != 1) continue;
        auto expected = se.sigma(merge_external_pair(cl.graph, adjacent));
        expected *= Rational(1, 2);
        ASSERT_EQ(se.sigma(cl.graph), expected) << cl.cert;
        ++checked;
      }
    }
  EXPECT_GT(checked, 10);
}

TEST(Sigma, FixesHairyGraphs) {
  Component comp({6, 6, Parity::Odd});
  SigmaEngine se(comp);
  const Quotient& b = comp.quotient(SpaceId::B);
  for (const auto& cert : comp.basis(GraphClass::Hairy)) {
    auto v = DiagramVector::of(cert);
    EXPECT_EQ(se.sigma(v), b.normal_form(v));
  }
}

TEST(Sigma, SquaredLetterVanishes) {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Component comp({8, 8, p});
    SigmaEngine se(comp);
    for (const auto& cl : comp.classes()) {
      auto layout = leg_layout(cl.graph);
      for (int i = 0; i + 1 < layout.size(); ++i)
        if (layout.adjacent(i)) {
          ASSERT_TRUE(se.lambda(cl.graph, {i, i}).is_zero()) << cl.cert;
        }
    }
  }
}

// The leg order comes from the given coloring; relabeling vertices (which can
// reverse a solid line) or edges changes sigma only by the orientation sign.
TEST(Sigma, IndependentOfLegOrderDirection) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (auto c : components_within(8, 8, p)) {
      Component comp(c);
      SigmaEngine se(comp);
      for (const auto& cl : comp.classes()) {
        if (cl.zero || is_hairy(cl.graph)) continue;
        const ColoredGraph& g = cl.graph;
        std::vector<int> vp(static_cast<std::size_t>(g.vertex_count())), ep(static_cast<std::size_t>(g.edge_count()));
        std::iota(vp.begin(), vp.end(), 0);
        std::iota(ep.begin(), ep.end(), 0);
        std::shuffle(vp.begin(), vp.end(), rng);
        std::shuffle(ep.begin(), ep.end(), rng);
        std::vector<bool> rev(ep.size());
        for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = rng() % 2;
        DiagramVector expected = se.sigma_direct(g);
        expected *= Rational(recoloring_sign(p, vp, ep, rev));
        ASSERT_EQ(se.sigma_direct(recolor(g, vp, ep, rev)), expected) << cl.cert;
        ++checked;
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(Kappa, ChordDiagramsAreFixed) {
  for (const auto& cert : enumerate_basis(6, 6, Parity::Even, GraphClass::Chord)) {
    auto g = decode_certificate(cert, Parity::Even);
    EXPECT_EQ(kappa(g), DiagramVector::of(cert));
    EXPECT_EQ(kappa(g, KappaStrategy::parse("seed:4")), DiagramVector::of(cert));
  }
}

TEST(Kappa, StrategiesAgreeModuloFourT) {
  // one internal vertex with two legs on a solid edge and one hair
  const ColoredGraph g(Parity::Odd, {I, X, X, X}, {{0, 1, D}, {0, 2, D}, {0, 3, D}, {1, 2, S}});
  auto lo = kappa(g, KappaStrategy::parse("min")), hi = kappa(g, KappaStrategy::parse("max"));
  EXPECT_FALSE(lo.is_zero());
  EXPECT_NE(lo, hi);
  Component comp({4, 4, Parity::Odd});
  auto rows = comp.relation_set(SpaceId::Ac);
  EchelonBasis fourt(rows);
  EXPECT_TRUE(fourt.contains(lo - hi));
  EXPECT_TRUE(kappa(tripod(Parity::Even)).is_zero());
  EXPECT_TRUE(kappa(ColoredGraph(Parity::Even, g.kinds(), g.edges())).is_zero());
}

TEST(Kappa, StrategyParsing) {
  EXPECT_EQ(KappaStrategy::parse("seed:17").seed, 17u);
  EXPECT_EQ(KappaStrategy::parse("max").str(), "max");
  EXPECT_THROW(KappaStrategy::parse("seed:x"), std::invalid_argument);
  EXPECT_THROW(KappaStrategy::parse("random"), std::invalid_argument);
}
