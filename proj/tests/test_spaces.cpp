#include <gtest/gtest.h>

#include <random>

#include "bcr/spaces.hpp"
#include "helpers.hpp"
#include "oracle/brute_force.hpp"

using namespace bcr;
using namespace testing_graphs;

TEST(Enumerate, SmallestComponents) {
  auto chords = enumerate_basis(2, 1, Parity::Even, GraphClass::Chord);
  ASSERT_EQ(chords.size(), 1u);
  EXPECT_EQ(chords[0], canonical_form(strut()).cert);
  EXPECT_TRUE(enumerate_basis(1, 0, Parity::Even, GraphClass::Hairy).empty());
  EXPECT_TRUE(enumerate_basis(3, 3, Parity::Odd).empty());
  EXPECT_THROW(enumerate_classes(12, 4, Parity::Even), CapsExceeded);
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int v = 1; v <= 4; ++v)
      for (int e = 0; e <= 7; ++e) {
        auto fast = enumerate_classes(v, e, p);
        auto slow = oracle::brute_force_classes(v, e, p);
        ASSERT_EQ(fast.size(), slow.size()) << v << "," << e;
        std::map<Certificate, bool> zero;
        for (const auto& c : fast) zero[c.cert] = c.zero;
        for (const auto& b : slow) {
          auto c = canonical_form(b.graph);
          ASSERT_TRUE(zero.count(c.cert)) << c.cert;
          ASSERT_EQ(zero[c.cert], b.zero) << c.cert;
        }
      }
}

TEST(Dimensions, Examples) {
  Component strut_component({2, 1, Parity::Even});
  EXPECT_EQ(strut_component.dimension(SpaceId::Ac), 1u);
  EXPECT_EQ(strut_component.dimension(SpaceId::A), 1u);
  EXPECT_EQ(strut_component.dimension(SpaceId::B), 1u);
  Component odd_strut({2, 1, Parity::Odd});
  EXPECT_EQ(odd_strut.dimension(SpaceId::Acbar), 1u);
}

TEST(Dimensions, Relationships) {
  for (Parity p : {Parity::Even, Parity::Odd})
    for (auto c : components_within(8, 8, p)) {
      Component comp(c);
      const auto b = comp.dimension(SpaceId::B), a = comp.dimension(SpaceId::A), ab = comp.dimension(SpaceId::Abar),
                 ac = comp.dimension(SpaceId::Ac), acb = comp.dimension(SpaceId::Acbar);
      EXPECT_LE(b, a) << c.V << "," << c.E;
      EXPECT_LE(ab, a);
      EXPECT_LE(acb, ac);
      EXPECT_EQ(a, ac) << c.V << "," << c.E;
      EXPECT_EQ(ab, acb) << c.V << "," << c.E;
      for (SpaceId s : kAllSpaces) {
        const Quotient& q = comp.quotient(s);
        auto reps = q.representatives();
        ASSERT_EQ(reps.size(), q.dimension());
        for (const auto& r : reps) EXPECT_FALSE(q.normal_form(DiagramVector::of(r)).is_zero());
      }
    }
}

TEST(Dimensions, CapsAreEnforced) {
  EXPECT_THROW(Component({8, 8, Parity::Even}, Caps{6, 6}), CapsExceeded);
}

TEST(Quotient, NormalFormsUseRepresentativesOnly) {
  std::mt19937_64 rng(9);
  Component comp({8, 8, Parity::Even});
  const Quotient& q = comp.quotient(SpaceId::Abar);
  auto reps = q.representatives();
  std::set<Certificate> allowed(reps.begin(), reps.end());
  const auto& basis = q.rows.basis();
  for (int trial = 0; trial < 50; ++trial) {
    DiagramVector v;
    for (int k = 0; k < 6; ++k) v.add(basis[rng() % basis.size()], static_cast<long>(rng() % 7) - 3);
    auto nf = q.normal_form(v);
    for (const auto& [c, x] : nf) ASSERT_TRUE(allowed.count(c)) << c;
    EXPECT_EQ(q.normal_form(nf), nf);
  }
}
