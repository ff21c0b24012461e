#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/relations.hpp"
#include "bcr/spaces.hpp"

namespace bcr {

/// Adjacent transpositions U_i by 0-based leg position; the word [i1, ..., in]
/// stands for the product U_i1 ... U_in.
using TranspositionWord = std::vector<int>;

inline std::vector<int> identity_permutation(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

/// Left multiplication by U_i: the image values i and i+1 trade places.
inline std::vector<int> left_multiply(int i, std::vector<int> perm) {
  for (int& x : perm) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return perm;
}

inline std::vector<int> word_permutation(int k, const TranspositionWord& w) {
  auto p = identity_permutation(k);
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = left_multiply(*it, std::move(p));
  return p;
}

inline void check_word(const LegLayout& layout, const TranspositionWord& w) {
  for (int i : w)
    if (!layout.adjacent(i)) throw std::invalid_argument("word letter " + std::to_string(i + 1) +
                                                         " is not a solid-adjacent position");
}

/// A word for a component-preserving permutation, found by bubble sort.
inline TranspositionWord word_for(const std::vector<int>& perm, const ColoredGraph& g) {
  auto layout = leg_layout(g);
  if (static_cast<int>(perm.size()) != layout.size()) throw std::invalid_argument("permutation size");
  for (int p = 0; p < layout.size(); ++p)
    if (layout.line_of[static_cast<std::size_t>(p)] !=
        layout.line_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])])
      throw std::invalid_argument("permutation moves a leg across solid components");
  // perm * U_j swaps entries j, j+1; sorting to the identity gives
  // perm = U_jm ... U_j1 for the swap sequence j1, ..., jm.
  std::vector<int> cur = perm;
  TranspositionWord swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j)
      if (cur[j] > cur[j + 1]) {
        std::swap(cur[j], cur[j + 1]);
        swaps.push_back(static_cast<int>(j));
        changed = true;
      }
  }
  return TranspositionWord(swaps.rbegin(), swaps.rend());
}

/// Gamma_D(w) = sum_l S_{i_l} U_{i_(l+1)} ... U_{i_n} D as a vector of
/// canonical classes.
inline DiagramVector gamma(const ColoredGraph& g, const TranspositionWord& w) {
  auto layout = leg_layout(g);
  check_word(layout, w);
  DiagramVector out;
  ColoredGraph cur = g;
  int sign = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.add_graph(merge_external_pair(cur, layout, *it), sign);
    cur = swap_adjacent_legs(cur, layout, *it);
    sign = -sign;
  }
  return out;
}

inline void require_class(const DiagramVector& v, Parity parity, GraphClass cls, const char* what) {
  for (const auto& [c, q] : v)
    if (!belongs_to(decode_certificate(c, parity), cls))
      throw std::invalid_argument(std::string(what) + ": key " + c + " is not a " + to_string(cls) + " graph");
}

/// Inclusion of hairy graphs into BCR graphs.
inline DiagramVector chi(const DiagramVector& v, Parity parity) {
  require_class(v, parity, GraphClass::Hairy, "chi");
  return v;
}

/// Inclusion of chord diagrams into BCR graphs.
inline DiagramVector iota(const DiagramVector& v, Parity parity) {
  require_class(v, parity, GraphClass::Chord, "iota");
  return v;
}

/// The left inverse of chi, evaluated inside one graded component. Values are
/// normal forms in the B quotient; results are memoized per canonical class.
class SigmaEngine {
 public:
  explicit SigmaEngine(Component& comp) : comp_(comp) {}

  /// sigma of a colored graph, through its canonical class.
  DiagramVector sigma(const ColoredGraph& g) {
    auto c = canonical_form(g);
    if (c.zero) return {};
    auto it = memo_.find(c.cert);
    if (it == memo_.end()) it = memo_.emplace(c.cert, sigma_direct(c.graph)).first;
    DiagramVector out = it->second;
    if (c.sign < 0) out *= Rational(-1);
    return out;
  }

  DiagramVector sigma(const DiagramVector& v) {
    DiagramVector out;
    for (const auto& [c, q] : v) out.add_scaled(sigma(decode_certificate(c, comp_.parity())), q);
    return out;
  }

  /// The defining formula applied to the given coloring, without reducing it
  /// to a canonical class first. Hairy graphs project straight to B.
  DiagramVector sigma_direct(const ColoredGraph& g) {
    if (is_hairy(g)) return comp_.quotient(SpaceId::B).normal_form(DiagramVector::of_graph(g));
    auto layout = leg_layout(g);
    const int k = layout.size();
    struct Node {
      std::vector<int> perm;
      ColoredGraph graph;  // unsigned permuted graph
      int sign;
      DiagramVector lambda;
    };
    std::map<std::vector<int>, std::size_t> seen;
    std::deque<Node> queue;
    std::vector<DiagramVector> values;
    queue.push_back({identity_permutation(k), g, 1, {}});
    seen.emplace(queue.front().perm, 0);
    DiagramVector total;
    std::size_t count = 0;
    while (!queue.empty()) {
      Node n = std::move(queue.front());
      queue.pop_front();
      total += n.lambda;
      ++count;
      for (int i = 0; i + 1 < k; ++i) {
        if (!layout.adjacent(i)) continue;
        auto next = left_multiply(i, n.perm);
        if (seen.count(next)) continue;
        seen.emplace(next, 0);
        DiagramVector lam = n.lambda;
        lam.add_scaled(sigma(merge_external_pair(n.graph, layout, i)), n.sign);
        queue.push_back({std::move(next), swap_adjacent_legs(n.graph, layout, i), -n.sign, std::move(lam)});
      }
    }
    total *= Rational(1, static_cast<unsigned long>(count));
    return total;
  }

  /// Lambda_D(w) = sigma(Gamma_D(w)), evaluated graph by graph.
  DiagramVector lambda(const ColoredGraph& g, const TranspositionWord& w) {
    auto layout = leg_layout(g);
    check_word(layout, w);
    DiagramVector out;
    ColoredGraph cur = g;
    int sign = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.add_scaled(sigma(merge_external_pair(cur, layout, *it)), sign);
      cur = swap_adjacent_legs(cur, layout, *it);
      sign = -sign;
    }
    return out;
  }

  std::size_t memo_size() const { return memo_.size(); }
  Component& component() { return comp_; }

 private:
  Component& comp_;
  std::map<Certificate, DiagramVector> memo_;
};

// ---------------------------------------------------------------------------
// kappa

/// How kappa picks the internal-to-external edge to resolve.
struct KappaStrategy {
  enum class Kind : std::uint8_t { Min, Max, Seeded } kind = Kind::Min;
  std::uint64_t seed = 0;

  static KappaStrategy parse(const std::string& s) {
    if (s == "min") return {Kind::Min, 0};
    if (s == "max") return {Kind::Max, 0};
    if (s.rfind("seed:", 0) == 0) {
      std::size_t used = 0;
      auto n = std::stoull(s.substr(5), &used);
      if (used + 5 != s.size()) throw std::invalid_argument("bad seed in strategy '" + s + "'");
      return {Kind::Seeded, n};
    }
    throw std::invalid_argument("unknown strategy '" + s + "' (min|max|seed:N)");
  }
  std::string str() const {
    switch (kind) {
      case Kind::Min: return "min";
      case Kind::Max: return "max";
      case Kind::Seeded: return "seed:" + std::to_string(seed);
    }
    return "?";
  }
};

/// Resolution of BCR graphs into chord diagrams by repeated STU expansion.
/// The min and max strategies act on canonical representatives and are
/// memoized; seeded strategies act on the given coloring.
class KappaEngine {
 public:
  explicit KappaEngine(KappaStrategy s) : strategy_(s), rng_(s.seed) {}

  DiagramVector operator()(const ColoredGraph& g) {
    if (strategy_.kind == KappaStrategy::Kind::Seeded) return seeded(g);
    auto c = canonical_form(g);
    if (c.zero) return {};
    DiagramVector out = canonical(c);
    if (c.sign < 0) out *= Rational(-1);
    return out;
  }

  DiagramVector operator()(const DiagramVector& v, Parity parity) {
    DiagramVector out;
    for (const auto& [c, q] : v) out.add_scaled((*this)(decode_certificate(c, parity)), q);
    return out;
  }

 private:
  DiagramVector canonical(const CanonicalClass& c) {
    auto it = memo_.find(c.cert);
    if (it != memo_.end()) return it->second;
    DiagramVector out;
    auto legs = resolvable_edges(c.graph);
    if (legs.empty()) {
      out.add(c.cert, 1);
    } else {
      int e = strategy_.kind == KappaStrategy::Kind::Min ? legs.front() : legs.back();
      auto r = resolve_internal(c.graph, e);
      out += (*this)(r.t);
      out += (*this)(r.u);
    }
    memo_.emplace(c.cert, out);
    return out;
  }

  DiagramVector seeded(const ColoredGraph& g) {
    auto legs = resolvable_edges(g);
    if (legs.empty()) return DiagramVector::of_graph(g);
    std::uniform_int_distribution<std::size_t> pick(0, legs.size() - 1);
    auto r = resolve_internal(g, legs[pick(rng_)]);
    DiagramVector out = seeded(r.t);
    out += seeded(r.u);
    return out;
  }

  KappaStrategy strategy_;
  std::mt19937_64 rng_;
  std::map<Certificate, DiagramVector> memo_;
};

inline DiagramVector kappa(const ColoredGraph& g, KappaStrategy s = {}) { return KappaEngine(s)(g); }

}  // namespace bcr
