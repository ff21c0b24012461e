#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "bcr/relations.hpp"

namespace bcr {

/// A chord end w1 sitting next to a block v1..v2n of its solid line whose
/// chords pair the block among itself. w1's chord goes to w0 outside the
/// block. Edge ids refer to the chord diagram `d`.
struct SlidingConfig {
  ColoredGraph d;
  int w0 = -1;
  int w1 = -1;
  int hair = -1;             // dashed edge w0-w1
  int e = -1;                // solid edge w1-v1
  int p = -1;                // other solid edge at w1, or -1
  int f = -1;                // solid edge leaving v2n away from the block, or -1
  std::vector<int> block;    // v1..v2n
  std::vector<int> chords;   // the n chords inside the block
  int n() const { return static_cast<int>(chords.size()); }
};

/// All sliding configurations of a chord diagram with 1 <= n <= max_n.
inline std::vector<SlidingConfig> sliding_configurations(const ColoredGraph& d, int max_n) {
  std::vector<SlidingConfig> out;
  if (!is_chord_diagram(d)) return out;
  for (int w1 = 0; w1 < d.vertex_count(); ++w1) {
    const int hair = d.dashed_edge_at(w1);
    if (hair < 0 || d.edge(hair).is_loop()) continue;
    const int w0 = d.edge(hair).other(w1);
    auto solid = half_edges_at(d, w1, EdgeKind::Solid);
    for (std::size_t side = 0; side < solid.size(); ++side) {
      SlidingConfig c;
      c.d = d;
      c.w0 = w0;
      c.w1 = w1;
      c.hair = hair;
      c.e = solid[side].edge;
      c.p = solid.size() == 2 ? solid[1 - side].edge : -1;
      int prev = w1, cur = d.edge(c.e).other(w1), via = c.e;
      std::vector<int> block;
      while (true) {
        if (cur == w0 || cur == w1) break;
        block.push_back(cur);
        int next = -1, next_edge = -1;
        for (HalfEdge h : half_edges_at(d, cur, EdgeKind::Solid))
          if (h.edge != via) {
            next_edge = h.edge;
            next = d.edge(h.edge).other(cur);
          }
        if (block.size() % 2 == 0) {
          // chords of the block must pair it among itself
          std::vector<int> chords;
          bool closed = true;
          for (int v : block) {
            int ch = d.dashed_edge_at(v);
            int o = d.edge(ch).other(v);
            if (std::find(block.begin(), block.end(), o) == block.end()) {
              closed = false;
              break;
            }
            if (std::find(chords.begin(), chords.end(), ch) == chords.end()) chords.push_back(ch);
          }
          if (closed && static_cast<int>(chords.size()) <= max_n) {
            SlidingConfig cfg = c;
            cfg.block = block;
            std::sort(chords.begin(), chords.end());
            cfg.chords = chords;
            cfg.f = next_edge;
            out.push_back(std::move(cfg));
          }
        }
        if (next < 0 || static_cast<int>(block.size()) >= 2 * max_n) break;
        prev = cur;
        cur = next;
        via = next_edge;
        (void)prev;
      }
    }
  }
  return out;
}

/// D': w1 leaves the slot between P and v1 and is inserted between v2n and
/// the far end of f. Edge labels and orientations travel with their ends.
inline ColoredGraph slide(const SlidingConfig& c) {
  std::vector<Edge> edges = c.d.edges();
  const int v1 = c.block.front(), v2n = c.block.back();
  auto move_end = [&](int edge, int from, int to) {
    Edge& x = edges[static_cast<std::size_t>(edge)];
    if (x.u == from) x.u = to;
    else if (x.v == from) x.v = to;
  };
  if (c.p >= 0) move_end(c.p, c.w1, v1);
  move_end(c.e, v1, v2n);
  if (c.f >= 0) move_end(c.f, v2n, c.w1);
  return ColoredGraph(c.d.parity(), c.d.kinds(), std::move(edges));
}

/// The graph with one internal vertex on chord j of the block that carries
/// the far end of w0's chord; w1 leaves the line and becomes that vertex.
inline ColoredGraph sliding_source(const SlidingConfig& c, int j) {
  std::vector<Edge> edges = c.d.edges();
  const int v1 = c.block.front();
  const int chord = c.chords[static_cast<std::size_t>(j)];
  Edge& ch = edges[static_cast<std::size_t>(chord)];
  const int vb = ch.v;
  ch.v = c.w1;
  if (c.p >= 0) {
    Edge& x = edges[static_cast<std::size_t>(c.p)];
    if (x.u == c.w1) x.u = v1;
    else x.v = v1;
  }
  Edge& e = edges[static_cast<std::size_t>(c.e)];
  if (e.u == c.w1) e.v = vb;
  else {
    e.u = vb;
    e.v = c.w1;
  }
  e.kind = EdgeKind::Dashed;
  ColoredGraph out(c.d.parity(), c.d.kinds(), std::move(edges));
  out.set_kind(c.w1, VertexKind::Internal);
  return out;
}

struct SlidingWitness {
  std::vector<int> signs;          // epsilon_j per chord
  std::vector<DiagramVector> rows; // 4T row of each sliding source
  int terms = 0;                   // graphs across all rows
  int cancelling_pairs = 0;        // -1 when the rest does not pair up
  int orientation = 0;             // D - orientation * D' is the sum, 0 if none
  bool found = false;
};

/// Searches signs eps_j so that sum_j eps_j * row_j = D - s D' for s = +-1,
/// where row_j resolves the internal vertex of the j-th sliding source along
/// its two chord halves.
inline SlidingWitness telescoping_witness(const SlidingConfig& c) {
  SlidingWitness w;
  struct Term {
    Certificate cert;
    int sign;
  };
  std::vector<std::vector<Term>> per_row;
  for (int j = 0; j < c.n(); ++j) {
    ColoredGraph s = sliding_source(c, j);
    auto legs = resolvable_edges(s);
    const int chord = c.chords[static_cast<std::size_t>(j)];
    std::vector<Term> terms;
    DiagramVector row;
    int sgn = 1;
    for (int leg : {chord, c.e}) {
      if (std::find(legs.begin(), legs.end(), leg) == legs.end()) return w;
      auto r = resolve_internal(s, leg);
      for (const ColoredGraph* g : {&r.t, &r.u}) {
        auto cc = canonical_form(*g);
        terms.push_back({cc.cert, cc.zero ? 0 : cc.sign * sgn});
        row.add_graph(*g, sgn);
      }
      sgn = -sgn;
    }
    per_row.push_back(std::move(terms));
    w.rows.push_back(std::move(row));
  }
  w.terms = 4 * c.n();
  DiagramVector d = DiagramVector::of_graph(c.d);
  DiagramVector dp = DiagramVector::of_graph(slide(c));
  const int n = c.n();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> eps(static_cast<std::size_t>(n));
    DiagramVector sum;
    for (int j = 0; j < n; ++j) {
      eps[static_cast<std::size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
      sum.add_scaled(w.rows[static_cast<std::size_t>(j)], eps[static_cast<std::size_t>(j)]);
    }
    for (int s : {1, -1}) {
      if (!(sum == d - Rational(s) * dp)) continue;
      w.found = true;
      w.signs = eps;
      w.orientation = s;
      // Take out one term standing for D and one for D'; the rest must
      // cancel in pairs of equal classes with opposite signs.
      std::map<Certificate, std::vector<int>> bucket;
      for (int j = 0; j < n; ++j)
        for (const Term& t : per_row[static_cast<std::size_t>(j)])
          bucket[t.cert].push_back(t.sign * eps[static_cast<std::size_t>(j)]);
      auto take = [&](const ColoredGraph& g, int coeff) {
        auto cc = canonical_form(g);
        auto& v = bucket[cc.cert];
        auto it = std::find(v.begin(), v.end(), cc.zero ? 0 : cc.sign * coeff);
        if (it == v.end()) return false;
        v.erase(it);
        return true;
      };
      int pairs = 0;
      bool paired = take(c.d, 1) && take(slide(c), -s);
      for (auto& [cert, signs] : bucket) {
        int pos = static_cast<int>(std::count(signs.begin(), signs.end(), 1));
        int neg = static_cast<int>(std::count(signs.begin(), signs.end(), -1));
        int zer = static_cast<int>(std::count(signs.begin(), signs.end(), 0));
        if (pos != neg || zer % 2 != 0) paired = false;
        pairs += pos + zer / 2;
      }
      if (!paired) pairs = -1;
      w.cancelling_pairs = pairs;
      return w;
    }
  }
  return w;
}

}  // namespace bcr
