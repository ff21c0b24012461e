#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bcr/canonical.hpp"
#include "bcr/conventions.hpp"
#include "bcr/diagram.hpp"
#include "bcr/graph.hpp"
#include "bcr/linalg.hpp"
#include "bcr/validate.hpp"

namespace bcr {

/// One end of an edge: end 0 is `u` (the tail under odd parity), end 1 is `v`.
struct HalfEdge {
  int edge = 0;
  int end = 0;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

inline int& endpoint(std::vector<Edge>& edges, HalfEdge h) {
  Edge& e = edges[static_cast<std::size_t>(h.edge)];
  return h.end == 0 ? e.u : e.v;
}

/// Half-edges of the given kind at v, ordered by edge index, tail first.
inline std::vector<HalfEdge> half_edges_at(const ColoredGraph& g, int v, EdgeKind kind) {
  std::vector<HalfEdge> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != kind) continue;
    if (e.u == v) out.push_back({i, 0});
    if (e.v == v) out.push_back({i, 1});
  }
  return out;
}

/// External vertices read left to right along the solid lines. Position p
/// holds the leg of `vertex_at[p]`.
struct LegLayout {
  std::vector<SolidLine> lines;
  std::vector<int> vertex_at;
  std::vector<int> line_of;
  std::vector<int> position_of;  // per vertex, -1 for internal vertices

  int size() const { return static_cast<int>(vertex_at.size()); }
  bool adjacent(int i) const {
    return i >= 0 && i + 1 < size() &&
           line_of[static_cast<std::size_t>(i)] == line_of[static_cast<std::size_t>(i + 1)];
  }
  /// Positions of the first and one-past-last leg of each line.
  std::vector<std::pair<int, int>> blocks() const {
    std::vector<std::pair<int, int>> out;
    int start = 0;
    for (const auto& l : lines) {
      int len = static_cast<int>(l.vertices.size());
      out.push_back({start, start + len});
      start += len;
    }
    return out;
  }
};

inline LegLayout leg_layout(const ColoredGraph& g) {
  LegLayout out;
  out.lines = solid_lines(g);
  out.position_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t l = 0; l < out.lines.size(); ++l)
    for (int v : out.lines[l].vertices) {
      out.position_of[static_cast<std::size_t>(v)] = out.size();
      out.vertex_at.push_back(v);
      out.line_of.push_back(static_cast<int>(l));
    }
  return out;
}

/// Moves the leg at position p to position perm[p] for every p, leaving all
/// labels, orientations and vertex kinds in place. This is the unsigned
/// permuted graph; the signed one carries the extra factor sign(perm).
inline ColoredGraph permute_legs(const ColoredGraph& g, const LegLayout& layout,
                                 const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != layout.size()) throw std::invalid_argument("permutation size");
  for (int p = 0; p < layout.size(); ++p)
    if (layout.line_of[static_cast<std::size_t>(p)] !=
        layout.line_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])])
      throw std::invalid_argument("permutation moves a leg to another solid component");
  std::vector<std::pair<HalfEdge, int>> moves;
  for (int p = 0; p < layout.size(); ++p) {
    int from = layout.vertex_at[static_cast<std::size_t>(p)];
    int to = layout.vertex_at[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
    for (HalfEdge h : half_edges_at(g, from, EdgeKind::Dashed)) moves.push_back({h, to});
  }
  std::vector<Edge> edges = g.edges();
  for (auto [h, to] : moves) endpoint(edges, h) = to;
  return ColoredGraph(g.parity(), g.kinds(), std::move(edges));
}

inline std::vector<int> adjacent_transposition(int k, int i) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) perm[static_cast<std::size_t>(p)] = p;
  std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  return perm;
}

/// (U_i D) with its sign: U_i D = -(swapped graph).
inline ColoredGraph swap_adjacent_legs(const ColoredGraph& g, const LegLayout& layout, int i) {
  if (!layout.adjacent(i)) throw std::invalid_argument("positions are not solid-adjacent");
  return permute_legs(g, layout, adjacent_transposition(layout.size(), i));
}

/// S_i D: the externals x, y at positions i, i+1 merge. x stays external and
/// keeps both remaining solid edges; y becomes the new internal vertex; the
/// solid edge x-y turns dashed; the leg of x moves to y. No label changes.
inline ColoredGraph merge_external_pair(const ColoredGraph& g, const LegLayout& layout, int i) {
  if (!layout.adjacent(i)) throw std::invalid_argument("positions are not solid-adjacent");
  const int x = layout.vertex_at[static_cast<std::size_t>(i)];
  const int y = layout.vertex_at[static_cast<std::size_t>(i + 1)];
  int link = -1;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& s = g.edge(e);
    if (s.kind == EdgeKind::Solid && s.touches(x) && s.touches(y)) link = e;
  }
  if (link < 0) throw std::logic_error("solid-adjacent externals without a solid edge");

  std::vector<Edge> edges = g.edges();
  auto leg_x = half_edges_at(g, x, EdgeKind::Dashed);
  for (HalfEdge h : leg_x) endpoint(edges, h) = y;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == link) continue;
    Edge& s = edges[static_cast<std::size_t>(e)];
    if (s.kind != EdgeKind::Solid) continue;
    if (s.u == y) s.u = x;
    if (s.v == y) s.v = x;
  }
  edges[static_cast<std::size_t>(link)].kind = EdgeKind::Dashed;
  ColoredGraph out(g.parity(), g.kinds(), std::move(edges));
  out.set_kind(y, VertexKind::Internal);
  return out;
}

inline ColoredGraph merge_external_pair(const ColoredGraph& g, int i) {
  return merge_external_pair(g, leg_layout(g), i);
}

/// The two expansions of an internal vertex along one of its legs.
struct Resolution {
  ColoredGraph t;
  ColoredGraph u;
};

/// Splits the external end v of the dashed edge e = (w, v) into two solid
/// neighbours: v keeps its index, w becomes the second external, e becomes
/// the solid edge between them. The two other half-edges a < b of w go to
/// (v, w) in `t` and to (w, v) in `u`. If v had two solid edges, the one with
/// the larger index moves to w.
inline Resolution resolve_internal(const ColoredGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw std::out_of_range("no such edge");
  const Edge& d = g.edge(e);
  if (d.kind != EdgeKind::Dashed || d.is_loop())
    throw std::invalid_argument("resolution needs a dashed internal-to-external edge");
  int w = -1, v = -1;
  if (g.is_internal(d.u) && g.is_external(d.v)) {
    w = d.u;
    v = d.v;
  } else if (g.is_internal(d.v) && g.is_external(d.u)) {
    w = d.v;
    v = d.u;
  } else {
    throw std::invalid_argument("resolution needs a dashed internal-to-external edge");
  }

  std::vector<HalfEdge> others;
  for (HalfEdge h : half_edges_at(g, w, EdgeKind::Dashed))
    if (h.edge != e) others.push_back(h);
  if (others.size() != 2) throw std::invalid_argument("internal vertex is not trivalent");

  std::vector<Edge> base = g.edges();
  auto solid = half_edges_at(g, v, EdgeKind::Solid);
  if (solid.size() == 2) endpoint(base, solid[1]) = w;
  base[static_cast<std::size_t>(e)].kind = EdgeKind::Solid;

  auto build = [&](HalfEdge to_v) {
    std::vector<Edge> edges = base;
    endpoint(edges, to_v) = v;
    ColoredGraph out(g.parity(), g.kinds(), std::move(edges));
    out.set_kind(w, VertexKind::External);
    return out;
  };
  return {build(others[0]), build(others[1])};
}

/// Edges joining an internal vertex to an external one.
inline std::vector<int> resolvable_edges(const ColoredGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Dashed && g.kind(e.u) != g.kind(e.v)) out.push_back(i);
  }
  return out;
}

/// Value of one resolution step: D = T + U with the unsigned expansions.
inline DiagramVector resolution_value(const ColoredGraph& g, int e) {
  auto r = resolve_internal(g, e);
  DiagramVector out = DiagramVector::of_graph(r.t);
  out.add_graph(r.u);
  return out;
}

// ---------------------------------------------------------------------------
// Relation rows

/// A three-term STU instance D - U_i D = S_i D. Case I when the merged
/// external vertex keeps a solid edge, case II otherwise.
struct StuTriple {
  ColoredGraph left;    // D
  ColoredGraph right;   // the swapped graph, equal to -U_i D
  ColoredGraph merged;  // S_i D
  int position = 0;
  bool case_two = false;

  DiagramVector row() const {
    DiagramVector v = DiagramVector::of_graph(left);
    v.add_graph(right);
    v.add_graph(merged, -1);
    return v;
  }
};

inline std::vector<StuTriple> stu_triples(const ColoredGraph& g) {
  std::vector<StuTriple> out;
  auto layout = leg_layout(g);
  for (int i = 0; i + 1 < layout.size(); ++i) {
    if (!layout.adjacent(i)) continue;
    StuTriple t;
    t.left = g;
    t.right = swap_adjacent_legs(g, layout, i);
    t.merged = merge_external_pair(g, layout, i);
    t.position = i;
    t.case_two = layout.lines[static_cast<std::size_t>(layout.line_of[static_cast<std::size_t>(i)])]
                     .vertices.size() == 2;
    out.push_back(std::move(t));
  }
  return out;
}

/// IHX instances on the dashed edge e between distinct internal vertices:
/// returns {I, H, X} where H and X exchange the second leg of one end with
/// the first (resp. second) leg of the other end.
inline std::optional<std::array<ColoredGraph, 3>> ihx_triple(const ColoredGraph& g, int e) {
  const Edge& m = g.edge(e);
  if (m.kind != EdgeKind::Dashed || m.is_loop() || !g.is_internal(m.u) || !g.is_internal(m.v))
    return std::nullopt;
  std::vector<HalfEdge> a_side, c_side;
  for (HalfEdge h : half_edges_at(g, m.u, EdgeKind::Dashed))
    if (h.edge != e) a_side.push_back(h);
  for (HalfEdge h : half_edges_at(g, m.v, EdgeKind::Dashed))
    if (h.edge != e) c_side.push_back(h);
  if (a_side.size() != 2 || c_side.size() != 2) return std::nullopt;
  auto exchange = [&](HalfEdge p, HalfEdge q) {
    std::vector<Edge> edges = g.edges();
    std::swap(endpoint(edges, p), endpoint(edges, q));
    return ColoredGraph(g.parity(), g.kinds(), std::move(edges));
  };
  return std::array<ColoredGraph, 3>{g, exchange(a_side[1], c_side[0]), exchange(a_side[1], c_side[1])};
}

inline DiagramVector ihx_row(const std::array<ColoredGraph, 3>& t) {
  DiagramVector v = DiagramVector::of_graph(t[0]);
  v.add_graph(t[1], kIhxSideSign);
  v.add_graph(t[2], kIhxSideSign);
  return v;
}

/// The partner D2 of a chord relation on the chord e of D1: e joins two
/// externals that end different solid lines and have one solid edge each.
/// D2 moves the solid edge of e's head onto e's tail, so e becomes a hair.
inline std::optional<ColoredGraph> chord_partner(const ColoredGraph& g, int e) {
  const Edge& c = g.edge(e);
  if (c.kind != EdgeKind::Dashed || c.is_loop() || !g.is_external(c.u) || !g.is_external(c.v))
    return std::nullopt;
  if (g.degree(c.u, EdgeKind::Solid) != 1 || g.degree(c.v, EdgeKind::Solid) != 1) return std::nullopt;
  auto layout = leg_layout(g);
  if (layout.line_of[static_cast<std::size_t>(layout.position_of[static_cast<std::size_t>(c.u)])] ==
      layout.line_of[static_cast<std::size_t>(layout.position_of[static_cast<std::size_t>(c.v)])])
    return std::nullopt;  // the contraction would close a solid loop
  std::vector<Edge> edges = g.edges();
  for (HalfEdge h : half_edges_at(g, c.v, EdgeKind::Solid)) endpoint(edges, h) = c.u;
  return ColoredGraph(g.parity(), g.kinds(), std::move(edges));
}

inline DiagramVector chord_row(const ColoredGraph& d1, const ColoredGraph& d2) {
  DiagramVector v = DiagramVector::of_graph(d1);
  v.add_graph(d2, kChordRowSign);
  return v;
}

/// Knobs for deliberately corrupting a generator (fault-injection tests).
struct GeneratorOptions {
  bool corrupt_stu = false;
};

inline void emit_stu(const ColoredGraph& g, std::vector<RelationRow>& out,
                     const GeneratorOptions& opt = {}) {
  auto cert = canonical_form(g).cert;
  for (const auto& t : stu_triples(g)) {
    DiagramVector v = t.row();
    if (opt.corrupt_stu) {
      v = DiagramVector::of_graph(t.left);
      v.add_graph(t.right, -1);
      v.add_graph(t.merged, -1);
    }
    out.push_back({std::move(v), Provenance::STU, {cert}});
  }
}

inline void emit_ihx(const ColoredGraph& g, std::vector<RelationRow>& out) {
  auto cert = canonical_form(g).cert;
  for (int e = 0; e < g.edge_count(); ++e)
    if (auto t = ihx_triple(g, e)) out.push_back({ihx_row(*t), Provenance::IHX, {cert}});
}

inline void emit_chord(const ColoredGraph& g, GraphClass cls, std::vector<RelationRow>& out) {
  if (cls == GraphClass::Chord && !is_chord_diagram(g)) return;
  auto cert = canonical_form(g).cert;
  for (int e = 0; e < g.edge_count(); ++e)
    if (auto d2 = chord_partner(g, e)) {
      if (cls == GraphClass::Chord && !is_chord_diagram(*d2)) continue;
      out.push_back({chord_row(g, *d2), Provenance::Chord, {cert, canonical_form(*d2).cert}});
    }
}

/// 4T rows of a graph with exactly one internal vertex: differences of the
/// resolution values along pairs of its legs.
inline void emit_4t(const ColoredGraph& s, std::vector<RelationRow>& out) {
  if (s.internal_count() != 1) return;
  auto legs = resolvable_edges(s);
  auto cert = canonical_form(s).cert;
  std::vector<DiagramVector> values;
  for (int e : legs) values.push_back(resolution_value(s, e));
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      out.push_back({values[i] - values[j], Provenance::FourT, {cert}});
}

}  // namespace bcr
