#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcr {

// Even parity colors a graph by numbering its edges; odd parity orients every
// edge and labels the vertices.
enum class Parity : std::uint8_t { Even, Odd };

enum class VertexKind : std::uint8_t { External, Internal };
enum class EdgeKind : std::uint8_t { Dashed, Solid };

enum class GraphClass : std::uint8_t { BCR, Hairy, Chord };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::BCR: return "bcr";
    case GraphClass::Hairy: return "hairy";
    case GraphClass::Chord: return "chord";
  }
  return "?";
}

inline Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("unknown parity '" + s + "'");
}

inline GraphClass parse_graph_class(const std::string& s) {
  if (s == "bcr" || s == "BCR") return GraphClass::BCR;
  if (s == "hairy" || s == "Hairy") return GraphClass::Hairy;
  if (s == "chord" || s == "Chord") return GraphClass::Chord;
  throw std::invalid_argument("unknown graph class '" + s + "'");
}

/// An edge between vertex indices `u` and `v`. Under odd parity the edge is
/// oriented `u -> v`; under even parity the orientation carries no meaning.
struct Edge {
  int u = 0;
  int v = 0;
  EdgeKind kind = EdgeKind::Dashed;

  bool is_loop() const { return u == v; }
  bool touches(int x) const { return u == x || v == x; }
  int other(int x) const { return u == x ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A colored BCR-type multigraph.
///
/// The coloring is carried by the representation itself: under even parity the
/// position of an edge in `edges()` is its number, under odd parity the index
/// of a vertex is its label and each edge is oriented `u -> v`. Two colored
/// graphs compare equal only if they agree in this representation.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Parity parity, std::vector<VertexKind> kinds, std::vector<Edge> edges)
      : parity_(parity), kinds_(std::move(kinds)), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= vertex_count() || e.v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    }
  }

  Parity parity() const { return parity_; }
  int vertex_count() const { return static_cast<int>(kinds_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexKind>& kinds() const { return kinds_; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexKind kind(int v) const { return kinds_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  bool is_external(int v) const { return kind(v) == VertexKind::External; }
  bool is_internal(int v) const { return kind(v) == VertexKind::Internal; }

  int external_count() const {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), VertexKind::External));
  }
  int internal_count() const { return vertex_count() - external_count(); }

  int solid_edge_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [](const Edge& e) { return e.kind == EdgeKind::Solid; }));
  }

  /// Number of edge ends of the given kind at `v`; a loop counts twice.
  int degree(int v, EdgeKind kind) const {
    int d = 0;
    for (const Edge& e : edges_) {
      if (e.kind != kind) continue;
      if (e.u == v) ++d;
      if (e.v == v) ++d;
    }
    return d;
  }

  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
      if (edges_[static_cast<std::size_t>(i)].touches(v)) out.push_back(i);
    return out;
  }

  /// The dashed edge at an external vertex, or -1.
  int dashed_edge_at(int v) const {
    for (int i = 0; i < edge_count(); ++i) {
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      if (e.kind == EdgeKind::Dashed && e.touches(v)) return i;
    }
    return -1;
  }

  bool has_solid_edges() const { return solid_edge_count() > 0; }

  bool is_connected() const {
    const int n = vertex_count();
    if (n == 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    int components = n;
    for (const Edge& e : edges_) {
      int a = find(e.u), b = find(e.v);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    return components == 1;
  }

  // Mutators used by the local rewiring rules. They never renumber anything.
  std::vector<Edge>& mutable_edges() { return edges_; }
  void set_kind(int v, VertexKind k) { kinds_[static_cast<std::size_t>(v)] = k; }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Parity parity_ = Parity::Even;
  std::vector<VertexKind> kinds_;
  std::vector<Edge> edges_;
};

/// Graph class membership, read off the structure.
inline bool is_hairy(const ColoredGraph& g) { return !g.has_solid_edges(); }
inline bool is_chord_diagram(const ColoredGraph& g) { return g.internal_count() == 0; }

inline bool belongs_to(const ColoredGraph& g, GraphClass c) {
  switch (c) {
    case GraphClass::BCR: return true;
    case GraphClass::Hairy: return is_hairy(g);
    case GraphClass::Chord: return is_chord_diagram(g);
  }
  return false;
}

/// Sign of a permutation given as an image vector.
inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Recolors `g`: vertex `v` becomes `vertex_perm[v]`, edge `e` moves to slot
/// `edge_perm[e]`, and edges listed in `reversed` swap their endpoints. The
/// underlying graph is unchanged up to isomorphism.
inline ColoredGraph recolor(const ColoredGraph& g, const std::vector<int>& vertex_perm,
                            const std::vector<int>& edge_perm,
                            const std::vector<bool>& reversed = {}) {
  std::vector<VertexKind> kinds(g.kinds().size());
  for (int v = 0; v < g.vertex_count(); ++v)
    kinds[static_cast<std::size_t>(vertex_perm[static_cast<std::size_t>(v)])] = g.kind(v);
  std::vector<Edge> edges(g.edges().size());
  for (int e = 0; e < g.edge_count(); ++e) {
    Edge x = g.edge(e);
    x.u = vertex_perm[static_cast<std::size_t>(x.u)];
    x.v = vertex_perm[static_cast<std::size_t>(x.v)];
    if (!reversed.empty() && reversed[static_cast<std::size_t>(e)]) std::swap(x.u, x.v);
    edges[static_cast<std::size_t>(edge_perm[static_cast<std::size_t>(e)])] = x;
  }
  return ColoredGraph(g.parity(), std::move(kinds), std::move(edges));
}

/// The sign by which `recolor(g, vertex_perm, edge_perm, reversed)` differs
/// from `g` in the orientation quotient.
inline int recoloring_sign(Parity parity, const std::vector<int>& vertex_perm,
                           const std::vector<int>& edge_perm, const std::vector<bool>& reversed) {
  if (parity == Parity::Even) return permutation_sign(edge_perm);
  int sign = permutation_sign(vertex_perm);
  for (bool r : reversed)
    if (r) sign = -sign;
  return sign;
}

}  // namespace bcr
