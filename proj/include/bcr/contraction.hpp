#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcr/graph.hpp"

namespace bcr {

struct Contraction {
  ColoredGraph graph;
  int sign = 1;
};

/// Contracts a non-loop dashed edge. The merged vertex is external if either
/// end was. Even case: the edge moves to the last slot before removal, the
/// remaining numbering is kept in order and sign = (-1)^(m - position).
/// Odd case: the tail and head labels move to the last two slots, the merged
/// vertex takes the first of them, and the sign is that of the relabeling.
inline Contraction contract_dashed_edge(const ColoredGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) throw std::out_of_range("no such edge");
  const Edge& c = g.edge(edge);
  if (c.kind != EdgeKind::Dashed) throw std::invalid_argument("contraction of a solid edge");
  if (c.is_loop()) throw std::invalid_argument("contraction of a loop");

  const int n = g.vertex_count();
  const int m = g.edge_count();
  Contraction out;
  std::vector<int> relabel(static_cast<std::size_t>(n));
  if (g.parity() == Parity::Even) {
    out.sign = ((m - 1 - edge) % 2 == 0) ? 1 : -1;
    // the merged vertex takes the smaller index
    const int keep = std::min(c.u, c.v), drop = std::max(c.u, c.v);
    for (int v = 0; v < n; ++v) relabel[static_cast<std::size_t>(v)] = v < drop ? v : v - 1;
    relabel[static_cast<std::size_t>(drop)] = keep;
  } else {
    std::vector<int> perm(static_cast<std::size_t>(n));
    int next = 0;
    for (int v = 0; v < n; ++v)
      if (v != c.u && v != c.v) perm[static_cast<std::size_t>(v)] = next++;
    perm[static_cast<std::size_t>(c.u)] = n - 2;
    perm[static_cast<std::size_t>(c.v)] = n - 1;
    out.sign = permutation_sign(perm);
    relabel = perm;
    relabel[static_cast<std::size_t>(c.v)] = n - 2;
  }

  std::vector<VertexKind> kinds(static_cast<std::size_t>(n - 1), VertexKind::Internal);
  for (int v = 0; v < n; ++v) {
    auto& k = kinds[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)])];
    if (g.is_external(v)) k = VertexKind::External;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    if (i == edge) continue;
    Edge e = g.edge(i);
    e.u = relabel[static_cast<std::size_t>(e.u)];
    e.v = relabel[static_cast<std::size_t>(e.v)];
    edges.push_back(e);
  }
  out.graph = ColoredGraph(g.parity(), std::move(kinds), std::move(edges));
  return out;
}

}  // namespace bcr
