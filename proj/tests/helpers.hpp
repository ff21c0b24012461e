#pragma once

#include <ostream>
#include <vector>

#include "bcr/diagram.hpp"
#include "bcr/graph.hpp"

namespace bcr {

inline void PrintTo(const DiagramVector& v, std::ostream* os) { *os << v.str(); }

}  // namespace bcr

namespace testing_graphs {

using bcr::ColoredGraph;
using bcr::Edge;
using bcr::EdgeKind;
using bcr::Parity;
using bcr::VertexKind;

constexpr VertexKind X = VertexKind::External;
constexpr VertexKind I = VertexKind::Internal;
constexpr EdgeKind D = EdgeKind::Dashed;
constexpr EdgeKind S = EdgeKind::Solid;

inline ColoredGraph strut(Parity p = Parity::Even) { return ColoredGraph(p, {X, X}, {{0, 1, D}}); }

/// One internal vertex with three legs to isolated externals.
inline ColoredGraph tripod(Parity p = Parity::Even) {
  return ColoredGraph(p, {I, X, X, X}, {{0, 1, D}, {0, 2, D}, {0, 3, D}});
}

/// A two-vertex solid line whose ends carry hairs to isolated externals.
inline ColoredGraph hairy_pair(Parity p = Parity::Even) {
  return ColoredGraph(p, {X, X, X, X}, {{0, 1, S}, {0, 2, D}, {1, 3, D}});
}

/// A chord between the two ends of one solid edge.
inline ColoredGraph short_chord(Parity p = Parity::Even) {
  return ColoredGraph(p, {X, X}, {{0, 1, S}, {0, 1, D}});
}

/// Isolated external joined to an internal vertex carrying a dashed loop.
inline ColoredGraph looped_hair(Parity p = Parity::Even) {
  return ColoredGraph(p, {X, I}, {{0, 1, D}, {1, 1, D}});
}

}  // namespace testing_graphs
