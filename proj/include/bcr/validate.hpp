#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bcr/graph.hpp"

namespace bcr {

struct Violation {
  std::string clause;
  std::vector<int> vertices;
  std::vector<int> edges;

  std::string describe() const {
    std::ostringstream os;
    os << clause;
    if (!vertices.empty()) {
      os << " (vertices";
      for (int v : vertices) os << ' ' << v;
      os << ')';
    }
    if (!edges.empty()) {
      os << " (edges";
      for (int e : edges) os << ' ' << e;
      os << ')';
    }
    return os.str();
  }
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(const std::string& clause) const {
    for (const auto& v : violations)
      if (v.clause == clause) return true;
    return false;
  }
  std::string describe() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v.describe();
    }
    return out;
  }
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const ValidationReport& r)
      : std::runtime_error("invalid graph: " + r.describe()), report_(r) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every structural clause of the requested class. Violations are
/// collected, not thrown.
inline ValidationReport validate(const ColoredGraph& g, GraphClass cls = GraphClass::BCR) {
  ValidationReport r;
  const int n = g.vertex_count();
  if (n == 0) {
    r.violations.push_back({"empty graph", {}, {}});
    return r;
  }
  if (!g.is_connected()) r.violations.push_back({"graph is not connected", {}, {}});
  if (g.external_count() == 0) r.violations.push_back({"no external vertex", {}, {}});

  for (int v = 0; v < n; ++v) {
    const int dashed = g.degree(v, EdgeKind::Dashed);
    const int solid = g.degree(v, EdgeKind::Solid);
    if (g.is_internal(v)) {
      if (dashed != 3) r.violations.push_back({"internal dashed-degree != 3", {v}, {}});
      if (solid != 0) r.violations.push_back({"internal vertex has solid edge", {v}, {}});
    } else {
      if (dashed != 1) r.violations.push_back({"external dashed-degree != 1", {v}, {}});
      if (solid > 2) r.violations.push_back({"external solid-degree > 2", {v}, {}});
    }
  }

  // Solid edges must form disjoint broken lines.
  std::map<std::pair<int, int>, std::vector<int>> solid_pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& x = g.edge(e);
    if (x.kind != EdgeKind::Solid) continue;
    if (x.is_loop()) {
      r.violations.push_back({"solid loop", {x.u}, {e}});
      continue;
    }
    if (g.is_internal(x.u) || g.is_internal(x.v)) continue;  // reported above
    solid_pairs[{std::min(x.u, x.v), std::max(x.u, x.v)}].push_back(e);
  }
  for (const auto& [pair, es] : solid_pairs)
    if (es.size() > 1) r.violations.push_back({"double solid edge", {pair.first, pair.second}, es});

  {
    // A cycle among solid edges closes a solid loop.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& [pair, es] : solid_pairs) {
      if (es.size() > 1) continue;
      int a = find(pair.first), b = find(pair.second);
      if (a == b) {
        r.violations.push_back({"solid loop", {pair.first, pair.second}, es});
      } else {
        parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }

  if (cls == GraphClass::Hairy && g.has_solid_edges()) {
    std::vector<int> es;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.edge(e).kind == EdgeKind::Solid) es.push_back(e);
    r.violations.push_back({"hairy graph has solid edges", {}, es});
  }
  if (cls == GraphClass::Chord && g.internal_count() > 0) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (g.is_internal(v)) vs.push_back(v);
    r.violations.push_back({"chord diagram has internal vertices", vs, {}});
  }
  return r;
}

inline void require_valid(const ColoredGraph& g, GraphClass cls = GraphClass::BCR) {
  auto r = validate(g, cls);
  if (!r.ok()) throw ValidationError(r);
}

/// A maximal solid broken line, listed from one end to the other. An isolated
/// external vertex is a line of length one.
struct SolidLine {
  std::vector<int> vertices;
  std::vector<int> edges;  // edges[i] joins vertices[i] and vertices[i + 1]
};

/// Solid lines of a valid graph. Each line starts at its endpoint with the
/// smaller vertex index; lines are ordered by decreasing length, then by
/// first vertex.
inline std::vector<SolidLine> solid_lines(const ColoredGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& x = g.edge(e);
    if (x.kind != EdgeKind::Solid) continue;
    adj[static_cast<std::size_t>(x.u)].push_back({x.v, e});
    adj[static_cast<std::size_t>(x.v)].push_back({x.u, e});
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<SolidLine> lines;
  for (int v = 0; v < n; ++v) {
    if (!g.is_external(v) || seen[static_cast<std::size_t>(v)]) continue;
    if (adj[static_cast<std::size_t>(v)].size() > 1) continue;
    SolidLine line;
    int prev = -1, cur = v;
    while (true) {
      seen[static_cast<std::size_t>(cur)] = 1;
      line.vertices.push_back(cur);
      int next = -1, via = -1;
      for (auto [w, e] : adj[static_cast<std::size_t>(cur)])
        if (w != prev) {
          next = w;
          via = e;
        }
      if (next < 0 || seen[static_cast<std::size_t>(next)]) break;
      line.edges.push_back(via);
      prev = cur;
      cur = next;
    }
    if (line.vertices.back() < line.vertices.front()) {
      std::reverse(line.vertices.begin(), line.vertices.end());
      std::reverse(line.edges.begin(), line.edges.end());
    }
    lines.push_back(std::move(line));
  }
  for (int v = 0; v < n; ++v)
    if (g.is_external(v) && !seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("solid edges do not form broken lines");
  std::stable_sort(lines.begin(), lines.end(), [](const SolidLine& a, const SolidLine& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.vertices.front() < b.vertices.front();
  });
  return lines;
}

/// Descending vertex counts of the solid lines.
struct SolidType {
  std::vector<int> lengths;
  friend bool operator==(const SolidType&, const SolidType&) = default;
};

inline SolidType solid_type(const ColoredGraph& g) {
  require_valid(g);
  SolidType t;
  for (const auto& line : solid_lines(g)) t.lengths.push_back(static_cast<int>(line.vertices.size()));
  std::sort(t.lengths.rbegin(), t.lengths.rend());
  return t;
}

}  // namespace bcr
