#pragma once

// Independent enumeration: every labeled multigraph with the right vertex
// kinds is generated edge by edge, filtered by validate(), and grouped by a
// key minimized over all kind-preserving vertex relabelings. Zero classes are
// found by listing automorphisms together with every compatible edge
// bijection. Nothing here calls the canonical labeling code.

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/validate.hpp"

namespace oracle {

using bcr::ColoredGraph;
using bcr::Edge;
using bcr::EdgeKind;
using bcr::Parity;
using bcr::VertexKind;

using Key = std::vector<std::tuple<int, int, int>>;

inline Key relabeled_key(const ColoredGraph& g, const std::vector<int>& p) {
  Key k;
  for (const Edge& e : g.edges()) {
    int a = p[static_cast<std::size_t>(e.u)], b = p[static_cast<std::size_t>(e.v)];
    k.emplace_back(std::min(a, b), std::max(a, b), static_cast<int>(e.kind));
  }
  std::sort(k.begin(), k.end());
  return k;
}

/// Relabelings that keep externals 0..k-1 and internals k..n-1 in place as sets.
inline std::vector<std::vector<int>> kind_preserving_perms(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> ext(static_cast<std::size_t>(k)), in(static_cast<std::size_t>(n - k));
  for (int i = 0; i < k; ++i) ext[static_cast<std::size_t>(i)] = i;
  for (int i = k; i < n; ++i) in[static_cast<std::size_t>(i - k)] = i;
  do {
    std::vector<int> in2 = in;
    do {
      std::vector<int> p = ext;
      p.insert(p.end(), in2.begin(), in2.end());
      out.push_back(p);
    } while (std::next_permutation(in2.begin(), in2.end()));
  } while (std::next_permutation(ext.begin(), ext.end()));
  return out;
}

inline int perm_sign(std::vector<int> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      s = -s;
    }
  return s;
}

/// True when some automorphism acts on the coloring with sign -1.
inline bool is_zero_class(const ColoredGraph& g, const std::vector<std::vector<int>>& perms) {
  const Key base = relabeled_key(g, std::vector<int>(perms.front()));
  const int m = g.edge_count();
  for (const auto& p : perms) {
    if (relabeled_key(g, p) != base) continue;
    // candidates for the image of each edge
    std::vector<std::vector<int>> cand(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
      const Edge& x = g.edge(e);
      int a = p[static_cast<std::size_t>(x.u)], b = p[static_cast<std::size_t>(x.v)];
      for (int f = 0; f < m; ++f) {
        const Edge& y = g.edge(f);
        if (y.kind == x.kind && ((y.u == a && y.v == b) || (y.u == b && y.v == a)))
          cand[static_cast<std::size_t>(e)].push_back(f);
      }
    }
    std::vector<int> image(static_cast<std::size_t>(m), -1);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    bool odd_found = false;
    auto rec = [&](auto&& self, int e) -> void {
      if (odd_found) return;
      if (e == m) {
        int s;
        if (g.parity() == Parity::Even) {
          s = perm_sign(image);
        } else {
          s = perm_sign(p);
          for (int i = 0; i < m; ++i) {
            const Edge& x = g.edge(i);
            const Edge& y = g.edge(image[static_cast<std::size_t>(i)]);
            if (x.is_loop()) {
              odd_found = true;  // a loop can be mapped onto itself reversed
              return;
            }
            if (y.u != p[static_cast<std::size_t>(x.u)]) s = -s;
          }
        }
        if (s < 0) odd_found = true;
        return;
      }
      for (int f : cand[static_cast<std::size_t>(e)]) {
        if (used[static_cast<std::size_t>(f)]) continue;
        used[static_cast<std::size_t>(f)] = 1;
        image[static_cast<std::size_t>(e)] = f;
        self(self, e + 1);
        used[static_cast<std::size_t>(f)] = 0;
      }
    };
    rec(rec, 0);
    if (odd_found) return true;
  }
  return false;
}

struct BruteClass {
  ColoredGraph graph;
  bool zero = false;
};

/// All isomorphism classes of valid graphs with V vertices and E edges.
/// Under odd parity each edge is oriented u -> v with u <= v.
inline std::vector<BruteClass> brute_force_classes(int V, int E, Parity parity) {
  std::vector<BruteClass> out;
  for (int k = 1; k <= V; ++k) {
    std::vector<VertexKind> kinds(static_cast<std::size_t>(V), VertexKind::Internal);
    for (int i = 0; i < k; ++i) kinds[static_cast<std::size_t>(i)] = VertexKind::External;
    struct Type {
      int u, v;
      EdgeKind kind;
    };
    std::vector<Type> types;
    for (int u = 0; u < V; ++u)
      for (int v = u; v < V; ++v)
        for (EdgeKind kind : {EdgeKind::Dashed, EdgeKind::Solid}) types.push_back({u, v, kind});
    const auto perms = kind_preserving_perms(k, V);
    std::map<Key, ColoredGraph> classes;
    std::vector<int> dashed(static_cast<std::size_t>(V), 0), solid(static_cast<std::size_t>(V), 0);
    std::vector<Edge> edges;
    auto fits = [&](int v) {
      const bool ext = v < k;
      return dashed[static_cast<std::size_t>(v)] <= (ext ? 1 : 3) && solid[static_cast<std::size_t>(v)] <= (ext ? 2 : 0);
    };
    auto rec = [&](auto&& self, std::size_t t) -> void {
      if (static_cast<int>(edges.size()) == E) {
        for (int v = 0; v < V; ++v)
          if (dashed[static_cast<std::size_t>(v)] != (v < k ? 1 : 3)) return;
        ColoredGraph g(parity, kinds, edges);
        if (!bcr::validate(g).ok()) return;
        Key best;
        bool first = true;
        for (const auto& p : perms) {
          Key key = relabeled_key(g, p);
          if (first || key < best) best = std::move(key);
          first = false;
        }
        classes.try_emplace(best, g);
        return;
      }
      for (std::size_t i = t; i < types.size(); ++i) {
        const Type& ty = types[i];
        auto& du = ty.kind == EdgeKind::Dashed ? dashed : solid;
        ++du[static_cast<std::size_t>(ty.u)];
        ++du[static_cast<std::size_t>(ty.v)];
        if (fits(ty.u) && fits(ty.v)) {
          edges.push_back({ty.u, ty.v, ty.kind});
          self(self, i);
          edges.pop_back();
        }
        --du[static_cast<std::size_t>(ty.u)];
        --du[static_cast<std::size_t>(ty.v)];
      }
    };
    rec(rec, 0);
    for (auto& [key, g] : classes) out.push_back({g, is_zero_class(g, perms)});
  }
  return out;
}

}  // namespace oracle
