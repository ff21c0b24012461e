#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/canonical.hpp"
#include "bcr/graph.hpp"

namespace bcr {

/// Enumeration limits; requests beyond them are refused.
struct Caps {
  int max_vertices = 10;
  int max_edges = 10;
};

class CapsExceeded : public std::out_of_range {
 public:
  CapsExceeded(int v, int e, const Caps& c)
      : std::out_of_range("component (V=" + std::to_string(v) + ", E=" + std::to_string(e) +
                          ") exceeds caps (V<=" + std::to_string(c.max_vertices) +
                          ", E<=" + std::to_string(c.max_edges) + ")") {}
};

namespace detail {

inline void partitions(int n, int parts, int max_part, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int p = std::min(n - (parts - 1), max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, parts - 1, p, cur, out);
    cur.pop_back();
  }
}

class DashedFiller {
 public:
  DashedFiller(Parity parity, std::vector<VertexKind> kinds, std::vector<Edge> solid,
               std::vector<char> isolated, std::map<Certificate, CanonicalClass>& sink)
      : parity_(parity), kinds_(std::move(kinds)), edges_(std::move(solid)),
        isolated_(std::move(isolated)), sink_(sink) {
    const int n = static_cast<int>(kinds_.size());
    rem_.resize(static_cast<std::size_t>(n));
    last_.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) rem_[static_cast<std::size_t>(v)] = kinds_[static_cast<std::size_t>(v)] == VertexKind::External ? 1 : 3;
  }

  void run() { step(); }

 private:
  bool untouched(int v) const {
    return rem_[static_cast<std::size_t>(v)] == (kinds_[static_cast<std::size_t>(v)] == VertexKind::External ? 1 : 3);
  }
  // untouched internals and untouched isolated externals are interchangeable
  bool symmetric_class(int v) const {
    return kinds_[static_cast<std::size_t>(v)] == VertexKind::Internal || isolated_[static_cast<std::size_t>(v)];
  }

  void step() {
    const int n = static_cast<int>(kinds_.size());
    int v = 0;
    while (v < n && rem_[static_cast<std::size_t>(v)] == 0) ++v;
    if (v == n) {
      ColoredGraph g(parity_, kinds_, edges_);
      if (!g.is_connected()) return;
      auto c = canonical_form(g);
      sink_.try_emplace(c.cert, std::move(c));
      return;
    }
    const int from = std::max(v, last_[static_cast<std::size_t>(v)]);
    bool seen_fresh_internal = false, seen_fresh_isolated = false;
    for (int u = from; u < n; ++u) {
      auto& ru = rem_[static_cast<std::size_t>(u)];
      if (ru == 0) continue;
      if (u == v && (kinds_[static_cast<std::size_t>(v)] == VertexKind::External || ru < 2)) continue;
      if (u != v && untouched(u) && symmetric_class(u)) {
        bool& seen = kinds_[static_cast<std::size_t>(u)] == VertexKind::Internal ? seen_fresh_internal
                                                                                : seen_fresh_isolated;
        if (seen) continue;
        seen = true;
      }
      auto& rv = rem_[static_cast<std::size_t>(v)];
      int saved_last = last_[static_cast<std::size_t>(v)];
      --rv;
      --ru;
      last_[static_cast<std::size_t>(v)] = u;
      edges_.push_back({v, u, EdgeKind::Dashed});
      step();
      edges_.pop_back();
      last_[static_cast<std::size_t>(v)] = saved_last;
      ++rv;
      ++ru;
    }
  }

  Parity parity_;
  std::vector<VertexKind> kinds_;
  std::vector<Edge> edges_;
  std::vector<char> isolated_;
  std::vector<int> rem_;
  std::vector<int> last_;
  std::map<Certificate, CanonicalClass>& sink_;
};

}  // namespace detail

/// Every isomorphism class of valid graphs with V vertices and E edges in the
/// requested class, Zero classes included, sorted by certificate.
inline std::vector<CanonicalClass> enumerate_classes(int V, int E, Parity parity,
                                                     GraphClass cls = GraphClass::BCR,
                                                     const Caps& caps = {}) {
  if (V > caps.max_vertices || E > caps.max_edges) throw CapsExceeded(V, E, caps);
  std::map<Certificate, CanonicalClass> found;
  for (int w = 0; w < V; ++w) {
    const int k = V - w;
    if ((k + 3 * w) % 2 != 0) continue;
    const int d = (k + 3 * w) / 2;
    const int s = E - d;
    const int lines = k - s;
    if (s < 0 || lines < 1) continue;
    if (cls == GraphClass::Hairy && s != 0) continue;
    if (cls == GraphClass::Chord && w != 0) continue;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::partitions(k, lines, k, cur, parts);
    for (const auto& p : parts) {
      std::vector<VertexKind> kinds(static_cast<std::size_t>(V), VertexKind::Internal);
      std::vector<Edge> solid;
      std::vector<char> isolated(static_cast<std::size_t>(V), 0);
      int at = 0;
      for (int len : p) {
        for (int j = 0; j < len; ++j) {
          kinds[static_cast<std::size_t>(at + j)] = VertexKind::External;
          if (j > 0) solid.push_back({at + j - 1, at + j, EdgeKind::Solid});
        }
        if (len == 1) isolated[static_cast<std::size_t>(at)] = 1;
        at += len;
      }
      detail::DashedFiller(parity, kinds, solid, isolated, found).run();
    }
  }
  std::vector<CanonicalClass> out;
  out.reserve(found.size());
  for (auto& [cert, c] : found) out.push_back(std::move(c));
  return out;
}

/// Certificates of the nonzero classes: the basis of the graded component.
inline std::vector<Certificate> enumerate_basis(int V, int E, Parity parity,
                                                GraphClass cls = GraphClass::BCR,
                                                const Caps& caps = {}) {
  std::vector<Certificate> out;
  for (const auto& c : enumerate_classes(V, E, parity, cls, caps))
    if (!c.zero) out.push_back(c.cert);
  return out;
}

}  // namespace bcr
