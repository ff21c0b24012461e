#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/validate.hpp"

namespace bcr {

/// Printable canonical encoding of an uncolored graph, e.g. "eei|0-2d,1-2d,2-2d".
/// Two graphs are isomorphic iff their certificates are equal; the basis of
/// every graded component is sorted by certificate.
using Certificate = std::string;

/// The orientation class of a colored graph: either Zero, or `sign` times the
/// canonically colored representative `graph`.
struct CanonicalClass {
  bool zero = false;
  int sign = 1;
  Certificate cert;
  ColoredGraph graph;

  explicit operator bool() const { return !zero; }
};

namespace detail {

inline int pack_edge(int a, int b, EdgeKind k) {
  if (a > b) std::swap(a, b);
  return (a << 16) | (b << 8) | static_cast<int>(k);
}

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.vertex_count()) {
    nbr_.resize(static_cast<std::size_t>(n_));
    std::map<std::tuple<int, int, int>, int> mult;
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      ++mult[{e.u, e.v, static_cast<int>(e.kind)}];
      ++mult[{e.v, e.u, static_cast<int>(e.kind)}];
    }
    for (const auto& [key, m] : mult) {
      auto [a, b, k] = key;
      nbr_[static_cast<std::size_t>(a)].push_back({b, k, m});
    }
  }

  CanonicalClass run() {
    CanonicalClass out;
    bool forced_zero = false;
    if (g_.parity() == Parity::Even) {
      // Two parallel edges of one kind can be swapped by an automorphism that
      // fixes every vertex; that is an odd permutation of the numbering.
      std::vector<int> packed;
      for (const Edge& e : g_.edges()) packed.push_back(pack_edge(e.u, e.v, e.kind));
      std::sort(packed.begin(), packed.end());
      forced_zero = std::adjacent_find(packed.begin(), packed.end()) != packed.end();
    } else {
      // Reversing a loop reverses one orientation and fixes everything else.
      forced_zero = std::any_of(g_.edges().begin(), g_.edges().end(),
                                [](const Edge& e) { return e.is_loop(); });
    }

    std::vector<int> colors(static_cast<std::size_t>(n_));
    {
      std::vector<std::array<int, 5>> sig(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        int loops = 0;
        for (const Edge& e : g_.edges())
          if (e.is_loop() && e.u == v) ++loops;
        sig[static_cast<std::size_t>(v)] = {static_cast<int>(g_.kind(v)),
                                             g_.degree(v, EdgeKind::Dashed),
                                             g_.degree(v, EdgeKind::Solid), loops, 0};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < n_; ++v)
        colors[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
            sorted.begin());
    }
    refine(colors);
    search(colors);

    out.zero = forced_zero || conflict_;
    out.sign = out.zero ? 0 : best_sign_;
    out.graph = build(best_order_);
    out.cert = certificate_of(out.graph);
    return out;
  }

  static Certificate certificate_of(const ColoredGraph& canonical) {
    std::string s;
    s.reserve(static_cast<std::size_t>(canonical.vertex_count() + 8 * canonical.edge_count() + 1));
    for (VertexKind k : canonical.kinds()) s.push_back(k == VertexKind::External ? 'e' : 'i');
    s.push_back('|');
    bool first = true;
    for (const Edge& e : canonical.edges()) {
      if (!first) s.push_back(',');
      first = false;
      s += std::to_string(std::min(e.u, e.v));
      s.push_back('-');
      s += std::to_string(std::max(e.u, e.v));
      s.push_back(e.kind == EdgeKind::Dashed ? 'd' : 's');
    }
    return s;
  }

 private:
  // Splits color classes until the coloring is equitable. Colors stay ranks
  // 0..c-1 and refinement preserves the relative order of existing classes.
  void refine(std::vector<int>& colors) const {
    int count = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(colors[static_cast<std::size_t>(v)]);
        std::vector<int> items;
        for (const auto& [u, k, m] : nbr_[static_cast<std::size_t>(v)])
          items.push_back((colors[static_cast<std::size_t>(u)] << 12) | (k << 8) | m);
        std::sort(items.begin(), items.end());
        s.insert(s.end(), items.begin(), items.end());
      }
      std::vector<int> idx(static_cast<std::size_t>(n_));
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      });
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] !=
                         sig[static_cast<std::size_t>(idx[static_cast<std::size_t>(i - 1)])])
          ++c;
        colors[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = c;
      }
      if (c + 1 == count) return;
      count = c + 1;
    }
  }

  void search(const std::vector<int>& colors) {
    std::vector<int> cell_size(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (cell_size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> next(colors.size());
      for (int x = 0; x < n_; ++x) {
        int c = colors[static_cast<std::size_t>(x)];
        next[static_cast<std::size_t>(x)] = 2 * c + ((c == target && x != v) ? 1 : 0);
      }
      // compact to ranks before refining
      std::vector<int> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (auto& c : next)
        c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& order) {
    std::vector<int> enc;
    enc.reserve(static_cast<std::size_t>(n_ + g_.edge_count()));
    std::vector<int> kinds(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      kinds[static_cast<std::size_t>(order[static_cast<std::size_t>(v)])] = static_cast<int>(g_.kind(v));
    enc.insert(enc.end(), kinds.begin(), kinds.end());
    std::vector<std::pair<int, int>> packed;  // (packed edge, original index)
    packed.reserve(g_.edges().size());
    for (int i = 0; i < g_.edge_count(); ++i) {
      const Edge& e = g_.edge(i);
      packed.push_back({pack_edge(order[static_cast<std::size_t>(e.u)],
                                  order[static_cast<std::size_t>(e.v)], e.kind),
                        i});
    }
    std::sort(packed.begin(), packed.end());
    for (const auto& p : packed) enc.push_back(p.first);

    int sign = 1;
    if (g_.parity() == Parity::Even) {
      std::vector<int> pos(packed.size());
      for (std::size_t j = 0; j < packed.size(); ++j)
        pos[static_cast<std::size_t>(packed[j].second)] = static_cast<int>(j);
      sign = permutation_sign(pos);
    } else {
      sign = permutation_sign(order);
      for (const Edge& e : g_.edges())
        if (order[static_cast<std::size_t>(e.u)] > order[static_cast<std::size_t>(e.v)]) sign = -sign;
    }

    if (!have_best_ || enc < best_enc_) {
      have_best_ = true;
      best_enc_ = std::move(enc);
      best_order_ = order;
      best_sign_ = sign;
      conflict_ = false;
    } else if (enc == best_enc_ && sign != best_sign_) {
      conflict_ = true;
    }
  }

  ColoredGraph build(const std::vector<int>& order) const {
    std::vector<VertexKind> kinds(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) kinds[static_cast<std::size_t>(order[static_cast<std::size_t>(v)])] = g_.kind(v);
    std::vector<std::pair<int, Edge>> packed;
    for (const Edge& e : g_.edges()) {
      int a = order[static_cast<std::size_t>(e.u)], b = order[static_cast<std::size_t>(e.v)];
      if (a > b) std::swap(a, b);
      packed.push_back({pack_edge(a, b, e.kind), Edge{a, b, e.kind}});
    }
    std::sort(packed.begin(), packed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Edge> edges;
    for (auto& p : packed) edges.push_back(p.second);
    return ColoredGraph(g_.parity(), std::move(kinds), std::move(edges));
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<std::array<int, 3>>> nbr_;
  bool have_best_ = false;
  bool conflict_ = false;
  int best_sign_ = 1;
  std::vector<int> best_enc_;
  std::vector<int> best_order_;
};

}  // namespace detail

/// Canonical form of any multigraph in the graph family (validity is not
/// checked; relation generators feed intermediate objects through here).
inline CanonicalClass canonical_form(const ColoredGraph& g) {
  return detail::Canonizer(g).run();
}

/// Canonical orientation class of a valid graph.
inline CanonicalClass canonicalize(const ColoredGraph& g) {
  require_valid(g);
  return canonical_form(g);
}

/// Rebuilds the canonically colored graph of a certificate.
inline ColoredGraph decode_certificate(const Certificate& cert, Parity parity) {
  auto bar = cert.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("malformed certificate: " + cert);
  std::vector<VertexKind> kinds;
  for (std::size_t i = 0; i < bar; ++i) {
    if (cert[i] == 'e') kinds.push_back(VertexKind::External);
    else if (cert[i] == 'i') kinds.push_back(VertexKind::Internal);
    else throw std::invalid_argument("malformed certificate: " + cert);
  }
  std::vector<Edge> edges;
  std::size_t pos = bar + 1;
  while (pos < cert.size()) {
    std::size_t end = cert.find(',', pos);
    if (end == std::string::npos) end = cert.size();
    std::string tok = cert.substr(pos, end - pos);
    auto dash = tok.find('-');
    if (dash == std::string::npos || tok.size() < 4)
      throw std::invalid_argument("malformed certificate: " + cert);
    Edge e;
    e.u = std::stoi(tok.substr(0, dash));
    e.v = std::stoi(tok.substr(dash + 1, tok.size() - dash - 2));
    char k = tok.back();
    if (k != 'd' && k != 's') throw std::invalid_argument("malformed certificate: " + cert);
    e.kind = k == 'd' ? EdgeKind::Dashed : EdgeKind::Solid;
    edges.push_back(e);
    pos = end + 1;
  }
  return ColoredGraph(parity, std::move(kinds), std::move(edges));
}

/// Sign s with g1 = s * g2 in the orientation quotient; empty when the graphs
/// are not isomorphic or either one is Zero.
inline std::optional<int> iso_sign(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.parity() != g2.parity()) throw std::invalid_argument("parity mismatch");
  auto c1 = canonicalize(g1);
  auto c2 = canonicalize(g2);
  if (c1.cert != c2.cert || c1.zero || c2.zero) return std::nullopt;
  return c1.sign * c2.sign;
}

}  // namespace bcr
