#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/validate.hpp"

// Line-based graph text, one graph per block, blocks separated by blank lines:
//
//   parity even
//   ext v1 v2
//   int v3
//   solid (1) v1-v2
//   dashed (2) v1-v3 (3) v2-v3
//
// Edge labels (k) are the numbering 1..m. Under even parity vertices are
// indexed in declaration order; under odd parity every edge needs an
// `orient k a->b` line and every vertex a `vlabel a=n` line, and n - 1 is
// the vertex index. '#' starts a comment.

namespace bcr {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

inline bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

inline std::optional<int> parse_positive(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  int n = std::stoi(s);
  if (n <= 0) return std::nullopt;
  return n;
}

class BlockParser {
 public:
  explicit BlockParser(int first_line) : first_line_(first_line) {}

  void line(int number, const std::vector<Token>& toks) {
    const std::string& key = toks[0].text;
    auto fail = [&](const Token& t, const std::string& msg) { throw ParseError(number, t.column, msg); };
    if (key == "parity") {
      if (parity_) fail(toks[0], "repeated parity line");
      if (toks.size() != 2) fail(toks[0], "expected 'parity even|odd'");
      if (toks[1].text == "even") parity_ = Parity::Even;
      else if (toks[1].text == "odd") parity_ = Parity::Odd;
      else fail(toks[1], "unknown parity '" + toks[1].text + "'");
      return;
    }
    if (!parity_) fail(toks[0], "block must start with a parity line");
    if (key == "ext" || key == "int") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_id(toks[i].text)) fail(toks[i], "bad vertex id '" + toks[i].text + "'");
        if (ids_.count(toks[i].text)) fail(toks[i], "vertex '" + toks[i].text + "' declared twice");
        ids_.emplace(toks[i].text, static_cast<int>(kinds_.size()));
        names_.push_back(toks[i].text);
        kinds_.push_back(key == "ext" ? VertexKind::External : VertexKind::Internal);
      }
      return;
    }
    if (key == "solid" || key == "dashed") {
      const EdgeKind kind = key == "solid" ? EdgeKind::Solid : EdgeKind::Dashed;
      std::optional<int> label;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        if (t.front() == '(') {
          if (label) fail(toks[i], "two labels in a row");
          if (t.back() != ')') fail(toks[i], "unterminated label");
          label = parse_positive(t.substr(1, t.size() - 2));
          if (!label) fail(toks[i], "edge label must be a positive integer");
          if (labels_.count(*label)) fail(toks[i], "duplicate edge label (" + std::to_string(*label) + ")");
          continue;
        }
        if (!label) fail(toks[i], "edge needs a label '(k)' before its endpoints");
        auto dash = t.find('-');
        if (dash == std::string::npos) fail(toks[i], "expected '<id>-<id>'");
        int u = vertex(t.substr(0, dash), number, toks[i].column);
        int v = vertex(t.substr(dash + 1), number, toks[i].column + static_cast<int>(dash) + 1);
        labels_.emplace(*label, Pending{u, v, kind, number, toks[i].column});
        label.reset();
      }
      if (label) fail(toks.back(), "label without endpoints");
      return;
    }
    if (key == "orient") {
      if (*parity_ != Parity::Odd) fail(toks[0], "orient lines need odd parity");
      if (toks.size() != 3) fail(toks[0], "expected 'orient <label> <from>-><to>'");
      auto label = parse_positive(toks[1].text);
      if (!label) fail(toks[1], "edge label must be a positive integer");
      if (orient_.count(*label)) fail(toks[1], "edge (" + std::to_string(*label) + ") oriented twice");
      auto arrow = toks[2].text.find("->");
      if (arrow == std::string::npos) fail(toks[2], "expected '<from>-><to>'");
      int u = vertex(toks[2].text.substr(0, arrow), number, toks[2].column);
      int v = vertex(toks[2].text.substr(arrow + 2), number, toks[2].column + static_cast<int>(arrow) + 2);
      orient_.emplace(*label, std::make_pair(u, v));
      orient_at_.emplace(*label, std::make_pair(number, toks[1].column));
      return;
    }
    if (key == "vlabel") {
      if (*parity_ != Parity::Odd) fail(toks[0], "vlabel lines need odd parity");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].text.find('=');
        if (eq == std::string::npos) fail(toks[i], "expected '<id>=<n>'");
        int v = vertex(toks[i].text.substr(0, eq), number, toks[i].column);
        auto n = parse_positive(toks[i].text.substr(eq + 1));
        if (!n) fail(toks[i], "vertex label must be a positive integer");
        if (vlabel_.count(v)) fail(toks[i], "vertex '" + names_[static_cast<std::size_t>(v)] + "' labeled twice");
        vlabel_.emplace(v, *n);
      }
      return;
    }
    fail(toks[0], "unknown keyword '" + key + "'");
  }

  ColoredGraph finish() const {
    auto fail = [&](const std::string& msg) { throw ParseError(first_line_, 1, msg); };
    if (!parity_) fail("empty block");
    const int m = static_cast<int>(labels_.size());
    const int n = static_cast<int>(kinds_.size());
    for (const auto& [label, p] : labels_)
      if (label > m)
        throw ParseError(p.line, p.column, "edge labels must be 1.." + std::to_string(m) + ", found (" +
                                               std::to_string(label) + ")");
    std::vector<int> index(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) index[static_cast<std::size_t>(v)] = v;
    if (*parity_ == Parity::Odd) {
      std::vector<int> seen(static_cast<std::size_t>(n), -1);
      for (int v = 0; v < n; ++v) {
        auto it = vlabel_.find(v);
        if (it == vlabel_.end()) fail("vertex '" + names_[static_cast<std::size_t>(v)] + "' has no vlabel");
        if (it->second > n) fail("vertex labels must be 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(it->second - 1)] >= 0)
          fail("vertex label " + std::to_string(it->second) + " used twice");
        seen[static_cast<std::size_t>(it->second - 1)] = v;
        index[static_cast<std::size_t>(v)] = it->second - 1;
      }
      for (const auto& [label, at] : orient_at_)
        if (!labels_.count(label))
          throw ParseError(at.first, at.second, "orient names unknown edge (" + std::to_string(label) + ")");
    }
    std::vector<VertexKind> kinds(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) kinds[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = kinds_[static_cast<std::size_t>(v)];
    std::vector<Edge> edges;
    for (const auto& [label, p] : labels_) {
      int u = p.u, v = p.v;
      if (*parity_ == Parity::Odd) {
        auto it = orient_.find(label);
        if (it == orient_.end()) throw ParseError(p.line, p.column, "edge (" + std::to_string(label) + ") has no orient line");
        auto [a, b] = it->second;
        if (!((a == u && b == v) || (a == v && b == u)))
          throw ParseError(p.line, p.column, "orient line of edge (" + std::to_string(label) + ") names other endpoints");
        u = a;
        v = b;
      }
      edges.push_back({index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)], p.kind});
    }
    return ColoredGraph(*parity_, std::move(kinds), std::move(edges));
  }

 private:
  struct Pending {
    int u, v;
    EdgeKind kind;
    int line, column;
  };

  int vertex(const std::string& id, int line, int column) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) throw ParseError(line, column, "undeclared vertex '" + id + "'");
    return it->second;
  }

  int first_line_;
  std::optional<Parity> parity_;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<VertexKind> kinds_;
  std::map<int, Pending> labels_;
  std::map<int, std::pair<int, int>> orient_;
  std::map<int, std::pair<int, int>> orient_at_;
  std::map<int, int> vlabel_;
};

}  // namespace detail

/// Parses every block and validates each graph for `cls`. Throws ParseError
/// on malformed text and ValidationError on structurally invalid graphs.
inline std::vector<ColoredGraph> parse_graphs(const std::string& text, GraphClass cls = GraphClass::BCR) {
  std::vector<ColoredGraph> out;
  std::istringstream in(text);
  std::string raw;
  std::optional<detail::BlockParser> block;
  int number = 0;
  auto flush = [&] {
    if (block) {
      out.push_back(block->finish());
      require_valid(out.back(), cls);
      block.reset();
    }
  };
  while (std::getline(in, raw)) {
    ++number;
    auto toks = detail::tokenize(raw);
    if (toks.empty()) {
      if (raw.find('#') == std::string::npos) flush();
      continue;
    }
    if (!block) block.emplace(number);
    block->line(number, toks);
  }
  flush();
  return out;
}

/// Prints a graph so that parse_graphs reads it back to the same colored
/// graph; vertex i is named v(i+1).
inline std::string print_graph(const ColoredGraph& g) {
  std::ostringstream os;
  auto name = [](int v) { return "v" + std::to_string(v + 1); };
  os << "parity " << to_string(g.parity()) << '\n';
  for (int v = 0; v < g.vertex_count();) {
    const VertexKind k = g.kind(v);
    os << (k == VertexKind::External ? "ext" : "int");
    for (; v < g.vertex_count() && g.kind(v) == k; ++v) os << ' ' << name(v);
    os << '\n';
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& x = g.edge(e);
    os << (x.kind == EdgeKind::Solid ? "solid" : "dashed") << " (" << e + 1 << ") " << name(x.u) << '-'
       << name(x.v) << '\n';
  }
  if (g.parity() == Parity::Odd) {
    for (int e = 0; e < g.edge_count(); ++e)
      os << "orient " << e + 1 << ' ' << name(g.edge(e).u) << "->" << name(g.edge(e).v) << '\n';
    os << "vlabel";
    for (int v = 0; v < g.vertex_count(); ++v) os << ' ' << name(v) << '=' << v + 1;
    os << '\n';
  }
  return os.str();
}

inline std::string print_graphs(const std::vector<ColoredGraph>& gs) {
  std::string out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) out += '\n';
    out += print_graph(gs[i]);
  }
  return out;
}

}  // namespace bcr
