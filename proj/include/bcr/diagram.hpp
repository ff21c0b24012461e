#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "bcr/canonical.hpp"

namespace bcr {

/// Exact rational coefficients, always kept in lowest terms with positive
/// denominator.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// A finite formal Q-linear combination of canonical classes. Zero
/// coefficients are never stored.
class DiagramVector {
 public:
  using Map = std::map<Certificate, Rational>;

  DiagramVector() = default;

  static DiagramVector of(const Certificate& c, const Rational& coeff = 1) {
    DiagramVector v;
    v.add(c, coeff);
    return v;
  }

  void add(const Certificate& c, const Rational& coeff) {
    Rational q = coeff;
    q.canonicalize();
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, std::move(q));
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds `coeff` times the orientation class of a colored graph; Zero
  /// classes contribute nothing.
  void add_graph(const ColoredGraph& g, const Rational& coeff = 1) {
    if (coeff == 0) return;
    auto c = canonical_form(g);
    if (c.zero) return;
    add(c.cert, c.sign > 0 ? coeff : Rational(-coeff));
  }

  static DiagramVector of_graph(const ColoredGraph& g, const Rational& coeff = 1) {
    DiagramVector v;
    v.add_graph(g, coeff);
    return v;
  }

  void add_scaled(const DiagramVector& other, const Rational& coeff) {
    if (coeff == 0) return;
    for (const auto& [c, q] : other.terms_) add(c, q * coeff);
  }

  Rational coefficient(const Certificate& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  DiagramVector& operator+=(const DiagramVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  DiagramVector& operator-=(const DiagramVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  DiagramVector& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& [c, x] : terms_) x *= q;
    }
    return *this;
  }
  friend DiagramVector operator+(DiagramVector a, const DiagramVector& b) { return a += b; }
  friend DiagramVector operator-(DiagramVector a, const DiagramVector& b) { return a -= b; }
  friend DiagramVector operator*(const Rational& q, DiagramVector a) { return a *= q; }
  friend DiagramVector operator-(DiagramVector a) { return a *= Rational(-1); }
  friend bool operator==(const DiagramVector&, const DiagramVector&) = default;

  /// "c1*[cert1] + c2*[cert2]" rendering used in reports and diagnostics.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, q] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << to_string(q) << "*[" << c << "]";
    }
    return os.str();
  }

 private:
  Map terms_;
};

}  // namespace bcr
