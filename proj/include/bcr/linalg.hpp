#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bcr/diagram.hpp"

namespace bcr {

enum class Provenance : std::uint8_t { IHX, STU, Chord, FourT, Sliding };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::IHX: return "IHX";
    case Provenance::STU: return "STU";
    case Provenance::Chord: return "Chord";
    case Provenance::FourT: return "4T";
    case Provenance::Sliding: return "Sliding";
  }
  return "?";
}

class BasisMismatch : public std::invalid_argument {
 public:
  explicit BasisMismatch(const Certificate& c)
      : std::invalid_argument("basis mismatch: class " + c + " is not in the component basis") {}
};

struct RelationRow {
  DiagramVector vec;
  Provenance tag = Provenance::STU;
  std::vector<Certificate> sources;  // graphs the row was generated from
};

/// Scales a vector to a primitive integer vector whose first coefficient is
/// positive. Two rows are duplicates iff their normalized forms agree.
inline DiagramVector normalized(const DiagramVector& v) {
  if (v.is_zero()) return v;
  mpz_class l = 1, g = 0;
  for (const auto& [c, q] : v) l = lcm(l, q.get_den());
  for (const auto& [c, q] : v) {
    mpz_class n = q.get_num() * (l / q.get_den());
    g = gcd(g, n);
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (v.begin()->second < 0) scale = -scale;
  DiagramVector out = v;
  out *= scale;
  return out;
}

/// Relation vectors in one graded component, with an ordered basis of
/// canonical classes (sorted by certificate).
class RelationSet {
 public:
  RelationSet() = default;
  explicit RelationSet(std::vector<Certificate> basis) : basis_(std::move(basis)) {
    std::sort(basis_.begin(), basis_.end());
    basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  }

  const std::vector<Certificate>& basis() const { return basis_; }
  const std::vector<RelationRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  int index_of(const Certificate& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw BasisMismatch(c);
    return it->second;
  }
  bool contains(const Certificate& c) const { return index_.count(c) > 0; }
  bool covers(const DiagramVector& v) const {
    for (const auto& [c, q] : v)
      if (!contains(c)) return false;
    return true;
  }

  /// Appends a row unless it is zero or a scalar multiple of a stored row.
  /// Returns whether the row was stored.
  bool add(const DiagramVector& v, Provenance tag, std::vector<Certificate> sources = {}) {
    for (const auto& [c, q] : v) index_of(c);
    if (v.is_zero()) return false;
    if (!seen_.insert(normalized(v).str()).second) return false;
    rows_.push_back({v, tag, std::move(sources)});
    return true;
  }

  void append(const RelationSet& other) {
    for (const auto& r : other.rows_) add(r.vec, r.tag, r.sources);
  }

  /// Rows restricted to the given tags.
  RelationSet filtered(std::initializer_list<Provenance> tags) const {
    RelationSet out(basis_);
    for (const auto& r : rows_)
      if (std::find(tags.begin(), tags.end(), r.tag) != tags.end()) out.add(r.vec, r.tag, r.sources);
    return out;
  }

 private:
  std::vector<Certificate> basis_;
  std::unordered_map<Certificate, int> index_;
  std::vector<RelationRow> rows_;
  std::set<std::string> seen_;
};

/// Exact coefficients over the rows of a RelationSet, keyed by row index.
using Witness = std::map<std::size_t, Rational>;

/// Re-evaluates sum_i c_i * row_i with plain vector arithmetic.
inline DiagramVector evaluate_witness(const RelationSet& rows, const Witness& w) {
  DiagramVector out;
  for (const auto& [i, c] : w) out.add_scaled(rows.rows().at(i).vec, c);
  return out;
}

inline bool check_witness(const DiagramVector& v, const RelationSet& rows, const Witness& w) {
  return evaluate_witness(rows, w) == v;
}

/// Incremental row echelon form over the integers.
///
/// Each stored pivot row is primitive and has been reduced against every
/// earlier pivot, so one pass over pivots in insertion order eliminates all
/// pivot columns from a vector. Pivot columns are chosen among the entries of
/// the reduced row by smallest static column count.
class EchelonBasis {
 public:
  using IntRow = std::vector<std::pair<int, mpz_class>>;
  using RatRow = std::vector<std::pair<int, Rational>>;

  /// Keeps a pointer to `rows`, which must outlive the basis.
  explicit EchelonBasis(const RelationSet& rows, bool track_witness = false)
      : rows_(&rows), columns_(rows.basis().size()), track_(track_witness) {
    pivot_of_col_.assign(columns_, -1);
    col_count_.assign(columns_, 0);
    for (const auto& r : rows.rows())
      for (const auto& [c, q] : r.vec) ++col_count_[static_cast<std::size_t>(rows.index_of(c))];
    for (std::size_t i = 0; i < rows.rows().size(); ++i) {
      mpz_class scale;
      IntRow r = to_int_row(rows.rows()[i].vec, scale);
      insert(std::move(r), i, scale);
    }
  }

  EchelonBasis(RelationSet&&, bool = false) = delete;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t columns() const { return columns_; }
  bool is_pivot_column(int c) const { return pivot_of_col_[static_cast<std::size_t>(c)] >= 0; }

  /// Canonical coset representative of v modulo the row span.
  DiagramVector normal_form(const DiagramVector& v) const {
    auto r = reduce(to_rat_row(v), nullptr);
    DiagramVector out;
    for (const auto& [c, q] : r) out.add(rows_->basis()[static_cast<std::size_t>(c)], q);
    return out;
  }

  bool contains(const DiagramVector& v) const { return reduce(to_rat_row(v), nullptr).empty(); }

  /// Coefficients c_i with v = sum c_i row_i, when v lies in the span.
  /// Requires witness tracking.
  std::optional<Witness> in_span(const DiagramVector& v) const {
    if (!track_) throw std::logic_error("witness tracking disabled");
    std::map<std::size_t, Rational> comb;
    auto r = reduce(to_rat_row(v), &comb);
    if (!r.empty()) return std::nullopt;
    Witness w;
    for (auto& [i, q] : comb)
      if (q != 0) w.emplace(i, q);
    return w;
  }

 private:
  struct Pivot {
    int col;
    IntRow row;
    std::map<std::size_t, Rational> comb;  // this row as a combination of input rows
  };

  IntRow to_int_row(const DiagramVector& v, mpz_class& l) const {
    l = 1;
    for (const auto& [c, q] : v) l = lcm(l, q.get_den());
    IntRow out;
    for (const auto& [c, q] : v) out.push_back({rows_->index_of(c), q.get_num() * (l / q.get_den())});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  RatRow to_rat_row(const DiagramVector& v) const {
    RatRow out;
    for (const auto& [c, q] : v) out.push_back({rows_->index_of(c), q});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  template <class T>
  static const T* find(const std::vector<std::pair<int, T>>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
  }

  // a*x + b*y on sorted sparse rows
  template <class T, class S>
  static std::vector<std::pair<int, T>> combine(const T& a, const std::vector<std::pair<int, T>>& x,
                                                const T& b, const std::vector<std::pair<int, S>>& y) {
    std::vector<std::pair<int, T>> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        T t = a * x[i].second;
        if (t != 0) out.push_back({x[i].first, t});
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        T t = b * y[j].second;
        if (t != 0) out.push_back({y[j].first, t});
        ++j;
      } else {
        T t = a * x[i].second + b * y[j].second;
        if (t != 0) out.push_back({x[i].first, t});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Earliest pivot (by insertion order) whose column occurs in the row.
  template <class T>
  int next_pivot(const std::vector<std::pair<int, T>>& row) const {
    int best = -1;
    for (const auto& [c, x] : row) {
      int p = pivot_of_col_[static_cast<std::size_t>(c)];
      if (p >= 0 && (best < 0 || p < best)) best = p;
    }
    return best;
  }

  // r equals scale times input row `origin`
  void insert(IntRow r, std::size_t origin, const mpz_class& scale) {
    std::map<std::size_t, Rational> comb;
    if (track_) comb[origin] = Rational(scale);
    make_primitive(r, track_ ? &comb : nullptr);
    for (int t = next_pivot(r); t >= 0; t = next_pivot(r)) {
      const Pivot& p = pivots_[static_cast<std::size_t>(t)];
      mpz_class a = *find(p.row, p.col);
      mpz_class b = *find(r, p.col);
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      r = combine<mpz_class, mpz_class>(a, r, mpz_class(-b), p.row);
      if (track_) {
        for (auto& [i, q] : comb) q *= Rational(a);
        for (const auto& [i, q] : p.comb) comb[i] -= Rational(b) * q;
      }
      make_primitive(r, track_ ? &comb : nullptr);
    }
    if (r.empty()) return;
    int col = r.front().first;
    for (const auto& [c, x] : r) {
      auto cc = col_count_[static_cast<std::size_t>(c)];
      auto best = col_count_[static_cast<std::size_t>(col)];
      if (cc < best) col = c;
    }
    pivot_of_col_[static_cast<std::size_t>(col)] = static_cast<int>(pivots_.size());
    pivots_.push_back({col, std::move(r), std::move(comb)});
  }

  static void make_primitive(IntRow& r, std::map<std::size_t, Rational>* comb) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, x] : r) g = gcd(g, x);
    if (g == 1) return;
    for (auto& [c, x] : r) x /= g;
    if (comb)
      for (auto& [i, q] : *comb) q /= Rational(g);
  }

  RatRow reduce(RatRow r, std::map<std::size_t, Rational>* comb) const {
    for (int t = next_pivot(r); t >= 0; t = next_pivot(r)) {
      const Pivot& p = pivots_[static_cast<std::size_t>(t)];
      Rational mu = *find(r, p.col) / Rational(*find(p.row, p.col));
      r = combine<Rational, mpz_class>(Rational(1), r, Rational(-mu), p.row);
      if (comb)
        for (const auto& [i, q] : p.comb) (*comb)[i] += mu * q;
    }
    return r;
  }

  const RelationSet* rows_;
  std::size_t columns_;
  bool track_;
  std::vector<int> pivot_of_col_;
  std::vector<int> col_count_;
  std::vector<Pivot> pivots_;
};

inline std::size_t rank(const RelationSet& rows) { return EchelonBasis(rows).rank(); }

inline std::optional<Witness> in_span(const DiagramVector& v, const RelationSet& rows) {
  return EchelonBasis(rows, true).in_span(v);
}

inline DiagramVector normal_form(const DiagramVector& v, const RelationSet& rows) {
  return EchelonBasis(rows).normal_form(v);
}

}  // namespace bcr
