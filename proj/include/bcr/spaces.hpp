#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/enumerate.hpp"
#include "bcr/linalg.hpp"
#include "bcr/relations.hpp"

namespace bcr {

enum class SpaceId : std::uint8_t { B, A, Abar, Ac, Acbar };

inline constexpr std::array<SpaceId, 5> kAllSpaces = {SpaceId::B, SpaceId::A, SpaceId::Abar, SpaceId::Ac,
                                                      SpaceId::Acbar};

inline const char* to_string(SpaceId s) {
  switch (s) {
    case SpaceId::B: return "B";
    case SpaceId::A: return "A";
    case SpaceId::Abar: return "Abar";
    case SpaceId::Ac: return "Ac";
    case SpaceId::Acbar: return "Acbar";
  }
  return "?";
}

inline SpaceId parse_space(const std::string& s) {
  for (SpaceId id : kAllSpaces)
    if (s == to_string(id)) return id;
  throw std::invalid_argument("unknown space '" + s + "'");
}

/// Generating graphs of each space.
inline GraphClass generator_class(SpaceId s) {
  switch (s) {
    case SpaceId::B: return GraphClass::Hairy;
    case SpaceId::A:
    case SpaceId::Abar: return GraphClass::BCR;
    case SpaceId::Ac:
    case SpaceId::Acbar: return GraphClass::Chord;
  }
  return GraphClass::BCR;
}

struct GradedComponent {
  int V = 0;
  int E = 0;
  Parity parity = Parity::Even;
  friend auto operator<=>(const GradedComponent&, const GradedComponent&) = default;
};

/// A quotient space of one graded component: basis, relation rows and an
/// echelonized reducer over them.
struct Quotient {
  RelationSet rows;
  std::unique_ptr<EchelonBasis> reducer;

  std::size_t dimension() const { return rows.basis().size() - reducer->rank(); }
  DiagramVector normal_form(const DiagramVector& v) const { return reducer->normal_form(v); }

  /// Basis classes whose columns carry no pivot; their images span the
  /// quotient and are independent in it.
  std::vector<Certificate> representatives() const {
    std::vector<Certificate> out;
    for (std::size_t c = 0; c < rows.basis().size(); ++c)
      if (!reducer->is_pivot_column(static_cast<int>(c))) out.push_back(rows.basis()[c]);
    return out;
  }
};

/// All graphs and relation rows with fixed total vertex and edge counts.
/// Everything is computed on first use; an instance is meant for one thread.
class Component {
 public:
  Component(GradedComponent c, const Caps& caps = {}, GeneratorOptions opt = {})
      : c_(c), caps_(caps), opt_(opt) {
    if (c.V > caps.max_vertices || c.E > caps.max_edges) throw CapsExceeded(c.V, c.E, caps);
  }

  const GradedComponent& id() const { return c_; }
  Parity parity() const { return c_.parity; }

  /// Every isomorphism class, Zero classes included.
  const std::vector<CanonicalClass>& classes() {
    if (!classes_) classes_ = enumerate_classes(c_.V, c_.E, c_.parity, GraphClass::BCR, caps_);
    return *classes_;
  }

  std::vector<Certificate> basis(GraphClass cls) {
    std::vector<Certificate> out;
    for (const auto& c : classes())
      if (!c.zero && belongs_to(c.graph, cls)) out.push_back(c.cert);
    return out;
  }

  const std::vector<RelationRow>& stu_rows() {
    if (!stu_) {
      stu_.emplace();
      for (const auto& c : classes()) emit_stu(c.graph, *stu_, opt_);
    }
    return *stu_;
  }
  const std::vector<RelationRow>& ihx_rows() {
    if (!ihx_) {
      ihx_.emplace();
      for (const auto& c : classes()) emit_ihx(c.graph, *ihx_);
    }
    return *ihx_;
  }
  const std::vector<RelationRow>& chord_rows(GraphClass cls) {
    auto& slot = cls == GraphClass::Chord ? chord_c_ : chord_bcr_;
    if (!slot) {
      slot.emplace();
      for (const auto& c : classes()) emit_chord(c.graph, cls, *slot);
    }
    return *slot;
  }
  const std::vector<RelationRow>& fourt_rows() {
    if (!fourt_) {
      fourt_.emplace();
      for (const auto& c : classes()) emit_4t(c.graph, *fourt_);
    }
    return *fourt_;
  }

  /// Relation rows defining the space, in the space's generator basis.
  RelationSet relation_set(SpaceId s) {
    RelationSet out(basis(generator_class(s)));
    auto add_all = [&](const std::vector<RelationRow>& rows) {
      for (const auto& r : rows)
        if (out.covers(r.vec)) out.add(r.vec, r.tag, r.sources);
    };
    switch (s) {
      case SpaceId::B: add_all(ihx_rows()); break;
      case SpaceId::A:
        add_all(stu_rows());
        add_all(ihx_rows());
        break;
      case SpaceId::Abar:
        add_all(stu_rows());
        add_all(ihx_rows());
        add_all(chord_rows(GraphClass::BCR));
        break;
      case SpaceId::Ac: add_all(fourt_rows()); break;
      case SpaceId::Acbar:
        add_all(fourt_rows());
        add_all(chord_rows(GraphClass::Chord));
        break;
    }
    return out;
  }

  /// Rows of the requested kinds over the full BCR basis.
  RelationSet bcr_relations(std::initializer_list<Provenance> tags) {
    RelationSet out(basis(GraphClass::BCR));
    for (Provenance t : tags) {
      const std::vector<RelationRow>* rows = nullptr;
      switch (t) {
        case Provenance::STU: rows = &stu_rows(); break;
        case Provenance::IHX: rows = &ihx_rows(); break;
        case Provenance::Chord: rows = &chord_rows(GraphClass::BCR); break;
        case Provenance::FourT: rows = &fourt_rows(); break;
        case Provenance::Sliding: break;
      }
      if (rows)
        for (const auto& r : *rows) out.add(r.vec, r.tag, r.sources);
    }
    return out;
  }

  const Quotient& quotient(SpaceId s) {
    auto& slot = quotients_[static_cast<std::size_t>(s)];
    if (!slot) {
      slot = std::make_unique<Quotient>();
      slot->rows = relation_set(s);
      slot->reducer = std::make_unique<EchelonBasis>(slot->rows);
    }
    return *slot;
  }

  std::size_t dimension(SpaceId s) { return quotient(s).dimension(); }

 private:
  GradedComponent c_;
  Caps caps_;
  GeneratorOptions opt_;
  std::optional<std::vector<CanonicalClass>> classes_;
  std::optional<std::vector<RelationRow>> stu_, ihx_, chord_bcr_, chord_c_, fourt_;
  std::array<std::unique_ptr<Quotient>, 5> quotients_;
};

/// Components that can hold a nonempty basis: V even and E within range.
inline std::vector<GradedComponent> components_within(int max_v, int max_e, Parity p) {
  std::vector<GradedComponent> out;
  for (int v = 2; v <= max_v; v += 2)
    for (int e = v - 1; e <= max_e; ++e) out.push_back({v, e, p});
  return out;
}

}  // namespace bcr
