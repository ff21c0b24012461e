#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcr/conventions.hpp"
#include "bcr/parallel.hpp"
#include "bcr/pbw.hpp"
#include "bcr/sliding.hpp"
#include "bcr/spaces.hpp"

namespace bcr {

enum class SuiteId : std::uint8_t { Pbw, SigmaWords, Kappa, IhxInStu, Sliding, Question };

inline constexpr std::array<SuiteId, 6> kAllSuites = {SuiteId::Pbw,      SuiteId::SigmaWords, SuiteId::Kappa,
                                                      SuiteId::IhxInStu, SuiteId::Sliding,    SuiteId::Question};

inline const char* to_string(SuiteId s) {
  switch (s) {
    case SuiteId::Pbw: return "pbw";
    case SuiteId::SigmaWords: return "sigma-words";
    case SuiteId::Kappa: return "kappa";
    case SuiteId::IhxInStu: return "ihx-in-stu";
    case SuiteId::Sliding: return "sliding";
    case SuiteId::Question: return "question";
  }
  return "?";
}

inline SuiteId parse_suite(const std::string& s) {
  for (SuiteId id : kAllSuites)
    if (s == to_string(id)) return id;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

struct VerifyOptions {
  Caps caps{8, 8};
  Parity parity = Parity::Even;
  GeneratorOptions generator;
  unsigned jobs = 1;
  std::optional<GradedComponent> only;  // restrict the sweep to one component
  int max_word_length = 5;
  int max_word_line = 4;                // longest solid line for the word sweep
  int max_kappa_internal = 3;
  int max_sliding_chords = 2;
};

struct Failure {
  std::string check;
  std::vector<Certificate> certificates;
  std::string detail;
  std::string replay;
};

/// One re-checkable identity target = sum coeff_i * row_i.
struct WitnessRecord {
  std::string check;
  DiagramVector target;
  std::vector<std::pair<Rational, RelationRow>> terms;

  bool verify() const {
    DiagramVector sum;
    for (const auto& [q, r] : terms) sum.add_scaled(r.vec, q);
    return sum == target;
  }
};

struct ComponentReport {
  GradedComponent id;
  std::map<std::string, std::uint64_t> counts;
  std::vector<Failure> failures;
  std::vector<WitnessRecord> witnesses;

  /// Counts one instance of `check` and records a failure when !ok.
  bool expect(bool ok, const std::string& check, std::vector<Certificate> certs, std::string detail = {}) {
    ++counts[check];
    if (!ok) failures.push_back({check, std::move(certs), std::move(detail), {}});
    return ok;
  }
};

struct SuiteReport {
  SuiteId suite = SuiteId::Pbw;
  VerifyOptions options;
  std::vector<ComponentReport> components;

  bool evidence_only() const { return suite == SuiteId::Question; }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.failures.size();
    return n;
  }
  bool passed() const { return failure_count() == 0; }

  std::map<std::string, std::uint64_t> totals() const {
    std::map<std::string, std::uint64_t> out;
    for (const auto& c : components)
      for (const auto& [k, v] : c.counts) out[k] += v;
    return out;
  }

  nlohmann::json to_json(bool with_witnesses = true) const;
};

inline std::string replay_command(SuiteId suite, const VerifyOptions& o, const GradedComponent& c) {
  std::string cmd = std::string("bcrtool verify --suite ") + to_string(suite) + " --parity " +
                    to_string(o.parity) + " --only " + std::to_string(c.V) + ":" + std::to_string(c.E);
  if (o.generator.corrupt_stu) cmd += " --inject-fault stu";
  return cmd;
}

inline nlohmann::json vector_json(const DiagramVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, q] : v) out.push_back({to_string(q), c});
  return out;
}

inline nlohmann::json SuiteReport::to_json(bool with_witnesses) const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["suite"] = to_string(suite);
  j["parity"] = to_string(options.parity);
  j["caps"] = {{"max_vertices", options.caps.max_vertices}, {"max_edges", options.caps.max_edges}};
  j["conventions"] = {{"chord_row_sign", kChordRowSign},
                      {"ihx_side_sign", kIhxSideSign},
                      {"odd_convention", kOddConvention}};
  j["fault_injection"] = options.generator.corrupt_stu ? "stu" : "none";
  j["evidence_only"] = evidence_only();
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json cj;
    cj["V"] = c.id.V;
    cj["E"] = c.id.E;
    cj["counts"] = c.counts;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : c.failures)
      fails.push_back({{"check", f.check}, {"certificates", f.certificates}, {"detail", f.detail},
                       {"replay", f.replay}});
    cj["failures"] = fails;
    if (with_witnesses) {
      nlohmann::json ws = nlohmann::json::array();
      for (const auto& w : c.witnesses) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [q, r] : w.terms)
          terms.push_back({{"coeff", to_string(q)}, {"tag", to_string(r.tag)}, {"row", vector_json(r.vec)}});
        ws.push_back({{"check", w.check}, {"target", vector_json(w.target)}, {"terms", terms}});
      }
      cj["witnesses"] = ws;
    }
    comps.push_back(std::move(cj));
  }
  j["components"] = comps;
  j["totals"] = totals();
  j["failures"] = failure_count();
  j["passed"] = passed();
  return j;
}

namespace detail {

inline WitnessRecord span_witness(const std::string& check, const DiagramVector& target, const RelationSet& rows,
                                  const Witness& w) {
  WitnessRecord rec{check, target, {}};
  for (const auto& [i, q] : w) rec.terms.push_back({q, rows.rows()[i]});
  return rec;
}

/// Checks target in span(rows) and stores the witness after re-verifying it
/// by plain vector arithmetic.
inline bool expect_in_span(ComponentReport& rep, const std::string& check, const DiagramVector& target,
                           const RelationSet& rows, const EchelonBasis& reducer, std::vector<Certificate> certs) {
  auto w = reducer.in_span(target);
  bool ok = false;
  if (w) {
    auto rec = span_witness(check, target, rows, *w);
    ok = rec.verify() && check_witness(target, rows, *w);
    if (ok && !target.is_zero()) rep.witnesses.push_back(std::move(rec));
  }
  return rep.expect(ok, check, std::move(certs), w ? "witness does not re-verify" : "no witness: " + target.str());
}

inline int longest_line(const ColoredGraph& g) {
  int m = 0;
  for (const auto& l : solid_lines(g)) m = std::max(m, static_cast<int>(l.vertices.size()));
  return m;
}

inline void run_pbw(Component& comp, ComponentReport& rep) {
  SigmaEngine se(comp);
  for (const auto& r : comp.stu_rows()) rep.expect(se.sigma(r.vec).is_zero(), "sigma_kills_stu", r.sources, r.vec.str());
  for (const auto& r : comp.ihx_rows()) rep.expect(se.sigma(r.vec).is_zero(), "sigma_kills_ihx", r.sources, r.vec.str());
  for (const auto& c : comp.classes())
    if (c.zero) rep.expect(se.sigma_direct(c.graph).is_zero(), "sigma_kills_zero_class", {c.cert});

  const Quotient& qb = comp.quotient(SpaceId::B);
  const Quotient& qa = comp.quotient(SpaceId::A);
  const auto reps = qb.representatives();
  RelationSet images(comp.basis(GraphClass::BCR));
  for (const auto& cert : reps) {
    DiagramVector b = DiagramVector::of(cert);
    auto s = se.sigma(chi(b, comp.parity()));
    rep.expect(s == qb.normal_form(b), "sigma_chi_identity", {cert}, s.str());
    images.add(qa.normal_form(chi(b, comp.parity())), Provenance::STU, {cert});
  }
  const std::size_t r = EchelonBasis(images).rank();
  rep.counts["dim_B"] = qb.dimension();
  rep.counts["rank_A_chi"] = r;
  rep.expect(r == qb.dimension(), "chi_monomorphism", reps,
             "rank " + std::to_string(r) + " vs dim B " + std::to_string(qb.dimension()));
}

inline void run_sigma_words(Component& comp, ComponentReport& rep, const VerifyOptions& o) {
  SigmaEngine se(comp);
  for (const auto& c : comp.classes()) {
    const ColoredGraph& d = c.graph;
    if (is_hairy(d)) continue;
    if (longest_line(d) > o.max_word_line) {
      ++rep.counts["skipped_long_line"];
      continue;
    }
    const auto layout = leg_layout(d);
    const int k = layout.size();
    std::vector<int> letters;
    for (int i = 0; i + 1 < k; ++i)
      if (layout.adjacent(i)) letters.push_back(i);

    // Lambda(U_i w) = Lambda(w) + sign(w) sigma(S_i (w D)_u), with the second
    // term depending only on the permutation of w.
    std::map<std::pair<std::vector<int>, int>, DiagramVector> step;
    auto term = [&](const std::vector<int>& perm, int i) -> const DiagramVector& {
      auto key = std::make_pair(perm, i);
      auto it = step.find(key);
      if (it == step.end()) {
        DiagramVector v = se.sigma(merge_external_pair(permute_legs(d, layout, perm), layout, i));
        if (permutation_sign(perm) < 0) v *= Rational(-1);
        it = step.emplace(std::move(key), std::move(v)).first;
      }
      return it->second;
    };
    std::map<std::vector<int>, std::pair<DiagramVector, TranspositionWord>> first;
    bool ok = true;
    std::string detail;
    std::function<void(const std::vector<int>&, const DiagramVector&, TranspositionWord&)> walk =
        [&](const std::vector<int>& perm, const DiagramVector& lam, TranspositionWord& word) {
          auto [it, fresh] = first.try_emplace(perm, lam, word);
          if (!fresh) {
            ++rep.counts["word_pairs"];
            if (ok && !(it->second.first == lam)) {
              ok = false;
              auto show = [](const TranspositionWord& w) {
                std::string s = "[";
                for (std::size_t x = 0; x < w.size(); ++x) s += (x ? "," : "") + std::to_string(w[x] + 1);
                return s + "]";
              };
              detail = "words " + show(it->second.second) + " and " + show(word) + " disagree";
            }
          }
          if (static_cast<int>(word.size()) >= o.max_word_length) return;
          for (int i : letters) {
            DiagramVector next = lam;
            next += term(perm, i);
            word.insert(word.begin(), i);
            walk(left_multiply(i, perm), next, word);
            word.erase(word.begin());
          }
        };
    TranspositionWord w;
    walk(identity_permutation(k), DiagramVector{}, w);
    rep.expect(ok, "word_independence", {c.cert}, detail);

    for (int i : letters) {
      rep.expect(se.lambda(d, {i, i}).is_zero(), "square_word", {c.cert}, "position " + std::to_string(i + 1));
      for (int j : letters)
        if (j >= i + 2)
          rep.expect(se.lambda(d, {i, j}) == se.lambda(d, {j, i}), "far_commute", {c.cert},
                     "positions " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      if (layout.adjacent(i + 1)) {
        rep.expect(se.lambda(d, {i, i + 1, i}) == se.lambda(d, {i + 1, i, i + 1}), "braid_word", {c.cert},
                   "position " + std::to_string(i + 1));
        // the doubly merged graph carries the IHX relation used for the braid
        ColoredGraph m = merge_external_pair(d, layout, i + 1);
        m = merge_external_pair(m, i);
        for (int e = 0; e < m.edge_count(); ++e)
          if (auto t = ihx_triple(m, e))
            rep.expect(se.sigma(ihx_row(*t)).is_zero(), "braid_ihx", {c.cert, canonical_form(m).cert});
      }
    }
  }
}

inline void run_kappa(Component& comp, ComponentReport& rep, const VerifyOptions& o) {
  const Parity p = comp.parity();
  RelationSet fourt = comp.relation_set(SpaceId::Ac);
  RelationSet fourt_chord = comp.relation_set(SpaceId::Acbar);
  EchelonBasis e4(fourt, true), e4c(fourt_chord);
  KappaEngine kmin(KappaStrategy::parse("min"));

  for (const auto& cert : comp.basis(GraphClass::Chord))
    rep.expect(kmin(iota(DiagramVector::of(cert), p), p) == DiagramVector::of(cert), "kappa_iota_identity", {cert});

  std::vector<KappaEngine> others;
  for (const char* s : {"max", "seed:1", "seed:2", "seed:3"}) others.emplace_back(KappaStrategy::parse(s));
  for (const auto& c : comp.classes()) {
    const int w = c.graph.internal_count();
    if (w == 0) continue;
    if (w > o.max_kappa_internal) {
      ++rep.counts["skipped_internal_count"];
      continue;
    }
    const DiagramVector base = kmin(c.graph);
    for (auto& k : others)
      expect_in_span(rep, "kappa_strategy_independence", k(c.graph) - base, fourt, e4, {c.cert});
  }
  for (const auto& r : comp.stu_rows())
    rep.expect(e4.contains(kmin(r.vec, p)), "kappa_stu_in_4t", r.sources, r.vec.str());
  for (const auto& r : comp.ihx_rows())
    rep.expect(e4.contains(kmin(r.vec, p)), "kappa_ihx_in_4t", r.sources, r.vec.str());
  for (const auto& r : comp.chord_rows(GraphClass::BCR))
    rep.expect(e4c.contains(kmin(r.vec, p)), "kappa_chord_rows", r.sources, r.vec.str());

  std::map<SpaceId, std::size_t> dim;
  for (SpaceId s : kAllSpaces) {
    dim[s] = comp.dimension(s);
    rep.counts[std::string("dim_") + to_string(s)] = dim[s];
  }
  rep.expect(dim[SpaceId::A] == dim[SpaceId::Ac], "dim_A_eq_Ac", {},
             std::to_string(dim[SpaceId::A]) + " vs " + std::to_string(dim[SpaceId::Ac]));
  rep.expect(dim[SpaceId::Abar] == dim[SpaceId::Acbar], "dim_Abar_eq_Acbar", {},
             std::to_string(dim[SpaceId::Abar]) + " vs " + std::to_string(dim[SpaceId::Acbar]));
}

inline void run_ihx_in_stu(Component& comp, ComponentReport& rep) {
  RelationSet stu = comp.bcr_relations({Provenance::STU});
  EchelonBasis reducer(stu, true);
  for (const auto& r : comp.ihx_rows()) expect_in_span(rep, "ihx_in_stu_span", r.vec, stu, reducer, r.sources);
}

inline void run_sliding(Component& comp, ComponentReport& rep, const VerifyOptions& o) {
  RelationSet fourt = comp.relation_set(SpaceId::Ac);
  EchelonBasis e4(fourt, true);
  for (const auto& c : comp.classes()) {
    if (!is_chord_diagram(c.graph)) continue;
    for (const auto& cfg : sliding_configurations(c.graph, o.max_sliding_chords)) {
      const int n = cfg.n();
      const ColoredGraph moved = slide(cfg);
      std::vector<Certificate> certs{c.cert, canonical_form(moved).cert};
      ++rep.counts["configurations_n" + std::to_string(n)];
      auto tw = telescoping_witness(cfg);
      if (!rep.expect(tw.found, "telescoping_found", certs)) continue;
      if (canonical_form(cfg.d).zero || canonical_form(moved).zero)
        ++rep.counts["orientation_free"];
      else
        ++rep.counts[tw.orientation > 0 ? "orientation_plus" : "orientation_minus"];
      rep.expect(tw.terms == 4 * n && tw.cancelling_pairs == 2 * n - 1, "telescoping_structure", certs,
                 std::to_string(tw.terms) + " terms, " + std::to_string(tw.cancelling_pairs) + " pairs");
      DiagramVector target = DiagramVector::of_graph(cfg.d);
      target.add_graph(moved, -tw.orientation);
      WitnessRecord rec{"sliding_telescoping", target, {}};
      for (int j = 0; j < n; ++j) {
        const auto& row = tw.rows[static_cast<std::size_t>(j)];
        rep.expect(e4.contains(row), "sliding_rows_are_4t", certs, row.str());
        rec.terms.push_back({tw.signs[static_cast<std::size_t>(j)], {row, Provenance::FourT, {c.cert}}});
      }
      if (rep.expect(rec.verify(), "sliding_witness_verifies", certs) && !target.is_zero())
        rep.witnesses.push_back(std::move(rec));
      rep.expect(e4.contains(target), "sliding_in_4t_span", certs, target.str());
    }
  }
}

inline void run_question(Component& comp, ComponentReport& rep) {
  const Quotient& qb = comp.quotient(SpaceId::B);
  const Quotient& qabar = comp.quotient(SpaceId::Abar);
  RelationSet images(comp.basis(GraphClass::BCR));
  for (const auto& cert : qb.representatives())
    images.add(qabar.normal_form(chi(DiagramVector::of(cert), comp.parity())), Provenance::Chord, {cert});
  const std::size_t r = EchelonBasis(images).rank();
  rep.counts["dim_B"] = qb.dimension();
  rep.counts["rank_Abar_chi"] = r;
  rep.counts["deficiency"] = qb.dimension() - r;
}

}  // namespace detail

/// The graded components a sweep visits.
inline std::vector<GradedComponent> sweep_components(const VerifyOptions& o) {
  if (o.only) {
    if (o.only->V > o.caps.max_vertices || o.only->E > o.caps.max_edges)
      throw CapsExceeded(o.only->V, o.only->E, o.caps);
    return {*o.only};
  }
  return components_within(o.caps.max_vertices, o.caps.max_edges, o.parity);
}

inline ComponentReport verify_component(SuiteId suite, const GradedComponent& id, const VerifyOptions& o) {
  ComponentReport rep;
  rep.id = id;
  Component comp(id, o.caps, o.generator);
  switch (suite) {
    case SuiteId::Pbw: detail::run_pbw(comp, rep); break;
    case SuiteId::SigmaWords: detail::run_sigma_words(comp, rep, o); break;
    case SuiteId::Kappa: detail::run_kappa(comp, rep, o); break;
    case SuiteId::IhxInStu: detail::run_ihx_in_stu(comp, rep); break;
    case SuiteId::Sliding: detail::run_sliding(comp, rep, o); break;
    case SuiteId::Question: detail::run_question(comp, rep); break;
  }
  for (auto& f : rep.failures) f.replay = replay_command(suite, o, id);
  return rep;
}

/// Runs a suite over every component within the caps, one component per task.
inline SuiteReport run_suite(SuiteId suite, const VerifyOptions& o) {
  SuiteReport report;
  report.suite = suite;
  report.options = o;
  const auto comps = sweep_components(o);
  report.components = parallel_map<ComponentReport>(
      comps.size(), o.jobs, [&](std::size_t i) { return verify_component(suite, comps[i], o); });
  return report;
}

}  // namespace bcr
