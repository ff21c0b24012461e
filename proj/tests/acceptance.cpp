// Acceptance run at V <= 8, E <= 8, even parity. One PASS/FAIL line per
// criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>

#include "bcr/verify.hpp"
#include "oracle/brute_force.hpp"

using namespace bcr;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::size_t failures_in(const SuiteReport& r, std::initializer_list<const char*> checks) {
  std::set<std::string> wanted(checks.begin(), checks.end());
  std::size_t n = 0;
  for (const auto& c : r.components)
    for (const auto& f : c.failures) n += wanted.count(f.check);
  return n;
}

std::uint64_t total(const SuiteReport& r, const std::string& key) {
  auto t = r.totals();
  auto it = t.find(key);
  return it == t.end() ? 0 : it->second;
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& c : r.components)
    if (!c.failures.empty()) return "; first: " + c.failures.front().check + " (" + c.failures.front().replay + ")";
  return {};
}

// A stored witness counts only if its sum matches the target and every row it
// uses is one of the rows the generators produce from scratch.
Outcome reverify_witnesses(const SuiteReport& r, SpaceId rows_of, bool bcr_stu) {
  std::size_t checked = 0, bad = 0;
  for (const auto& c : r.components) {
    if (c.witnesses.empty()) continue;
    Component fresh(c.id, r.options.caps);
    RelationSet rows = bcr_stu ? fresh.bcr_relations({Provenance::STU}) : fresh.relation_set(rows_of);
    for (const auto& w : c.witnesses) {
      ++checked;
      bool ok = w.verify() && !w.terms.empty();
      for (const auto& [q, row] : w.terms) {
        RelationSet probe = rows;
        if (probe.add(row.vec, row.tag)) ok = false;
      }
      bad += !ok;
    }
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " witnesses re-verified, " + std::to_string(bad) + " bad"};
}

Outcome enumeration_matches_brute_force() {
  std::size_t components = 0, classes = 0;
  for (Parity p : {Parity::Even, Parity::Odd})
    for (int v = 1; v <= 6; ++v)
      for (int e = 0; e <= 8; ++e) {
        auto fast = enumerate_classes(v, e, p);
        auto slow = oracle::brute_force_classes(v, e, p);
        std::size_t fast_basis = 0, slow_basis = 0;
        for (const auto& c : fast) fast_basis += !c.zero;
        for (const auto& c : slow) slow_basis += !c.zero;
        std::map<Certificate, bool> zero;
        for (const auto& c : fast) zero[c.cert] = c.zero;
        bool same = fast.size() == slow.size() && fast_basis == slow_basis;
        for (const auto& b : slow) {
          auto c = canonical_form(b.graph);
          auto it = zero.find(c.cert);
          same = same && it != zero.end() && it->second == b.zero;
        }
        if (!same)
          return {false, "mismatch at V=" + std::to_string(v) + " E=" + std::to_string(e) + " " + to_string(p) +
                             ": " + std::to_string(fast_basis) + " vs " + std::to_string(slow_basis)};
        ++components;
        classes += fast.size();
      }
  return {true, std::to_string(components) + " components, " + std::to_string(classes) + " classes, both parities"};
}

}  // namespace

int main() {
  VerifyOptions o;
  o.caps = {8, 8};
  o.parity = Parity::Even;

  std::map<SuiteId, SuiteReport> reports;
  for (SuiteId s : kAllSuites) reports[s] = run_suite(s, o);
  const auto& pbw = reports[SuiteId::Pbw];
  const auto& words = reports[SuiteId::SigmaWords];
  const auto& kap = reports[SuiteId::Kappa];
  const auto& ihx = reports[SuiteId::IhxInStu];
  const auto& sl = reports[SuiteId::Sliding];

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.push_back({"chi into A is injective", [&]() -> Outcome {
                        auto n = failures_in(pbw, {"chi_monomorphism"});
                        return {n == 0 && total(pbw, "chi_monomorphism") == pbw.components.size(),
                                std::to_string(pbw.components.size()) + " components, total dim B " +
                                    std::to_string(total(pbw, "dim_B")) + ", " + std::to_string(n) + " failures"};
                      }});
  criteria.push_back({"sigma vanishes on relations and matches chi", [&]() -> Outcome {
                        auto n = failures_in(pbw, {"sigma_kills_stu", "sigma_kills_ihx", "sigma_kills_zero_class",
                                                   "sigma_chi_identity"});
                        return {n == 0 && total(pbw, "sigma_kills_stu") > 0,
                                std::to_string(total(pbw, "sigma_kills_stu")) + " STU rows, " +
                                    std::to_string(total(pbw, "sigma_kills_ihx")) + " IHX rows, " +
                                    std::to_string(total(pbw, "sigma_kills_zero_class")) + " zero classes, " +
                                    std::to_string(n) + " failures"};
                      }});
  criteria.push_back({"sigma is independent of the word", [&]() -> Outcome {
                        return {words.passed() && total(words, "word_pairs") > 0,
                                std::to_string(total(words, "word_pairs")) + " word pairs, " +
                                    std::to_string(total(words, "square_word") + total(words, "far_commute") +
                                                   total(words, "braid_word") + total(words, "braid_ihx")) +
                                    " generator checks, " + std::to_string(words.failure_count()) + " failures" +
                                    first_failure(words)};
                      }});
  criteria.push_back({"kappa is independent of choices modulo 4T", [&]() -> Outcome {
                        auto n = failures_in(kap, {"kappa_strategy_independence"});
                        auto w = reverify_witnesses(kap, SpaceId::Ac, false);
                        return {n == 0 && w.ok && total(kap, "kappa_strategy_independence") > 0,
                                std::to_string(total(kap, "kappa_strategy_independence")) + " comparisons, " +
                                    std::to_string(n) + " failures, " + w.detail};
                      }});
  criteria.push_back({"inclusion of chord diagrams is an isomorphism", [&]() -> Outcome {
                        auto n = failures_in(kap, {"dim_A_eq_Ac", "dim_Abar_eq_Acbar", "kappa_iota_identity",
                                                   "kappa_stu_in_4t", "kappa_ihx_in_4t", "kappa_chord_rows"});
                        return {n == 0 && total(kap, "dim_A_eq_Ac") == kap.components.size(),
                                std::to_string(kap.components.size()) + " components, " +
                                    std::to_string(total(kap, "kappa_iota_identity")) + " chord diagrams fixed, " +
                                    std::to_string(n) + " failures" + first_failure(kap)};
                      }});
  criteria.push_back({"IHX rows lie in the STU span", [&]() -> Outcome {
                        auto w = reverify_witnesses(ihx, SpaceId::A, true);
                        return {ihx.passed() && w.ok,
                                std::to_string(total(ihx, "ihx_in_stu_span")) + " rows, " +
                                    std::to_string(ihx.failure_count()) + " failures, " + w.detail};
                      }});
  criteria.push_back({"sliding a chord end telescopes through 4T", [&]() -> Outcome {
                        return {sl.passed() && total(sl, "configurations_n1") > 0 && total(sl, "configurations_n2") > 0,
                                std::to_string(total(sl, "configurations_n1")) + " one-chord and " +
                                    std::to_string(total(sl, "configurations_n2")) + " two-chord configurations, " +
                                    std::to_string(sl.failure_count()) + " failures" + first_failure(sl)};
                      }});
  criteria.push_back({"enumeration matches brute force for V <= 6", enumeration_matches_brute_force});
  criteria.push_back({"reports are deterministic", [&]() -> Outcome {
                        VerifyOptions par = o;
                        par.jobs = 2;
                        std::size_t differing = 0;
                        std::string which;
                        for (SuiteId s : kAllSuites) {
                          const std::string a = reports[s].to_json().dump(1);
                          const std::string b = run_suite(s, o).to_json().dump(1);
                          const std::string c = run_suite(s, par).to_json().dump(1);
                          if (a != b || a != c) {
                            ++differing;
                            which += std::string(" ") + to_string(s);
                          }
                        }
                        return {differing == 0, std::to_string(kAllSuites.size()) + " suites run three times" +
                                                    (differing ? ", differing:" + which : ", byte-identical")};
                      }});

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.ok;
    std::printf("%s  %zu. %s: %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.c_str(),
                secs);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
