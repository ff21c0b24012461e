#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcr/json_io.hpp"
#include "bcr/parallel.hpp"
#include "bcr/pbw.hpp"
#include "bcr/spaces.hpp"
#include "bcr/text_format.hpp"
#include "bcr/verify.hpp"

namespace {

using namespace bcr;

// Exit statuses.
constexpr int kOk = 0;
constexpr int kSuiteFailed = 1;
constexpr int kSyntaxError = 2;
constexpr int kInvalidGraph = 3;
constexpr int kRuntimeError = 4;

struct Common {
  std::string parity = "even";
  unsigned jobs = 1;
  std::string fault = "none";
  int cap_vertices = 10;
  int cap_edges = 10;

  Parity parity_value() const { return parse_parity(parity); }
  Caps caps() const { return {cap_vertices, cap_edges}; }
  GeneratorOptions generator() const { return {fault == "stu"}; }
};

void add_common(CLI::App* cmd, Common& c, bool sweeps) {
  cmd->add_option("--parity", c.parity, "Coloring parity")->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
  cmd->add_option("--cap-vertices", c.cap_vertices, "Enumeration limit on V")->capture_default_str();
  cmd->add_option("--cap-edges", c.cap_edges, "Enumeration limit on E")->capture_default_str();
  cmd->add_option("--inject-fault", c.fault, "Corrupt a generator (testing only)")
      ->check(CLI::IsMember({"none", "stu"}))
      ->capture_default_str();
  if (sweeps) cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string header_comment(const std::string& what, Parity p, const Caps& caps) {
  std::ostringstream os;
  os << "# bcrtool " << what << "; format_version=" << kFormatVersion << "; parity=" << to_string(p)
     << "; caps V<=" << caps.max_vertices << " E<=" << caps.max_edges << "; chord_row_sign=" << kChordRowSign
     << "; ihx_side_sign=" << kIhxSideSign << "; odd_convention=" << kOddConvention << '\n';
  return os.str();
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += "    " + line + '\n';
  return out;
}

/// One "(coefficient, certificate)" line per term, followed by the graph.
std::string render_vector(const DiagramVector& v, Parity p) {
  std::ostringstream os;
  if (v.is_zero()) os << "0\n";
  for (const auto& [c, q] : v) {
    os << '(' << to_string(q) << ", " << c << ")\n";
    os << indent(print_graph(decode_certificate(c, p)));
  }
  return os.str();
}

/// Input graphs from --graph FILE or --cert CERT.
std::vector<ColoredGraph> input_graphs(const std::string& file, const std::string& cert, Parity p) {
  if (!cert.empty()) {
    auto g = decode_certificate(cert, p);
    require_valid(g);
    return {g};
  }
  if (file.empty()) throw std::invalid_argument("one of --graph or --cert is required");
  return parse_graphs(read_file(file));
}

GradedComponent parse_component(const std::string& s, Parity p) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--only expects V:E");
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)), p};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for BCR graph, hairy graph and chord diagram spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bcrtool 1.0");

  // enumerate
  Common en_c;
  int en_v = 2, en_e = 1;
  std::string en_class = "bcr", en_format = "text";
  bool en_zero = false, en_graphs = false;
  auto* en = app.add_subcommand("enumerate", "List canonical classes of one graded component");
  add_common(en, en_c, false);
  en->add_option("--vertices", en_v, "Total vertex count")->required();
  en->add_option("--edges", en_e, "Total edge count")->required();
  en->add_option("--class", en_class, "Graph class")->check(CLI::IsMember({"bcr", "hairy", "chord"}))->capture_default_str();
  en->add_option("--format", en_format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  en->add_flag("--zero", en_zero, "Also list Zero classes");
  en->add_flag("--graphs", en_graphs, "Print each graph in the text format");

  // dims
  Common di_c;
  std::vector<std::string> di_spaces;
  int di_v = 8, di_e = 8;
  std::string di_format = "csv", di_out;
  auto* di = app.add_subcommand("dims", "Dimension table of quotient spaces");
  add_common(di, di_c, true);
  di->add_option("--space", di_spaces, "B|A|Abar|Ac|Acbar (repeatable; default all)")
      ->check(CLI::IsMember({"B", "A", "Abar", "Ac", "Acbar"}));
  di->add_option("--max-vertices", di_v, "Largest V")->capture_default_str();
  di->add_option("--max-edges", di_e, "Largest E")->capture_default_str();
  di->add_option("--format", di_format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  di->add_option("--out", di_out, "Output file (default stdout)");

  // relations
  Common re_c;
  std::string re_type = "stu", re_class = "bcr", re_out;
  int re_v = 2, re_e = 1;
  auto* re = app.add_subcommand("relations", "Relation rows of one graded component");
  add_common(re, re_c, false);
  re->add_option("--type", re_type, "Relation family")->check(CLI::IsMember({"stu", "ihx", "chord", "4t"}))->required();
  re->add_option("--vertices", re_v, "Total vertex count")->required();
  re->add_option("--edges", re_e, "Total edge count")->required();
  re->add_option("--class", re_class, "Chord rows over bcr graphs or chord diagrams only")
      ->check(CLI::IsMember({"bcr", "chord"}))
      ->capture_default_str();
  re->add_option("--out", re_out, "Output file (default stdout)");

  // sigma
  Common si_c;
  std::string si_graph, si_cert;
  auto* si = app.add_subcommand("sigma", "Evaluate sigma on graphs, with values in B");
  add_common(si, si_c, false);
  si->add_option("--graph", si_graph, "Graph file");
  si->add_option("--cert", si_cert, "Canonical certificate instead of a file");

  // resolve
  Common rs_c;
  std::string rs_graph, rs_cert, rs_strategy = "min";
  auto* rs = app.add_subcommand("resolve", "Resolve graphs into chord diagrams (kappa)");
  add_common(rs, rs_c, false);
  rs->add_option("--graph", rs_graph, "Graph file");
  rs->add_option("--cert", rs_cert, "Canonical certificate instead of a file");
  rs->add_option("--strategy", rs_strategy, "min|max|seed:N")->capture_default_str();

  // verify
  Common ve_c;
  std::string ve_suite, ve_report, ve_only;
  int ve_v = 8, ve_e = 8;
  bool ve_no_witnesses = false;
  auto* ve = app.add_subcommand("verify", "Run a verification suite; exit status reflects the result");
  add_common(ve, ve_c, true);
  ve->add_option("--suite", ve_suite, "Suite id")
      ->check(CLI::IsMember({"pbw", "sigma-words", "kappa", "ihx-in-stu", "sliding", "question"}))
      ->required();
  ve->add_option("--max-vertices", ve_v, "Largest V")->capture_default_str();
  ve->add_option("--max-edges", ve_e, "Largest E")->capture_default_str();
  ve->add_option("--only", ve_only, "Single component V:E");
  ve->add_option("--report", ve_report, "JSON report file");
  ve->add_flag("--no-witnesses", ve_no_witnesses, "Leave witnesses out of the report");

  // export
  Common ex_c;
  std::string ex_space = "A", ex_format = "json", ex_out;
  int ex_v = 2, ex_e = 1;
  auto* ex = app.add_subcommand("export", "Export the relation matrix of a space");
  add_common(ex, ex_c, false);
  ex->add_option("--space", ex_space, "B|A|Abar|Ac|Acbar")
      ->check(CLI::IsMember({"B", "A", "Abar", "Ac", "Acbar"}))
      ->capture_default_str();
  ex->add_option("--vertices", ex_v, "Total vertex count")->required();
  ex->add_option("--edges", ex_e, "Total edge count")->required();
  ex->add_option("--format", ex_format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
  ex->add_option("--out", ex_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      const Parity p = en_c.parity_value();
      const GraphClass cls = parse_graph_class(en_class);
      auto classes = enumerate_classes(en_v, en_e, p, cls, en_c.caps());
      if (en_format == "json") {
        nlohmann::json j = table_header(p, en_c.caps());
        j["V"] = en_v;
        j["E"] = en_e;
        j["class"] = en_class;
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : classes)
          if (!c.zero || en_zero) list.push_back({{"certificate", c.cert}, {"zero", c.zero}});
        j["classes"] = list;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << header_comment("enumerate V=" + std::to_string(en_v) + " E=" + std::to_string(en_e) +
                                        " class=" + en_class,
                                    p, en_c.caps());
        for (const auto& c : classes) {
          if (c.zero && !en_zero) continue;
          std::cout << c.cert << (c.zero ? "  zero" : "") << '\n';
          if (en_graphs) std::cout << indent(print_graph(c.graph));
        }
      }
      return kOk;
    }

    if (*di) {
      const Parity p = di_c.parity_value();
      std::vector<SpaceId> spaces;
      for (const auto& s : di_spaces) spaces.push_back(parse_space(s));
      if (spaces.empty()) spaces.assign(kAllSpaces.begin(), kAllSpaces.end());
      const Caps caps = di_c.caps();
      if (di_v > caps.max_vertices || di_e > caps.max_edges) throw CapsExceeded(di_v, di_e, caps);
      const auto comps = components_within(di_v, di_e, p);
      auto rows = parallel_map<std::vector<std::size_t>>(comps.size(), di_c.jobs, [&](std::size_t i) {
        Component comp(comps[i], caps, di_c.generator());
        std::vector<std::size_t> out;
        for (SpaceId s : spaces) out.push_back(comp.dimension(s));
        return out;
      });
      std::ostringstream os;
      if (di_format == "csv") {
        os << header_comment("dims max V=" + std::to_string(di_v) + " E=" + std::to_string(di_e), p, caps);
        os << "V,E";
        for (SpaceId s : spaces) os << ',' << to_string(s);
        os << '\n';
        for (std::size_t i = 0; i < comps.size(); ++i) {
          os << comps[i].V << ',' << comps[i].E;
          for (std::size_t d : rows[i]) os << ',' << d;
          os << '\n';
        }
      } else {
        nlohmann::json j = table_header(p, caps);
        j["max_vertices"] = di_v;
        j["max_edges"] = di_e;
        nlohmann::json table = nlohmann::json::array();
        for (std::size_t i = 0; i < comps.size(); ++i) {
          nlohmann::json row{{"V", comps[i].V}, {"E", comps[i].E}};
          for (std::size_t k = 0; k < spaces.size(); ++k) row[to_string(spaces[k])] = rows[i][k];
          table.push_back(row);
        }
        j["dimensions"] = table;
        os << j.dump(2) << '\n';
      }
      write_output(di_out, os.str());
      return kOk;
    }

    if (*re) {
      const Parity p = re_c.parity_value();
      Component comp({re_v, re_e, p}, re_c.caps(), re_c.generator());
      const std::vector<RelationRow>* rows = nullptr;
      GraphClass basis = GraphClass::BCR;
      if (re_type == "stu") rows = &comp.stu_rows();
      else if (re_type == "ihx") rows = &comp.ihx_rows();
      else if (re_type == "4t") {
        rows = &comp.fourt_rows();
        basis = GraphClass::Chord;
      } else {
        basis = parse_graph_class(re_class);
        rows = &comp.chord_rows(basis);
      }
      RelationSet set(comp.basis(basis));
      for (const auto& r : *rows) set.add(r.vec, r.tag, r.sources);
      nlohmann::json j = table_header(p, re_c.caps());
      j["V"] = re_v;
      j["E"] = re_e;
      j["type"] = re_type;
      j["matrix"] = matrix_json(set);
      write_output(re_out, j.dump(2) + '\n');
      return kOk;
    }

    if (*si) {
      const Parity p = si_c.parity_value();
      for (const auto& g : input_graphs(si_graph, si_cert, p)) {
        Component comp({g.vertex_count(), g.edge_count(), g.parity()}, si_c.caps(), si_c.generator());
        SigmaEngine engine(comp);
        std::cout << "# sigma of " << canonical_form(g).cert << '\n' << render_vector(engine.sigma(g), g.parity());
      }
      return kOk;
    }

    if (*rs) {
      const Parity p = rs_c.parity_value();
      KappaEngine engine(KappaStrategy::parse(rs_strategy));
      for (const auto& g : input_graphs(rs_graph, rs_cert, p))
        std::cout << "# kappa (" << rs_strategy << ") of " << canonical_form(g).cert << '\n'
                  << render_vector(engine(g), g.parity());
      return kOk;
    }

    if (*ve) {
      VerifyOptions o;
      o.parity = ve_c.parity_value();
      o.caps = {ve_v, ve_e};
      if (ve_v > ve_c.cap_vertices || ve_e > ve_c.cap_edges) throw CapsExceeded(ve_v, ve_e, ve_c.caps());
      o.generator = ve_c.generator();
      o.jobs = ve_c.jobs;
      if (!ve_only.empty()) o.only = parse_component(ve_only, o.parity);
      auto report = run_suite(parse_suite(ve_suite), o);
      if (!ve_report.empty()) write_output(ve_report, report.to_json(!ve_no_witnesses).dump(2) + '\n');
      std::cout << "suite " << ve_suite << " (" << to_string(o.parity) << ", V<=" << ve_v << ", E<=" << ve_e
                << "): " << report.components.size() << " components, " << report.failure_count() << " failures\n";
      for (const auto& [k, v] : report.totals()) std::cout << "  " << k << " = " << v << '\n';
      for (const auto& c : report.components)
        for (const auto& f : c.failures) {
          std::cout << "FAIL " << f.check << " at (" << c.id.V << "," << c.id.E << ")";
          for (const auto& cert : f.certificates) std::cout << " [" << cert << "]";
          if (!f.detail.empty()) std::cout << ": " << f.detail;
          std::cout << "\n  replay: " << f.replay << '\n';
        }
      if (report.evidence_only()) std::cout << "evidence only; no pass/fail claim\n";
      std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
      return report.passed() ? kOk : kSuiteFailed;
    }

    if (*ex) {
      const Parity p = ex_c.parity_value();
      Component comp({ex_v, ex_e, p}, ex_c.caps(), ex_c.generator());
      const SpaceId s = parse_space(ex_space);
      const Quotient& q = comp.quotient(s);
      nlohmann::json j = table_header(p, ex_c.caps());
      j["V"] = ex_v;
      j["E"] = ex_e;
      j["space"] = ex_space;
      j["dimension"] = q.dimension();
      j["matrix"] = matrix_json(q.rows);
      j["representatives"] = q.representatives();
      write_output(ex_out, j.dump(2) + '\n');
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kSyntaxError;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kInvalidGraph;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}
