#include "sqcc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqcc/coloring.hpp"
#include "sqcc/construction.hpp"
#include "sqcc/error.hpp"
#include "sqcc/latin.hpp"
#include "sqcc/verification.hpp"

namespace sqcc {

Json to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["parameters"] = report.parameters;
  j["outcome"] = report.outcome;
  j["payload"] = report.payload;
  return j;
}

namespace {

enum class Verbosity { kQuiet, kInfo, kDebug };

Verbosity verbosity_from_env() {
  const char* v = std::getenv("SQCC_LOG");
  if (v == nullptr) return Verbosity::kInfo;
  const std::string s(v);
  if (s == "quiet" || s == "0") return Verbosity::kQuiet;
  if (s == "debug" || s == "2") return Verbosity::kDebug;
  return Verbosity::kInfo;
}

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err), level_(verbosity_from_env()) {}
  void info(const std::string& msg) const {
    if (level_ >= Verbosity::kInfo) err_ << "sqcc: " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ >= Verbosity::kDebug) err_ << "sqcc[debug]: " << msg << '\n';
  }
  // errors print at every level
  void error(const std::string& msg) const { err_ << "sqcc: error: " << msg << '\n'; }

 private:
  std::ostream& err_;
  Verbosity level_;
};

// Thrown for output files that cannot be written.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoFailure("cannot open " + path + " for writing");
  body(file);
  file.flush();
  if (!file) throw IoFailure("failed writing " + path);
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

struct Options {
  int n = 0;
  int r = 0;
  std::string format = "json";
  std::string output;
  std::string lemma = "all";
  double budget_seconds = 60.0;
  std::string graph_path;
  std::string lists_path;
  std::string graph_out;
  std::string lists_out;
  std::string solver = "auto";
  bool check = false;
  bool pretty = false;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), log_(err) {}

  int construct(const Options& o) {
    const ConstructedGraph gc = construct_counterexample(o.n);
    const GraphDocument doc = document_of(gc);
    emit(o.output, out_, [&](std::ostream& s) {
      if (o.format == "dot") {
        write_dot(s, doc);
      } else if (o.format == "dimacs") {
        write_dimacs(s, doc.graph);
      } else {
        s << dump(graph_to_json(doc), o.pretty) << '\n';
      }
    });
    log_.info("constructed n=" + std::to_string(o.n) + ": " +
              std::to_string(gc.graph.vertex_count()) + " vertices, " +
              std::to_string(gc.graph.edge_count()) + " edges");
    return exit_code::kPass;
  }

  int verify(const Options& o, RunReport& report) {
    const auto selector = parse_selector(o.lemma);
    if (!selector) throw InvalidParameter("unknown lemma selector '" + o.lemma + "'");
    report.parameters["n"] = o.n;
    report.parameters["lemma"] = o.lemma;
    const ConstructedGraph gc = construct_counterexample(o.n);
    const VerificationRun run = run_verification(gc, *selector);

    report.payload["n"] = o.n;
    report.payload["vertices"] = gc.graph.vertex_count();
    report.payload["edges"] = gc.graph.edge_count();
    Json lemmas = Json::array();
    for (const auto& r : run.reports) {
      lemmas.push_back(to_json(r));
      log_.debug(r.lemma_id + (r.passed ? " passed" : " FAILED") + " over " +
                 std::to_string(r.checked_cases) + " cases");
    }
    report.payload["lemmas"] = std::move(lemmas);
    if (run.structure) {
      Json s;
      s["part_count"] = run.structure->parts.size();
      Json sizes = Json::array();
      for (const auto& p : run.structure->parts) sizes.push_back(p.size());
      s["part_sizes"] = std::move(sizes);
      s["parts"] = to_json(*run.structure);
      report.payload["structure"] = std::move(s);
    }
    report.payload["passed"] = run.passed();
    report.outcome = run.passed() ? "pass" : "fail";
    return run.passed() ? exit_code::kPass : exit_code::kFail;
  }

  int certify(const Options& o, RunReport& report) {
    report.parameters["n"] = o.n;
    report.parameters["budget_seconds"] = o.budget_seconds;
    require_odd_prime(o.n);
    if (!(o.budget_seconds > 0)) throw InvalidParameter("--budget-seconds must be positive");
    const auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(o.budget_seconds));
    const GapCertificate cert = certify_gap(o.n, budget);
    report.payload = to_json(cert);
    report.outcome = "pass";
    log_.info("certified n=" + std::to_string(o.n) + ": chromatic " +
              std::to_string(cert.chromatic) + ", not " + std::to_string(cert.list_bound) +
              "-choosable after " + std::to_string(cert.attestation.nodes) + " search nodes");
    return exit_code::kPass;
  }

  int solve_list(const Options& o, RunReport& report) {
    report.parameters["graph"] = o.graph_path;
    report.parameters["lists"] = o.lists_path;
    report.parameters["solver"] = o.solver;
    const GraphDocument doc = read_graph_file(o.graph_path);
    const ListAssignment lists = lists_from_json(read_json_file(o.lists_path), doc.graph.vertex_count());

    std::string solver = o.solver;
    const PartitionWitness w = doc.witness();
    if (solver == "auto") {
      bool usable = false;
      if (!doc.parts.empty()) {
        try {
          usable = is_complete_multipartite(doc.graph, w);
        } catch (const InvalidInput&) {
          usable = false;
        }
      }
      solver = usable ? "multipartite" : "generic";
    }
    SearchBudget budget = SearchBudget::within(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(o.budget_seconds)));
    ListColoringResult result;
    if (solver == "multipartite") {
      if (!is_complete_multipartite(doc.graph, w))
        throw InvalidInput("graph is not complete multipartite on its \"parts\"");
      result = multipartite_list_colorable(w, lists, budget);
    } else if (solver == "generic") {
      result = is_list_colorable(doc.graph, lists, budget);
    } else {
      throw InvalidParameter("unknown solver '" + o.solver + "'");
    }
    if (result.colorable &&
        (!is_proper_coloring(doc.graph, result.coloring) || !respects_lists(lists, result.coloring)))
      throw std::logic_error("solver returned an invalid coloring");
    report.payload = to_json(result);
    report.outcome = result.colorable ? "pass" : "fail";
    return result.colorable ? exit_code::kPass : exit_code::kFail;
  }

  int mols(const Options& o) {
    const MolsFamily family = build_mols_family(o.n);
    bool ok = true;
    std::string problem;
    if (o.check) {
      for (std::size_t a = 0; a < family.squares.size() && ok; ++a) {
        if (!is_latin(family.squares[a].entries())) {
          ok = false;
          problem = "L_" + std::to_string(a + 1) + " is not Latin";
        }
        for (std::size_t b = a + 1; b < family.squares.size() && ok; ++b)
          if (!are_orthogonal(family.squares[a], family.squares[b])) {
            ok = false;
            problem = "L_" + std::to_string(a + 1) + " and L_" + std::to_string(b + 1) +
                      " are not orthogonal";
          }
      }
    }
    if (o.format == "json") {
      Json j = to_json(family);
      if (o.check) j["check"] = ok ? "pass" : "fail";
      out_ << dump(j, o.pretty) << '\n';
    } else {
      for (std::size_t i = 0; i < family.squares.size(); ++i) {
        out_ << (i > 0 ? "\n" : "") << "L_" << i + 1 << '\n';
        write_square(out_, family.squares[i]);
      }
      if (o.check)
        out_ << "\ncheck: " << (ok ? "all squares Latin and pairwise orthogonal" : problem) << '\n';
    }
    if (!ok) log_.error(problem);
    return ok ? exit_code::kPass : exit_code::kFail;
  }

  int vetrik(const Options& o) {
    const VetrikAssignment va = vetrik_assignment(o.n, o.r);
    GraphDocument doc;
    doc.graph = complete_multipartite(static_cast<std::size_t>(o.n), static_cast<std::size_t>(o.r));
    for (std::size_t p = 0; p < va.parts.parts.size(); ++p)
      doc.parts.emplace_back("V_" + std::to_string(p + 1), va.parts.parts[p]);
    emit(o.graph_out, out_, [&](std::ostream& s) { s << dump(graph_to_json(doc), o.pretty) << '\n'; });
    emit(o.lists_out, out_,
         [&](std::ostream& s) { s << dump(lists_to_json(va.assignment), o.pretty) << '\n'; });
    log_.info("K_{" + std::to_string(o.n) + "*" + std::to_string(o.r) + "} with lists of size " +
              std::to_string(va.bound));
    return exit_code::kPass;
  }

  const Logger& log() const { return log_; }
  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  Logger log_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counterexample graphs for list square coloring: construct, verify, certify"};
  app.name("sqcc");
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build the counterexample graph G");
  construct->add_option("--n", o.n, "Prime order n >= 3")->required();
  construct->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"dot", "dimacs", "json"}));
  construct->add_option("--output,-o", o.output, "Output path (default stdout)");
  construct->add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* verify = app.add_subcommand("verify", "Check the structural lemmas on G and its square");
  verify->add_option("--n", o.n, "Prime order n >= 3")->required();
  verify->add_option("--lemma", o.lemma, "all, nw, nv, independence, pq or structure");
  verify->add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* certify = app.add_subcommand("certify", "Emit a list-vs-ordinary chromatic gap certificate");
  certify->add_option("--n", o.n, "Prime order n >= 3")->required();
  certify->add_option("--budget-seconds", o.budget_seconds, "Search time limit");
  certify->add_option("--output,-o", o.output, "Output path (default stdout)");
  certify->add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* solve = app.add_subcommand("solve-list", "Decide list colorability of a graph");
  solve->add_option("--graph", o.graph_path, "Graph file (JSON or DIMACS)")->required();
  solve->add_option("--lists", o.lists_path, "Lists JSON file")->required();
  solve->add_option("--solver", o.solver, "auto, generic or multipartite")
      ->check(CLI::IsMember({"auto", "generic", "multipartite"}));
  solve->add_option("--budget-seconds", o.budget_seconds, "Search time limit");
  solve->add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* mols = app.add_subcommand("mols", "Print the orthogonal Latin squares of prime order n");
  mols->add_option("--n", o.n, "Prime order n >= 3")->required();
  mols->add_flag("--check", o.check, "Re-validate Latin and orthogonality properties");
  std::string mols_format = "text";
  mols->add_option("--format", mols_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  mols->add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* vetrik = app.add_subcommand("vetrik", "Write K_{n*r} and its uncolorable list assignment");
  vetrik->add_option("--n", o.n, "Part size")->required();
  vetrik->add_option("--r", o.r, "Part count")->required();
  vetrik->add_option("--graph-out", o.graph_out, "Graph JSON path (default stdout)");
  vetrik->add_option("--lists-out", o.lists_out, "Lists JSON path (default stdout)");
  vetrik->add_flag("--pretty", o.pretty, "Indent JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kPass : exit_code::kBadInput;
  }

  Runner runner(out, err);
  const auto started = std::chrono::steady_clock::now();
  RunReport report;
  report.command = app.get_subcommands().front()->get_name();
  const bool enveloped = report.command == "verify" || report.command == "certify" ||
                         report.command == "solve-list";

  int code = exit_code::kPass;
  try {
    if (construct->parsed()) {
      code = runner.construct(o);
    } else if (verify->parsed()) {
      code = runner.verify(o, report);
    } else if (certify->parsed()) {
      code = runner.certify(o, report);
    } else if (solve->parsed()) {
      code = runner.solve_list(o, report);
    } else if (mols->parsed()) {
      o.format = mols_format;
      code = runner.mols(o);
    } else if (vetrik->parsed()) {
      code = runner.vetrik(o);
    }
  } catch (const ResourceError& e) {
    code = exit_code::kBudget;
    report.outcome = "error";
    report.payload = Json::object();
    report.payload["error"] = e.what();
    report.payload["nodes"] = e.nodes();
    runner.log().error(e.what());
  } catch (const IoFailure& e) {
    code = exit_code::kIo;
    report.outcome = "error";
    report.payload = Json{{"error", e.what()}};
    runner.log().error(e.what());
  } catch (const std::invalid_argument& e) {  // InvalidParameter, InvalidInput
    code = exit_code::kBadInput;
    report.outcome = "error";
    report.payload = Json{{"error", e.what()}};
    runner.log().error(e.what());
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  if (enveloped) {
    const std::string text = dump(to_json(report), o.pretty) + "\n";
    try {
      emit(report.command == "certify" ? o.output : std::string(), runner.out(),
           [&](std::ostream& s) { s << text; });
    } catch (const IoFailure& e) {
      runner.log().error(e.what());
      code = exit_code::kIo;
    }
  }
  runner.log().info(report.command + " finished with exit code " + std::to_string(code) +
                    " in " + std::to_string(report.elapsed.count()) + " ms");
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sqcc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sqcc
