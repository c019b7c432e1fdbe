#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "overlapkit/analysis.hpp"
#include "overlapkit/formatting.hpp"
#include "overlapkit/random_pairs.hpp"
#include "overlapkit/spec_file.hpp"

namespace {

using namespace overlapkit;

// Stable scripting contract; keep in sync with README.
constexpr int kExitPass = 0;
constexpr int kExitAxiomFail = 1;
constexpr int kExitUnknownEntry = 2;
constexpr int kExitMalformed = 3;
constexpr int kExitHypothesisUnmet = 4;

struct Options {
  std::string catalog_name;
  std::string spec_path;
  double a = 1.0;
  int grid_n = 101;
  double tol = tolerance::equality;
  std::string output = "json";
  long long seed = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
  auto* cat = cmd->add_option("--catalog", opt.catalog_name,
                              "named catalog entry");
  auto* spec = cmd->add_option("--spec", opt.spec_path,
                               "JSON operator description file");
  cat->excludes(spec);
  cmd->add_option("--a", opt.a, "relaxation parameter for catalog pairs")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--grid-n", opt.grid_n, "verification grid resolution")
      ->check(CLI::Range(3, 100000));
  cmd->add_option("--tol", opt.tol, "equality tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", opt.output, "json or human")
      ->check(CLI::IsMember({"json", "human"}));
  cmd->add_option("--seed", opt.seed, "seed echoed into reports");
}

CatalogEntry resolve(const Options& opt) {
  if (!opt.spec_path.empty()) return load_operator_spec(opt.spec_path);
  if (!opt.catalog_name.empty()) return catalog(opt.catalog_name, opt.a);
  throw MalformedInput("one of --catalog or --spec is required");
}

ojson config_json(const Options& opt, const std::string& command,
                  const std::string& subject) {
  ojson j;
  j["command"] = command;
  j["subject"] = subject;
  if (!opt.catalog_name.empty()) j["catalog"] = opt.catalog_name;
  if (!opt.spec_path.empty()) j["spec"] = opt.spec_path;
  j["a"] = opt.a;
  j["grid_n"] = opt.grid_n;
  j["tol"] = opt.tol;
  j["seed"] = opt.seed;
  return j;
}

void emit_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void print_axiom_human(std::ostream& os, const AxiomResult& r) {
  os << "  " << r.id << ": " << to_string(r.verdict);
  if (r.verdict != Verdict::pass && r.witness) {
    const Witness& w = *r.witness;
    os << "  (defect " << fmt_g(w.defect) << " at x=" << fmt_g(w.x);
    if (w.y) os << " y=" << fmt_g(*w.y);
    if (w.z) os << " z=" << fmt_g(*w.z);
    os << "; lhs " << fmt_g(w.lhs) << " rhs " << fmt_g(w.rhs) << " tol "
       << fmt_g(r.tol) << ")";
  }
  os << "\n";
}

void print_report_human(std::ostream& os, const VerificationReport& rep) {
  os << "subject: " << rep.subject << "\n";
  os << "grid: n=" << rep.grid.n
     << " refinement_depth=" << rep.grid.refinement_depth << "\n";
  if (rep.vacuous) os << "vacuous: true\n";
  for (const auto& r : rep.axioms) print_axiom_human(os, r);
  os << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_eval(const Options& opt, std::optional<double> x,
             std::optional<double> y, const std::string& points_path) {
  BivariateOp op = op_from_entry(resolve(opt));
  auto check_unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw MalformedInput(std::string(name) + " must lie in [0,1]");
    }
  };
  if (!points_path.empty()) {
    std::ifstream in(points_path);
    if (!in) throw MalformedInput("cannot read '" + points_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      double px = 0.0, py = 0.0;
      if (!(row >> px >> py)) {
        throw MalformedInput("bad points line '" + line + "'");
      }
      check_unit(px, "x");
      check_unit(py, "y");
      std::cout << fmt_17g(op(px, py)) << "\n";
    }
    return kExitPass;
  }
  if (!x || !y) throw MalformedInput("eval needs --x and --y (or --points)");
  check_unit(*x, "x");
  check_unit(*y, "y");
  std::cout << fmt_17g(op(*x, *y)) << "\n";
  return kExitPass;
}

int cmd_verify(const Options& opt, const std::string& as) {
  BivariateOp op = op_from_entry(resolve(opt));
  Grid grid = Grid::uniform(opt.grid_n);
  VerificationReport rep =
      as == "overlap"    ? check_overlap_axioms(op, grid, opt.tol)
      : as == "grouping" ? check_grouping_axioms(op, grid, opt.tol)
      : as == "tnorm"    ? check_tnorm(op, grid, opt.tol)
                         : check_tconorm(op, grid, opt.tol);
  if (opt.output == "human") {
    print_report_human(std::cout, rep);
  } else {
    ojson j;
    j["config"] = config_json(opt, "verify", op.label());
    j["config"]["as"] = as;
    j["report"] = rep.to_json();
    emit_json(j);
  }
  return rep.all_pass() ? kExitPass : kExitAxiomFail;
}

bool all_axioms_pass(const VerificationReport& rep) { return rep.all_pass(); }

int cmd_classify(const Options& opt) {
  CatalogEntry entry = resolve(opt);
  Grid grid = Grid::uniform(opt.grid_n);

  if (const auto* dual = std::get_if<DualGeneratorPair>(&entry)) {
    DualSuiteReport suite = dual_grouping_suite(*dual, grid, opt.tol);
    bool ok = all_axioms_pass(suite.pair_conditions) &&
              all_axioms_pass(suite.grouping_axioms) &&
              suite.equivalence.all_three_pass();
    if (opt.output == "human") {
      std::cout << "subject: " << suite.subject << "\n";
      print_report_human(std::cout, suite.pair_conditions);
      print_report_human(std::cout, suite.grouping_axioms);
      std::cout << "inner_class: " << to_string(suite.decomposition.inner_class)
                << "\n";
      std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    } else {
      ojson j;
      j["config"] = config_json(opt, "classify", suite.subject);
      j["dual_suite"] = suite.to_json();
      emit_json(j);
    }
    return ok ? kExitPass : kExitAxiomFail;
  }

  std::optional<GeneratorPair> pair = pair_from_entry(entry);
  if (!pair) {
    throw MalformedInput("classify needs a generator pair, not a plain "
                         "operator");
  }
  BivariateOp op = op_from_entry(entry);
  VerificationReport conds = check_pair_conditions(*pair, grid);
  EquivalenceReport eq = tnorm_equivalence_report(*pair, op, grid, opt.tol);
  StrictnessProbe probe = probe_strictness(pair->theta);
  AxiomResult arch = check_archimedean_diagonal(op, 0.5);
  RepresentabilityVerdict repv = representability_verdict(*pair);

  bool ok = all_axioms_pass(conds) && eq.all_three_pass() && arch.passed();
  if (opt.output == "human") {
    std::cout << "subject: " << op.label() << "\n";
    print_report_human(std::cout, conds);
    print_axiom_human(std::cout, eq.is_tnorm);
    print_axiom_human(std::cout, eq.neutral_one);
    print_axiom_human(std::cout, eq.composition_identity);
    print_axiom_human(std::cout, arch);
    std::cout << "strict: " << (probe.strict ? "yes" : "no") << "\n";
    std::cout << "representability: " << to_string(repv.kind) << "\n";
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  } else {
    ojson j;
    j["config"] = config_json(opt, "classify", op.label());
    j["pair_conditions"] = conds.to_json();
    j["equivalence"] = eq.to_json();
    ojson strict;
    strict["strict"] = probe.strict;
    if (!probe.strict) {
      strict["plateau"] = ojson::array(
          {probe.plateau_lo.value(), probe.plateau_hi.value()});
    }
    j["strictness"] = strict;
    j["archimedean_diagonal"] = arch.to_json();
    j["representability"] = repv.to_json();
    emit_json(j);
  }
  return ok ? kExitPass : kExitAxiomFail;
}

void write_unary_csv(const std::string& path, const UnaryMonotone& f,
                     int samples) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << "x,value\n";
  Grid g = Grid::uniform(samples);
  for (int i = 0; i < g.n(); ++i) {
    double x = g[i];
    out << fmt_17g(x) << "," << fmt_17g(f(ExtReal(x)).value()) << "\n";
  }
}

void write_grid_csv(std::ostream& out, const BivariateOp& op, int n) {
  out << "x,y,value\n";
  Grid g = Grid::uniform(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out << fmt_17g(g[i]) << "," << fmt_17g(g[j]) << ","
          << fmt_17g(op(g[i], g[j])) << "\n";
    }
  }
}

int cmd_decompose(const Options& opt, const std::string& csv_dir,
                  int samples) {
  CatalogEntry entry = resolve(opt);
  std::optional<GeneratorPair> pair = pair_from_entry(entry);
  if (!pair) {
    throw MalformedInput("decompose needs a generator pair, not a plain "
                         "operator");
  }
  Grid grid = Grid::uniform(opt.grid_n);
  DecompositionResult dec = decompose_distortion(*pair, grid);
  if (!csv_dir.empty()) {
    write_unary_csv(csv_dir + "/F.csv", dec.F, samples);
    if (dec.phi) write_unary_csv(csv_dir + "/phi.csv", *dec.phi, samples);
    if (dec.H) write_unary_csv(csv_dir + "/H.csv", *dec.H, samples);
    std::ofstream out(csv_dir + "/inner.csv");
    if (!out) throw MalformedInput("cannot write '" + csv_dir + "/inner.csv'");
    write_grid_csv(out, dec.inner, samples);
  }
  if (opt.output == "human") {
    std::cout << "subject: " << pair->label << "\n";
    std::cout << "inner_class: " << to_string(dec.inner_class) << "\n";
    std::cout << "reconstruction_error: " << fmt_g(dec.reconstruction_error)
              << "\n";
    std::cout << "multiplicative_form: " << (dec.phi ? "yes" : "no") << "\n";
  } else {
    ojson j;
    j["config"] = config_json(opt, "decompose", pair->label);
    j["decomposition"] = dec.to_json();
    if (!csv_dir.empty()) j["csv_dir"] = csv_dir;
    emit_json(j);
  }
  return kExitPass;
}

int cmd_export_grid(const Options& opt, const std::string& out_path) {
  BivariateOp op = op_from_entry(resolve(opt));
  if (out_path.empty()) {
    write_grid_csv(std::cout, op, opt.grid_n);
  } else {
    std::ofstream out(out_path);
    if (!out) throw MalformedInput("cannot write '" + out_path + "'");
    write_grid_csv(out, op, opt.grid_n);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"overlap and grouping operator toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::optional<double> eval_x, eval_y;
  std::string points_path, as = "overlap", csv_dir, out_path;
  int samples = 101;

  auto* eval = app.add_subcommand("eval", "evaluate an operator at points");
  add_common(eval, opt);
  eval->add_option("--x", eval_x, "first argument");
  eval->add_option("--y", eval_y, "second argument");
  eval->add_option("--points", points_path, "file of 'x y' lines");

  auto* verify = app.add_subcommand("verify", "run an axiom suite");
  add_common(verify, opt);
  verify->add_option("--as", as, "overlap, grouping, tnorm or tconorm")
      ->check(CLI::IsMember({"overlap", "grouping", "tnorm", "tconorm"}));

  auto* classify = app.add_subcommand(
      "classify", "pair conditions, equivalence, strictness, representability");
  add_common(classify, opt);

  auto* decompose =
      app.add_subcommand("decompose", "split a pair into distortion and inner");
  add_common(decompose, opt);
  decompose->add_option("--csv-dir", csv_dir, "directory for F/phi/H/inner CSV");
  decompose->add_option("--samples", samples, "CSV sample count")
      ->check(CLI::Range(3, 100000));

  auto* export_grid =
      app.add_subcommand("export-grid", "write x,y,value CSV of an operator");
  add_common(export_grid, opt);
  export_grid->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (eval->parsed()) return cmd_eval(opt, eval_x, eval_y, points_path);
    if (verify->parsed()) return cmd_verify(opt, as);
    if (classify->parsed()) return cmd_classify(opt);
    if (decompose->parsed()) return cmd_decompose(opt, csv_dir, samples);
    if (export_grid->parsed()) return cmd_export_grid(opt, out_path);
  } catch (const UnknownCatalogEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownEntry;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const HypothesisUnmet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesisUnmet;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiomFail;
  }
  return kExitMalformed;
}
