// preop: batch front door for the pre-operad calculus engine.
//
// Subcommands:
//   verify        pre-operad axiom checks and the full identity suite
//   cohomology    dimensions and representatives of H^0..H^N with oracles
//   gerstenhaber  certify the Gerstenhaber axioms (G1)-(G6) on H(C)
//
// Exit codes: 0 success, 1 identity/verdict failure, 2 config or load error,
// 3 formal-associativity (mu^2 = 0) precondition failure.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "preop/checks.hpp"
#include "preop/cohomology.hpp"
#include "preop/endo.hpp"
#include "preop/io.hpp"

namespace {

struct Options {
  std::string algebra_path;
  int max_degree = 3;
  int samples = 100;
  std::uint64_t seed = 42;
  std::size_t memory_cap = preop::kDefaultMemoryCap;
  std::string out = "-";
  std::string field_override;
  std::string suite = "all";  // verify only: axioms | identities | all
  int probe_seeds = 50;       // gerstenhaber only
};

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

preop::json config_block(const Options& opt, const std::string& algebra_name,
                         const std::string& field_desc) {
  return preop::json{{"algebra_file", opt.algebra_path},
                     {"algebra", algebra_name},
                     {"field", field_desc},
                     {"max_degree", opt.max_degree},
                     {"samples", opt.samples},
                     {"seed", opt.seed},
                     {"memory_cap", opt.memory_cap},
                     {"suite", opt.suite}};
}

void emit(const Options& opt, const preop::json& report) {
  if (opt.out == "-") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(opt.out);
    if (!out) throw preop::config_error("cannot open output file '" + opt.out + "'");
    out << report.dump(2) << "\n";
  }
}

/// Refuse configurations whose base tensors cannot fit, with sizing guidance.
void check_sizing(const Options& opt, std::size_t dim) {
  std::size_t need = 1;
  for (int k = 0; k < opt.max_degree + 2; ++k) {
    need *= dim;
    if (need > opt.memory_cap) break;
  }
  if (need > opt.memory_cap)
    throw preop::resource_error(
        "memory cap " + std::to_string(opt.memory_cap) + " cannot hold the degree-" +
        std::to_string(opt.max_degree + 1) + " tensors (d^(N+2) = " + std::to_string(need) +
        " entries); lower --max-degree or raise --memory-cap");
}

template <preop::exact_field F>
int run_verify(const Options& opt, preop::AlgebraSpec<F> spec) {
  using namespace preop;
  check_sizing(opt, spec.dim());
  EndoPreOperad<F> ops(std::move(spec), opt.memory_cap);
  PreOperadHandle<EndoPreOperad<F>> calc(ops, ops.mu());
  SuiteOptions so{opt.max_degree, opt.samples, opt.seed};

  std::vector<CheckRecord> records;
  if (opt.suite == "all" || opt.suite == "axioms") {
    auto ax = run_axiom_checks(calc, so);
    records.insert(records.end(), ax.begin(), ax.end());
  }
  if (opt.suite == "all" || opt.suite == "identities") {
    auto ids = run_identity_checks(calc, so);
    records.insert(records.end(), ids.begin(), ids.end());
  }
  if (records.empty()) throw config_error("unknown suite '" + opt.suite + "'");

  int passed = 0, failed = 0, na = 0;
  json checks = json::array();
  for (const auto& r : records) {
    checks.push_back(to_json(r));
    (r.status == CheckStatus::pass ? passed : r.status == CheckStatus::fail ? failed : na)++;
  }

  json report{{"meta", json{{"tool", "preop"}, {"command", "verify"}, {"timestamp", timestamp_utc()}}},
              {"config", config_block(opt, ops.algebra().name(), ops.algebra().field().describe())},
              {"mu_squared_zero", calc.formal_associator().is_zero()},
              {"checks", std::move(checks)},
              {"summary", json{{"total", records.size()},
                               {"passed", passed},
                               {"failed", failed},
                               {"not_applicable", na}}}};
  emit(opt, report);
  return failed == 0 ? 0 : 1;
}

template <preop::exact_field F>
int run_cohomology(const Options& opt, preop::AlgebraSpec<F> spec) {
  using namespace preop;
  check_sizing(opt, spec.dim());
  DeltaTower<F> tower(EndoPreOperad<F>(std::move(spec), opt.memory_cap));
  CohomologyReport<F> rep = compute_cohomology(tower, opt.max_degree);
  json report = to_json(rep);
  report["meta"] =
      json{{"tool", "preop"}, {"command", "cohomology"}, {"timestamp", timestamp_utc()}};
  report["config"] = config_block(opt, rep.algebra_name, rep.field_desc);
  emit(opt, report);
  return rep.oracles.consistent() ? 0 : 1;
}

template <preop::exact_field F>
int run_gerstenhaber(const Options& opt, preop::AlgebraSpec<F> spec) {
  using namespace preop;
  check_sizing(opt, spec.dim());
  DeltaTower<F> tower(EndoPreOperad<F>(std::move(spec), opt.memory_cap));
  GerstenhaberReport<F> rep = gerstenhaber_suite(tower, opt.max_degree, opt.probe_seeds, opt.seed);
  json report = to_json(rep);
  report["meta"] =
      json{{"tool", "preop"}, {"command", "gerstenhaber"}, {"timestamp", timestamp_utc()}};
  report["config"] = config_block(opt, rep.cohomology.algebra_name, rep.cohomology.field_desc);
  report["config"]["probe_seeds"] = opt.probe_seeds;
  emit(opt, report);
  return rep.all_pass() && rep.cohomology.oracles.consistent() ? 0 : 1;
}

template <class Fn>
int with_algebra(const Options& opt, Fn&& fn) {
  std::ifstream in(opt.algebra_path);
  if (!in) throw preop::load_error("cannot open algebra file '" + opt.algebra_path + "'");
  preop::json doc;
  try {
    doc = preop::json::parse(in);
  } catch (const preop::json::exception& e) {
    throw preop::load_error(std::string("malformed JSON: ") + e.what());
  }
  preop::FieldChoice fc;
  if (!opt.field_override.empty())
    fc = preop::parse_field_override(opt.field_override);
  else if (doc.contains("field"))
    fc = preop::parse_field_choice(doc.at("field"));
  if (fc.rational)
    return fn(preop::algebra_from_json<preop::Rational>(doc, preop::Rational::Config{}));
  return fn(preop::algebra_from_json<preop::Fp>(doc, preop::Fp::Config(fc.p)));
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--algebra", opt.algebra_path, "algebra-spec JSON file")->required();
  cmd->add_option("--max-degree", opt.max_degree, "top cochain degree N")->check(CLI::NonNegativeNumber);
  cmd->add_option("--samples", opt.samples, "random tuples per check")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "base seed for all randomized checks");
  cmd->add_option("--memory-cap", opt.memory_cap, "max tensor/matrix entries per object");
  cmd->add_option("--out", opt.out, "report path ('-' for stdout)");
  cmd->add_option("--field", opt.field_override, "override field: rational | prime:<p>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pre-operad calculus, cohomology and Gerstenhaber certification"};
  app.require_subcommand(1);

  Options vopt, copt, gopt;
  CLI::App* verify = app.add_subcommand("verify", "run axiom and identity suites");
  add_common(verify, vopt);
  verify->add_option("--suite", vopt.suite, "axioms | identities | all");

  CLI::App* cohomology = app.add_subcommand("cohomology", "compute H^0..H^N with oracle checks");
  add_common(cohomology, copt);

  CLI::App* gerstenhaber =
      app.add_subcommand("gerstenhaber", "certify (G1)-(G6) on cohomology classes");
  add_common(gerstenhaber, gopt);
  gerstenhaber->add_option("--probe-seeds", gopt.probe_seeds,
                           "seeds for the well-definedness probe");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return with_algebra(vopt, [&](auto spec) { return run_verify(vopt, std::move(spec)); });
    if (cohomology->parsed())
      return with_algebra(copt, [&](auto spec) { return run_cohomology(copt, std::move(spec)); });
    return with_algebra(gopt, [&](auto spec) { return run_gerstenhaber(gopt, std::move(spec)); });
  } catch (const preop::associativity_error& e) {
    std::cerr << "error: cohomology requires formal associativity; " << e.what() << "\n";
    return 3;
  } catch (const preop::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
