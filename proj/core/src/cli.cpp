#include "diffop/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "diffop/errors.hpp"
#include "diffop/identities.hpp"
#include "diffop/json_io.hpp"
#include "diffop/parser.hpp"
#include "diffop/resolution.hpp"

namespace diffop {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string f_expr;
  std::string f_file;
  std::string format = "text";
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--f", opts.f_expr, "polynomial f as an expression, e.g. \"x^3+y^3+z^3\"");
  cmd->add_option("--file", opts.f_file, "file containing the expression for f");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--verbose", opts.verbose, "include residuals in failure reports");
}

// Bad flags / missing input, as opposed to a failed mathematical check.
class UsageError : public Error {
 public:
  using Error::Error;
};

Polynomial load_f(const CommonOptions& opts) {
  std::string source = opts.f_expr;
  if (source.empty() && !opts.f_file.empty()) {
    std::ifstream in(opts.f_file);
    if (!in) throw UsageError("cannot open input file: " + opts.f_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    source = buffer.str();
  }
  if (source.empty()) throw UsageError("no input polynomial; use --f or --file");
  return parse_poly(source);
}

int thread_hint() {
  const char* env = std::getenv("DIFFOP_FORGE_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

void print_checks(const std::vector<CheckResult>& checks, const CommonOptions& opts,
                  std::ostream& out) {
  if (opts.format == "json") {
    out << to_json(checks, opts.verbose).dump(2) << "\n";
    return;
  }
  for (const auto& c : checks) {
    out << (c.passed ? "pass" : "FAIL") << "  [" << c.arena << "]"
        << (c.informational ? " (info)" : "") << "  " << c.id;
    if (c.q_holds_only_mod_f) out << "  (vanishes only mod f)";
    out << "\n";
    if (!c.passed && opts.verbose && !c.residual.empty())
      out << "      residual:\n" << c.residual;
  }
}

struct SuiteSelection {
  bool a = false, b = false, c = false, d = false, ef = false;
  bool mf = false, complexes = false, chainmaps = false, glossary = false;
};

SuiteSelection parse_suites(const std::string& csv) {
  SuiteSelection sel;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "all") {
      sel = {true, true, true, true, true, true, true, true, true};
    } else if (item == "A") {
      sel.a = true;
    } else if (item == "B") {
      sel.b = true;
    } else if (item == "C") {
      sel.c = true;
    } else if (item == "D") {
      sel.d = true;
    } else if (item == "EF") {
      sel.ef = true;
    } else if (item == "mf") {
      sel.mf = true;
    } else if (item == "complexes") {
      sel.complexes = true;
    } else if (item == "chainmaps") {
      sel.chainmaps = true;
    } else if (item == "glossary") {
      sel.glossary = true;
    } else {
      throw UsageError("unknown suite: " + item +
                       " (expected A,B,C,D,EF,mf,complexes,chainmaps,glossary,all)");
    }
  }
  return sel;
}

std::vector<CheckResult> run_mf_suite(const RingContext& ctx, const Glossary& g) {
  std::vector<CheckResult> out;
  const Polynomial df = ctx.f() * Rational(ctx.d());
  auto record = [&](const std::string& id, const PolyMatrix& a, const PolyMatrix& b) {
    auto report = verify_matrix_factorization(a, b, df);
    CheckResult r;
    r.id = id;
    r.arena = 'Q';
    r.passed = report.passed();
    if (!r.passed)
      r.residual = (report.ab_ok ? "" : report.ab_residual.to_text()) +
                   (report.ba_ok ? "" : report.ba_residual.to_text());
    out.push_back(r);
  };
  record("mf.M(1)", g.M2_1, g.M1_1);
  record("mf.M(2)", g.M2_2, g.M1_2);
  record("mf.M(3)", g.M2_3, g.M1_3);
  auto [l_even, l_odd] = fold_L(g);
  record("mf.fold(L)", l_even, l_odd);
  auto [g_even, g_odd] = fold_G(g);
  record("mf.fold(G)", g_even, g_odd);
  return out;
}

std::vector<CheckResult> run_complexes_suite(const RingContext& ctx, const Glossary& g) {
  std::vector<CheckResult> out;
  for (const char* name : {"G1", "G2", "G3", "C", "D1", "D2", "D3", "S2", "S3"}) {
    auto checks = complex_checks(build_target(name, ctx, g), ctx);
    out.insert(out.end(), checks.begin(), checks.end());
  }
  for (int order : {2, 3}) {
    auto checks = ses_surjectivity_checks(ctx, g, order);
    out.insert(out.end(), checks.begin(), checks.end());
  }
  return out;
}

struct VerifyPlan {
  SuiteSelection suites;
  RingContext ctx;
  // Unset when only the glossary-free suites (A, B) were selected, which
  // lets `verify --suite A` run on hypothesis-violating inputs.
  std::optional<Glossary> glossary;
};

bool needs_glossary(const SuiteSelection& s) {
  return s.c || s.d || s.ef || s.mf || s.complexes || s.chainmaps || s.glossary;
}

std::vector<CheckResult> run_suites(const VerifyPlan& plan) {
  std::vector<std::pair<std::string, std::function<std::vector<CheckResult>()>>> tasks;
  const RingContext& ctx = plan.ctx;
  if (plan.suites.a) tasks.emplace_back("A", [&] { return run_appendix_A(ctx); });
  if (plan.suites.b) tasks.emplace_back("B", [&] { return run_appendix_B(ctx); });
  if (plan.glossary) {
    const Glossary& g = *plan.glossary;
    if (plan.suites.c) tasks.emplace_back("C", [&] { return run_appendix_C(ctx, g); });
    if (plan.suites.d) tasks.emplace_back("D", [&] { return run_appendix_D(ctx, g); });
    if (plan.suites.ef) tasks.emplace_back("EF", [&] { return run_appendix_EF(ctx, g); });
    if (plan.suites.mf) tasks.emplace_back("mf", [&] { return run_mf_suite(ctx, g); });
    if (plan.suites.chainmaps)
      tasks.emplace_back("chainmaps", [&] { return chain_map_checks(ctx, g); });
    if (plan.suites.complexes)
      tasks.emplace_back("complexes", [&] { return run_complexes_suite(ctx, g); });
    if (plan.suites.glossary)
      tasks.emplace_back("glossary", [&] { return run_glossary_consistency(ctx, g); });
  }

  std::vector<CheckResult> all;
  int threads = thread_hint();
  if (threads <= 1) {
    for (auto& [name, fn] : tasks) {
      auto results = fn();
      all.insert(all.end(), results.begin(), results.end());
    }
  } else {
    // Suites are independent; results are appended in selection order, so
    // output ordering stays deterministic regardless of scheduling.
    std::vector<std::future<std::vector<CheckResult>>> futures;
    futures.reserve(tasks.size());
    for (auto& [name, fn] : tasks) futures.push_back(std::async(std::launch::async, fn));
    for (auto& fut : futures) {
      auto results = fut.get();
      all.insert(all.end(), results.begin(), results.end());
    }
  }
  return all;
}

int cmd_validate(const CommonOptions& opts, std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  GroebnerBasis basis = ctx.validate_isolated_singularity();
  if (opts.format == "json") {
    nlohmann::json j{{"f", render_poly(f)},
                     {"d", ctx.d()},
                     {"valid", true},
                     {"jacobian_groebner_basis", to_json(basis)}};
    out << j.dump(2) << "\n";
  } else {
    out << "f = " << render_poly(f) << "\n";
    out << "homogeneous of degree d = " << ctx.d() << "\n";
    out << "isolated singularity: yes\n";
    out << "reduced Groebner basis of the Jacobian ideal:\n";
    for (const auto& g : basis.generators) out << "  " << render_poly(g) << "\n";
  }
  return kExitOk;
}

int cmd_generators(const CommonOptions& opts, int order, std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  ctx.validate_isolated_singularity();
  Glossary glossary = build_glossary(ctx);
  GeneratorSets sets = build_generators(ctx, glossary);
  auto gens = sets.up_to(order);

  bool all_ok = true;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& gen : gens) {
    int gen_order = std::max(gen.op.order(), 1);
    bool stab = stabilizes_ideal(gen.op, ctx);
    bool member = true;
    for (const auto& r : membership_residual(gen.op, ctx, glossary, gen_order))
      if (!r.is_zero()) member = false;
    all_ok = all_ok && stab && member;
    if (opts.format == "json") {
      items.push_back(nlohmann::json{{"name", gen.name},
                                     {"internal_degree", gen.internal_degree},
                                     {"operator", to_json(gen.op)},
                                     {"bracket_criterion", stab},
                                     {"kernel_criterion", member}});
    } else {
      out << (stab && member ? "ok   " : "FAIL ") << gen.name
          << "  (degree " << gen.internal_degree << ")";
      if (opts.verbose) out << "  " << gen.op.to_text();
      out << "\n";
    }
  }
  if (opts.format == "json") {
    nlohmann::json j{{"f", render_poly(f)},
                     {"order", order},
                     {"count", gens.size()},
                     {"generators", items},
                     {"all_verified", all_ok}};
    out << j.dump(2) << "\n";
  } else {
    out << gens.size() << " generators of D^" << order << "; "
        << (all_ok ? "all verified" : "verification FAILED") << "\n";
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_resolution(const CommonOptions& opts, const std::string& target, std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  ctx.validate_isolated_singularity();
  Glossary glossary = build_glossary(ctx);
  PeriodicComplex cplx = build_target(target, ctx, glossary);
  auto checks = complex_checks(cplx, ctx);
  if (opts.format == "json") {
    nlohmann::json j = to_json(cplx);
    j["checks"] = to_json(checks, opts.verbose);
    j["all_passed"] = all_passed(checks);
    out << j.dump(2) << "\n";
  } else {
    out << "resolution " << cplx.name << "\n";
    if (!cplx.labels.empty()) {
      out << "generators:";
      for (const auto& l : cplx.labels) out << " " << l;
      out << "\n";
    }
    out << "augmentation " << cplx.aug_caption << ":\n" << cplx.augmentation.to_text();
    for (std::size_t i = 0; i < cplx.head.size(); ++i) {
      out << "d_" << (i + 1);
      if (i < cplx.head_captions.size()) out << " = " << cplx.head_captions[i];
      out << ":\n" << cplx.head[i].to_text();
    }
    out << "tail pair (repeats two-periodically):\n"
        << cplx.tail_a_caption << ":\n" << cplx.tail_a.to_text()
        << cplx.tail_b_caption << ":\n" << cplx.tail_b.to_text();
    print_checks(checks, opts, out);
  }
  return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

int cmd_betti(const CommonOptions& opts, const std::string& target, int upto,
              std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  ctx.validate_isolated_singularity();
  Glossary glossary = build_glossary(ctx);
  PeriodicComplex cplx = build_target(target, ctx, glossary);
  int max_index = 2 * upto;
  BettiTable computed = betti_table(cplx, max_index);
  BettiTable closed = closed_form_betti(target, ctx.d(), max_index);
  bool match = computed == closed;
  if (opts.format == "json") {
    nlohmann::json j{{"target", target},
                     {"d", ctx.d()},
                     {"max_homological_index", max_index},
                     {"computed", to_json(computed)},
                     {"closed_form", to_json(closed)},
                     {"match", match}};
    out << j.dump(2) << "\n";
  } else {
    out << "graded Betti numbers of " << target << " (through homological index "
        << max_index << ")\ncomputed from the resolution frames:\n"
        << to_text(computed) << "closed form at d = " << ctx.d() << ":\n"
        << to_text(closed) << (match ? "tables match\n" : "TABLES DIFFER\n");
  }
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const CommonOptions& opts, const std::string& suites,
               const std::string& mutate, std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  bool hypothesis_ok = true;
  std::string hypothesis_note;
  try {
    ctx.validate_isolated_singularity();
  } catch (const NotIsolatedError& e) {
    hypothesis_ok = false;
    hypothesis_note = e.what();
  }

  VerifyPlan plan{parse_suites(suites), std::move(ctx), std::nullopt};
  if (needs_glossary(plan.suites)) plan.glossary = build_glossary(plan.ctx);
  if (!mutate.empty()) {
    if (!plan.glossary) throw Error("--mutate needs a glossary-backed suite");
    // name:i:j, used by the mutation smoke test: adds +x to one entry.
    auto first = mutate.find(':');
    auto second = mutate.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw Error("--mutate expects name:i:j");
    plan.glossary->mutate(mutate.substr(0, first),
                          std::stoul(mutate.substr(first + 1, second - first - 1)),
                          std::stoul(mutate.substr(second + 1)),
                          Polynomial::variable(Var::X));
  }

  std::vector<CheckResult> checks = run_suites(plan);
  bool ok = all_passed(checks);
  if (opts.format == "json") {
    nlohmann::json j{{"f", render_poly(f)},
                     {"suites", suites},
                     {"isolated_singularity", hypothesis_ok},
                     {"checks", to_json(checks, opts.verbose)},
                     {"all_passed", ok}};
    if (!hypothesis_ok) j["hypothesis_warning"] = hypothesis_note;
    out << j.dump(2) << "\n";
  } else {
    if (!hypothesis_ok)
      out << "warning: hypothesis violated, results not covered by the theorems: "
          << hypothesis_note << "\n";
    print_checks(checks, opts, out);
    std::size_t normative = 0, passed = 0;
    for (const auto& c : checks) {
      if (c.informational) continue;
      ++normative;
      if (c.passed) ++passed;
    }
    out << passed << "/" << normative << " checks passed\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_export(const CommonOptions& opts, std::vector<std::string> names, std::ostream& out) {
  Polynomial f = load_f(opts);
  RingContext ctx = RingContext::build(f);
  Glossary glossary = build_glossary(ctx);
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = Glossary::names();
  if (opts.format == "json") {
    nlohmann::json j;
    for (const auto& name : names) j[name] = to_json(glossary.by_name(name));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& name : names)
      out << name << ":\n" << glossary.by_name(name).to_text() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"diffop-forge: differential operators on isolated hypersurface "
               "singularities in three variables"};
  app.require_subcommand(1);

  CommonOptions opts;
  int order = 2;
  int upto = 3;
  std::string target = "D2";
  std::string suites = "all";
  std::string mutate;
  std::vector<std::string> export_names;

  auto* validate = app.add_subcommand("validate", "check homogeneity, degree, and the "
                                                  "isolated-singularity hypothesis");
  add_common(validate, opts);

  auto* generators = app.add_subcommand(
      "generators", "emit the minimal generators of D^order with verification status");
  add_common(generators, opts);
  generators->add_option("--order", order, "operator order (1, 2, or 3)")
      ->check(CLI::IsMember({1, 2, 3}));

  auto* resolution = app.add_subcommand("resolution",
                                        "emit an augmented minimal free resolution");
  add_common(resolution, opts);
  resolution->add_option("--target", target, "D1|D2|D3|S2|S3 (also G1|G2|G3|C)")
      ->check(CLI::IsMember({"D1", "D2", "D3", "S2", "S3", "G1", "G2", "G3", "C"}));

  auto* betti = app.add_subcommand("betti", "graded Betti table vs the closed form");
  add_common(betti, opts);
  betti->add_option("--target", target, "D1|D2|D3|S2|S3")
      ->check(CLI::IsMember({"D1", "D2", "D3", "S2", "S3"}));
  betti->add_option("--upto", upto, "expand the periodic tail to homological index 2n")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run identity / factorization / complex / "
                                              "chain-map suites");
  add_common(verify, opts);
  verify->add_option("--suite", suites, "comma-separated subset of "
                                        "A,B,C,D,EF,mf,complexes,chainmaps,glossary,all");
  verify->add_option("--mutate", mutate,
                     "perturb one glossary entry by +x before verifying (name:i:j); "
                     "self-test aid");

  auto* export_cmd = app.add_subcommand("export", "print named glossary matrices");
  add_common(export_cmd, opts);
  export_cmd->add_option("names", export_names, "matrix names (default: all)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, out);
    if (generators->parsed()) return cmd_generators(opts, order, out);
    if (resolution->parsed()) return cmd_resolution(opts, target, out);
    if (betti->parsed()) return cmd_betti(opts, target, upto, out);
    if (verify->parsed()) return cmd_verify(opts, suites, mutate, out);
    if (export_cmd->parsed()) return cmd_export(opts, export_names, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotHomogeneousError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DegreeTooSmallError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotIsolatedError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DegenerateFormError& e) {
    err << "input error (hypothesis violated): " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotDivisibleModFError& e) {
    err << "input error (hypothesis violated): " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  err << "no subcommand\n";
  return kExitInputError;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace diffop
