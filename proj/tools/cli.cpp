#include "cli.hpp"

#include "toric/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <type_traits>
#include <variant>

namespace toricset::cli {

namespace {

using namespace toric;
using json = io::json;
using AnyField = std::variant<RationalField, PrimeField>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AnyField parse_field(const std::string& spec) {
  if (spec == "Q" || spec == "QQ") return RationalField{};
  std::string digits = spec;
  if (!digits.empty() && (digits.front() == 'F' || digits.front() == 'f')) digits.erase(0, 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
    throw UsageError("invalid field '" + spec + "': expected Q, F<p> or <p>");
  }
  const std::uint64_t p = std::stoull(digits);
  try {
    return PrimeField(p);
  } catch (const std::exception& e) {
    throw UsageError("invalid field '" + spec + "': " + e.what());
  }
}

std::uint64_t budget_from_env(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
    throw UsageError(std::string(name) + " must be a positive integer");
  }
  const std::uint64_t v = std::stoull(text);
  if (v == 0) throw UsageError(std::string(name) + " must be positive");
  return v;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  const RunConfig& cfg;
  std::ostringstream buffer;

  std::ostream& stream() { return buffer; }
  void flush() {
    if (cfg.output.empty()) {
      out << buffer.str();
      return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw io::InputError("cannot write " + cfg.output);
    file << buffer.str();
  }
};

FamilyParams load_family(const RunConfig& cfg) {
  auto input = io::load_input(cfg.input);
  if (!input.family) throw io::InputError("expected family parameters {n, d, f, g, h}");
  return *input.family;
}

// Compares against or rewrites the golden file; returns the exit code.
int golden_step(const RunConfig& cfg, const std::vector<std::string>& lines, std::ostream& err) {
  if (cfg.golden.empty()) return kOk;
  if (cfg.bless) {
    io::write_lines(cfg.golden, lines);
    err << "blessed " << cfg.golden << " (" << lines.size() << " lines)\n";
    return kOk;
  }
  auto diff = io::diff_lines(io::read_lines(cfg.golden), lines);
  if (diff.empty()) {
    err << "golden " << cfg.golden << ": match\n";
    return kOk;
  }
  err << "golden " << cfg.golden << ": MISMATCH\n";
  for (const auto& l : diff.missing) err << "  - " << l << "\n";
  for (const auto& l : diff.unexpected) err << "  + " << l << "\n";
  return kFailure;
}

int report_invalid(const ValidationReport& report, Output& o) {
  if (o.cfg.json) {
    o.stream() << io::to_json(report).dump(2) << "\n";
  } else {
    for (const auto& v : report.violations) o.stream() << v.message << "\n";
  }
  o.flush();
  return kFailure;
}

int cmd_validate(const RunConfig& cfg, Output& o) {
  const auto params = load_family(cfg);
  const auto report = validate(params);
  if (!report.ok()) return report_invalid(report, o);
  if (cfg.json) {
    o.stream() << io::to_json(report).dump(2) << "\n";
  } else {
    const auto& w = *report.witness;
    o.stream() << "valid family (n = " << params.n << ")\n"
               << "two-prime witness: " << w.p << " | d" << w.i << ", " << w.q << " | d" << w.j << "\n";
  }
  o.flush();
  return kOk;
}

int cmd_equations(const RunConfig& cfg, Output& o) {
  const auto params = load_family(cfg);
  const auto report = validate(params);
  if (!report.ok()) return report_invalid(report, o);
  if (cfg.fields.size() > 1) throw UsageError("equations takes a single --field");
  const AnyField field = parse_field(cfg.fields.empty() ? "Q" : cfg.fields.front());
  std::vector<std::string> lines;
  std::visit(
      [&](const auto& k) {
        auto eqs = equations(family_ring(params.n, k), params);
        const auto all = eqs.all();
        lines = io::golden_lines<std::decay_t<decltype(k)>>(all);
        if (cfg.json) {
          json doc = {{"field", k.name()}, {"params", io::to_json(params)}, {"equations", io::equations_json(params, eqs)}};
          o.stream() << doc.dump(2) << "\n";
        } else {
          const auto names = eqs.names();
          for (std::size_t i = 0; i < all.size(); ++i) o.stream() << names[i] << ": " << io::display(all[i]) << "\n";
        }
      },
      field);
  o.flush();
  return golden_step(cfg, lines, o.err);
}

int cmd_ideal(const RunConfig& cfg, Output& o) {
  auto input = io::load_input(cfg.input);
  if (cfg.fields.size() > 1) throw UsageError("ideal takes a single --field");
  const AnyField field = parse_field(cfg.fields.empty() ? "Q" : cfg.fields.front());
  GroebnerOptions options;
  options.pair_budget = cfg.pair_budget;

  IntMatrix matrix;
  std::size_t nvars = 0;
  if (input.family) {
    const auto report = validate(*input.family);
    if (!report.ok()) return report_invalid(report, o);
    matrix = exponent_matrix(*input.family);
  } else {
    matrix = *input.matrix;
  }
  nvars = matrix.cols();

  std::vector<std::string> lines;
  int code = kOk;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        RingPtr<K> ring;
        if (input.family) {
          ring = family_ring(input.family->n, k);
        } else {
          std::vector<std::string> names;
          for (std::size_t i = 1; i <= nvars; ++i) names.push_back("z" + std::to_string(i));
          ring = make_ring(k, names);
        }
        const auto lattice = kernel_basis(matrix);
        o.err << "lattice basis: " << lattice.size() << " vector(s) in Z^" << nvars << "\n";
        try {
          auto result = toric_ideal(ring, matrix, options);
          lines = io::golden_lines<K>(result.minimal_generators);
          std::optional<ReductionComparison> reduction;
          if constexpr (std::is_same_v<K, PrimeField>) {
            const auto qring = make_ring(RationalField{}, ring->names());
            reduction = compare_reduction(toric_ideal(qring, matrix, options).ideal, result.ideal);
          }
          if (cfg.json) {
            auto doc = io::ideal_json(result);
            if (reduction) doc["reduction_check"] = io::to_json(*reduction);
            o.stream() << doc.dump(2) << "\n";
          } else {
            o.stream() << "field: " << k.name() << "\n"
                       << "minimal generators (" << result.minimal_generators.size() << "):\n";
            for (const auto& g : result.minimal_generators) o.stream() << "  " << io::display(g) << "\n";
            const auto& c = result.certificate;
            o.stream() << "certificate: " << c.lattice_generators << " lattice binomial(s) saturated by the product "
                       << "of all variables; reduced " << c.order << " basis of " << c.final_basis_size
                       << " element(s), " << (c.all_binomial ? "all binomial" : "NOT all binomial") << "\n";
            if (reduction) {
              o.stream() << "reduction check: the basis over Q reduced mod " << reduction->prime
                         << (reduction->matches ? " equals" : " DIFFERS FROM") << " the basis over " << k.name() << "\n";
              for (const auto& s : reduction->only_rational) o.stream() << "  only from Q: " << s << "\n";
              for (const auto& s : reduction->only_prime) o.stream() << "  only over " << k.name() << ": " << s << "\n";
            }
          }
        } catch (const BudgetExceeded& e) {
          o.err << "saturation aborted: " << e.what() << "\n";
          code = kBudgetExceeded;
        }
      },
      field);
  if (code != kOk) return code;
  o.flush();
  return golden_step(cfg, lines, o.err);
}

struct CheckResult {
  std::string line;  // stable text, suitable for golden files
  json doc;
  bool passed = false;
  bool budget = false;
};

int cmd_verify(const RunConfig& cfg, Output& o) {
  const auto params = load_family(cfg);
  const auto report = validate(params);
  if (!report.ok()) return report_invalid(report, o);
  for (const auto& d : cfg.drop) {
    const auto names = equation_names(params.n);
    if (std::find(names.begin(), names.end(), d) == names.end()) {
      throw UsageError("unknown equation '" + d + "'; expected one of " + join(names, ", "));
    }
  }

  std::vector<std::string> checks = cfg.checks;
  if (checks.empty()) {
    checks = {"radical", "points"};
    if (cfg.drop.empty()) checks.push_back("lift");
  }
  const bool wants_lift = std::find(checks.begin(), checks.end(), "lift") != checks.end();
  if (wants_lift && !cfg.drop.empty()) throw UsageError("the lift audit always uses the full equation set");

  GroebnerOptions gopts;
  gopts.pair_budget = cfg.pair_budget;
  const std::vector<std::string> fields = cfg.fields.empty() ? std::vector<std::string>{"Q", "2", "3", "5"} : cfg.fields;
  const std::vector<std::uint64_t> point_qs = cfg.qs.empty() ? std::vector<std::uint64_t>{2, 3, 5} : cfg.qs;
  const std::vector<std::uint64_t> lift_qs = cfg.qs.empty() ? std::vector<std::uint64_t>{7} : cfg.qs;
  for (auto q : cfg.qs) {
    if (!is_prime(q)) throw UsageError("--q " + std::to_string(q) + " is not prime");
  }
  std::vector<AnyField> parsed_fields;
  for (const auto& f : fields) parsed_fields.push_back(parse_field(f));

  std::vector<CheckResult> results;
  const std::string eq_label = join(cfg.drop.empty() ? equation_names(params.n) : [&] {
    std::vector<std::string> kept;
    for (auto& n : equation_names(params.n)) {
      if (std::find(cfg.drop.begin(), cfg.drop.end(), n) == cfg.drop.end()) kept.push_back(n);
    }
    return kept;
  }(), ",");

  for (const auto& check : checks) {
    if (check == "radical") {
      for (const auto& field : parsed_fields) {
        auto rr = std::visit([&](const auto& k) { return radical_certificates(params, k, cfg.drop, gopts); }, field);
        std::size_t yes = 0;
        for (const auto& e : rr.entries) yes += e.in_radical;
        CheckResult r;
        r.passed = rr.all_true();
        r.budget = rr.any_budget_exceeded();
        r.line = std::string(r.passed ? "PASS" : "FAIL") + " radical field=" + rr.field + " equations=" + eq_label +
                 " in_radical=" + std::to_string(yes) + "/" + std::to_string(rr.entries.size());
        r.doc = io::to_json(rr);
        results.push_back(std::move(r));
      }
    } else if (check == "points") {
      for (auto q : point_qs) {
        PointSetOptions popts;
        popts.exhaustive = !cfg.samples.has_value();
        if (cfg.samples) popts.samples = *cfg.samples;
        popts.seed = cfg.seed;
        popts.budget = cfg.point_budget;
        popts.threads = cfg.threads;
        popts.drop = cfg.drop;
        CheckResult r;
        try {
          auto pr = point_set_equality(params, q, popts);
          r.passed = pr.passed();
          std::ostringstream line;
          line << (r.passed ? "PASS" : "FAIL") << " points q=" << q << " mode="
               << (pr.exhaustive ? "exhaustive" : "sample") << (pr.seed ? " seed=" + std::to_string(*pr.seed) : "")
               << " equations=" << eq_label << " examined=" << pr.points_examined
               << " count_equations=" << pr.count_equations << " count_ideal=" << pr.count_ideal
               << " mismatches=" << pr.mismatch_count;
          r.line = line.str();
          r.doc = io::to_json(pr);
        } catch (const PointBudgetExceeded& e) {
          r.budget = true;
          r.line = "BUDGET points q=" + std::to_string(q) + ": " + e.what();
          r.doc = {{"check", "points"}, {"q", q}, {"budget_exceeded", true}, {"message", e.what()}};
        }
        results.push_back(std::move(r));
      }
    } else if (check == "lift") {
      for (auto q : lift_qs) {
        AuditOptions aopts;
        aopts.budget = cfg.point_budget;
        aopts.threads = cfg.threads;
        CheckResult r;
        try {
          auto summary = exhaustive_lift_audit(params, q, aopts);
          r.passed = summary.passed();
          r.line = summary.summary_line();
          r.doc = io::to_json(summary);
        } catch (const PointBudgetExceeded& e) {
          r.budget = true;
          r.line = "BUDGET lift-audit q=" + std::to_string(q) + ": " + e.what();
          r.doc = {{"check", "lift"}, {"q", q}, {"budget_exceeded", true}, {"message", e.what()}};
        }
        results.push_back(std::move(r));
      }
    } else {
      throw UsageError("unknown check '" + check + "'; expected radical, points or lift");
    }
  }

  bool failed = false, budget = false;
  std::vector<std::string> lines;
  json docs = json::array();
  for (const auto& r : results) {
    failed |= !r.passed && !r.budget;
    budget |= r.budget;
    lines.push_back(r.line);
    docs.push_back(r.doc);
  }
  const std::string verdict = failed ? "FAIL" : budget ? "BUDGET" : "PASS";
  std::string note;
  if (failed && !cfg.drop.empty()) note = "expected: without " + join(cfg.drop, ",") + " the equations do not cut out V";
  if (cfg.json) {
    json doc = {{"params", io::to_json(params)}, {"checks", docs}, {"verdict", verdict}};
    if (!note.empty()) doc["note"] = note;
    o.stream() << doc.dump(2) << "\n";
  } else {
    for (const auto& l : lines) o.stream() << l << "\n";
    o.stream() << "verify: " << verdict << (note.empty() ? "" : " (" + note + ")") << "\n";
  }
  o.flush();
  if (failed) return kFailure;
  if (budget) return kBudgetExceeded;
  return golden_step(cfg, lines, o.err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toricset: equations, toric ideals and set-theoretic checks for a family of toric varieties"};
  app.name("toricset");
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = kDefaultSeed;
  std::uint64_t sample_count = 0;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub, const char* input_help = "JSON file: {n, d, f, g, h}") {
    sub->add_option("input", cfg.input, input_help)->required();
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_option("-o,--output", cfg.output, "Write the report to a file instead of stdout");
  };
  auto add_golden = [&](CLI::App* sub) {
    auto* golden = sub->add_option("--golden", cfg.golden, "Compare output lines against a golden file");
    sub->add_flag("--bless", cfg.bless, "Rewrite the golden file instead of comparing")->needs(golden);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the family conditions");
  add_common(validate_cmd);

  auto* equations_cmd = app.add_subcommand("equations", "Print F1..F{n-1}, F, G");
  add_common(equations_cmd);
  equations_cmd->add_option("--field", cfg.fields, "Q, F<p> or <p> (default Q)");
  add_golden(equations_cmd);

  auto* ideal_cmd = app.add_subcommand("ideal", "Compute the toric ideal I(V)");
  add_common(ideal_cmd, "JSON file: {n, d, f, g, h} or {matrix: [[...], ...]}");
  ideal_cmd->add_option("--field", cfg.fields, "Q, F<p> or <p> (default Q)");
  add_golden(ideal_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Radical certificates, point-set comparison, lift audit");
  add_common(verify_cmd);
  verify_cmd->add_option("--field", cfg.fields, "Fields for radical certificates (default Q 2 3 5)");
  verify_cmd->add_option("--q", cfg.qs, "Primes for point checks (default 2 3 5) and lift audits (default 7)");
  verify_cmd->add_option("--check", cfg.checks, "radical, points, lift (default: all)");
  auto* exhaustive = verify_cmd->add_flag("--exhaustive", cfg.exhaustive, "Enumerate all of F_q^{2n} (default)");
  auto* sample = verify_cmd->add_option("--sample", sample_count, "Check N uniformly sampled points instead");
  exhaustive->excludes(sample);
  verify_cmd->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--drop-equation", cfg.drop, "Leave an equation (F1.., F, G) out");
  verify_cmd->add_option("--threads", threads, "Enumeration workers (0: hardware concurrency)");
  add_golden(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is reported as a success through the same path.
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (sample->count() > 0) {
    if (sample_count == 0) {
      err << "error: --sample must be positive\n";
      return kInputError;
    }
    cfg.samples = sample_count;
  }
  cfg.threads = threads;

  Output o{out, err, cfg, {}};
  try {
    cfg.point_budget = budget_from_env(kPointBudgetEnv, kDefaultPointBudget);
    cfg.pair_budget = budget_from_env(kPairBudgetEnv, GroebnerOptions{}.pair_budget);
    if (cfg.command == "validate") return cmd_validate(cfg, o);
    if (cfg.command == "equations") return cmd_equations(cfg, o);
    if (cfg.command == "ideal") return cmd_ideal(cfg, o);
    return cmd_verify(cfg, o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidFamily& e) {
    for (const auto& v : e.report().violations) err << v.message << "\n";
    return kFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const PointBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace toricset::cli
