#include "toric/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace toric::io {

namespace {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json ints_json(std::span<const Int> vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(int_json(v));
  return out;
}

const json& require_key(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
    throw InputError(where + " is out of range");
  }
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& doc, const char* key) {
  const json& v = require_key(doc, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(as_integer(v[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

int sign_of(const RationalField&, const Rat& c) { return sgn(c); }
int sign_of(const PrimeField& k, std::uint64_t c) { return k.signed_value(c) > 0 ? 1 : -1; }

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

FamilyParams parse_family(const json& doc) {
  if (!doc.is_object()) throw InputError("family parameters must be a JSON object");
  FamilyParams p;
  const std::int64_t n = as_integer(require_key(doc, "n"), "n");
  if (n < 0) throw InputError("n must be non-negative");
  p.n = static_cast<std::size_t>(n);
  p.d = int_list(doc, "d");
  p.f = int_list(doc, "f");
  p.g = int_list(doc, "g");
  p.h = int_list(doc, "h");
  return p;
}

IntMatrix parse_matrix(const json& doc) {
  const json& rows = require_key(doc, "matrix");
  if (!rows.is_array() || rows.empty()) throw InputError("\"matrix\" must be a non-empty array of rows");
  const std::size_t cols = rows.front().is_array() ? rows.front().size() : 0;
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) throw InputError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Int(static_cast<long>(as_integer(rows[r][c], "matrix entry")));
    }
  }
  return m;
}

Input parse_input(const json& doc) {
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  Input in;
  if (doc.contains("matrix")) {
    in.matrix = parse_matrix(doc);
  } else {
    in.family = parse_family(doc);
  }
  return in;
}

Input load_input(const std::filesystem::path& path) { return parse_input(read_json(path)); }

json to_json(const FamilyParams& params) {
  return {{"n", params.n}, {"d", params.d}, {"f", params.f}, {"g", params.g}, {"h", params.h}};
}

json to_json(const ValidationReport& report) {
  json out;
  out["valid"] = report.ok();
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"condition", v.condition}, {"indices", v.indices}, {"message", v.message}});
  }
  out["violations"] = violations;
  if (report.witness) {
    out["witness"] = {{"p", int_json(report.witness->p)},
                      {"q", int_json(report.witness->q)},
                      {"i", report.witness->i},
                      {"j", report.witness->j}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const BinomialVector& v) { return {{"alpha", ints_json(v.alpha)}, {"beta", ints_json(v.beta)}}; }

json to_json(const SaturationCertificate& cert) {
  return {{"order", cert.order},
          {"lattice_generators", cert.lattice_generators},
          {"final_basis_size", cert.final_basis_size},
          {"all_binomial", cert.all_binomial}};
}

json to_json(const LatticeBasis& basis) {
  json out = json::array();
  for (const auto& v : basis.vectors) out.push_back(ints_json(v));
  return out;
}

json to_json(const RadicalReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"generator", e.generator}, {"in_radical", e.in_radical}, {"budget_exceeded", e.budget_exceeded}});
  }
  return {{"check", "radical"},
          {"field", report.field},
          {"equations", report.equations},
          {"entries", entries},
          {"all_true", report.all_true()},
          {"seconds", report.seconds}};
}

json to_json(const PointSetReport& report) {
  json out = {{"check", "points"},
              {"q", report.q},
              {"mode", report.exhaustive ? "exhaustive" : "sample"},
              {"equations", report.equations},
              {"points_examined", report.points_examined},
              {"count_equations", report.count_equations},
              {"count_ideal", report.count_ideal},
              {"mismatch_count", report.mismatch_count},
              {"mismatches", report.mismatches},
              {"passed", report.passed()}};
  out["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  return out;
}

json to_json(const AuditSummary& s) {
  return {{"check", "lift"},
          {"q", s.q},
          {"points_scanned", s.points_scanned},
          {"solutions", s.solutions},
          {"lifted", s.lifted},
          {"needs_extension", s.needs_extension},
          {"needs_extension_verified", s.needs_extension_verified},
          {"failures", s.failures},
          {"parameter_points", s.parameter_points},
          {"forward_failures", s.forward_failures},
          {"details", s.details},
          {"passed", s.passed()},
          {"summary", s.summary_line()}};
}

json to_json(const ReductionComparison& comparison) {
  return {{"prime", comparison.prime},
          {"matches", comparison.matches},
          {"only_rational", comparison.only_rational},
          {"only_prime", comparison.only_prime}};
}

json to_json(const LiftOutcome& outcome) {
  json out = {{"status", to_string(outcome.status)}};
  if (outcome.status == LiftStatus::lifted) {
    json u = json::array();
    for (const auto& x : outcome.u) u.push_back(x.value());
    out["u"] = u;
  }
  if (outcome.coordinate) out["coordinate"] = *outcome.coordinate;
  if (outcome.root_degree) out["root_degree"] = *outcome.root_degree;
  if (!outcome.missing.empty()) out["missing"] = outcome.missing;
  return out;
}

template <class K>
json equations_json(const FamilyParams& params, const EquationSet<K>& eqs) {
  const auto names = eqs.names();
  const auto polys = eqs.all();
  const auto vectors = equation_vectors(params);
  json out = json::array();
  for (std::size_t k = 0; k < polys.size(); ++k) {
    json e = to_json(vectors[k]);
    e["name"] = names[k];
    e["polynomial"] = display(polys[k]);
    out.push_back(e);
  }
  return out;
}

template <class K>
json ideal_json(const ToricIdealResult<K>& result) {
  json gens = json::array();
  for (const auto& g : result.minimal_generators) gens.push_back(display(g));
  json basis = json::array();
  for (const auto& g : result.ideal.generators()) basis.push_back(g.to_string());
  return {{"field", result.ideal.ring_ptr()->field().name()},
          {"generators", gens},
          {"groebner_basis", basis},
          {"lattice_basis", to_json(result.lattice_basis)},
          {"certificate", to_json(result.certificate)}};
}

template <class K>
std::string display(const Polynomial<K>& p) {
  if (!p.is_binomial()) return p.to_string();
  const auto& k = p.field();
  const auto& t = p.terms();
  const bool first_positive = sign_of(k, t[0].coeff) > 0;
  const bool second_positive = sign_of(k, t[1].coeff) > 0;
  if (first_positive == second_positive) return p.to_string();
  const auto& pos = first_positive ? t[0] : t[1];
  const auto& neg = first_positive ? t[1] : t[0];
  return Polynomial<K>::term(p.ring_ptr(), pos.coeff, pos.monomial).to_string() + " - " +
         Polynomial<K>::term(p.ring_ptr(), k.neg(neg.coeff), neg.monomial).to_string();
}

template <class K>
std::vector<std::string> golden_lines(std::span<const Polynomial<K>> polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(display(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
}

GoldenDiff diff_lines(const std::vector<std::string>& golden, const std::vector<std::string>& actual) {
  auto a = golden;
  auto b = actual;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  GoldenDiff d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.missing));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.unexpected));
  return d;
}

#define TORIC_INSTANTIATE(K)                                                            \
  template json equations_json<K>(const FamilyParams&, const EquationSet<K>&);          \
  template json ideal_json<K>(const ToricIdealResult<K>&);                              \
  template std::string display<K>(const Polynomial<K>&);                               \
  template std::vector<std::string> golden_lines<K>(std::span<const Polynomial<K>>);

TORIC_INSTANTIATE(RationalField)
TORIC_INSTANTIATE(PrimeField)

#undef TORIC_INSTANTIATE

}  // namespace toric::io
