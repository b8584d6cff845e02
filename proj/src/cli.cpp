#include "ikdeg/cli.hpp"

#include "ikdeg/census.hpp"
#include "ikdeg/error.hpp"
#include "ikdeg/galois.hpp"
#include "ikdeg/padic.hpp"
#include "ikdeg/parallel.hpp"
#include "ikdeg/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ikdeg {

namespace {

struct Flags {
  std::int64_t p = 0, p_max = 0;
  int k = 1;
  int n = 0, n_max = 0;
  std::string b;
  std::int64_t budget = kDefaultBudget;
  int precision = 0;
  int threads = 0;
  std::string format;
  std::string out;
  std::string path = "formula";

  CLI::Option* p_opt = nullptr;
  CLI::Option* p_max_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* n_max_opt = nullptr;
  CLI::Option* b_opt = nullptr;

  bool has_p() const { return p_opt && (p_opt->count() > 0 || p_max_opt->count() > 0); }
  bool has_n() const { return n_opt && (n_opt->count() > 0 || n_max_opt->count() > 0); }
};

void add_range_flags(CLI::App* cmd, Flags& f) {
  f.p_opt = cmd->add_option("--p", f.p, "Prime (or lower end of the range with --p-max)");
  f.p_max_opt = cmd->add_option("--p-max", f.p_max, "Largest prime of the sweep");
  f.k_opt = cmd->add_option("--k", f.k, "Extension degree, q = p^k");
  f.n_opt = cmd->add_option("--n", f.n, "Dimension n (or lower end with --n-max)");
  f.n_max_opt = cmd->add_option("--n-max", f.n_max, "Largest n of the sweep");
  cmd->add_option("--threads", f.threads, "Worker threads (default: IKDEG_THREADS or hardware)");
}

std::vector<std::int64_t> resolve_primes(const Flags& f) {
  if (f.p_max_opt->count() > 0) {
    const std::int64_t lo = f.p_opt->count() > 0 ? f.p : 2;
    auto primes = primes_in_range(lo, f.p_max);
    if (primes.empty()) throw Error(Errc::InvalidParameters, "no primes in the requested range");
    return primes;
  }
  if (!is_prime(f.p)) throw Error(Errc::InvalidParameters, std::to_string(f.p) + " is not prime");
  return {f.p};
}

std::vector<int> resolve_ns(const Flags& f) {
  std::vector<int> out;
  if (f.n_max_opt->count() > 0) {
    const int lo = f.n_opt->count() > 0 ? f.n : 1;
    for (int n = lo; n <= f.n_max; ++n) out.push_back(n);
  } else {
    out.push_back(f.n);
  }
  if (out.empty()) throw Error(Errc::InvalidParameters, "empty n range");
  for (int n : out)
    if (n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  return out;
}

void report(std::ostream& out, const SuiteOutcome& s) {
  out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks";
  if (!s.failures.empty()) out << ", " << s.failures.size() << " failures";
  out << ")\n";
  for (const auto& msg : s.failures) out << "  " << msg << '\n';
}

int cmd_verify(const std::string& suite, const Flags& f, std::ostream& out) {
  const int threads = resolve_threads(f.threads);
  if (f.k < 1) throw Error(Errc::InvalidParameters, "k must be >= 1");

  VerifyGrid identity_grid = default_identity_grid();
  VerifyGrid degree_grid = default_degree_grid();
  std::vector<FieldSpec> ext_fields = default_extension_fields();
  std::vector<int> ext_ns = default_extension_ns();
  std::vector<std::int64_t> stick_primes = default_stickelberger_primes();
  const bool custom = f.has_p() || f.has_n() || f.k_opt->count() > 0;
  if (custom) {
    const auto primes = f.has_p() ? resolve_primes(f) : degree_grid.primes;
    const auto ns = f.has_n() ? resolve_ns(f) : degree_grid.ns;
    if (f.has_p()) {
      identity_grid.primes = primes;
      stick_primes = primes;
    }
    if (f.has_n()) identity_grid.ns = ns;
    if (f.k > 1) {
      ext_fields.clear();
      for (auto p : primes) ext_fields.push_back({p, f.k});
      ext_ns = f.has_n() ? ns : default_extension_ns();
      degree_grid = {{}, {}};
    } else {
      degree_grid = {primes, ns};
      ext_fields.clear();
    }
  }

  std::vector<SuiteOutcome> outcomes;
  auto want = [&](const char* name) { return suite == name || suite == "all"; };
  if (want("identity")) outcomes.push_back(verify_identity(identity_grid, f.budget));
  if (want("degree")) {
    if (!degree_grid.primes.empty()) outcomes.push_back(verify_degree(degree_grid, threads));
    if (!ext_fields.empty()) outcomes.push_back(verify_extension_divisibility(ext_fields, ext_ns));
  }
  if (want("bounds")) outcomes.push_back(verify_bounds(identity_grid, degree_grid, ext_fields, ext_ns, f.budget));
  if (want("stickelberger")) outcomes.push_back(verify_stickelberger(stick_primes, f.precision));
  if (want("cases")) {
    if (f.has_p() && f.has_n()) {
      std::vector<std::pair<std::int64_t, int>> pairs;
      for (auto p : resolve_primes(f))
        for (int n : resolve_ns(f)) pairs.emplace_back(p, n);
      outcomes.push_back(verify_cases(pairs, f.precision));
    } else {
      SuiteOutcome all{"cases"};
      all.merge(verify_cases(default_case_pairs_i(), f.precision));
      all.merge(verify_cases(default_case_pairs_ii(), f.precision, true));
      all.merge(verify_cases(default_case_pairs_iii(), f.precision));
      outcomes.push_back(all);
    }
  }

  bool ok = true;
  for (const auto& s : outcomes) {
    report(out, s);
    ok = ok && s.passed();
  }
  return ok ? 0 : 1;
}

int cmd_census(const Flags& f, std::ostream& out) {
  CensusParams params;
  params.primes = resolve_primes(f);
  params.k_ext = f.k;
  params.ns = resolve_ns(f);
  if (f.b_opt->count() > 0) params.b = f.b;
  params.precision = f.precision;
  params.threads = resolve_threads(f.threads);
  const std::string format = f.format.empty() ? "csv" : f.format;

  const auto rows = run_census(params);
  std::ostringstream text;
  if (format == "csv")
    write_csv(text, rows);
  else if (format == "json")
    write_json(text, rows);
  else
    write_table(text, rows);

  if (f.out.empty()) {
    out << text.str();
    return 0;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw Error(Errc::IoError, "cannot open " + f.out);
  file << text.str();
  if (!file) throw Error(Errc::IoError, "write failed for " + f.out);
  return 0;
}

int cmd_sum(const Flags& f, std::ostream& out) {
  if (f.p_opt->count() == 0 || f.n_opt->count() == 0 || f.b_opt->count() == 0)
    throw Error(Errc::InvalidParameters, "sum needs --p, --n and --b");
  if (!is_prime(f.p)) throw Error(Errc::InvalidParameters, std::to_string(f.p) + " is not prime");
  if (f.n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  const FieldPtr field = Field::create(f.p, f.k);
  const FieldElt b = field->parse(f.b);
  if (b.is_zero()) throw Error(Errc::InvalidParameters, "b must be nonzero");

  std::optional<CycInt> brute, formula;
  if (f.path == "brute" || f.path == "both") brute = unscaled(inverted_kloosterman_brute(*field, f.n, b, f.budget));
  if (f.path == "formula" || f.path == "both") formula = unscaled(ik_formula_scaled(field, f.n, b));
  const bool agree = !(brute && formula) || *brute == *formula;
  const CycInt value = formula ? *formula : *brute;

  const auto degree = degree_of(value);
  const IntPoly minpoly = min_poly(value);
  std::vector<std::pair<std::int64_t, ComplexEmbedding>> embeddings;
  for (std::int64_t j = 1; j < std::max<std::int64_t>(f.p, 2); ++j) {
    ComplexEmbedding e = embed_complex(value, j);
    // Components below the rounding bound are printed as exact zeros.
    if (std::abs(e.value.real()) <= e.error_bound) e.value.real(0);
    if (std::abs(e.value.imag()) <= e.error_bound) e.value.imag(0);
    embeddings.emplace_back(j, e);
  }

  if (f.format == "json") {
    out << "{\"p\": " << f.p << ", \"k\": " << f.k << ", \"q\": " << field->q() << ", \"n\": " << f.n
        << ", \"b\": \"" << b.to_string() << "\", \"path\": \"" << f.path << "\", \"agree\": " << (agree ? "true" : "false")
        << ", \"value\": " << to_json(value) << ", \"embeddings\": [";
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
      const auto& [j, e] = embeddings[i];
      out << (i ? ", " : "") << "{\"j\": " << j << ", \"re\": " << format_decimal(e.value.real())
          << ", \"im\": " << format_decimal(e.value.imag()) << "}";
    }
    out << "], \"degree\": " << degree << ", \"degree_bound\": " << predicted_degree(f.p, f.n)
        << ", \"minpoly\": \"" << minpoly.to_string() << "\"}\n";
  } else {
    out << "field: F_" << field->q() << " (p=" << f.p << ", k=" << f.k << ")\n";
    out << "n: " << f.n << "\nb: " << b.to_string() << "\npath: " << f.path << '\n';
    if (brute && formula) out << "paths agree: " << (agree ? "yes" : "NO") << '\n';
    out << "value: " << to_json(value) << '\n';
    out << "embeddings:\n";
    for (const auto& [j, e] : embeddings)
      out << "  j=" << j << ": " << format_decimal(e.value.real()) << (e.value.imag() < 0 ? " - " : " + ")
          << format_decimal(std::abs(e.value.imag())) << "i\n";
    out << "degree: " << degree << " (bound " << predicted_degree(f.p, f.n) << ")\n";
    out << "minpoly: " << minpoly.to_string() << '\n';
  }
  return agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact inverted Kloosterman sums: verification suites, census sweeps, single sums"};
  app.require_subcommand(1);

  Flags vf, cf, sf;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "identity | degree | stickelberger | cases | bounds | all")
      ->required()
      ->check(CLI::IsMember({"identity", "degree", "stickelberger", "cases", "bounds", "all"}));
  add_range_flags(verify, vf);
  verify->add_option("--budget", vf.budget, "Enumeration budget for brute-force sums");
  verify->add_option("--precision", vf.precision, "pi-adic precision (default 4(p-1)+8)");

  auto* census = app.add_subcommand("census", "Sweep (q, n, b) and write one record per sum");
  add_range_flags(census, cf);
  cf.b_opt = census->add_option("--b", cf.b, "Restrict to one element (c0:c1:...)");
  census->add_option("--precision", cf.precision, "pi-adic precision (default 4(p-1)+8)");
  census->add_option("--format", cf.format, "csv | json | table")->check(CLI::IsMember({"csv", "json", "table"}));
  census->add_option("--out", cf.out, "Output file (default stdout)");

  auto* sum = app.add_subcommand("sum", "Compute one inverted Kloosterman sum exactly");
  add_range_flags(sum, sf);
  sf.b_opt = sum->add_option("--b", sf.b, "Element b (c0:c1:...)");
  sum->add_option("--path", sf.path, "brute | formula | both")->check(CLI::IsMember({"brute", "formula", "both"}));
  sum->add_option("--budget", sf.budget, "Enumeration budget for the brute path");
  sum->add_option("--format", sf.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, vf, out);
    if (*census) {
      if (cf.p_opt->count() == 0 && cf.p_max_opt->count() == 0) throw Error(Errc::InvalidParameters, "census needs --p or --p-max");
      if (cf.n_opt->count() == 0 && cf.n_max_opt->count() == 0) throw Error(Errc::InvalidParameters, "census needs --n or --n-max");
      return cmd_census(cf, out);
    }
    return cmd_sum(sf, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::InvalidParameters:
      case Errc::ZeroParameter:
      case Errc::BudgetExceeded:
      case Errc::DegenerateParameters:
        return 2;
      default:
        return 1;
    }
  }
}

}  // namespace ikdeg
