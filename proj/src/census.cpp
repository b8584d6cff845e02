#include "ikdeg/census.hpp"

#include "ikdeg/error.hpp"
#include "ikdeg/galois.hpp"
#include "ikdeg/padic.hpp"
#include "ikdeg/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ikdeg {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IKDEG_THREADS")) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec == std::errc() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

namespace {

void sweep_field(const CensusParams& params, std::int64_t p, std::vector<CensusRecord>& out) {
  const FieldPtr field = Field::create(p, params.k_ext);
  auto gauss = std::make_shared<GaussSumTable>(field);
  const std::int64_t order = field->q() - 1;

  std::vector<std::int64_t> logs;
  if (params.b) {
    const FieldElt b = field->parse(*params.b);
    if (b.is_zero()) throw Error(Errc::InvalidParameters, "b must be nonzero");
    logs.push_back(field->dlog(b));
  } else {
    for (std::int64_t j = 0; j < order; ++j) logs.push_back(j);
  }
  // Rows are emitted in dlog order.
  std::sort(logs.begin(), logs.end());

  for (int n : params.ns) {
    InvertedKloostermanFormula formula(gauss, n);
    std::optional<CaseAnalyzer> cases;
    if (params.k_ext == 1) cases.emplace(p, n, params.precision);
    const std::int64_t a = Field::create(p, 1)->generator().code();

    std::vector<CensusRecord> rows(logs.size());
    parallel_for(logs.size(), params.threads, [&](std::size_t i) {
      const FieldElt b = field->exp(logs[i]);
      const SumValue value = formula.evaluate(b);
      CensusRecord& r = rows[i];
      r.p = p;
      r.k_ext = params.k_ext;
      r.q = field->q();
      r.n = n;
      r.b = b.to_string();
      r.b_dlog = logs[i];
      r.degree = degree_of(value.value);
      r.predicted_degree_bound = predicted_degree(p, n);
      if (params.k_ext == 1) r.degree_matches = r.degree == r.predicted_degree_bound;
      const BoundReport bounds = bounds_check(*field, n, value);
      r.bound1_lhs = bounds.max_lhs1();
      r.bound1_rhs = bounds.rhs1();
      r.bound2_lhs = bounds.max_lhs2();
      r.bound2_rhs = bounds.rhs2();
      if (cases) {
        const CaseReport report = cases->analyze(b.code(), a);
        r.case_label = to_string(report.label);
        r.predicted_val = report.predicted_valuation;
        r.observed_val = report.observed_valuation;
      } else {
        r.case_label = "n/a";
      }
    });
    out.insert(out.end(), rows.begin(), rows.end());
  }
}

std::string opt_decimal(const std::optional<double>& v) { return v ? format_decimal(*v) : ""; }
std::string opt_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string matches_text(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : "n/a"; }

double rounded(double v) {
  const std::string s = format_decimal(v);
  double out = 0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

const char* const kColumns[] = {"p", "k_ext", "q", "n", "b", "degree", "predicted_degree_bound", "degree_matches",
                                "bound1_lhs", "bound1_rhs", "bound2_lhs", "bound2_rhs", "case_label", "predicted_val",
                                "observed_val"};

std::vector<std::string> cells(const CensusRecord& r) {
  return {std::to_string(r.p),
          std::to_string(r.k_ext),
          std::to_string(r.q),
          std::to_string(r.n),
          r.b,
          std::to_string(r.degree),
          std::to_string(r.predicted_degree_bound),
          matches_text(r.degree_matches),
          format_decimal(r.bound1_lhs),
          format_decimal(r.bound1_rhs),
          opt_decimal(r.bound2_lhs),
          opt_decimal(r.bound2_rhs),
          r.case_label,
          opt_int(r.predicted_val),
          opt_int(r.observed_val)};
}

}  // namespace

std::vector<CensusRecord> run_census(const CensusParams& params) {
  if (params.primes.empty() || params.ns.empty()) throw Error(Errc::InvalidParameters, "empty parameter range");
  if (params.k_ext < 1) throw Error(Errc::InvalidParameters, "k must be >= 1");
  for (int n : params.ns)
    if (n < 1) throw Error(Errc::InvalidParameters, "n must be >= 1");
  std::vector<std::int64_t> primes = params.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  CensusParams sorted = params;
  std::sort(sorted.ns.begin(), sorted.ns.end());
  sorted.ns.erase(std::unique(sorted.ns.begin(), sorted.ns.end()), sorted.ns.end());

  std::vector<CensusRecord> rows;
  for (std::int64_t p : primes) sweep_field(sorted, p, rows);
  return rows;
}

void write_csv(std::ostream& out, const std::vector<CensusRecord>& rows) {
  bool first = true;
  for (const char* c : kColumns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '\n';
  for (const auto& r : rows) {
    const auto row = cells(r);
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<CensusRecord>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["k_ext"] = r.k_ext;
    j["q"] = r.q;
    j["n"] = r.n;
    j["b"] = r.b;
    j["degree"] = r.degree;
    j["predicted_degree_bound"] = r.predicted_degree_bound;
    if (r.degree_matches)
      j["degree_matches"] = *r.degree_matches;
    else
      j["degree_matches"] = "n/a";
    j["bound1_lhs"] = rounded(r.bound1_lhs);
    j["bound1_rhs"] = rounded(r.bound1_rhs);
    j["bound2_lhs"] = r.bound2_lhs ? nlohmann::ordered_json(rounded(*r.bound2_lhs)) : nlohmann::ordered_json(nullptr);
    j["bound2_rhs"] = r.bound2_rhs ? nlohmann::ordered_json(rounded(*r.bound2_rhs)) : nlohmann::ordered_json(nullptr);
    j["case_label"] = r.case_label;
    j["predicted_val"] = r.predicted_val ? nlohmann::ordered_json(*r.predicted_val) : nlohmann::ordered_json(nullptr);
    j["observed_val"] = r.observed_val ? nlohmann::ordered_json(*r.observed_val) : nlohmann::ordered_json(nullptr);
    doc.push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const std::vector<CensusRecord>& rows) {
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back(std::begin(kColumns), std::end(kColumns));
  for (const auto& r : rows) grid.push_back(cells(r));
  std::vector<std::size_t> width(grid.front().size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  }
}

}  // namespace ikdeg
