#include "fatlie/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace fatlie {

using ojson = nlohmann::ordered_json;

namespace {

template <class T>
ojson opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson report_object(const CriterionReport& r, bool timings) {
  ojson j;
  j["label"] = r.label;
  j["kind"] = r.kind;
  j["nvars"] = r.nvars;
  j["dimS"] = r.dimS;
  j["ell"] = r.ell;
  j["edim"] = r.edim;
  j["ord"] = opt(r.ord);
  j["eps1"] = r.eps1;
  j["lhs"] = opt(r.lhs);
  j["rhs"] = opt(r.rhs);
  j["criterion_applies"] = r.criterion_applies;
  j["der_dim"] = r.der_dim;
  j["solvable"] = r.solvable;
  j["nilpotent"] = r.nilpotent;
  j["cartan_solvable"] = r.cartan_solvable;
  j["complete_intersection"] = r.complete_intersection;
  j["consistent"] = r.consistent;
  j["trivial"] = r.trivial;
  j["oracle_checked"] = r.oracle_checked;
  j["derived_dims"] = r.derived_dims;
  j["lower_central_dims"] = r.lower_central_dims;
  if (timings) {
    ojson t = ojson::object();
    for (const auto& [stage, ms] : r.timings) t[stage] = std::round(ms * 1000.0) / 1000.0;
    j["timings"] = t;
  }
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) line += "  ";
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size(), ' ');
      }
      os << line << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> table_header() {
  return {"label", "kind", "n", "dimS", "ell", "edim", "ord", "eps1", "lhs", "rhs", "applies",
          "der_dim", "solvable", "nilpotent", "cartan", "ci", "consistent"};
}

std::vector<std::string> table_row(const CriterionReport& r) {
  return {r.label,
          r.kind,
          std::to_string(r.nvars),
          std::to_string(r.dimS),
          std::to_string(r.ell),
          std::to_string(r.edim),
          opt_str(r.ord),
          std::to_string(r.eps1),
          opt_str(r.lhs),
          opt_str(r.rhs),
          yes_no(r.criterion_applies),
          std::to_string(r.der_dim),
          yes_no(r.solvable),
          yes_no(r.nilpotent),
          yes_no(r.cartan_solvable),
          yes_no(r.complete_intersection),
          yes_no(r.consistent)};
}

std::string summary_text(const CorpusSummary& s) {
  std::ostringstream os;
  os << "total " << s.total << ", applies&solvable " << s.applies_solvable << ", applies&unsolvable "
     << s.applies_unsolvable << ", not-applies&solvable " << s.not_applies_solvable << ", not-applies&unsolvable "
     << s.not_applies_unsolvable << ", trivial " << s.trivial << ", errors " << s.errors << ", oracle mismatches "
     << s.oracle_mismatches << ", seed " << s.seed << '\n';
  for (const auto& c : s.counterexamples) os << "COUNTEREXAMPLE " << c << '\n';
  return os.str();
}

}  // namespace

std::string report_json(const CriterionReport& r, bool timings) { return report_object(r, timings).dump(); }

std::string outcome_json(const InstanceOutcome& o, bool timings) {
  if (o.report) return report_json(*o.report, timings);
  ojson j;
  j["label"] = o.label;
  j["error"] = error_code_name(o.error.value_or(ErrorCode::Internal));
  j["message"] = o.message;
  j["instance"] = ojson::parse(o.instance);
  return j.dump();
}

std::string summary_json(const CorpusSummary& s) {
  ojson j;
  j["summary"] = true;
  j["seed"] = s.seed;
  j["total"] = s.total;
  j["applies_solvable"] = s.applies_solvable;
  j["applies_unsolvable"] = s.applies_unsolvable;
  j["not_applies_solvable"] = s.not_applies_solvable;
  j["not_applies_unsolvable"] = s.not_applies_unsolvable;
  j["trivial"] = s.trivial;
  j["errors"] = s.errors;
  j["oracle_mismatches"] = s.oracle_mismatches;
  ojson ce = ojson::array();
  for (const auto& c : s.counterexamples) ce.push_back(ojson::parse(c));
  j["counterexamples"] = ce;
  return j.dump();
}

std::string format_corpus(const CorpusResult& result, OutputFormat format, bool timings) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    for (const auto& o : result.outcomes) os << outcome_json(o, timings) << '\n';
    os << summary_json(result.summary) << '\n';
    return os.str();
  }
  Table t(table_header());
  for (const auto& o : result.outcomes)
    if (o.report) t.add(table_row(*o.report));
  os << t.str();
  for (const auto& o : result.outcomes)
    if (o.error) os << "ERROR " << o.label << ": " << error_code_name(*o.error) << ": " << o.message << '\n';
  os << summary_text(result.summary);
  return os.str();
}

std::string format_report(const CriterionReport& r, OutputFormat format, bool timings) {
  if (format == OutputFormat::Json) return report_json(r, timings) + "\n";
  Table t(table_header());
  t.add(table_row(r));
  std::string out = t.str();
  if (timings) {
    std::ostringstream os;
    os << "timings (ms):";
    for (const auto& [stage, ms] : r.timings) os << ' ' << stage << '=' << ms;
    out += os.str() + '\n';
  }
  return out;
}

std::string format_analysis(const FatPoint& fp, const std::string& label, OutputFormat format) {
  const std::size_t e1 = epsilon1(fp);
  const Order o = ord(fp);
  std::vector<std::string> gens, basis;
  for (const auto& g : fp.generators()) gens.push_back(to_string(g, fp.vars()));
  for (const auto& m : fp.basis()) basis.push_back(to_string(m, fp.vars()));
  if (format == OutputFormat::Json) {
    ojson j;
    j["label"] = label;
    j["vars"] = fp.vars();
    j["generators"] = gens;
    j["dimS"] = fp.dim();
    j["ell"] = fp.trunc_level();
    j["edim"] = edim(fp);
    j["ord"] = o.is_infinite() ? ojson(nullptr) : ojson(o.value);
    j["eps1"] = e1;
    j["complete_intersection"] = e1 == edim(fp);
    j["trivial"] = fp.trivial();
    j["hilbert"] = fp.hilbert();
    j["basis"] = basis;
    return j.dump() + "\n";
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
  };
  std::ostringstream os;
  os << "label: " << label << '\n';
  os << "presentation: (" << join(gens) << ") in variables (" << join(fp.vars()) << ")\n";
  os << "dim S = " << fp.dim() << ", ℓ = " << fp.trunc_level() << ", edim " << edim(fp) << ", ord "
     << (o.is_infinite() ? std::string("-") : std::to_string(o.value)) << ", ε₁ " << e1 << '\n';
  os << "hilbert:";
  for (auto c : fp.hilbert()) os << ' ' << c;
  os << '\n';
  os << "basis: " << join(basis) << '\n';
  os << "complete intersection: " << yes_no(e1 == edim(fp)) << '\n';
  if (fp.trivial()) os << "degenerate: S is the ground field\n";
  return os.str();
}

}  // namespace fatlie
