#include "grlab/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "grlab/errors.hpp"
#include "grlab/report.hpp"

namespace grlab {

namespace {

constexpr std::uint64_t kRandomIdealStream = 0x5eedba5eULL;

std::string describe(const CorpusEntry& e) {
  std::string out = "(";
  if (e.generators.empty()) {
    for (std::size_t i = 0; i < e.exponents.size(); ++i) out += (i ? ", t^" : "t^") + std::to_string(e.exponents[i]);
  } else {
    for (std::size_t i = 0; i < e.generators.size(); ++i) out += (i ? "; " : "") + format_terms(e.generators[i]);
  }
  return out + ")";
}

std::string semigroup_label(const std::vector<int>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + std::to_string(gens[i]);
  return out + ">";
}

int default_bound(const NumericalSemigroup& s) {
  return std::max(s.conductor() + s.multiplicity() - 1, s.multiplicity());
}

bool divides(const NumericalSemigroup& s, int a, int b) { return b >= a && s.contains(b - a); }

void extend_antichains(const NumericalSemigroup& s, const std::vector<int>& window, std::size_t start, int max_size,
                       std::vector<int>& current, std::vector<std::vector<int>>& out) {
  for (std::size_t i = start; i < window.size(); ++i) {
    const int b = window[i];
    const bool independent =
        std::none_of(current.begin(), current.end(), [&](int a) { return divides(s, a, b) || divides(s, b, a); });
    if (!independent) continue;
    current.push_back(b);
    out.push_back(current);
    if (static_cast<int>(current.size()) < max_size) extend_antichains(s, window, i + 1, max_size, current, out);
    current.pop_back();
  }
}

TermList random_polynomial(const NumericalSemigroup& s, std::mt19937_64& rng, int bound) {
  const auto lead_choices = s.elements_in(1, bound + 1);
  const int lead = lead_choices[rng() % lead_choices.size()];
  const auto tail_choices = s.elements_in(lead + 1, lead + s.conductor() + s.multiplicity() + 1);
  TermList out{{lead, std::to_string(rng() % (PrimeField::kDefaultModulus - 1) + 1)}};
  const std::size_t extra = 1 + rng() % 2;
  std::vector<int> picked;
  for (std::size_t k = 0; k < extra; ++k) {
    const int e = tail_choices[rng() % tail_choices.size()];
    if (std::find(picked.begin(), picked.end(), e) != picked.end()) continue;
    picked.push_back(e);
  }
  std::sort(picked.begin(), picked.end());
  for (int e : picked) out.emplace_back(e, std::to_string(rng() % (PrimeField::kDefaultModulus - 1) + 1));
  return out;
}

std::string verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "ok";
    case Verdict::Falsified: return "FALSIFIED";
    case Verdict::HypothesisNotMet: return "-";
  }
  return "-";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

AnalysisRequest make_request(const CorpusEntry& entry, const SweepOptions& options) {
  AnalysisRequest req;
  req.semigroup = entry.semigroup;
  req.monomial_exponents = entry.exponents;
  req.generators = entry.generators;
  req.seed = options.seed;
  req.samples = options.samples;
  return req;
}

std::vector<std::vector<int>> monomial_ideals(const NumericalSemigroup& s, int max_generators, int exponent_bound) {
  const int bound = exponent_bound > 0 ? exponent_bound : default_bound(s);
  const auto window = s.elements_in(1, bound + 1);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  extend_antichains(s, window, 0, max_generators, current, out);
  return out;
}

std::vector<CorpusEntry> build_corpus(const SweepOptions& options) {
  if (options.max_frobenius < 0 || options.max_generators < 1 || options.random_ideals < 0) {
    throw Error(ErrorCode::InvalidInput, "sweep bounds must be non-negative with at least one generator");
  }
  // Every semigroup contributes at least one ideal.
  const auto semigroups = semigroups_up_to_frobenius(options.max_frobenius, kMaxSweepPairs);
  std::vector<CorpusEntry> corpus;
  for (const auto& s : semigroups) {
    for (auto& exps : monomial_ideals(s, options.max_generators, options.exponent_bound)) {
      corpus.push_back({s.minimal_generators(), std::move(exps), {}});
      if (corpus.size() > kMaxSweepPairs) {
        throw Error(ErrorCode::BoundExceeded, "sweep corpus exceeds " + std::to_string(kMaxSweepPairs) + " pairs");
      }
    }
  }
  if (corpus.size() + static_cast<std::size_t>(options.random_ideals) > kMaxSweepPairs) {
    throw Error(ErrorCode::BoundExceeded, "sweep corpus exceeds " + std::to_string(kMaxSweepPairs) + " pairs");
  }
  std::mt19937_64 rng(options.seed ^ kRandomIdealStream);
  for (int i = 0; i < options.random_ideals; ++i) {
    const auto& s = semigroups[rng() % semigroups.size()];
    const int bound = default_bound(s);
    CorpusEntry e{s.minimal_generators(), {}, {}};
    e.generators.push_back(random_polynomial(s, rng, bound));
    e.generators.push_back(random_polynomial(s, rng, bound));
    corpus.push_back(std::move(e));
  }
  return corpus;
}

bool SweepRow::same_result(const SweepRow& o) const {
  return semigroup == o.semigroup && ideal == o.ideal && monomial == o.monomial && status == o.status && e == o.e &&
         colength == o.colength && r == o.r && s == o.s && K == o.K && nu1 == o.nu1 && nu2 == o.nu2 && h == o.h &&
         tau == o.tau && j_stretched == o.j_stretched && jmult == o.jmult && stretched_general == o.stretched_general &&
         stretched_named == o.stretched_named && gr_depth == o.gr_depth &&
         ratliff_rush_closed == o.ratliff_rush_closed && warnings == o.warnings &&
         precision_stable == o.precision_stable && verdicts == o.verdicts;
}

SweepRow summarize(const AnalysisResult& result) {
  const auto& rep = result.report;
  const auto& c = result.classification;
  SweepRow row;
  row.semigroup = rep.semigroup;
  row.ideal = rep.ideal;
  row.monomial = rep.ideal_is_monomial;
  row.e = rep.e;
  row.colength = rep.colength;
  row.r = rep.r_general;
  row.s = rep.s_general;
  row.K = rep.K;
  row.nu1 = rep.nu.size() > 1 ? rep.nu[1] : 0;
  row.nu2 = rep.nu.size() > 2 ? rep.nu[2] : 0;
  row.h = rep.h;
  row.tau = rep.tau;
  row.j_stretched = c.is_j_stretched;
  row.jmult = std::string(to_string(c.jmult));
  row.stretched_general = c.stretched_general;
  for (const auto& [label, v] : c.stretched_wrt) {
    if (!row.stretched_named.empty()) row.stretched_named += ';';
    row.stretched_named += label + '=' + (v ? '1' : '0');
  }
  row.gr_depth = c.gr_depth;
  row.ratliff_rush_closed = rep.ratliff_rush_closed;
  row.warnings = rep.warnings.size();
  for (const auto& chk : c.checks) row.verdicts.push_back(chk.verdict);
  return row;
}

SweepRow run_entry(const CorpusEntry& entry, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  const AnalysisRequest req = make_request(entry, options);
  try {
    row = summarize(analyze(req));
    if (options.check_precision) row.precision_stable = staircase_stable(req);
  } catch (const std::exception& err) {
    row = SweepRow{};
    row.semigroup = semigroup_label(entry.semigroup);
    row.ideal = describe(entry);
    row.monomial = entry.generators.empty();
    row.status = err.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<SweepRow> sweep_serial(const std::vector<CorpusEntry>& corpus, const SweepOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(corpus.size());
  for (const auto& entry : corpus) rows.push_back(run_entry(entry, options));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const std::vector<CorpusEntry>& corpus, const SweepOptions& options,
                                     int threads) {
  std::vector<SweepRow> rows(corpus.size());
  const long n = static_cast<long>(corpus.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
  // run_entry catches everything, so no exception escapes the region.
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (long i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = run_entry(corpus[static_cast<std::size_t>(i)], options);
  return rows;
}

std::string csv_header(bool with_timing) {
  std::string out =
      "semigroup,ideal,monomial,status,e,colength,r,s,K,nu1,nu2,h,tau,j_stretched,jmult,stretched_general,"
      "stretched_named,gr_depth,ratliff_rush_closed,warnings,precision_stable";
  for (auto name : kCheckNames) out += "," + std::string(name);
  if (with_timing) out += ",runtime_ms";
  return out;
}

std::string csv_row(const SweepRow& r, bool with_timing) {
  std::ostringstream out;
  out << csv_field(r.semigroup) << ',' << csv_field(r.ideal) << ',' << r.monomial << ',' << csv_field(r.status) << ','
      << r.e << ',' << r.colength << ',' << r.r << ',' << r.s << ',' << r.K << ',' << r.nu1 << ',' << r.nu2 << ','
      << r.h << ',' << r.tau << ',' << r.j_stretched << ',' << r.jmult << ',' << r.stretched_general << ','
      << csv_field(r.stretched_named) << ',' << r.gr_depth << ',' << r.ratliff_rush_closed << ',' << r.warnings << ','
      << r.precision_stable;
  for (std::size_t i = 0; i < std::size(kCheckNames); ++i) {
    out << ',' << (i < r.verdicts.size() ? verdict_code(r.verdicts[i]) : std::string("-"));
  }
  if (with_timing) {
    out.setf(std::ios::fixed);
    out.precision(3);
    out << ',' << r.runtime_ms;
  }
  return out.str();
}

std::size_t SweepSummary::total_falsified() const {
  std::size_t n = 0;
  for (const auto& [name, count] : falsified) n += count;
  return n;
}

std::string SweepSummary::to_text() const {
  std::ostringstream out;
  out << "rows " << rows << ", errors " << errors << ", j-stretched " << j_stretched << ", stretched " << stretched
      << ", gr CM " << gr_cm << ", precision unstable " << precision_unstable << ", consensus warnings "
      << with_warnings << "\n";
  out << "jmult:";
  for (const auto& [k, v] : jmult) out << ' ' << k << '=' << v;
  out << "\n";
  for (auto name : kCheckNames) {
    const std::string key(name);
    const auto a = applicable.count(key) ? applicable.at(key) : 0;
    const auto f = falsified.count(key) ? falsified.at(key) : 0;
    out << "  " << key << ": applicable " << a << ", falsified " << f << "\n";
  }
  return out.str();
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    ++s.rows;
    if (r.status != "ok") {
      ++s.errors;
      continue;
    }
    s.j_stretched += r.j_stretched;
    s.stretched += r.stretched_general;
    s.gr_cm += r.gr_depth == 1;
    s.precision_unstable += !r.precision_stable;
    s.with_warnings += r.warnings > 0;
    ++s.jmult[r.jmult];
    for (std::size_t i = 0; i < r.verdicts.size() && i < std::size(kCheckNames); ++i) {
      const std::string key(kCheckNames[i]);
      if (r.verdicts[i] != Verdict::HypothesisNotMet) ++s.applicable[key];
      if (r.verdicts[i] == Verdict::Falsified) ++s.falsified[key];
    }
  }
  return s;
}

nlohmann::ordered_json sweep_document(const std::vector<SweepRow>& rows, bool with_timing) {
  const auto split_csv = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    return cells;
  };
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  const auto columns = split_csv(csv_header(with_timing));
  doc["columns"] = columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    const auto cells = split_csv(csv_row(r, with_timing));
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns.size() && i < cells.size(); ++i) obj[columns[i]] = cells[i];
    doc["rows"].push_back(obj);
  }
  const auto s = summarize(rows);
  doc["summary"] = {{"rows", s.rows},         {"errors", s.errors},
                    {"j_stretched", s.j_stretched}, {"stretched", s.stretched},
                    {"gr_cm", s.gr_cm},       {"precision_unstable", s.precision_unstable},
                    {"with_warnings", s.with_warnings}, {"jmult", s.jmult},
                    {"applicable", s.applicable}, {"falsified", s.falsified}};
  return doc;
}

}  // namespace grlab
