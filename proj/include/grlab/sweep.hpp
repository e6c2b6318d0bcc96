#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "grlab/analysis.hpp"

namespace grlab {

inline constexpr std::size_t kMaxSweepPairs = 100000;

struct SweepOptions {
  int max_frobenius = 12;
  int max_generators = 3;
  /// Monomial generators are drawn from S ∩ (0, bound]; 0 means
  /// conductor + multiplicity - 1 of each semigroup.
  int exponent_bound = 0;
  int random_ideals = 200;
  std::uint64_t seed = 1;
  int samples = kDefaultSamples;
  /// Recompute the staircases of I and I^2 at twice the precision.
  bool check_precision = true;
};

struct CorpusEntry {
  std::vector<int> semigroup;        // minimal generators
  std::vector<int> exponents;        // monomial ideal when `generators` is empty
  std::vector<TermList> generators;  // explicit polynomials otherwise
};

AnalysisRequest make_request(const CorpusEntry& entry, const SweepOptions& options);

/// Monomial ideals minimally generated by at most `max_generators` exponents
/// of the window, for every semigroup with Frobenius number <= the bound,
/// followed by `random_ideals` pseudo-random 2-generated ideals over F_65537.
/// Throws BoundExceeded when the corpus would exceed kMaxSweepPairs.
std::vector<CorpusEntry> build_corpus(const SweepOptions& options);

/// Monomial part only, for a single semigroup.
std::vector<std::vector<int>> monomial_ideals(const NumericalSemigroup& s, int max_generators, int exponent_bound);

struct SweepRow {
  std::string semigroup;
  std::string ideal;
  bool monomial = true;
  std::string status = "ok";  // or the error text
  int e = 0;
  std::size_t colength = 0;
  int r = 0;
  int s = 0;
  int K = 0;
  std::size_t nu1 = 0;
  std::size_t nu2 = 0;
  long h = 0;
  std::size_t tau = 0;
  bool j_stretched = false;
  std::string jmult;
  bool stretched_general = false;
  std::string stretched_named;  // "label=0|1;..." over named reductions
  int gr_depth = 0;
  bool ratliff_rush_closed = false;
  std::size_t warnings = 0;
  bool precision_stable = true;
  std::vector<Verdict> verdicts;  // aligned with kCheckNames
  double runtime_ms = 0;

  bool same_result(const SweepRow& other) const;  // everything but runtime
};

SweepRow summarize(const AnalysisResult& result);

/// Analyzes one entry; errors are caught and recorded in `status`.
SweepRow run_entry(const CorpusEntry& entry, const SweepOptions& options);

/// Reference implementation: one entry after another.
std::vector<SweepRow> sweep_serial(const std::vector<CorpusEntry>& corpus, const SweepOptions& options);

/// Same rows, entries distributed over OpenMP threads (0 = runtime default).
std::vector<SweepRow> sweep_parallel(const std::vector<CorpusEntry>& corpus, const SweepOptions& options,
                                     int threads = 0);

std::string csv_header(bool with_timing = true);
std::string csv_row(const SweepRow& row, bool with_timing = true);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
  std::size_t j_stretched = 0;
  std::size_t stretched = 0;
  std::size_t gr_cm = 0;
  std::size_t precision_unstable = 0;
  std::size_t with_warnings = 0;
  std::map<std::string, std::size_t> jmult;
  std::map<std::string, std::size_t> falsified;   // per check
  std::map<std::string, std::size_t> applicable;  // per check, hypothesis met

  std::size_t total_falsified() const;
  std::string to_text() const;
};

SweepSummary summarize(const std::vector<SweepRow>& rows);

/// {"schema", "columns", "rows": [{column: value}], "summary"}; values are the
/// CSV cells.
nlohmann::ordered_json sweep_document(const std::vector<SweepRow>& rows, bool with_timing = true);

}  // namespace grlab
