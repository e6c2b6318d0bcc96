#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grlab/classifiers.hpp"
#include "grlab/invariants.hpp"

namespace grlab {

/// A polynomial given as (exponent, coefficient text) pairs; the coefficient
/// is parsed by the request's field ("3" or "-2/5").
using TermList = std::vector<std::pair<int, std::string>>;

struct AnalysisRequest {
  std::vector<int> semigroup;
  std::vector<int> monomial_exponents;  // used when `generators` is empty
  std::vector<TermList> generators;
  std::vector<TermList> reductions;     // extra named reductions to profile
  std::string field = "65537";          // an odd prime, or "Q"
  std::uint64_t seed = 1;
  int samples = kDefaultSamples;
  int depth = 0;
  bool ratliff_rush = true;
};

struct AnalysisResult {
  InvariantReport report;
  Classification classification;
};

/// Runs the full pipeline. The truncation precision starts from
/// initial_precision() and is doubled (at most twice) when a computation
/// reports that it ran out of known coefficients.
AnalysisResult analyze(const AnalysisRequest& request);

int initial_precision(const AnalysisRequest& request);

/// True when the staircases of I and I^2 computed at initial_precision() and
/// at twice that precision coincide.
bool staircase_stable(const AnalysisRequest& request);

/// "3,4,5" -> {3, 4, 5}. Throws InvalidInput naming `what` on bad text.
std::vector<int> parse_int_list(const std::string& text, const std::string& what);

/// "3:1,4:-2/3,7" -> {(3,"1"), (4,"-2/3"), (7,"1")}.
TermList parse_terms(const std::string& text, const std::string& what);

std::string format_terms(const TermList& terms);

}  // namespace grlab
