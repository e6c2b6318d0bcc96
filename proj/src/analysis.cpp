#include "grlab/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "grlab/errors.hpp"

namespace grlab {

namespace {

constexpr int kPrecisionDoublings = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidInput, what + ": '" + raw + "' is not an integer");
  }
  return v;
}

int lowest_exponent(const AnalysisRequest& req) {
  if (req.generators.empty()) {
    if (req.monomial_exponents.empty()) throw Error(ErrorCode::InvalidInput, "ideal: no generators given");
    return *std::min_element(req.monomial_exponents.begin(), req.monomial_exponents.end());
  }
  int lo = 0;
  bool any = false;
  for (const auto& g : req.generators) {
    for (const auto& [e, c] : g) {
      if (!any || e < lo) lo = e;
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::InvalidInput, "ideal: every generator is empty");
  return lo;
}

template <class Field>
TruncatedSeries<Field> build_series(const ContextPtr<Field>& ctx, const TermList& terms) {
  std::vector<std::pair<int, typename Field::Element>> parsed;
  parsed.reserve(terms.size());
  for (const auto& [e, c] : terms) {
    if (e < 0) throw Error(ErrorCode::InvalidInput, "negative exponent " + std::to_string(e));
    parsed.emplace_back(e, ctx->field.parse(c));
  }
  return TruncatedSeries<Field>::from_terms(ctx, std::move(parsed));
}

template <class Field>
Ideal<Field> build_ideal(const AnalysisRequest& req, const ContextPtr<Field>& ctx) {
  if (req.generators.empty()) return Ideal<Field>::monomial(ctx, req.monomial_exponents);
  std::vector<TruncatedSeries<Field>> gens;
  for (const auto& g : req.generators) gens.push_back(build_series(ctx, g));
  return Ideal<Field>::from_generators(ctx, gens);
}

template <class Field>
bool stable_at(const AnalysisRequest& req, const NumericalSemigroup& s, const Field& field) {
  const int n = initial_precision(req);
  const auto lo = build_ideal(req, make_context(s, field, n, req.seed));
  const auto hi = build_ideal(req, make_context(s, field, 2 * n, req.seed));
  return lo.staircase() == hi.staircase() && product(lo, lo).staircase() == product(hi, hi).staircase();
}

template <class Field>
AnalysisResult run_once(const AnalysisRequest& req, const NumericalSemigroup& s, const Field& field, int precision) {
  const auto ctx = make_context(s, field, precision, req.seed);
  const Ideal<Field> ideal = build_ideal(req, ctx);
  std::vector<std::pair<std::string, TruncatedSeries<Field>>> named;
  for (const auto& r : req.reductions) {
    auto x = build_series(ctx, r);
    named.emplace_back(x.to_string(), x);
  }
  InvariantOptions opt;
  opt.samples = req.samples;
  opt.depth = req.depth;
  opt.seed = req.seed;
  opt.ratliff_rush = req.ratliff_rush;
  AnalysisResult out;
  out.report = compute_invariants(ideal, opt, named);
  out.classification = classify(out.report);
  return out;
}

template <class Field>
AnalysisResult run_adaptive(const AnalysisRequest& req, const NumericalSemigroup& s, const Field& field) {
  int precision = initial_precision(req);
  for (int attempt = 0;; ++attempt) {
    try {
      return run_once(req, s, field, precision);
    } catch (const Error& err) {
      const bool precision_error =
          err.code() == ErrorCode::PrecisionExhausted || err.code() == ErrorCode::PrecisionSuspect;
      if (!precision_error || attempt == kPrecisionDoublings) throw;
      precision *= 2;
    }
  }
}

}  // namespace

int initial_precision(const AnalysisRequest& req) {
  const auto s = NumericalSemigroup::from_generators(req.semigroup);
  const int lo = std::max(1, lowest_exponent(req));
  // Powers up to I^{e+3} and their windows of width c+1.
  return s.conductor() + 1 + lo * (std::max(req.depth, lo + 2) + 4);
}

AnalysisResult analyze(const AnalysisRequest& req) {
  if (req.semigroup.empty()) throw Error(ErrorCode::InvalidInput, "semigroup: no generators given");
  if (req.samples < 1) throw Error(ErrorCode::InvalidInput, "samples: need at least one");
  if (req.depth < 0) throw Error(ErrorCode::InvalidInput, "depth: must be non-negative");
  const auto s = NumericalSemigroup::from_generators(req.semigroup);
  if (req.field == "Q" || req.field == "q") return run_adaptive(req, s, RationalField());
  const int p = parse_int(req.field, "field");
  if (p <= 2) throw Error(ErrorCode::InvalidInput, "field: '" + req.field + "' is not an odd prime");
  return run_adaptive(req, s, PrimeField(static_cast<std::uint32_t>(p)));
}

bool staircase_stable(const AnalysisRequest& req) {
  const auto s = NumericalSemigroup::from_generators(req.semigroup);
  if (req.field == "Q" || req.field == "q") return stable_at(req, s, RationalField());
  return stable_at(req, s, PrimeField(static_cast<std::uint32_t>(parse_int(req.field, "field"))));
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  if (trim(text).empty()) throw Error(ErrorCode::InvalidInput, what + ": empty list");
  std::vector<int> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_int(item, what));
  return out;
}

TermList parse_terms(const std::string& text, const std::string& what) {
  if (trim(text).empty()) throw Error(ErrorCode::InvalidInput, what + ": empty term list");
  TermList out;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.emplace_back(parse_int(item, what), "1");
      continue;
    }
    const std::string coeff = trim(item.substr(colon + 1));
    if (coeff.empty()) throw Error(ErrorCode::InvalidInput, what + ": missing coefficient in '" + item + "'");
    out.emplace_back(parse_int(item.substr(0, colon), what), coeff);
  }
  return out;
}

std::string format_terms(const TermList& terms) {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += ',';
    out += std::to_string(e) + ':' + c;
  }
  return out;
}

}  // namespace grlab
