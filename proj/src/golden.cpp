#include "grlab/golden.hpp"

#include <numeric>
#include <sstream>

#include "grlab/analysis.hpp"
#include "grlab/report.hpp"

namespace grlab {

namespace {

using Fp = PrimeField;
using FpIdeal = Ideal<Fp>;

std::string summarize_for_comparison(const AnalysisResult& result) { return report_document(result).dump(); }

/// Display width of UTF-8 text: continuation bytes do not count.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

class ClaimSink {
 public:
  ClaimSink(std::vector<GoldenClaim>& out, std::string example) : out_(out), example_(std::move(example)) {}

  void equal(const std::string& claim, const std::string& expected, const std::string& computed) {
    out_.push_back({example_, claim, expected, computed, expected == computed});
  }
  void equal(const std::string& claim, long expected, long computed) {
    equal(claim, std::to_string(expected), std::to_string(computed));
  }
  void holds(const std::string& claim, bool expected, bool computed) {
    equal(claim, yes_no(expected), yes_no(computed));
  }

 private:
  std::vector<GoldenClaim>& out_;
  std::string example_;
};

/// The analysis of a monomial ideal plus the ideals needed for direct
/// containment claims, all over F_65537.
struct ExampleRun {
  AnalysisResult result;
  ContextPtr<Fp> ctx;
  FpIdeal ideal;
  FpIdeal maximal;
  FpIdeal reduction;  // (t^e)

  const ReductionProfile& monomial_profile() const {
    const std::string label = "t^" + std::to_string(result.report.e);
    for (const auto& p : result.report.named) {
      if (p.label == label) return p;
    }
    throw Error(ErrorCode::InvalidInput, "no profile for " + label);
  }
};

ExampleRun run_example(const std::vector<int>& gens, const std::vector<int>& exps, std::uint64_t seed,
                       int depth = 0) {
  AnalysisRequest req;
  req.semigroup = gens;
  req.monomial_exponents = exps;
  req.seed = seed;
  req.depth = depth;
  auto result = analyze(req);
  const auto s = NumericalSemigroup::from_generators(gens);
  const auto ctx = make_context(s, Fp(), result.report.precision, seed);
  auto ideal = FpIdeal::monomial(ctx, exps);
  auto maximal = FpIdeal::monomial(ctx, s.minimal_generators());
  const std::vector<int> lead{result.report.e};
  auto reduction = FpIdeal::monomial(ctx, lead);
  return {std::move(result), ctx, std::move(ideal), std::move(maximal), std::move(reduction)};
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out(static_cast<std::size_t>(hi - lo + 1));
  std::iota(out.begin(), out.end(), lo);
  return out;
}

std::string label(const std::string& family, const std::vector<int>& gens, const std::vector<int>& exps) {
  std::ostringstream out;
  out << family << " <";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
  out << "> (";
  for (std::size_t i = 0; i < exps.size(); ++i) out << (i ? "," : "") << "t^" << exps[i];
  out << ")";
  return out.str();
}

/// Shared claims: almost minimal, j-stretched, not stretched for (t^e) or a
/// general reduction.
void almost_minimal_not_stretched(ClaimSink& sink, const ExampleRun& run) {
  const auto& c = run.result.classification;
  sink.holds("j-stretched", true, c.is_j_stretched);
  sink.holds("almost minimal j-multiplicity", true, c.has_almost_min_jmult);
  sink.holds("stretched w.r.t. (t^e)", false, run.monomial_profile().stretched);
  sink.holds("stretched w.r.t. a general reduction", false, c.stretched_general);
}

void consecutive_family(std::vector<GoldenClaim>& out, int n, std::uint64_t seed) {
  const auto gens = range(n, 2 * n - 1);
  const auto exps = range(n, 2 * n - 2);
  ClaimSink sink(out, label("consecutive", gens, exps));
  const auto run = run_example(gens, exps, seed);
  const auto i2 = power(run.ideal, 2);
  const auto hi = product(run.reduction, run.ideal);
  sink.holds("I^2 = H m", true, i2 == product(run.reduction, run.maximal));
  sink.holds("I^3 = H I^2", true, power(run.ideal, 3) == product(run.reduction, i2));
  sink.equal("λ(I^2/HI)", 1, static_cast<long>(length_quotient(i2, hi)));
  sink.equal("s_H", 1, run.monomial_profile().nilpotency_index);
  sink.equal("r_H", 2, run.monomial_profile().reduction_number);
  sink.equal("general λ(I^2/xI)", 1, static_cast<long>(run.result.report.nu.at(1)));
  sink.equal("general s", 1, run.result.report.s_general);
  sink.equal("general r", 2, run.result.report.r_general);
  almost_minimal_not_stretched(sink, run);
}

void three_generator_family(std::vector<GoldenClaim>& out, int n, std::uint64_t seed,
                            const std::string& reference_report) {
  const std::vector<int> gens{n, n + 1, n + 2};
  const std::vector<int> exps{n, n + 1};
  ClaimSink sink(out, label("three-generator", gens, exps));
  const auto run = run_example(gens, exps, seed);
  const auto i2 = power(run.ideal, 2);
  sink.holds("I^2 = H m", true, i2 == product(run.reduction, run.maximal));
  sink.holds("I^2 ⊆ H", true, contains_ideal(run.reduction, i2));
  sink.equal("r_H", 2, run.monomial_profile().reduction_number);
  sink.equal("s_H", 2, run.monomial_profile().nilpotency_index);
  sink.equal("λ(I^2/HI)", 1, static_cast<long>(length_quotient(i2, product(run.reduction, run.ideal))));
  sink.equal("general r", 2, run.result.report.r_general);
  sink.equal("general s", 2, run.result.report.s_general);
  almost_minimal_not_stretched(sink, run);
  if (!reference_report.empty()) {
    const std::string mine = summarize_for_comparison(run.result);
    sink.holds("identical to the consecutive family at n = 3", true, mine == reference_report);
  }
}

void progression_family(std::vector<GoldenClaim>& out, int n, int a, std::uint64_t seed) {
  const std::vector<int> original{n, n + a, n + 2 * a};
  const int g = std::gcd(std::gcd(n, n + a), n + 2 * a);
  std::vector<int> gens, exps;
  for (int v : original) gens.push_back(v / g);
  exps = {n / g, (n + a) / g};
  ClaimSink sink(out, label("progression", original, {n, n + a}) + " ~ " + label("", gens, exps).substr(1));
  const auto run = run_example(gens, exps, seed);
  almost_minimal_not_stretched(sink, run);
}

void seven_nine_ten(std::vector<GoldenClaim>& out, std::uint64_t seed) {
  const std::vector<int> gens{7, 9, 10};
  const std::vector<int> exps{7, 9};
  ClaimSink sink(out, label("sporadic", gens, exps));
  const auto run = run_example(gens, exps, seed, 8);
  const auto& h = run.monomial_profile();
  const std::size_t expected[] = {0, 0, 1, 1, 1, 0, 0, 0, 0};
  for (std::size_t k = 2; k <= 8; ++k) {
    sink.equal("λ(I^" + std::to_string(k) + "/(HI^" + std::to_string(k - 1) + " + I^" + std::to_string(k + 1) + "))",
               static_cast<long>(expected[k]), static_cast<long>(h.graded.at(k)));
  }
  // Elements of I^j outside HI^{j-1} + I^{j+1}.
  const std::pair<int, int> key_elements[] = {{2, 18}, {3, 27}, {4, 36}};
  for (auto [j, exponent] : key_elements) {
    const auto outside = sum(product(run.reduction, power(run.ideal, j - 1)), power(run.ideal, j + 1));
    const auto t = TruncatedSeries<Fp>::monomial(run.ctx, exponent);
    const bool in_power = power(run.ideal, j).contains(t);
    sink.holds("t^" + std::to_string(exponent) + " ∈ I^" + std::to_string(j) + " \\ (HI^" + std::to_string(j - 1) +
                   " + I^" + std::to_string(j + 1) + ")",
               true, in_power && !outside.contains(t));
  }
  const auto& c = run.result.classification;
  sink.holds("j-stretched", true, c.is_j_stretched);
  sink.holds("almost minimal j-multiplicity", false, c.has_almost_min_jmult);
  sink.holds("H ∩ I^2 = HI", false, h.stretched_a);
  sink.holds("stretched w.r.t. a general reduction", false, c.stretched_general);
  sink.equal("general ν_1", 2, static_cast<long>(run.result.report.nu.at(1)));
}

void five_seven_eight(std::vector<GoldenClaim>& out, std::uint64_t seed) {
  const std::vector<int> gens{5, 7, 8};
  const std::vector<int> exps{5, 7};
  ClaimSink sink(out, label("sporadic", gens, exps));
  const auto run = run_example(gens, exps, seed);
  const auto reference = run_example({7, 9, 10}, {7, 9}, seed);
  const auto& c = run.result.classification;
  sink.holds("j-stretched", true, c.is_j_stretched);
  sink.holds("stretched w.r.t. (t^e)", false, run.monomial_profile().stretched);
  sink.holds("stretched w.r.t. a general reduction", false, c.stretched_general);
  sink.holds("almost minimal j-multiplicity", false, c.has_almost_min_jmult);
  sink.equal("j-multiplicity (one less than for (t^7,t^9) in <7,9,10>)", reference.result.report.j_mult - 1,
             run.result.report.j_mult);
}

}  // namespace

std::vector<GoldenClaim> reproduce_examples(std::uint64_t seed) {
  std::vector<GoldenClaim> out;
  for (int n = 3; n <= 6; ++n) consecutive_family(out, n, seed);
  const std::string reference = summarize_for_comparison(run_example({3, 4, 5}, {3, 4}, seed).result);
  for (int n = 3; n <= 6; ++n) three_generator_family(out, n, seed, n == 3 ? reference : "");
  for (int a = 1; a <= 4; ++a) {
    for (int n : {2 * a, 3 * a}) {
      if (n >= 3) progression_family(out, n, a, seed);
    }
  }
  seven_nine_ten(out, seed);
  five_seven_eight(out, seed);
  return out;
}

std::string format_claims(const std::vector<GoldenClaim>& claims) {
  std::size_t w_example = 7, w_claim = 5, w_expected = 8;
  for (const auto& c : claims) {
    w_example = std::max(w_example, width(c.example));
    w_claim = std::max(w_claim, width(c.claim));
    w_expected = std::max(w_expected, width(c.expected));
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); };
  std::ostringstream out;
  out << pad("example", w_example) << "  " << pad("claim", w_claim) << "  " << pad("expected", w_expected)
      << "  computed  result\n";
  std::size_t passed = 0;
  for (const auto& c : claims) {
    out << pad(c.example, w_example) << "  " << pad(c.claim, w_claim) << "  " << pad(c.expected, w_expected) << "  "
        << pad(c.computed, 8) << "  " << (c.pass ? "PASS" : "FAIL") << "\n";
    passed += c.pass;
  }
  out << passed << "/" << claims.size() << " claims reproduced\n";
  return out.str();
}

}  // namespace grlab
