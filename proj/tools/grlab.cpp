// grlab: analyze one ideal, sweep a family of monomial-curve rings, or rerun
// the worked examples.
//
// Exit status: 0 ok, 1 input error, 2 a consistency check was falsified (or a
// worked example did not reproduce).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "grlab/errors.hpp"
#include "grlab/golden.hpp"
#include "grlab/report.hpp"
#include "grlab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFalsified = 2;

struct Output {
  std::string path;
  std::string format = "json";

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw grlab::Error(grlab::ErrorCode::InvalidInput, "--out: cannot open " + path);
    out << text;
  }
};

void add_common(CLI::App* cmd, std::uint64_t& seed, Output& out) {
  cmd->add_option("--seed", seed, "Base seed for general elements")->envname("GRLAB_SEED");
  cmd->add_option("--out", out.path, "Write the report here instead of stdout");
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

int run_analyze(const grlab::AnalysisRequest& flags, const std::string& input, const std::string& ideal_text,
                const std::vector<std::string>& generator_texts, const std::vector<std::string>& reduction_texts,
                const std::string& semigroup_text, const Output& out, bool seed_given, bool samples_given,
                bool field_given, bool depth_given) {
  grlab::AnalysisRequest req;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw grlab::Error(grlab::ErrorCode::InvalidInput, "--input: cannot open " + input);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw grlab::Error(grlab::ErrorCode::InvalidInput, std::string("--input: ") + e.what());
    }
    req = grlab::request_from_json(doc, req);
  }
  if (!semigroup_text.empty()) req.semigroup = grlab::parse_int_list(semigroup_text, "--semigroup");
  if (!ideal_text.empty()) {
    req.monomial_exponents = grlab::parse_int_list(ideal_text, "--ideal");
    req.generators.clear();
  }
  for (const auto& g : generator_texts) req.generators.push_back(grlab::parse_terms(g, "--generator"));
  for (const auto& r : reduction_texts) req.reductions.push_back(grlab::parse_terms(r, "--reduction"));
  if (field_given) req.field = flags.field;
  if (seed_given) req.seed = flags.seed;
  if (samples_given) req.samples = flags.samples;
  if (depth_given) req.depth = flags.depth;
  if (req.semigroup.empty()) throw grlab::Error(grlab::ErrorCode::InvalidInput, "--semigroup is required");
  if (req.monomial_exponents.empty() && req.generators.empty()) {
    throw grlab::Error(grlab::ErrorCode::InvalidInput, "--ideal or --generator is required");
  }

  const auto result = grlab::analyze(req);
  if (out.format == "csv") {
    out.write(grlab::csv_header(false) + "\n" + grlab::csv_row(grlab::summarize(result), false) + "\n");
  } else {
    out.write(grlab::report_document(result).dump(2) + "\n");
  }
  return result.classification.any_falsified() ? kExitFalsified : kExitOk;
}

int run_sweep(const grlab::SweepOptions& opt, bool serial, int threads, bool timing, const Output& out) {
  const auto corpus = grlab::build_corpus(opt);
  const auto rows = serial ? grlab::sweep_serial(corpus, opt) : grlab::sweep_parallel(corpus, opt, threads);
  if (out.format == "json") {
    out.write(grlab::sweep_document(rows, timing).dump(2) + "\n");
  } else {
    std::string text = grlab::csv_header(timing) + "\n";
    for (const auto& r : rows) text += grlab::csv_row(r, timing) + "\n";
    out.write(text);
  }
  const auto summary = grlab::summarize(rows);
  std::cerr << summary.to_text();
  if (summary.total_falsified() > 0) return kExitFalsified;
  return summary.errors > 0 ? kExitInput : kExitOk;
}

int run_reproduce(std::uint64_t seed, const Output& out) {
  const auto claims = grlab::reproduce_examples(seed);
  bool all = true;
  for (const auto& c : claims) all = all && c.pass;
  if (out.path.empty() || out.format == "csv") {
    std::cout << grlab::format_claims(claims);
  }
  if (!out.path.empty()) {
    nlohmann::ordered_json doc;
    doc["schema"] = grlab::kReportSchema;
    doc["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
      doc["claims"].push_back({{"example", c.example},
                               {"claim", c.claim},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"pass", c.pass}});
    }
    out.write(doc.dump(2) + "\n");
  }
  return all ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of ideals in numerical semigroup rings k[[t^S]]"};
  app.require_subcommand(1);

  grlab::AnalysisRequest flags;
  std::string input, ideal_text, semigroup_text;
  std::vector<std::string> generator_texts, reduction_texts;
  Output analyze_out;
  auto* analyze = app.add_subcommand("analyze", "Invariants and classification of one ideal");
  analyze->add_option("--semigroup", semigroup_text, "Generators of S, e.g. 3,4,5");
  analyze->add_option("--ideal", ideal_text, "Monomial ideal exponents, e.g. 3,4");
  analyze->add_option("--generator", generator_texts, "Polynomial generator exp:coeff,... (repeatable)");
  analyze->add_option("--reduction", reduction_texts, "Extra reduction to profile, exp:coeff,... (repeatable)");
  analyze->add_option("--input", input, "JSON request file");
  auto* field_opt = analyze->add_option("--field", flags.field, "Odd prime p, or Q");
  auto* samples_opt = analyze->add_option("--samples", flags.samples, "General samples");
  auto* depth_opt = analyze->add_option("--depth", flags.depth, "Minimum length of per-reduction sequences");
  add_common(analyze, flags.seed, analyze_out);
  auto* analyze_seed = analyze->get_option("--seed");

  grlab::SweepOptions sweep_opt;
  bool serial = false, no_timing = false, no_precision = false;
  int threads = 0;
  Output sweep_out;
  sweep_out.format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Every monomial ideal of every small semigroup, plus random ideals");
  sweep->add_option("--max-frobenius", sweep_opt.max_frobenius, "Largest Frobenius number")->capture_default_str();
  sweep->add_option("--max-generators", sweep_opt.max_generators, "Largest number of ideal generators")
      ->capture_default_str();
  sweep->add_option("--exponent-bound", sweep_opt.exponent_bound, "Largest generator exponent (0: c + m - 1)");
  sweep->add_option("--random", sweep_opt.random_ideals, "Random 2-generated ideals")->capture_default_str();
  sweep->add_option("--samples", sweep_opt.samples, "General samples")->capture_default_str();
  sweep->add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  sweep->add_flag("--serial", serial, "Use the serial reference loop");
  sweep->add_flag("--no-timing", no_timing, "Omit the runtime column");
  sweep->add_flag("--no-precision-check", no_precision, "Skip recomputing staircases at doubled precision");
  add_common(sweep, sweep_opt.seed, sweep_out);

  std::uint64_t reproduce_seed = 1;
  Output reproduce_out;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute every claim of the worked examples");
  add_common(reproduce, reproduce_seed, reproduce_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      return run_analyze(flags, input, ideal_text, generator_texts, reduction_texts, semigroup_text, analyze_out,
                         analyze_seed->count() > 0 || std::getenv("GRLAB_SEED") != nullptr,
                         samples_opt->count() > 0, field_opt->count() > 0, depth_opt->count() > 0);
    }
    if (*sweep) {
      sweep_opt.check_precision = !no_precision;
      return run_sweep(sweep_opt, serial, threads, !no_timing, sweep_out);
    }
    return run_reproduce(reproduce_seed, reproduce_out);
  } catch (const grlab::Error& e) {
    std::cerr << "grlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "grlab: " << e.what() << "\n";
    return kExitInput;
  }
}
