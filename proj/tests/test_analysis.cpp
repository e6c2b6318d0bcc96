#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "grlab/errors.hpp"
#include "grlab/golden.hpp"
#include "grlab/report.hpp"
#include "grlab/sweep.hpp"

using namespace grlab;

namespace {

AnalysisRequest monomial_request(std::vector<int> gens, std::vector<int> exps) {
  AnalysisRequest req;
  req.semigroup = std::move(gens);
  req.monomial_exponents = std::move(exps);
  return req;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("parsing flags") {
  CHECK(parse_int_list("3,4, 5", "--semigroup") == std::vector<int>{3, 4, 5});
  CHECK(code_of([] { parse_int_list("3,x", "--semigroup"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_int_list("", "--ideal"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_int_list("3,,4", "--ideal"); }) == ErrorCode::InvalidInput);
  const auto t = parse_terms("3:1,4:-2/3,7", "--generator");
  REQUIRE(t.size() == 3);
  CHECK(t[1] == std::pair<int, std::string>{4, "-2/3"});
  CHECK(t[2] == std::pair<int, std::string>{7, "1"});
  CHECK(format_terms(t) == "3:1,4:-2/3,7:1");
  CHECK(code_of([] { parse_terms("3:", "--generator"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("analyze (t^3, t^4) in <3,4,5>") {
  const auto res = analyze(monomial_request({3, 4, 5}, {3, 4}));
  CHECK(res.report.e == 3);
  CHECK(res.report.r_general == 2);
  CHECK(res.report.s_general == 1);
  CHECK(res.classification.is_j_stretched);
  CHECK_FALSE(res.classification.stretched_general);
  CHECK(res.classification.gr_depth == 0);
}

TEST_CASE("analyze (t^7, t^9) in <7,9,10>") {
  auto req = monomial_request({7, 9, 10}, {7, 9});
  req.depth = 8;
  const auto res = analyze(req);
  const ReductionProfile* h = nullptr;
  for (const auto& p : res.report.named) {
    if (p.label == "t^7") h = &p;
  }
  REQUIRE(h != nullptr);
  CHECK(h->graded[2] == 1);
  CHECK(h->graded[3] == 1);
  CHECK(h->graded[4] == 1);
  CHECK(h->graded[5] == 0);
}

TEST_CASE("analyze the regular ring") {
  const auto res = analyze(monomial_request({1}, {1}));
  CHECK(res.report.e == 1);
  CHECK(res.classification.gr_depth == 1);
  CHECK(res.classification.has_min_jmult);
  CHECK(res.classification.has_almost_min_jmult);
  CHECK(res.classification.has_almost_almost_min_jmult);
}

TEST_CASE("analysis input errors") {
  CHECK(code_of([] { analyze(monomial_request({4, 6}, {4})); }) == ErrorCode::NotCofinite);
  CHECK(code_of([] { analyze(monomial_request({3, 4, 5}, {2})); }) == ErrorCode::NotInRing);
  CHECK(code_of([] { analyze(monomial_request({3, 4, 5}, {})); }) == ErrorCode::InvalidInput);
  auto bad_field = monomial_request({3, 4, 5}, {3});
  bad_field.field = "91";
  CHECK(code_of([&] { analyze(bad_field); }) == ErrorCode::InvalidInput);
  auto not_reduction = monomial_request({3, 4, 5}, {3, 4});
  not_reduction.reductions = {parse_terms("4:1", "--reduction")};
  CHECK(code_of([&] { analyze(not_reduction); }) == ErrorCode::NotAReduction);
}

TEST_CASE("explicit generators over Q and F_p agree on lengths") {
  AnalysisRequest req;
  req.semigroup = {3, 4, 5};
  req.generators = {parse_terms("3:1,4:2", "g"), parse_terms("5:1/2", "g")};
  const auto fp = analyze(req);
  req.field = "Q";
  const auto q = analyze(req);
  CHECK(q.report.field == "Q");
  CHECK(fp.report.e == q.report.e);
  CHECK(fp.report.colength == q.report.colength);
  CHECK(fp.report.hf == q.report.hf);
  CHECK(fp.report.nu == q.report.nu);
  CHECK(fp.classification.gr_depth == q.classification.gr_depth);
}

TEST_CASE("long sequences fit the precision budget") {
  auto req = monomial_request({7, 9, 10}, {7, 9});
  req.depth = 30;
  const auto res = analyze(req);
  CHECK(res.report.precision >= initial_precision(req));
  CHECK(res.report.general.graded.size() > 30);
  CHECK(staircase_stable(req));
}

TEST_CASE("report document") {
  const auto res = analyze(monomial_request({3, 4, 5}, {3, 4}));
  const auto doc = report_document(res);
  CHECK(doc["schema"] == "grlab-report/1");
  CHECK(doc["report"]["e"] == 3);
  CHECK(doc["report"]["r_general"] == 2);
  CHECK(doc["classification"]["is_j_stretched"] == true);
  CHECK(doc["classification"]["gr_depth"] == 0);
  CHECK(doc["classification"]["checks"].size() == std::size(kCheckNames));
  CHECK(doc["falsified"] == true);
  // Same request and seed: byte-identical output.
  CHECK(report_document(analyze(monomial_request({3, 4, 5}, {3, 4}))).dump() == doc.dump());
}

TEST_CASE("declarative requests") {
  const auto doc = nlohmann::json::parse(
      R"({"semigroup": [3,4,5], "generators": ["3:1,5:2", "4"], "reductions": ["3:1"], "field": "Q",
          "seed": 7, "samples": 3, "depth": 4})");
  const auto req = request_from_json(doc);
  CHECK(req.semigroup == std::vector<int>{3, 4, 5});
  CHECK(req.generators.size() == 2);
  CHECK(req.reductions.size() == 1);
  CHECK(req.field == "Q");
  CHECK(req.seed == 7);
  CHECK(req.samples == 3);
  CHECK(req.depth == 4);
  CHECK(request_from_json(nlohmann::json::parse(R"({"field": 101})")).field == "101");
  CHECK(code_of([] { request_from_json(nlohmann::json::parse(R"({"semigroup": "3,4"})")); }) ==
        ErrorCode::InvalidInput);
  CHECK(code_of([] { request_from_json(nlohmann::json::parse("[1]")); }) == ErrorCode::InvalidInput);
}

TEST_CASE("corpus enumeration") {
  SweepOptions opt;
  opt.random_ideals = 0;
  opt.max_frobenius = 0;
  opt.max_generators = 2;
  auto corpus = build_corpus(opt);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].semigroup == std::vector<int>{1});
  CHECK(corpus[0].exponents == std::vector<int>{1});
  for (const auto& row : sweep_serial(corpus, opt)) CHECK(row.gr_depth == 1);

  opt.max_frobenius = 2;
  corpus = build_corpus(opt);
  std::set<std::vector<int>> semigroups;
  for (const auto& e : corpus) semigroups.insert(e.semigroup);
  CHECK(semigroups == std::set<std::vector<int>>{{1}, {2, 3}, {3, 4, 5}});
  const auto rows = sweep_serial(corpus, opt);
  for (const auto& row : rows) CHECK(row.status == "ok");
  CHECK(summarize(rows).falsified.count("theorem_cm") == 0);

  // Antichains only: t^6 = t^3 · t^3 is redundant next to t^3.
  const auto ideals = monomial_ideals(NumericalSemigroup::from_generators(std::vector<int>{3, 4, 5}), 3, 8);
  for (const auto& exps : ideals) CHECK_FALSE((exps.size() >= 2 && exps[0] == 3 && exps[1] == 6));
  CHECK(std::find(ideals.begin(), ideals.end(), std::vector<int>{3, 4, 5}) != ideals.end());
  CHECK(std::find(ideals.begin(), ideals.end(), std::vector<int>{4, 5, 6}) != ideals.end());
}

TEST_CASE("random part of the corpus is reproducible") {
  SweepOptions opt;
  opt.max_frobenius = 4;
  opt.random_ideals = 10;
  const auto a = build_corpus(opt);
  const auto b = build_corpus(opt);
  REQUIRE(a.size() == b.size());
  std::size_t random = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].generators == b[i].generators);
    random += !a[i].generators.empty();
  }
  CHECK(random == 10);
}

TEST_CASE("serial and OpenMP sweeps give the same rows") {
  SweepOptions opt;
  opt.max_frobenius = 5;
  opt.random_ideals = 20;
  const auto corpus = build_corpus(opt);
  const auto serial = sweep_serial(corpus, opt);
  const auto parallel = sweep_parallel(corpus, opt, 3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    INFO(serial[i].semigroup << " " << serial[i].ideal);
    CHECK(serial[i].same_result(parallel[i]));
    CHECK(csv_row(serial[i], false) == csv_row(parallel[i], false));
  }
}

TEST_CASE("sweep rows agree with analyze") {
  const CorpusEntry entry{{7, 9, 10}, {7, 9}, {}};
  SweepOptions opt;
  const auto row = run_entry(entry, opt);
  const auto direct = summarize(analyze(make_request(entry, opt)));
  CHECK(row.same_result(direct));
  CHECK(row.precision_stable);
  CHECK(row.jmult == "almost_almost");
}

TEST_CASE("errors become rows") {
  const CorpusEntry entry{{3, 4, 5}, {2}, {}};
  const auto row = run_entry(entry, SweepOptions{});
  CHECK(row.status.find("NotInRing") != std::string::npos);
  CHECK(row.ideal == "(t^2)");
  CHECK(summarize(std::vector<SweepRow>{row}).errors == 1);
}

TEST_CASE("csv layout") {
  const auto header = csv_header();
  CHECK(header.rfind("semigroup,ideal,monomial,status,e,", 0) == 0);
  CHECK(header.find(",theorem_cm,") != std::string::npos);
  CHECK(header.substr(header.size() - 11) == ",runtime_ms");
  const auto row = summarize(analyze(monomial_request({3, 4, 5}, {3, 4})));
  const auto line = csv_row(row, false);
  CHECK(line.rfind("\"<3,4,5>\",\"(t^3, t^4)\",1,ok,3,", 0) == 0);
  CHECK(std::count(line.begin(), line.end(), ',') >= std::count(header.begin(), header.end(), ',') - 1);
  const auto doc = sweep_document({row}, false);
  CHECK(doc["rows"][0]["semigroup"] == "<3,4,5>");
  CHECK(doc["rows"][0]["ideal"] == "(t^3, t^4)");
  CHECK(doc["rows"][0]["corollary_k"] == "FALSIFIED");
}

TEST_CASE("worked examples") {
  const auto claims = reproduce_examples();
  auto find = [&](const std::string& example, const std::string& claim) -> const GoldenClaim& {
    for (const auto& c : claims) {
      if (c.example == example && c.claim == claim) return c;
    }
    FAIL("missing claim " << example << " / " << claim);
    return claims.front();
  };
  for (const char* ex : {"consecutive <3,4,5> (t^3,t^4)", "consecutive <6,7,8,9,10,11> (t^6,t^7,t^8,t^9,t^10)"}) {
    CHECK(find(ex, "λ(I^2/HI)").pass);
    CHECK(find(ex, "s_H").pass);
    CHECK(find(ex, "r_H").pass);
    CHECK(find(ex, "j-stretched").pass);
  }
  CHECK(find("sporadic <7,9,10> (t^7,t^9)", "λ(I^4/(HI^3 + I^5))").pass);
  CHECK(find("sporadic <7,9,10> (t^7,t^9)", "t^36 ∈ I^4 \\ (HI^3 + I^5)").pass);
  // I^2 = t^3 m ⊆ (t^3) forces s_H = 1 in <3,4,5>.
  CHECK(find("three-generator <3,4,5> (t^3,t^4)", "s_H").computed == "1");
  CHECK(find("three-generator <3,4,5> (t^3,t^4)", "identical to the consecutive family at n = 3").pass);
  CHECK(find("sporadic <5,7,8> (t^5,t^7)", "j-multiplicity (one less than for (t^7,t^9) in <7,9,10>)").computed ==
        "5");
  const auto table = format_claims(claims);
  CHECK(table.find("claims reproduced") != std::string::npos);
}
