#include "grlab/classifiers.hpp"

#include <algorithm>
#include <sstream>

namespace grlab {

std::string_view to_string(JMultClass c) noexcept {
  switch (c) {
    case JMultClass::Minimal: return "minimal";
    case JMultClass::AlmostMinimal: return "almost_minimal";
    case JMultClass::AlmostAlmost: return "almost_almost";
    case JMultClass::None: return "none";
  }
  return "none";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Falsified: return "falsified";
    case Verdict::HypothesisNotMet: return "hypothesis_not_met";
  }
  return "hypothesis_not_met";
}

const CheckResult* Classification::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Classification::consistent(std::string_view name) const {
  const CheckResult* c = check(name);
  return c == nullptr || c->verdict != Verdict::Falsified;
}

bool Classification::any_falsified() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.verdict == Verdict::Falsified; });
}

JMultClass jmult_class(const InvariantReport& report) {
  switch (report.nu.at(1)) {
    case 0: return JMultClass::Minimal;
    case 1: return JMultClass::AlmostMinimal;
    case 2: return JMultClass::AlmostAlmost;
    default: return JMultClass::None;
  }
}

bool is_j_stretched(const InvariantReport& report) { return report.general.graded.at(2) <= 1; }

int gr_depth_dim1(const InvariantReport& report) { return report.general.vv_regular ? 1 : 0; }

namespace {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  CheckBuilder& skip(const std::string& why) {
    result_.verdict = Verdict::HypothesisNotMet;
    result_.detail = why;
    done_ = true;
    return *this;
  }

  /// Records a conclusion; the first failing one decides the detail text.
  CheckBuilder& expect(bool ok, const std::string& what) {
    if (done_) return *this;
    if (!ok) {
      result_.verdict = Verdict::Falsified;
      result_.detail = what;
      done_ = true;
    }
    return *this;
  }

  CheckResult finish(const std::string& summary = "") {
    if (!done_) {
      result_.verdict = Verdict::Consistent;
      result_.detail = summary;
    }
    return result_;
  }

 private:
  CheckResult result_;
  bool done_ = false;
};

std::string num(std::size_t v) { return std::to_string(v); }

}  // namespace

Classification classify(const InvariantReport& rep) {
  Classification c;
  const ReductionProfile& gen = rep.general;
  const std::size_t nu1 = rep.nu.at(1);
  const int k = rep.K;

  c.is_j_stretched = is_j_stretched(rep);
  c.jmult = jmult_class(rep);
  c.has_min_jmult = nu1 == 0;
  c.has_almost_min_jmult = nu1 <= 1;
  c.has_almost_almost_min_jmult = nu1 <= 2;
  for (const auto& p : rep.named) c.stretched_wrt.emplace_back(p.label, p.stretched);
  c.stretched_general = gen.stretched;
  c.gr_depth = gr_depth_dim1(rep);
  c.gr_is_cm = c.gr_depth == 1;

  const bool js = c.is_j_stretched;
  const bool non_minimal = nu1 >= 1;
  const std::string not_js = "I is not j-stretched";
  const std::string minimal = "I has minimal j-multiplicity";

  {
    CheckBuilder b("theorem_cm");
    if (!js) b.skip(not_js);
    const bool a = c.gr_is_cm;
    const bool rs = rep.r_general == rep.s_general;
    b.expect(a == rs, std::string("gr depth ") + std::to_string(c.gr_depth) + " but r = " +
                          std::to_string(rep.r_general) + ", s = " + std::to_string(rep.s_general));
    c.checks.push_back(b.finish(a ? "gr CM and r = s" : "gr not CM and r != s"));
  }
  {
    CheckBuilder b("theorem_cm_c");
    if (!js) b.skip(not_js);
    std::string witness;
    for (const auto* list : {&rep.named, &rep.sampled}) {
      for (const auto& p : *list) {
        if (witness.empty() && p.k_power_equality) witness = p.label;
      }
    }
    if (witness.empty()) b.skip("I^{K+1} = HI^K not witnessed by a tested reduction");
    b.expect(c.gr_is_cm && rep.r_general == rep.s_general,
             "I^{K+1} = HI^K for H = " + witness + " (K = " + std::to_string(k) + ") but gr depth " +
                 std::to_string(c.gr_depth) + ", r = " + std::to_string(rep.r_general) +
                 ", s = " + std::to_string(rep.s_general));
    c.checks.push_back(b.finish("witness " + witness));
  }
  {
    CheckBuilder b("corollary_k");
    if (!js) b.skip(not_js);
    if (!non_minimal) b.skip(minimal);
    b.expect(k >= 2, "K < 2");
    b.expect(gen.k_power_outside, "I^K ⊆ (x) with K = " + std::to_string(k));
    b.expect(gen.k_next_inside, "I^{K+1} ⊄ (x) with K = " + std::to_string(k));
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("non_increasing");
    if (!js) b.skip(not_js);
    for (std::size_t j = 2; j < rep.nu.size(); ++j) {
      b.expect(rep.nu[j] <= rep.nu[j - 1], "ν_" + num(j) + " = " + num(rep.nu[j]) + " > ν_" + num(j - 1) + " = " +
                                               num(rep.nu[j - 1]));
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("structure");
    if (!js) b.skip(not_js);
    if (!non_minimal) b.skip(minimal);
    for (std::size_t j = 2; j < gen.graded.size(); ++j) {
      b.expect(gen.graded[j] <= 1, "λ(I^j/(xI^{j-1}+I^{j+1})) = " + num(gen.graded[j]) + " at j = " + num(j));
    }
    if (nu1 <= 1) {
      for (std::size_t j = 1; j < rep.nu.size(); ++j) b.expect(rep.nu[j] <= 1, "ν_" + num(j) + " > 1 with ν_1 <= 1");
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("vv_biconditional");
    if (!js) b.skip(not_js);
    for (int j = 1; j <= k && j < static_cast<int>(gen.vv_contained.size()); ++j) {
      const auto uj = static_cast<std::size_t>(j);
      b.expect(gen.vv_contained[uj] == gen.vv_equalities[uj],
               "j = " + std::to_string(j) + ": I^{K+1} ⊆ xI^j is " + (gen.vv_contained[uj] ? "true" : "false") +
                   " but the intersection equalities are " + (gen.vv_equalities[uj] ? "true" : "false"));
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("corollary47");
    if (!js) b.skip(not_js);
    if (!non_minimal) b.skip(minimal);
    b.expect(gen.k_contained_lower == (gen.k_top_length == 1),
             std::string("I^{K+1} ⊆ xI^{K-1} is ") + (gen.k_contained_lower ? "true" : "false") +
                 " but λ(I^K/xI^{K-1}) = " + num(gen.k_top_length));
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("smalltype");
    if (!js) b.skip(not_js);
    if (!non_minimal) b.skip(minimal);
    if (!gen.stretched_a) b.skip("(x) ∩ I^2 != xI");
    const long bound = rep.h + 1 - static_cast<long>(rep.colength);
    if (static_cast<long>(rep.tau) >= bound) {
      b.skip("τ = " + num(rep.tau) + " is not below h + 1 - λ(R/I) = " + std::to_string(bound));
    }
    b.expect(static_cast<long>(rep.nu.at(2)) == k - 2, "ν_2 = " + num(rep.nu.at(2)) + " but K - 2 = " +
                                                          std::to_string(k - 2));
    b.expect(gen.intersection_excess.at(2) == 0, "(x) ∩ I^3 != xI^2");
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("sally");
    std::string witness;
    for (const auto& p : rep.named) {
      if (witness.empty() && p.stretched) witness = p.label;
    }
    if (witness.empty()) b.skip("no tested reduction witnesses stretchedness");
    for (const auto& p : rep.sampled) {
      b.expect(p.stretched, "stretched for " + witness + " but not for " + p.label);
    }
    c.checks.push_back(b.finish("witness " + witness));
  }
  {
    CheckBuilder b("equiv");
    if (!c.gr_is_cm) b.skip("gr is not Cohen-Macaulay");
    b.expect(c.is_j_stretched == c.stretched_general,
             std::string("j-stretched ") + (c.is_j_stretched ? "true" : "false") + " but stretched " +
                 (c.stretched_general ? "true" : "false"));
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("generic_lengths");
    if (rep.named.empty()) b.skip("no specific reduction tested");
    for (const auto& p : rep.named) {
      for (std::size_t j = 1; j < std::min(p.graded.size(), gen.graded.size()); ++j) {
        b.expect(p.graded[j] >= gen.graded[j], p.label + ": graded length " + num(p.graded[j]) + " below general " +
                                                   num(gen.graded[j]) + " at j = " + num(j));
        b.expect(p.power_excess[j] >= gen.power_excess[j],
                 p.label + ": λ(I^j/H^j) below general at j = " + num(j));
      }
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("intersections");
    if (rep.named.empty()) b.skip("no specific reduction tested");
    for (const auto& p : rep.named) {
      b.expect(gen.intersection_excess.at(1) <= p.intersection_excess.at(1),
               p.label + ": λ((H ∩ I^2)/HI) = " + num(p.intersection_excess.at(1)) + " below general " +
                   num(gen.intersection_excess.at(1)));
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("nilpotency");
    if (rep.named.empty()) b.skip("no specific reduction tested");
    for (const auto& p : rep.named) {
      b.expect(p.nilpotency_index <= rep.s_general, p.label + ": s_H = " + std::to_string(p.nilpotency_index) +
                                                        " exceeds general s = " + std::to_string(rep.s_general));
    }
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("class_lattice");
    b.expect(!c.has_min_jmult || c.has_almost_min_jmult, "minimal but not almost minimal");
    b.expect(!c.has_almost_min_jmult || c.has_almost_almost_min_jmult, "almost minimal but not almost-almost");
    b.expect(!c.has_almost_min_jmult || c.is_j_stretched, "almost minimal but not j-stretched");
    b.expect(!c.has_almost_almost_min_jmult || k <= 3, "almost-almost minimal with K > 3");
    b.expect(!c.stretched_general || c.is_j_stretched, "stretched but not j-stretched");
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("ratliff_rush");
    if (!c.gr_is_cm) b.skip("gr is not Cohen-Macaulay");
    if (rep.ratliff_rush.empty()) b.skip("closure not computed");
    b.expect(rep.ratliff_rush_closed, "gr CM but the closure is " + rep.ratliff_rush);
    c.checks.push_back(b.finish());
  }
  {
    CheckBuilder b("multiplicity");
    b.expect(static_cast<long>(rep.e) == static_cast<long>(rep.colength) + rep.h + static_cast<long>(nu1),
             "e != λ(R/I) + h + ν_1");
    b.expect(rep.hf.back() == static_cast<std::size_t>(rep.e), "Hilbert function does not settle at e");
    b.expect(rep.hf_stabilization == rep.r_general, "Hilbert function settles at " +
                                                        std::to_string(rep.hf_stabilization) + ", not at r = " +
                                                        std::to_string(rep.r_general));
    c.checks.push_back(b.finish());
  }
  return c;
}

}  // namespace grlab
