#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grlab/invariants.hpp"

namespace grlab {

enum class JMultClass { Minimal, AlmostMinimal, AlmostAlmost, None };
enum class Verdict { Consistent, Falsified, HypothesisNotMet };

std::string_view to_string(JMultClass c) noexcept;
std::string_view to_string(Verdict v) noexcept;

/// One executable statement: its hypotheses were checked first, then both
/// sides of the conclusion were recomputed.
struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::HypothesisNotMet;
  std::string detail;
};

struct Classification {
  bool is_j_stretched = false;
  bool has_min_jmult = false;
  bool has_almost_min_jmult = false;
  bool has_almost_almost_min_jmult = false;
  JMultClass jmult = JMultClass::None;
  std::vector<std::pair<std::string, bool>> stretched_wrt;  // named reductions
  bool stretched_general = false;
  int gr_depth = 0;
  bool gr_is_cm = false;
  std::vector<CheckResult> checks;

  const CheckResult* check(std::string_view name) const;
  bool consistent(std::string_view name) const;
  bool any_falsified() const;
};

/// Names of the checks, in report order.
inline constexpr std::string_view kCheckNames[] = {
    "theorem_cm",        // gr CM ⟺ r = s, for j-stretched I
    "theorem_cm_c",      // I^{K+1} = HI^K for a tested H ⟹ gr CM and r = s
    "corollary_k",       // K = ν_1 + 1, I^K ⊄ (x), I^{K+1} ⊆ (x)
    "non_increasing",    // ν_j <= ν_{j-1} for j >= 2
    "structure",         // ν_1 <= 1 ⟹ ν_j <= 1; graded pieces of R/(x) past degree 1 are <= 1
    "vv_biconditional",  // I^{K+1} ⊆ xI^j ⟺ (x) ∩ I^{n+1} = xI^n for n <= j, j = 1..K
    "corollary47",       // I^{K+1} ⊆ xI^{K-1} ⟺ λ(I^K/xI^{K-1}) = 1
    "smalltype",         // τ < h + 1 - λ(R/I) ⟹ ν_2 = K - 2 and (x) ∩ I^3 = xI^2
    "sally",             // stretched for some tested H ⟹ stretched for every sample
    "equiv",             // gr CM ⟹ (j-stretched ⟺ stretched)
    "generic_lengths",   // graded and power lengths for H >= general values
    "intersections",     // λ(((x) ∩ I^2)/xI) <= λ((H ∩ I^2)/HI)
    "nilpotency",        // s_H <= s_general
    "class_lattice",     // minimal ⟹ almost ⟹ almost-almost; stretched ⟹ j-stretched
    "ratliff_rush",      // gr CM ⟹ I is Ratliff-Rush closed
    "multiplicity",      // e = λ(I/xI) = λ(R/I) + h + ν_1 and HF settles at e
};

JMultClass jmult_class(const InvariantReport& report);
bool is_j_stretched(const InvariantReport& report);
/// gr depth in dimension one: 1 iff the general initial form is regular.
int gr_depth_dim1(const InvariantReport& report);

/// Runs every classification and check on a computed report.
Classification classify(const InvariantReport& report);

}  // namespace grlab
