#include "grlab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grlab/errors.hpp"

namespace grlab {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidInput, "semigroup needs at least one generator");
  std::vector<int> g(gens.begin(), gens.end());
  for (int a : g) {
    if (a <= 0) throw Error(ErrorCode::InvalidInput, "semigroup generators must be positive");
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  int d = 0;
  for (int a : g) d = std::gcd(d, a);
  if (d != 1) {
    throw Error(ErrorCode::NotCofinite,
                "gcd of generators is " + std::to_string(d) + ", complement is infinite");
  }

  // Every integer >= (min-1)(max-1) is representable when gcd = 1, so a
  // closure up to min*max decides all gaps.
  const long bound = static_cast<long>(g.front()) * g.back() + 1;
  std::vector<bool> in(static_cast<std::size_t>(bound), false);
  in[0] = true;
  for (long n = 1; n < bound; ++n) {
    for (int a : g) {
      if (a > n) break;
      if (in[static_cast<std::size_t>(n - a)]) {
        in[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  NumericalSemigroup s;
  s.generators_ = g;
  for (long n = 1; n < bound; ++n) {
    if (!in[static_cast<std::size_t>(n)]) s.gaps_.push_back(static_cast<int>(n));
  }
  s.finish_from_gaps();
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  NumericalSemigroup s;
  s.gaps_.assign(gaps.begin(), gaps.end());
  std::sort(s.gaps_.begin(), s.gaps_.end());
  s.gaps_.erase(std::unique(s.gaps_.begin(), s.gaps_.end()), s.gaps_.end());
  if (!s.gaps_.empty() && s.gaps_.front() <= 0) {
    throw Error(ErrorCode::InvalidInput, "gaps must be positive");
  }
  s.finish_from_gaps();
  // Closure check: a + b with a, b in S must avoid the gaps.
  for (int gap : s.gaps_) {
    for (int a = 1; a < gap; ++a) {
      if (s.contains(a) && s.contains(gap - a)) {
        throw Error(ErrorCode::InvalidInput, "gap set is not the complement of a semigroup");
      }
    }
  }
  s.generators_ = s.minimal_generators_;
  return s;
}

void NumericalSemigroup::finish_from_gaps() {
  conductor_ = gaps_.empty() ? 0 : gaps_.back() + 1;
  member_.assign(static_cast<std::size_t>(conductor_), true);
  for (int gap : gaps_) member_[static_cast<std::size_t>(gap)] = false;

  // Minimal generators lie in [m, conductor + m].
  int m = 1;
  while (!contains(m)) ++m;
  minimal_generators_.clear();
  for (int n = m; n <= conductor_ + m; ++n) {
    if (!contains(n)) continue;
    bool decomposable = false;
    for (int a = m; a <= n - m && !decomposable; ++a) {
      decomposable = contains(a) && contains(n - a);
    }
    if (!decomposable) minimal_generators_.push_back(n);
  }
}

bool NumericalSemigroup::contains(long n) const noexcept {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return member_[static_cast<std::size_t>(n)];
}

std::vector<int> NumericalSemigroup::elements_in(int lo, int hi) const {
  std::vector<int> out;
  for (int n = std::max(lo, 0); n < hi; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::string NumericalSemigroup::label() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
    if (i) os << ',';
    os << minimal_generators_[i];
  }
  os << '>';
  return os.str();
}

std::vector<NumericalSemigroup> semigroups_up_to_frobenius(int max_frobenius, std::size_t limit) {
  std::vector<NumericalSemigroup> out;
  std::vector<std::vector<int>> stack{{}};
  while (!stack.empty()) {
    std::vector<int> gaps = std::move(stack.back());
    stack.pop_back();
    NumericalSemigroup s = NumericalSemigroup::from_gaps(gaps);
    for (int g : s.minimal_generators()) {
      if (g > s.frobenius() && g <= max_frobenius) {
        std::vector<int> child = gaps;
        child.push_back(g);
        stack.push_back(std::move(child));
      }
    }
    out.push_back(std::move(s));
    if (out.size() > limit) {
      throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(limit) + " semigroups with Frobenius number <= " +
                                                std::to_string(max_frobenius));
    }
  }
  std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.frobenius() != b.frobenius()) return a.frobenius() < b.frobenius();
    return a.minimal_generators() < b.minimal_generators();
  });
  return out;
}

// ---------------------------------------------------------------------------

ValuationSet::ValuationSet(std::vector<int> elements_below, int threshold, bool eventually_full)
    : elements_(std::move(elements_below)), threshold_(threshold), full_(eventually_full) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && (elements_.front() < 0 || elements_.back() >= threshold_)) {
    throw Error(ErrorCode::InvalidInput, "valuation set elements must lie in [0, threshold)");
  }
}

bool ValuationSet::contains(int n) const {
  if (n < 0) return false;
  if (n >= threshold_) {
    if (!full_) throw Error(ErrorCode::InvalidInput, "membership above threshold is undefined");
    return true;
  }
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

ValuationSet ValuationSet::with_threshold(int new_threshold) const {
  if (new_threshold >= threshold_) {
    if (!full_ && new_threshold > threshold_) {
      throw Error(ErrorCode::InvalidInput, "cannot extend a set with an undefined tail");
    }
    std::vector<int> e = elements_;
    for (int n = threshold_; n < new_threshold; ++n) e.push_back(n);
    return ValuationSet(std::move(e), new_threshold, full_);
  }
  // Lowering is only meaningful when everything in [new, old) is present.
  for (int n = new_threshold; n < threshold_; ++n) {
    if (!contains(n)) throw Error(ErrorCode::InvalidInput, "set is not full above the new threshold");
  }
  std::vector<int> e;
  for (int v : elements_) {
    if (v < new_threshold) e.push_back(v);
  }
  return ValuationSet(std::move(e), new_threshold, full_);
}

bool operator==(const ValuationSet& a, const ValuationSet& b) {
  if (a.full_ != b.full_) return false;
  if (!a.full_) return a.threshold_ == b.threshold_ && a.elements_ == b.elements_;
  const int t = std::max(a.threshold_, b.threshold_);
  return a.with_threshold(t).elements_ == b.with_threshold(t).elements_;
}

std::vector<int> ValuationSet::elements_in(int lo, int hi) const {
  std::vector<int> out;
  for (int n = std::max(lo, 0); n < hi; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::string ValuationSet::to_string() const {
  std::ostringstream os;
  os << '{';
  // Drop the full run just below the threshold for a compact rendering.
  int start = threshold_;
  if (full_) {
    while (start > 0 && std::binary_search(elements_.begin(), elements_.end(), start - 1)) --start;
  }
  bool first = true;
  for (int v : elements_) {
    if (v >= start) break;
    os << (first ? "" : ",") << v;
    first = false;
  }
  if (full_) os << (first ? "" : ",") << start << ",...";
  os << '}';
  return os.str();
}

ValuationSet vset_of_monomial_ideal(const NumericalSemigroup& s, std::span<const int> exps) {
  if (exps.empty()) throw Error(ErrorCode::InvalidInput, "monomial ideal needs at least one exponent");
  int top = 0;
  for (int a : exps) {
    if (!s.contains(a)) {
      throw Error(ErrorCode::NotInRing, "t^" + std::to_string(a) + " is not in " + s.label());
    }
    top = std::max(top, a);
  }
  const int threshold = top + s.conductor() + 1;
  std::vector<int> below;
  for (int n = 0; n < threshold; ++n) {
    for (int a : exps) {
      if (s.contains(static_cast<long>(n) - a)) {
        below.push_back(n);
        break;
      }
    }
  }
  return ValuationSet(std::move(below), threshold, true);
}

ValuationSet vset_sum(const ValuationSet& a, const ValuationSet& b) {
  if (!a.eventually_full() || !b.eventually_full()) {
    throw Error(ErrorCode::InvalidInput, "vset_sum needs eventually full operands");
  }
  const int threshold = a.threshold() + b.threshold();
  std::vector<int> below;
  for (int n = 0; n < threshold; ++n) {
    bool hit = false;
    for (int y : b.elements_below()) {
      if (y > n) break;
      if (a.contains(n - y)) {
        hit = true;
        break;
      }
    }
    // b's tail: any y >= b.threshold with n - y in a.
    for (int y = b.threshold(); !hit && y <= n; ++y) hit = a.contains(n - y);
    if (hit) below.push_back(n);
  }
  return ValuationSet(std::move(below), threshold, true);
}

bool vset_includes(const ValuationSet& a, const ValuationSet& b) {
  if (!b.eventually_full()) {
    throw Error(ErrorCode::InvalidInput, "containment check needs eventually full sets");
  }
  if (!a.eventually_full()) return false;
  const int t = std::max(a.threshold(), b.threshold());
  for (int n = 0; n < t; ++n) {
    if (b.contains(n) && !a.contains(n)) return false;
  }
  return true;
}

std::size_t vset_diff_count(const ValuationSet& a, const ValuationSet& b) {
  if (!vset_includes(a, b)) throw Error(ErrorCode::NotContained, "second set is not inside the first");
  const int t = std::max(a.threshold(), b.threshold());
  std::size_t count = 0;
  for (int n = 0; n < t; ++n) {
    if (a.contains(n) && !b.contains(n)) ++count;
  }
  return count;
}

}  // namespace grlab
