#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace grlab {

/// A numerical semigroup S ⊆ ℕ (0 ∈ S, additively closed, finite complement).
///
/// Membership is stored as a flag table up to the conductor; everything at or
/// above the conductor belongs to S. Values are immutable after construction.
class NumericalSemigroup {
 public:
  /// S = <gens>. Throws NotCofinite when gcd(gens) != 1 and InvalidInput for
  /// an empty list or non-positive entries.
  static NumericalSemigroup from_generators(std::span<const int> gens);

  /// The semigroup whose gap set is exactly `gaps`. Throws InvalidInput when
  /// ℕ \ gaps is not additively closed.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  bool contains(long n) const noexcept;

  /// Generators as supplied (sorted, deduplicated).
  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::vector<int>& minimal_generators() const noexcept { return minimal_generators_; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }

  /// Largest gap, or -1 when S = ℕ.
  int frobenius() const noexcept { return conductor_ - 1; }
  int conductor() const noexcept { return conductor_; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  /// Smallest nonzero element.
  int multiplicity() const noexcept { return minimal_generators_.front(); }
  int max_minimal_generator() const noexcept { return minimal_generators_.back(); }

  /// Elements of S in [lo, hi), ascending.
  std::vector<int> elements_in(int lo, int hi) const;

  /// "<3,4,5>" using the minimal generators.
  std::string label() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gaps_ == b.gaps_;
  }

 private:
  NumericalSemigroup() = default;
  void finish_from_gaps();

  std::vector<int> generators_;
  std::vector<int> minimal_generators_;
  std::vector<int> gaps_;
  std::vector<bool> member_;  // indices [0, conductor)
  int conductor_ = 0;
};

/// All numerical semigroups with Frobenius number <= max_frobenius, ordered by
/// (Frobenius, minimal generators). Walks the tree whose edges remove a minimal
/// generator exceeding the parent's Frobenius number. Throws BoundExceeded once
/// more than `limit` semigroups have been found.
std::vector<NumericalSemigroup> semigroups_up_to_frobenius(int max_frobenius,
                                                           std::size_t limit = SIZE_MAX);

/// A cofinite-above-threshold set of integers: the valuation set v(I) of a
/// fractional ideal. Below `threshold` membership is explicit; at or above it
/// membership is "all" when eventually_full and undefined otherwise.
class ValuationSet {
 public:
  ValuationSet() = default;
  ValuationSet(std::vector<int> elements_below, int threshold, bool eventually_full);

  /// Throws InvalidInput for queries at or above an undefined tail.
  bool contains(int n) const;

  const std::vector<int>& elements_below() const noexcept { return elements_; }
  int threshold() const noexcept { return threshold_; }
  bool eventually_full() const noexcept { return full_; }

  /// Smallest element, or `threshold` when nothing lies below it.
  int min_element() const noexcept { return elements_.empty() ? threshold_ : elements_.front(); }

  /// The same set with an explicit listing up to `new_threshold`.
  ValuationSet with_threshold(int new_threshold) const;

  /// Set equality (thresholds are normalized before comparing).
  friend bool operator==(const ValuationSet& a, const ValuationSet& b);

  /// Elements in [lo, hi).
  std::vector<int> elements_in(int lo, int hi) const;

  std::string to_string() const;

 private:
  std::vector<int> elements_;
  int threshold_ = 0;
  bool full_ = false;
};

/// v((t^a1, ..., t^ak)) = ∪ (ai + S). Throws NotInRing for exponents outside S.
ValuationSet vset_of_monomial_ideal(const NumericalSemigroup& s, std::span<const int> exps);

/// Minkowski sum {a + b}; both operands must be eventually full.
ValuationSet vset_sum(const ValuationSet& a, const ValuationSet& b);

/// True when b ⊆ a.
bool vset_includes(const ValuationSet& a, const ValuationSet& b);

/// |a \ b| for b ⊆ a; throws NotContained otherwise.
std::size_t vset_diff_count(const ValuationSet& a, const ValuationSet& b);

}  // namespace grlab
