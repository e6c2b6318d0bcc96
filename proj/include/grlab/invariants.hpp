#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grlab/ideal.hpp"

namespace grlab {

inline constexpr int kDefaultSamples = 5;
inline constexpr int kMaxSampleAttempts = 5;

/// Powers of one ideal, computed on demand and kept for reuse.
template <class Field>
class PowerTower {
 public:
  explicit PowerTower(Ideal<Field> base) : powers_{Ideal<Field>::unit(base.context()), std::move(base)} {}

  const Ideal<Field>& base() const noexcept { return powers_[1]; }
  const Ideal<Field>& operator[](int j) {
    while (static_cast<int>(powers_.size()) <= j) powers_.push_back(product(powers_.back(), powers_[1]));
    return powers_[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<Ideal<Field>> powers_;
};

/// x = Σ coefficients[i] · (i-th minimal generator of I).
template <class Field>
struct GeneralElementSample {
  std::vector<typename Field::Element> coefficients;
  TruncatedSeries<Field> element;
  std::uint64_t seed;
  int resamples;
};

/// Draws uniformly random nonzero coefficients until x has valuation e(I) and
/// satisfies I^{r+1} = xI^r for some r <= e(I). Throws NotAReduction after
/// kMaxSampleAttempts failed draws and InvalidInput for the unit ideal.
template <class Field>
GeneralElementSample<Field> sample_general_reduction(const Ideal<Field>& ideal, std::uint64_t seed);

/// Everything that depends on the choice of a principal reduction (x).
/// Sequences are indexed from 1 unless stated otherwise; index 0 is unused and
/// holds 0 so that entry j is the value at j.
struct ReductionProfile {
  std::string label;
  std::string element;
  int reduction_number = 0;  // least r with I^{r+1} = xI^r
  int nilpotency_index = 0;  // least s with I^{s+1} ⊆ (x)
  std::vector<std::size_t> graded;               // λ(I^j / (xI^{j-1} + I^{j+1}))
  std::vector<std::size_t> power_excess;         // λ(I^j / x^j R)
  std::vector<std::size_t> intersection_excess;  // from j = 0: λ(((x) ∩ I^{j+1}) / xI^j)
  std::size_t tau = 0;                           // λ((((x) : I) ∩ I) / (x))
  std::size_t hf2 = 0;                           // λ((I^2 + (x)) / (I^3 + (x)))
  bool stretched_a = false;                      // (x) ∩ I^2 = xI
  bool stretched_b = false;                      // hf2 <= 1
  bool stretched = false;
  bool vv_regular = false;         // (x) ∩ I^{j+1} = xI^j for all j
  std::vector<bool> vv_contained;   // from j = 0 to K: I^{K+1} ⊆ xI^j
  std::vector<bool> vv_equalities;  // from j = 0 to K: (x) ∩ I^{n+1} = xI^n for all n <= j
  bool k_power_outside = false;    // I^K ⊄ (x)
  bool k_next_inside = false;      // I^{K+1} ⊆ (x)
  bool k_contained_lower = false;  // I^{K+1} ⊆ xI^{K-1}
  std::size_t k_top_length = 0;    // λ(I^K / xI^{K-1})
  bool k_power_equality = false;   // I^{K+1} = xI^K
};

struct InvariantOptions {
  int samples = kDefaultSamples;
  /// Minimum number of terms in the per-reduction sequences; the computation
  /// always extends them past the reduction number and K.
  int depth = 0;
  /// Seed for general-element sampling; sample i uses a seed derived from it.
  std::uint64_t seed = 1;
  bool ratliff_rush = true;
};

struct InvariantReport {
  std::string semigroup;
  std::vector<int> semigroup_generators;
  std::string ideal;
  bool ideal_is_monomial = false;
  std::string field;
  int precision = 0;
  std::uint64_t seed = 0;
  int samples = 0;

  int e = 0;
  int j_mult = 0;
  std::size_t colength = 0;
  std::vector<std::size_t> hf;  // HF(0), HF(1), ...
  int hf_stabilization = 0;
  int r_general = 0;
  int s_general = 0;
  int K = 0;
  std::vector<std::size_t> nu;  // ν_j = λ(I^{j+1} / xI^j) from j = 0
  long h = 0;
  std::size_t tau = 0;
  std::string ratliff_rush;
  bool ratliff_rush_closed = false;

  ReductionProfile general;
  std::vector<ReductionProfile> sampled;
  std::vector<ReductionProfile> named;
  std::vector<std::string> warnings;
};

/// λ(I^j / I^{j+1}) for j = 0..j_max.
template <class Field>
std::vector<std::size_t> hilbert_function(const Ideal<Field>& ideal, int j_max);

/// e(I) = min v(I) = λ(R/xR) for any reduction x.
template <class Field>
int multiplicity(const Ideal<Field>& ideal);

/// Least r <= e(I)+1 with I^{r+1} = xI^r; BoundExceeded otherwise.
template <class Field>
int reduction_number(const Ideal<Field>& ideal, const TruncatedSeries<Field>& x);

/// Least s <= e(I)+1 with I^{s+1} ⊆ (x); BoundExceeded otherwise.
template <class Field>
int nilpotency_index(const Ideal<Field>& ideal, const TruncatedSeries<Field>& x);

/// λ(I/I^2) - λ(R/I).
template <class Field>
long embedding_codimension(const Ideal<Field>& ideal);

/// Profile of I with respect to the principal reduction (x). Throws
/// NotAReduction unless x ∈ I has valuation e(I). `k_value` is K; the
/// sequences run at least to max(depth, K, r + 1).
template <class Field>
ReductionProfile profile_reduction(PowerTower<Field>& tower, const TruncatedSeries<Field>& x, std::string label,
                                   int depth, int k_value);

/// Consensus of sampled profiles: the common value when all samples agree,
/// otherwise the minimum of each length (booleans come from the sample with
/// the smallest total length), with one warning per disagreeing field.
ReductionProfile consensus_profile(const std::vector<ReductionProfile>& samples, std::vector<std::string>& warnings);

/// Full report. `named` lists specific reductions to profile besides the
/// defaults (t^e when it lies in I, and the leading generator of a
/// non-monomial ideal).
template <class Field>
InvariantReport compute_invariants(const Ideal<Field>& ideal, const InvariantOptions& options,
                                   const std::vector<std::pair<std::string, TruncatedSeries<Field>>>& named = {});

/// Seed of the i-th general sample drawn from a base seed.
std::uint64_t sample_seed(std::uint64_t base, int index) noexcept;

}  // namespace grlab
