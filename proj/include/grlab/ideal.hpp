#pragma once

#include <span>
#include <string>
#include <vector>

#include "grlab/echelon.hpp"
#include "grlab/semigroup.hpp"
#include "grlab/series.hpp"

namespace grlab {

/// A nonzero ideal of R = k[[t^S]].
///
/// Every nonzero ideal I contains all series of order >= v(I) + c, where
/// c is the conductor of S. An ideal is therefore stored as the subspace
/// I mod t^cut with cut = v(I) + c + 1, kept in reduced echelon form over the
/// window [v(I), cut). The echelon pivots are the valuation staircase below
/// cut; above it the staircase is full. The representation is canonical: two
/// ideals are equal exactly when their windows agree row for row.
template <class Field>
class Ideal {
 public:
  using Series = TruncatedSeries<Field>;
  using Space = EchelonSpace<Field>;
  using Element = typename Field::Element;

  /// Throws InvalidInput when every generator is zero, PrecisionExhausted when
  /// a generator is not known far enough to pin down the ideal or when the
  /// window does not fit under the context precision.
  static Ideal from_generators(const ContextPtr<Field>& ctx, const std::vector<Series>& gens);
  static Ideal monomial(const ContextPtr<Field>& ctx, std::span<const int> exps);
  static Ideal unit(const ContextPtr<Field>& ctx);
  static Ideal principal(const Series& f);
  /// The ideal span(w) + (all series of order >= w.hi()); w must span
  /// I mod t^hi restricted to orders >= w.lo().
  static Ideal from_span(const ContextPtr<Field>& ctx, const Space& w);

  const ContextPtr<Field>& context() const noexcept { return ctx_; }
  int min_valuation() const noexcept { return vmin_; }
  int cut() const noexcept { return window_.hi(); }
  const ValuationSet& staircase() const noexcept { return staircase_; }
  bool is_monomial() const noexcept { return monomial_; }
  bool is_unit() const noexcept { return vmin_ == 0; }

  /// Elements whose valuations generate v(I) as an S-module; they generate I.
  std::vector<Series> generators() const;

  /// (I ∩ t^{>=lo}) mod t^hi.
  Space window(int lo, int hi) const;

  /// f ∈ I. Throws PrecisionSuspect when f is not known up to cut().
  bool contains(const Series& f) const;

  /// Generator list, e.g. "(t^3, t^4)".
  std::string to_string() const;

  /// The same ideal rebuilt inside another context over the same semigroup
  /// and field (used for precision-doubling checks).
  Ideal rebased(const ContextPtr<Field>& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    if (a.ctx_ != b.ctx_ || a.vmin_ != b.vmin_ || a.window_.pivots() != b.window_.pivots()) return false;
    const auto& f = a.ctx_->field;
    for (std::size_t i = 0; i < a.window_.rows().size(); ++i) {
      const auto& ra = a.window_.rows()[i];
      const auto& rb = b.window_.rows()[i];
      for (std::size_t k = 0; k < ra.size(); ++k) {
        if (!f.equal(ra[k], rb[k])) return false;
      }
    }
    return true;
  }

 private:
  Ideal(ContextPtr<Field> ctx, Space window);
  static Series row_to_series(const ContextPtr<Field>& ctx, const Space& space, std::size_t row, int precision);

  ContextPtr<Field> ctx_;
  int vmin_;
  Space window_;
  ValuationSet staircase_;
  bool monomial_;
};

template <class Field>
Ideal<Field> product(const Ideal<Field>& a, const Ideal<Field>& b);

template <class Field>
Ideal<Field> power(const Ideal<Field>& a, int j);

template <class Field>
Ideal<Field> sum(const Ideal<Field>& a, const Ideal<Field>& b);

template <class Field>
Ideal<Field> intersection(const Ideal<Field>& a, const Ideal<Field>& b);

/// {f ∈ R : f·b ⊆ a}.
template <class Field>
Ideal<Field> colon(const Ideal<Field>& a, const Ideal<Field>& b);

/// a :_R (f). Throws ZeroDivisor when f is zero.
template <class Field>
Ideal<Field> colon(const Ideal<Field>& a, const TruncatedSeries<Field>& f);

/// b ⊆ a.
template <class Field>
bool contains_ideal(const Ideal<Field>& a, const Ideal<Field>& b);

/// λ(a/b) = |v(a) \ v(b)|; throws NotContained unless b ⊆ a.
template <class Field>
std::size_t length_quotient(const Ideal<Field>& a, const Ideal<Field>& b);

/// λ(R/a).
template <class Field>
std::size_t colength(const Ideal<Field>& a);

/// The reduction number of a read off the valuation sets of its powers:
/// least r with λ(R/a^{r+1}) = e + λ(R/a^r). Independent of the reduction.
template <class Field>
int reduction_number_from_valuations(const Ideal<Field>& a);

/// Ratliff-Rush closure ∪ (a^{n+1} : a^n).
template <class Field>
Ideal<Field> ratliff_rush(const Ideal<Field>& a);

}  // namespace grlab
