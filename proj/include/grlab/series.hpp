#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grlab/errors.hpp"
#include "grlab/field.hpp"
#include "grlab/semigroup.hpp"

namespace grlab {

/// The local ring k[[t^S]] as seen by one computation: semigroup, coefficient
/// field, global truncation precision and the base seed for sampling.
template <class Field>
struct RingContext {
  NumericalSemigroup semigroup;
  Field field;
  int precision = 0;
  std::uint64_t seed = 1;
};

template <class Field>
using ContextPtr = std::shared_ptr<const RingContext<Field>>;

template <class Field>
ContextPtr<Field> make_context(NumericalSemigroup s, Field f, int precision, std::uint64_t seed = 1) {
  if (precision <= s.conductor()) {
    throw Error(ErrorCode::InvalidInput, "precision must exceed the conductor");
  }
  return std::make_shared<const RingContext<Field>>(RingContext<Field>{std::move(s), std::move(f), precision, seed});
}

inline constexpr int kInfiniteValuation = INT_MAX;

/// An element of k[[t^S]] known modulo t^precision.
///
/// Terms are kept sorted by exponent with no zero coefficients; every exponent
/// lies in S and below the precision.
template <class Field>
class TruncatedSeries {
 public:
  using Element = typename Field::Element;
  struct Term {
    int exponent;
    Element coeff;
  };

  explicit TruncatedSeries(ContextPtr<Field> ctx) : ctx_(std::move(ctx)), precision_(ctx_->precision) {}

  static TruncatedSeries zero(ContextPtr<Field> ctx) { return TruncatedSeries(std::move(ctx)); }

  static TruncatedSeries monomial(ContextPtr<Field> ctx, int exponent) {
    const Element one = ctx->field.one();
    return from_terms(std::move(ctx), {{exponent, one}});
  }

  /// Duplicate exponents are summed; exponents at or above the precision are
  /// dropped. Throws NotInRing for exponents outside S.
  static TruncatedSeries from_terms(ContextPtr<Field> ctx, std::vector<std::pair<int, Element>> terms,
                                    int precision = -1) {
    TruncatedSeries out(std::move(ctx));
    if (precision >= 0) out.precision_ = std::min(precision, out.ctx_->precision);
    const auto& field = out.ctx_->field;
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [e, c] : terms) {
      if (!out.ctx_->semigroup.contains(e)) {
        throw Error(ErrorCode::NotInRing, "t^" + std::to_string(e) + " is not in " + out.ctx_->semigroup.label());
      }
      if (e >= out.precision_) continue;
      if (!out.terms_.empty() && out.terms_.back().exponent == e) {
        out.terms_.back().coeff = field.add(out.terms_.back().coeff, c);
      } else {
        out.terms_.push_back({e, c});
      }
    }
    out.drop_zeros();
    return out;
  }

  const ContextPtr<Field>& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int precision() const noexcept { return precision_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Minimum exponent, kInfiniteValuation for the zero truncation.
  int valuation() const noexcept { return terms_.empty() ? kInfiniteValuation : terms_.front().exponent; }

  /// A valuation this close to the precision may be an artefact of truncation.
  bool precision_suspect() const noexcept {
    const long v = terms_.empty() ? static_cast<long>(precision_) : terms_.front().exponent;
    return v >= static_cast<long>(precision_) - ctx_->semigroup.conductor();
  }

  Element coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.exponent < e; });
    return (it != terms_.end() && it->exponent == exponent) ? it->coeff : ctx_->field.zero();
  }

  const Element& leading_coeff() const { return terms_.front().coeff; }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.back().exponent; }

  TruncatedSeries truncated(int n) const {
    TruncatedSeries out(*this);
    out.precision_ = std::min(precision_, n);
    while (!out.terms_.empty() && out.terms_.back().exponent >= out.precision_) out.terms_.pop_back();
    return out;
  }

  TruncatedSeries scaled(const Element& c) const {
    TruncatedSeries out(*this);
    for (auto& t : out.terms_) t.coeff = ctx_->field.mul(t.coeff, c);
    out.drop_zeros();
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    return combine(f, g, false);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    return combine(f, g, true);
  }

  /// Convolution product; precision = min(N_f + v(g), N_g + v(f), N_ctx).
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_context(f, g);
    const auto& ctx = f.ctx_;
    const long vf = f.is_zero() ? static_cast<long>(f.precision_) : f.valuation();
    const long vg = g.is_zero() ? static_cast<long>(g.precision_) : g.valuation();
    long prec = std::min<long>({f.precision_ + vg, g.precision_ + vf, ctx->precision});
    TruncatedSeries out(ctx);
    out.precision_ = static_cast<int>(prec);
    if (f.is_zero() || g.is_zero()) return out;
    const auto& field = ctx->field;
    const long lo = vf + vg;
    const long hi = std::min<long>(prec, static_cast<long>(f.degree()) + g.degree() + 1);
    if (hi <= lo) return out;
    std::vector<Element> acc(static_cast<std::size_t>(hi - lo), field.zero());
    for (const Term& a : f.terms_) {
      for (const Term& b : g.terms_) {
        const long e = static_cast<long>(a.exponent) + b.exponent;
        if (e >= hi) break;
        auto& slot = acc[static_cast<std::size_t>(e - lo)];
        slot = field.add(slot, field.mul(a.coeff, b.coeff));
      }
    }
    for (long e = lo; e < hi; ++e) {
      const auto& c = acc[static_cast<std::size_t>(e - lo)];
      if (field.is_zero(c)) continue;
      if (!ctx->semigroup.contains(e)) {
        throw Error(ErrorCode::NotInRing, "product left the semigroup ring at t^" + std::to_string(e));
      }
      out.terms_.push_back({static_cast<int>(e), c});
    }
    return out;
  }

  /// Same context and same terms (precision is not compared).
  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.ctx_ != g.ctx_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i) {
      if (f.terms_[i].exponent != g.terms_[i].exponent ||
          !f.ctx_->field.equal(f.terms_[i].coeff, g.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& field = ctx_->field;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) os << " + ";
      if (!field.equal(terms_[i].coeff, field.one())) os << field.to_string(terms_[i].coeff) << '*';
      os << "t^" << terms_[i].exponent;
    }
    return os.str();
  }

 private:
  static void check_same_context(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.ctx_ != g.ctx_) throw Error(ErrorCode::ContextMismatch, "series belong to different ring contexts");
  }

  static TruncatedSeries combine(const TruncatedSeries& f, const TruncatedSeries& g, bool subtract) {
    check_same_context(f, g);
    const auto& field = f.ctx_->field;
    TruncatedSeries out(f.ctx_);
    out.precision_ = std::min(f.precision_, g.precision_);
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() || j < g.terms_.size()) {
      const int ef = i < f.terms_.size() ? f.terms_[i].exponent : INT_MAX;
      const int eg = j < g.terms_.size() ? g.terms_[j].exponent : INT_MAX;
      const int e = std::min(ef, eg);
      if (e >= out.precision_) break;
      Element c = field.zero();
      if (ef == e) c = f.terms_[i++].coeff;
      if (eg == e) {
        const Element& d = g.terms_[j++].coeff;
        c = subtract ? field.sub(c, d) : field.add(c, d);
      }
      if (!field.is_zero(c)) out.terms_.push_back({e, std::move(c)});
    }
    return out;
  }

  void drop_zeros() {
    const auto& field = ctx_->field;
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [&](const Term& t) { return field.is_zero(t.coeff); }),
                 terms_.end());
  }

  ContextPtr<Field> ctx_;
  std::vector<Term> terms_;
  int precision_;
};

}  // namespace grlab
