#include "grlab/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "grlab/errors.hpp"

namespace grlab {

namespace {

template <class Field>
void check_same_context(const ContextPtr<Field>& a, const ContextPtr<Field>& b) {
  if (a != b) throw Error(ErrorCode::ContextMismatch, "ideals belong to different ring contexts");
}

// Coefficients of t^shift * f in columns [lo, hi).
template <class Field>
std::vector<typename Field::Element> shifted_vector(const TruncatedSeries<Field>& f, int shift, int lo, int hi) {
  const auto& field = f.context()->field;
  std::vector<typename Field::Element> v(static_cast<std::size_t>(std::max(0, hi - lo)), field.zero());
  for (const auto& term : f.terms()) {
    const int e = term.exponent + shift;
    if (e >= hi) break;
    if (e >= lo) v[static_cast<std::size_t>(e - lo)] = term.coeff;
  }
  return v;
}

}  // namespace

template <class Field>
Ideal<Field>::Ideal(ContextPtr<Field> ctx, Space window)
    : ctx_(std::move(ctx)), vmin_(window.lo()), window_(std::move(window)) {
  if (window_.hi() > ctx_->precision) {
    throw Error(ErrorCode::PrecisionExhausted, "ideal window reaches t^" + std::to_string(window_.hi()) +
                                                   " beyond precision " + std::to_string(ctx_->precision));
  }
  staircase_ = ValuationSet(window_.pivots(), window_.hi(), true);
  const auto& field = ctx_->field;
  monomial_ = std::all_of(window_.rows().begin(), window_.rows().end(), [&](const auto& row) {
    return std::count_if(row.begin(), row.end(), [&](const Element& e) { return !field.is_zero(e); }) == 1;
  });
}

template <class Field>
Ideal<Field> Ideal<Field>::from_generators(const ContextPtr<Field>& ctx, const std::vector<Series>& gens) {
  int vmin = kInfiniteValuation;
  for (const Series& g : gens) {
    check_same_context(ctx, g.context());
    vmin = std::min(vmin, g.valuation());
  }
  if (vmin == kInfiniteValuation) throw Error(ErrorCode::InvalidInput, "an ideal needs a nonzero generator");
  const int conductor = ctx->semigroup.conductor();
  const int cut = vmin + conductor + 1;
  if (cut > ctx->precision) {
    throw Error(ErrorCode::PrecisionExhausted, "ideal of order " + std::to_string(vmin) +
                                                   " needs precision above " + std::to_string(cut - 1));
  }
  Space space(ctx->field, vmin, cut);
  const std::vector<int> shifts = ctx->semigroup.elements_in(0, cut - vmin);
  for (const Series& g : gens) {
    if (g.is_zero()) continue;
    if (g.precision() < vmin + conductor) {
      throw Error(ErrorCode::PrecisionExhausted, "generator " + g.to_string() + " is known only modulo t^" +
                                                     std::to_string(g.precision()));
    }
    for (int s : shifts) {
      if (g.valuation() + s >= cut) break;
      space.insert(shifted_vector(g, s, vmin, cut));
    }
  }
  return Ideal(ctx, std::move(space));
}

template <class Field>
Ideal<Field> Ideal<Field>::monomial(const ContextPtr<Field>& ctx, std::span<const int> exps) {
  std::vector<Series> gens;
  for (int e : exps) gens.push_back(Series::monomial(ctx, e));
  return from_generators(ctx, gens);
}

template <class Field>
Ideal<Field> Ideal<Field>::unit(const ContextPtr<Field>& ctx) {
  const int zero[] = {0};
  return monomial(ctx, zero);
}

template <class Field>
Ideal<Field> Ideal<Field>::principal(const Series& f) {
  return from_generators(f.context(), {f});
}

template <class Field>
Ideal<Field> Ideal<Field>::from_span(const ContextPtr<Field>& ctx, const Space& w) {
  const auto& sg = ctx->semigroup;
  int vmin;
  if (!w.pivots().empty()) {
    vmin = w.pivots().front();
  } else {
    vmin = std::max(w.hi(), 0);
    while (!sg.contains(vmin)) ++vmin;
  }
  const int cut = vmin + sg.conductor() + 1;
  Space space(ctx->field, vmin, cut);
  for (const auto& row : w.rows()) {
    auto v = space.zero_vector();
    for (int e = std::max(vmin, w.lo()); e < std::min(cut, w.hi()); ++e) {
      v[static_cast<std::size_t>(e - vmin)] = row[static_cast<std::size_t>(e - w.lo())];
    }
    space.insert(std::move(v));
  }
  for (int s : sg.elements_in(std::max(w.hi(), vmin), cut)) {
    auto v = space.zero_vector();
    v[static_cast<std::size_t>(s - vmin)] = ctx->field.one();
    space.insert(std::move(v));
  }
  return Ideal(ctx, std::move(space));
}

template <class Field>
typename Ideal<Field>::Series Ideal<Field>::row_to_series(const ContextPtr<Field>& ctx, const Space& space,
                                                          std::size_t row, int precision) {
  std::vector<std::pair<int, Element>> terms;
  const auto& r = space.rows()[row];
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!ctx->field.is_zero(r[k])) terms.emplace_back(space.lo() + static_cast<int>(k), r[k]);
  }
  return Series::from_terms(ctx, std::move(terms), precision);
}

template <class Field>
std::vector<typename Ideal<Field>::Series> Ideal<Field>::generators() const {
  const auto& sg = ctx_->semigroup;
  const auto& piv = window_.pivots();
  std::vector<Series> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < i && !redundant; ++j) redundant = sg.contains(piv[i] - piv[j]);
    if (!redundant) out.push_back(row_to_series(ctx_, window_, i, cut()));
  }
  return out;
}

template <class Field>
typename Ideal<Field>::Space Ideal<Field>::window(int lo, int hi) const {
  Space out(ctx_->field, lo, hi);
  const auto& piv = window_.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] < lo || piv[i] >= hi) continue;
    auto v = out.zero_vector();
    const auto& row = window_.rows()[i];
    for (int e = std::max(lo, vmin_); e < std::min(hi, cut()); ++e) {
      v[static_cast<std::size_t>(e - lo)] = row[static_cast<std::size_t>(e - vmin_)];
    }
    out.insert(std::move(v));
  }
  for (int s = std::max(lo, cut()); s < hi; ++s) {
    auto v = out.zero_vector();
    v[static_cast<std::size_t>(s - lo)] = ctx_->field.one();
    out.insert(std::move(v));
  }
  return out;
}

template <class Field>
bool Ideal<Field>::contains(const Series& f) const {
  check_same_context(ctx_, f.context());
  if (f.is_zero()) return true;
  const int needed = vmin_ + ctx_->semigroup.conductor();
  if (f.valuation() >= needed) return true;
  if (f.precision() < needed) {
    throw Error(ErrorCode::PrecisionSuspect, "element known only modulo t^" + std::to_string(f.precision()) +
                                                 ", membership needs t^" + std::to_string(needed));
  }
  if (f.valuation() < vmin_) return false;
  return window_.is_member(shifted_vector(f, 0, vmin_, cut()));
}

template <class Field>
std::string Ideal<Field>::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].to_string();
  }
  os << ')';
  return os.str();
}

template <class Field>
Ideal<Field> Ideal<Field>::rebased(const ContextPtr<Field>& other) const {
  if (!(other->semigroup == ctx_->semigroup) || !(other->field == ctx_->field)) {
    throw Error(ErrorCode::ContextMismatch, "rebasing needs the same semigroup and field");
  }
  std::vector<Series> gens;
  for (const Series& g : generators()) {
    std::vector<std::pair<int, Element>> terms;
    for (const auto& t : g.terms()) terms.emplace_back(t.exponent, t.coeff);
    gens.push_back(Series::from_terms(other, std::move(terms)));
  }
  return Ideal::from_generators(other, gens);
}

template <class Field>
Ideal<Field> product(const Ideal<Field>& a, const Ideal<Field>& b) {
  check_same_context(a.context(), b.context());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<TruncatedSeries<Field>> gens;
  const auto ga = a.generators();
  const auto gb = b.generators();
  for (const auto& f : ga) {
    for (const auto& g : gb) gens.push_back(f * g);
  }
  return Ideal<Field>::from_generators(a.context(), gens);
}

template <class Field>
Ideal<Field> power(const Ideal<Field>& a, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidInput, "negative ideal power");
  Ideal<Field> out = Ideal<Field>::unit(a.context());
  for (int i = 0; i < j; ++i) out = product(out, a);
  return out;
}

template <class Field>
Ideal<Field> sum(const Ideal<Field>& a, const Ideal<Field>& b) {
  check_same_context(a.context(), b.context());
  auto gens = a.generators();
  for (auto& g : b.generators()) gens.push_back(std::move(g));
  return Ideal<Field>::from_generators(a.context(), gens);
}

template <class Field>
Ideal<Field> intersection(const Ideal<Field>& a, const Ideal<Field>& b) {
  check_same_context(a.context(), b.context());
  const int lo = std::max(a.min_valuation(), b.min_valuation());
  const int hi = std::max(a.cut(), b.cut());
  const auto wa = a.window(lo, hi);
  const auto wb = b.window(lo, hi);
  const auto& field = a.context()->field;
  std::vector<std::vector<typename Field::Element>> residues;
  for (auto row : wa.rows()) {
    wb.reduce(row);
    residues.push_back(std::move(row));
  }
  EchelonSpace<Field> common(field, lo, hi);
  for (const auto& combo : kernel_combinations(field, residues)) {
    auto v = common.zero_vector();
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (field.is_zero(combo[i])) continue;
      const auto& row = wa.rows()[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = field.add(v[k], field.mul(combo[i], row[k]));
    }
    common.insert(std::move(v));
  }
  return Ideal<Field>::from_span(a.context(), common);
}

namespace {

// {f : f·g ∈ a for every g in gens}, where the gens generate an ideal of order vb.
template <class Field>
Ideal<Field> colon_by_generators(const Ideal<Field>& a, const std::vector<TruncatedSeries<Field>>& gens, int vb) {
  const auto& ctx = a.context();
  const auto& field = ctx->field;
  const int bound = a.cut() - vb;  // every f of order >= bound qualifies
  if (bound <= 0) return Ideal<Field>::unit(ctx);
  const int lo = std::min(a.min_valuation(), vb);
  const auto wa = a.window(lo, a.cut());
  const std::vector<int> unknowns = ctx->semigroup.elements_in(0, bound);
  std::vector<std::vector<typename Field::Element>> residues;
  for (int s : unknowns) {
    std::vector<typename Field::Element> stacked;
    for (const auto& g : gens) {
      auto v = shifted_vector(g, s, lo, a.cut());
      wa.reduce(v);
      stacked.insert(stacked.end(), v.begin(), v.end());
    }
    residues.push_back(std::move(stacked));
  }
  EchelonSpace<Field> solutions(field, 0, bound);
  for (const auto& combo : kernel_combinations(field, residues)) {
    auto v = solutions.zero_vector();
    for (std::size_t i = 0; i < combo.size(); ++i) v[static_cast<std::size_t>(unknowns[i])] = combo[i];
    solutions.insert(std::move(v));
  }
  return Ideal<Field>::from_span(ctx, solutions);
}

}  // namespace

template <class Field>
Ideal<Field> colon(const Ideal<Field>& a, const Ideal<Field>& b) {
  check_same_context(a.context(), b.context());
  return colon_by_generators(a, b.generators(), b.min_valuation());
}

template <class Field>
Ideal<Field> colon(const Ideal<Field>& a, const TruncatedSeries<Field>& f) {
  check_same_context(a.context(), f.context());
  if (f.is_zero()) throw Error(ErrorCode::ZeroDivisor, "colon by the zero element");
  if (f.precision() < f.valuation() + a.context()->semigroup.conductor()) {
    throw Error(ErrorCode::PrecisionSuspect, "divisor " + f.to_string() + " is not known far enough");
  }
  return colon_by_generators(a, {f.truncated(a.cut())}, f.valuation());
}

template <class Field>
bool contains_ideal(const Ideal<Field>& a, const Ideal<Field>& b) {
  check_same_context(a.context(), b.context());
  if (b.min_valuation() < a.min_valuation()) return false;
  if (!vset_includes(a.staircase(), b.staircase())) return false;
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  return true;
}

template <class Field>
std::size_t length_quotient(const Ideal<Field>& a, const Ideal<Field>& b) {
  if (!contains_ideal(a, b)) {
    throw Error(ErrorCode::NotContained, b.to_string() + " is not contained in " + a.to_string());
  }
  return vset_diff_count(a.staircase(), b.staircase());
}

template <class Field>
std::size_t colength(const Ideal<Field>& a) {
  const int zero[] = {0};
  return vset_diff_count(vset_of_monomial_ideal(a.context()->semigroup, zero), a.staircase());
}

template <class Field>
int reduction_number_from_valuations(const Ideal<Field>& a) {
  const std::size_t e = static_cast<std::size_t>(a.min_valuation());
  if (e == 0) return 0;
  Ideal<Field> current = Ideal<Field>::unit(a.context());
  std::size_t current_colength = 0;
  // In dimension one the reduction number is below e.
  for (int r = 0; r <= static_cast<int>(e); ++r) {
    Ideal<Field> next = product(current, a);
    const std::size_t next_colength = colength(next);
    if (next_colength - current_colength == e) return r;
    current = std::move(next);
    current_colength = next_colength;
  }
  throw Error(ErrorCode::NoStabilization, "powers of " + a.to_string() + " never reached colength growth e");
}

template <class Field>
Ideal<Field> ratliff_rush(const Ideal<Field>& a) {
  if (a.is_unit()) return a;
  const int e = a.min_valuation();
  const int r = reduction_number_from_valuations(a);
  // a^{n+1} : a^n is ascending in n and constant once n >= r.
  Ideal<Field> lower = a;  // a^n
  Ideal<Field> upper = product(a, a);
  Ideal<Field> previous = colon(upper, lower);
  for (int n = 2;; ++n) {
    if (n > e + 2) throw Error(ErrorCode::NoStabilization, "closure of " + a.to_string() + " did not settle");
    lower = upper;
    upper = product(upper, a);
    Ideal<Field> current = colon(upper, lower);
    if (n > r && current == previous) return current;
    previous = std::move(current);
  }
}

#define GRLAB_INSTANTIATE_IDEAL(F)                                                    \
  template class Ideal<F>;                                                            \
  template Ideal<F> product(const Ideal<F>&, const Ideal<F>&);                        \
  template Ideal<F> power(const Ideal<F>&, int);                                      \
  template Ideal<F> sum(const Ideal<F>&, const Ideal<F>&);                            \
  template Ideal<F> intersection(const Ideal<F>&, const Ideal<F>&);                   \
  template Ideal<F> colon(const Ideal<F>&, const Ideal<F>&);                          \
  template Ideal<F> colon(const Ideal<F>&, const TruncatedSeries<F>&);                \
  template bool contains_ideal(const Ideal<F>&, const Ideal<F>&);                     \
  template std::size_t length_quotient(const Ideal<F>&, const Ideal<F>&);             \
  template std::size_t colength(const Ideal<F>&);                                     \
  template int reduction_number_from_valuations(const Ideal<F>&);                     \
  template Ideal<F> ratliff_rush(const Ideal<F>&);

GRLAB_INSTANTIATE_IDEAL(PrimeField)
GRLAB_INSTANTIATE_IDEAL(RationalField)

#undef GRLAB_INSTANTIATE_IDEAL

}  // namespace grlab
