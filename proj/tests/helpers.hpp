#pragma once

#include <initializer_list>
#include <vector>

#include "grlab/ideal.hpp"

namespace testing_helpers {

using Fp = grlab::PrimeField;
using Series = grlab::TruncatedSeries<Fp>;
using FpIdeal = grlab::Ideal<Fp>;

inline grlab::NumericalSemigroup semigroup(std::initializer_list<int> gens) {
  const std::vector<int> g(gens);
  return grlab::NumericalSemigroup::from_generators(g);
}

inline grlab::ContextPtr<Fp> context(std::initializer_list<int> gens, int precision = 200, std::uint64_t seed = 1) {
  return grlab::make_context(semigroup(gens), Fp(), precision, seed);
}

inline Series poly(const grlab::ContextPtr<Fp>& ctx, std::vector<std::pair<int, long>> terms) {
  std::vector<std::pair<int, Fp::Element>> t;
  for (auto [e, c] : terms) t.emplace_back(e, ctx->field.from_int(c));
  return Series::from_terms(ctx, std::move(t));
}

inline FpIdeal monomial(const grlab::ContextPtr<Fp>& ctx, std::vector<int> exps) {
  return FpIdeal::monomial(ctx, exps);
}

inline std::vector<int> below(const grlab::ValuationSet& v, int hi) { return v.elements_in(0, hi); }

}  // namespace testing_helpers
