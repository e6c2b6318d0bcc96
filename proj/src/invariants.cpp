#include "grlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "grlab/errors.hpp"

namespace grlab {

std::uint64_t sample_seed(std::uint64_t base, int index) noexcept {
  // splitmix64 step so neighbouring base seeds give unrelated streams.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

template <class Field>
void require_proper(const Ideal<Field>& ideal) {
  if (ideal.is_unit()) throw Error(ErrorCode::InvalidInput, "the unit ideal has no proper reduction");
}

// Least r <= e+1 with I^{r+1} = xI^r, using cached powers.
template <class Field>
int reduction_number_in(PowerTower<Field>& tower, const Ideal<Field>& x_ideal) {
  const int bound = tower.base().min_valuation() + 1;
  for (int r = 0; r <= bound; ++r) {
    if (tower[r + 1] == product(x_ideal, tower[r])) return r;
  }
  throw Error(ErrorCode::BoundExceeded, "no reduction number up to e+1 for " + x_ideal.to_string());
}

template <class Field>
int nilpotency_index_in(PowerTower<Field>& tower, const Ideal<Field>& x_ideal) {
  const int bound = tower.base().min_valuation() + 1;
  for (int s = 0; s <= bound; ++s) {
    if (contains_ideal(x_ideal, tower[s + 1])) return s;
  }
  throw Error(ErrorCode::BoundExceeded, "no nilpotency index up to e+1 for " + x_ideal.to_string());
}

template <class Field>
GeneralElementSample<Field> sample_in(PowerTower<Field>& tower, std::uint64_t seed) {
  const Ideal<Field>& ideal = tower.base();
  require_proper(ideal);
  const auto& ctx = ideal.context();
  const auto gens = ideal.generators();
  std::mt19937_64 rng(seed);
  GeneralElementSample<Field> out{{}, TruncatedSeries<Field>::zero(ctx), seed, 0};
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    out.coefficients.clear();
    auto x = TruncatedSeries<Field>::zero(ctx).truncated(ideal.cut());
    for (const auto& g : gens) {
      out.coefficients.push_back(ctx->field.random_nonzero(rng));
      x = x + g.scaled(out.coefficients.back());
    }
    if (x.valuation() == ideal.min_valuation()) {
      try {
        reduction_number_in(tower, Ideal<Field>::principal(x));
        out.element = std::move(x);
        return out;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::BoundExceeded) throw;
      }
    }
    ++out.resamples;
  }
  throw Error(ErrorCode::NotAReduction, "no general reduction of " + ideal.to_string() + " after " +
                                            std::to_string(kMaxSampleAttempts) + " draws (seed " +
                                            std::to_string(seed) + ")");
}

std::size_t total_length(const ReductionProfile& p) {
  std::size_t t = p.tau + p.hf2 + static_cast<std::size_t>(p.nilpotency_index);
  for (auto v : p.graded) t += v;
  for (auto v : p.power_excess) t += v;
  for (auto v : p.intersection_excess) t += v;
  return t;
}

}  // namespace

template <class Field>
GeneralElementSample<Field> sample_general_reduction(const Ideal<Field>& ideal, std::uint64_t seed) {
  PowerTower<Field> tower(ideal);
  return sample_in(tower, seed);
}

template <class Field>
std::vector<std::size_t> hilbert_function(const Ideal<Field>& ideal, int j_max) {
  PowerTower<Field> tower(ideal);
  std::vector<std::size_t> hf;
  for (int j = 0; j <= j_max; ++j) hf.push_back(colength(tower[j + 1]) - colength(tower[j]));
  return hf;
}

template <class Field>
int multiplicity(const Ideal<Field>& ideal) {
  return ideal.min_valuation();
}

template <class Field>
int reduction_number(const Ideal<Field>& ideal, const TruncatedSeries<Field>& x) {
  PowerTower<Field> tower(ideal);
  return reduction_number_in(tower, Ideal<Field>::principal(x));
}

template <class Field>
int nilpotency_index(const Ideal<Field>& ideal, const TruncatedSeries<Field>& x) {
  PowerTower<Field> tower(ideal);
  return nilpotency_index_in(tower, Ideal<Field>::principal(x));
}

template <class Field>
long embedding_codimension(const Ideal<Field>& ideal) {
  const auto i2 = product(ideal, ideal);
  return static_cast<long>(length_quotient(ideal, i2)) - static_cast<long>(colength(ideal));
}

template <class Field>
ReductionProfile profile_reduction(PowerTower<Field>& tower, const TruncatedSeries<Field>& x, std::string label,
                                   int depth, int k_value) {
  const Ideal<Field>& ideal = tower.base();
  require_proper(ideal);
  if (x.valuation() != ideal.min_valuation() || !ideal.contains(x)) {
    throw Error(ErrorCode::NotAReduction, x.to_string() + " is not an element of order e(I) in " + ideal.to_string());
  }
  const auto xr = Ideal<Field>::principal(x);
  std::vector<Ideal<Field>> x_powers_of_i;  // xI^j
  auto x_times = [&](int j) -> const Ideal<Field>& {
    while (static_cast<int>(x_powers_of_i.size()) <= j) {
      x_powers_of_i.push_back(product(xr, tower[static_cast<int>(x_powers_of_i.size())]));
    }
    return x_powers_of_i[static_cast<std::size_t>(j)];
  };

  ReductionProfile p;
  p.label = std::move(label);
  p.element = x.to_string();
  p.reduction_number = reduction_number_in(tower, xr);
  p.nilpotency_index = nilpotency_index_in(tower, xr);
  const int len = std::max({depth, k_value, p.reduction_number + 1, 2});

  p.graded.assign(1, 0);
  p.power_excess.assign(1, 0);
  auto x_power = xr;
  for (int j = 1; j <= len; ++j) {
    p.graded.push_back(length_quotient(tower[j], sum(x_times(j - 1), tower[j + 1])));
    if (j > 1) x_power = product(x_power, xr);
    p.power_excess.push_back(length_quotient(tower[j], x_power));
  }
  for (int j = 0; j <= len; ++j) {
    p.intersection_excess.push_back(length_quotient(intersection(xr, tower[j + 1]), x_times(j)));
  }
  p.tau = length_quotient(intersection(colon(xr, ideal), ideal), xr);
  p.hf2 = length_quotient(sum(tower[2], xr), sum(tower[3], xr));
  p.stretched_a = p.intersection_excess[1] == 0;
  p.stretched_b = p.hf2 <= 1;
  p.stretched = p.stretched_a && p.stretched_b;
  p.vv_regular = std::all_of(p.intersection_excess.begin(),
                             p.intersection_excess.begin() + p.reduction_number + 2,
                             [](std::size_t v) { return v == 0; });

  if (k_value >= 1) {
    bool all_equal = true;
    for (int j = 0; j <= k_value; ++j) {
      p.vv_contained.push_back(contains_ideal(x_times(j), tower[k_value + 1]));
      all_equal = all_equal && p.intersection_excess[static_cast<std::size_t>(j)] == 0;
      p.vv_equalities.push_back(all_equal);
    }
    p.k_power_outside = !contains_ideal(xr, tower[k_value]);
    p.k_next_inside = contains_ideal(xr, tower[k_value + 1]);
    p.k_contained_lower = contains_ideal(x_times(k_value - 1), tower[k_value + 1]);
    p.k_top_length = length_quotient(tower[k_value], x_times(k_value - 1));
    p.k_power_equality = tower[k_value + 1] == x_times(k_value);
  }
  return p;
}

ReductionProfile consensus_profile(const std::vector<ReductionProfile>& samples, std::vector<std::string>& warnings) {
  if (samples.empty()) throw Error(ErrorCode::InvalidInput, "consensus over no samples");
  const auto best = std::min_element(samples.begin(), samples.end(), [](const auto& a, const auto& b) {
    return total_length(a) < total_length(b);
  });
  ReductionProfile out = *best;
  out.label = "general";
  bool disagreement = false;

  auto scalar = [&](const char* name, auto member) {
    auto lo = samples.front().*member;
    bool same = true;
    for (const auto& s : samples) {
      same = same && s.*member == lo;
      lo = std::min(lo, s.*member);
    }
    if (!same) {
      warnings.push_back(std::string("GenericityWarning: samples disagree on ") + name);
      disagreement = true;
    }
    out.*member = lo;
  };
  auto sequence = [&](const char* name, auto member) {
    auto lo = samples.front().*member;
    bool same = true;
    for (const auto& s : samples) {
      const auto& v = s.*member;
      same = same && v == lo;
      for (std::size_t k = 0; k < std::min(v.size(), lo.size()); ++k) lo[k] = std::min(lo[k], v[k]);
    }
    if (!same) {
      warnings.push_back(std::string("GenericityWarning: samples disagree on ") + name);
      disagreement = true;
    }
    out.*member = lo;
  };
  auto flag = [&](const char* name, auto member) {
    bool same = true;
    for (const auto& s : samples) same = same && s.*member == samples.front().*member;
    if (!same) {
      warnings.push_back(std::string("GenericityWarning: samples disagree on ") + name);
      disagreement = true;
    }
  };

  scalar("reduction_number", &ReductionProfile::reduction_number);
  scalar("nilpotency_index", &ReductionProfile::nilpotency_index);
  scalar("tau", &ReductionProfile::tau);
  scalar("hf2", &ReductionProfile::hf2);
  scalar("k_top_length", &ReductionProfile::k_top_length);
  sequence("graded", &ReductionProfile::graded);
  sequence("power_excess", &ReductionProfile::power_excess);
  sequence("intersection_excess", &ReductionProfile::intersection_excess);
  flag("vv_contained", &ReductionProfile::vv_contained);
  flag("vv_equalities", &ReductionProfile::vv_equalities);
  flag("k_power_outside", &ReductionProfile::k_power_outside);
  flag("k_next_inside", &ReductionProfile::k_next_inside);
  flag("k_contained_lower", &ReductionProfile::k_contained_lower);
  flag("k_power_equality", &ReductionProfile::k_power_equality);

  if (disagreement) {
    out.stretched_a = out.intersection_excess[1] == 0;
    out.stretched_b = out.hf2 <= 1;
    out.stretched = out.stretched_a && out.stretched_b;
    out.vv_regular = std::all_of(out.intersection_excess.begin(),
                                 out.intersection_excess.begin() + out.reduction_number + 2,
                                 [](std::size_t v) { return v == 0; });
  }
  return out;
}

template <class Field>
InvariantReport compute_invariants(const Ideal<Field>& ideal, const InvariantOptions& options,
                                   const std::vector<std::pair<std::string, TruncatedSeries<Field>>>& named) {
  require_proper(ideal);
  if (options.samples < 1) throw Error(ErrorCode::InvalidInput, "need at least one general sample");
  const auto& ctx = ideal.context();
  PowerTower<Field> tower(ideal);

  InvariantReport rep;
  rep.semigroup = ctx->semigroup.label();
  rep.semigroup_generators = ctx->semigroup.minimal_generators();
  rep.ideal = ideal.to_string();
  rep.ideal_is_monomial = ideal.is_monomial();
  rep.field = ctx->field.name();
  rep.precision = ctx->precision;
  rep.seed = options.seed;
  rep.samples = options.samples;

  const int e = multiplicity(ideal);
  rep.e = e;
  rep.j_mult = e;
  rep.colength = colength(ideal);

  // Colengths of powers give every reduction-independent length:
  // λ(I^{j+1}/xI^j) = e + λ(R/I^j) - λ(R/I^{j+1}).
  std::vector<std::size_t> colengths{0};
  auto colength_of = [&](int j) {
    while (static_cast<int>(colengths.size()) <= j) colengths.push_back(colength(tower[static_cast<int>(colengths.size())]));
    return colengths[static_cast<std::size_t>(j)];
  };
  int r = -1;
  for (int j = 0; j <= e + 1 && r < 0; ++j) {
    if (colength_of(j + 1) - colength_of(j) == static_cast<std::size_t>(e)) r = j;
  }
  if (r < 0) throw Error(ErrorCode::BoundExceeded, "colengths of powers of " + rep.ideal + " never grow by e");
  rep.r_general = r;
  const std::size_t nu1 = static_cast<std::size_t>(e) - (colength_of(2) - colength_of(1));
  rep.K = static_cast<int>(nu1) + 1;
  const int len = std::max({options.depth, rep.K, r + 1, 2});
  for (int j = 0; j <= len; ++j) {
    const std::size_t step = colength_of(j + 1) - colength_of(j);
    rep.hf.push_back(step);
    rep.nu.push_back(static_cast<std::size_t>(e) - step);
  }
  rep.h = static_cast<long>(rep.hf[1]) - static_cast<long>(rep.hf[0]);
  rep.hf_stabilization = static_cast<int>(rep.hf.size());
  while (rep.hf_stabilization > 0 && rep.hf[static_cast<std::size_t>(rep.hf_stabilization - 1)] == static_cast<std::size_t>(e)) {
    --rep.hf_stabilization;
  }
  if (rep.hf.back() != static_cast<std::size_t>(e)) {
    rep.warnings.push_back("ConsistencyFailure: Hilbert function does not settle at e");
  }

  for (int i = 0; i < options.samples; ++i) {
    const auto sample = sample_in(tower, sample_seed(options.seed, i));
    rep.sampled.push_back(
        profile_reduction(tower, sample.element, "sample " + std::to_string(i), len, rep.K));
    if (sample.resamples > 0) {
      rep.warnings.push_back("sample " + std::to_string(i) + " needed " + std::to_string(sample.resamples) +
                             " redraws");
    }
  }
  rep.general = consensus_profile(rep.sampled, rep.warnings);
  rep.s_general = rep.general.nilpotency_index;
  rep.tau = rep.general.tau;
  for (const auto& p : rep.sampled) {
    if (p.reduction_number != r) {
      rep.warnings.push_back("ConsistencyFailure: " + p.label + " has reduction number " +
                             std::to_string(p.reduction_number) + " but colengths give " + std::to_string(r));
    }
  }

  const auto lead = TruncatedSeries<Field>::monomial(ctx, e);
  if (ideal.contains(lead)) rep.named.push_back(profile_reduction(tower, lead, "t^" + std::to_string(e), len, rep.K));
  if (!ideal.is_monomial()) {
    const auto g = ideal.generators().front();
    if (!(g == lead)) rep.named.push_back(profile_reduction(tower, g, "leading generator", len, rep.K));
  }
  for (const auto& [label, h] : named) rep.named.push_back(profile_reduction(tower, h, label, len, rep.K));

  if (options.ratliff_rush) {
    const auto closure = ratliff_rush(ideal);
    rep.ratliff_rush = closure.to_string();
    rep.ratliff_rush_closed = closure == ideal;
  }
  return rep;
}

#define GRLAB_INSTANTIATE_INVARIANTS(F)                                                                      \
  template GeneralElementSample<F> sample_general_reduction(const Ideal<F>&, std::uint64_t);                 \
  template std::vector<std::size_t> hilbert_function(const Ideal<F>&, int);                                  \
  template int multiplicity(const Ideal<F>&);                                                                \
  template int reduction_number(const Ideal<F>&, const TruncatedSeries<F>&);                                 \
  template int nilpotency_index(const Ideal<F>&, const TruncatedSeries<F>&);                                 \
  template long embedding_codimension(const Ideal<F>&);                                                      \
  template ReductionProfile profile_reduction(PowerTower<F>&, const TruncatedSeries<F>&, std::string, int,   \
                                              int);                                                          \
  template InvariantReport compute_invariants(const Ideal<F>&, const InvariantOptions&,                      \
                                              const std::vector<std::pair<std::string, TruncatedSeries<F>>>&);

GRLAB_INSTANTIATE_INVARIANTS(PrimeField)
GRLAB_INSTANTIATE_INVARIANTS(RationalField)

#undef GRLAB_INSTANTIATE_INVARIANTS

}  // namespace grlab
