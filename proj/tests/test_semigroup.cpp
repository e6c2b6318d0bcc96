#include <doctest.h>

#include <numeric>

#include "grlab/errors.hpp"
#include "grlab/semigroup.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace grlab;
using testing_helpers::semigroup;

TEST_CASE("full semigroup") {
  const auto s = semigroup({1});
  CHECK(s.frobenius() == -1);
  CHECK(s.conductor() == 0);
  CHECK(s.gaps().empty());
  CHECK(s.minimal_generators() == std::vector<int>{1});
}

TEST_CASE("gaps of <3,4,5> and <7,9,10>") {
  const auto a = semigroup({3, 4, 5});
  CHECK(a.gaps() == std::vector<int>{1, 2});
  CHECK(a.frobenius() == 2);
  const auto b = semigroup({7, 9, 10});
  CHECK(b.frobenius() == 22);
  CHECK(b.genus() == 12);
  CHECK_FALSE(b.contains(22 - 7));
  CHECK_FALSE(b.contains(22 - 9));
  CHECK_FALSE(b.contains(22 - 10));
}

TEST_CASE("invalid generator lists") {
  const std::vector<int> even{4, 6};
  const std::vector<int> empty;
  const std::vector<int> negative{-3, 4};
  CHECK_THROWS_AS(NumericalSemigroup::from_generators(even), Error);
  try {
    NumericalSemigroup::from_generators(even);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCofinite);
  }
  try {
    NumericalSemigroup::from_generators(empty);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
  CHECK_THROWS_AS(NumericalSemigroup::from_generators(negative), Error);
}

TEST_CASE("minimal generators drop redundant input") {
  const auto s = semigroup({3, 4, 5, 6, 7, 8});
  CHECK(s.minimal_generators() == std::vector<int>{3, 4, 5});
  CHECK(s.label() == "<3,4,5>");
}

TEST_CASE("from_gaps round trip and rejection") {
  const std::vector<int> gaps{1, 2, 5};
  CHECK(NumericalSemigroup::from_gaps(gaps) == semigroup({3, 4}));
  for (const std::vector<int>& ok : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{1, 2, 4}, std::vector<int>{1, 3}}) {
    CHECK_NOTHROW(NumericalSemigroup::from_gaps(ok));
  }
  const std::vector<int> not_closed{1, 4};  // 2 + 2 = 4
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps(not_closed), Error);
}

TEST_CASE("semigroup tables agree with the dynamic-programming oracle") {
  for (const auto& s : semigroups_up_to_frobenius(12)) {
    const auto table = oracle::semigroup_table(s.minimal_generators(), 60);
    for (int n = 0; n < 60; ++n) CHECK(s.contains(n) == table[static_cast<std::size_t>(n)]);
    const auto gaps = s.gaps();
    CHECK(static_cast<int>(gaps.size()) == s.genus());
    if (!gaps.empty()) CHECK(gaps.back() == s.frobenius());
  }
}

TEST_CASE("enumeration by Frobenius number") {
  // Known counts of numerical semigroups by Frobenius number 1..12.
  const std::vector<std::size_t> per_frobenius{1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40};
  const auto all = semigroups_up_to_frobenius(12);
  CHECK(all.size() == 1 + std::accumulate(per_frobenius.begin(), per_frobenius.end(), std::size_t{0}));
  for (int f = 1; f <= 12; ++f) {
    const auto n = std::count_if(all.begin(), all.end(), [f](const auto& s) { return s.frobenius() == f; });
    CHECK(static_cast<std::size_t>(n) == per_frobenius[static_cast<std::size_t>(f - 1)]);
  }
}

TEST_CASE("monomial valuation sets") {
  const auto s = semigroup({3, 4, 5});
  const std::vector<int> e34{3, 4};
  const auto v = vset_of_monomial_ideal(s, e34);
  CHECK(v.elements_in(0, 12) == std::vector<int>{3, 4, 6, 7, 8, 9, 10, 11});
  CHECK(v.to_string().rfind("{3,4,6,", 0) == 0);

  const auto n = semigroup({1});
  const std::vector<int> zero{0};
  CHECK(vset_of_monomial_ideal(n, zero).elements_in(0, 10) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  const auto b = semigroup({7, 9, 10});
  const std::vector<int> e79{7, 9};
  const auto w = vset_of_monomial_ideal(b, e79);
  const auto sr = vset_of_monomial_ideal(b, zero);
  for (int k = 0; k < 80; ++k) {
    const bool expected = b.contains(k) && k != 0 && k != 10 && k != 20;
    CHECK(w.contains(k) == expected);
  }
  CHECK(vset_diff_count(sr, w) == 3);

  const std::vector<int> gap{5};
  CHECK_THROWS_AS(vset_of_monomial_ideal(semigroup({3, 4}), gap), Error);
}

TEST_CASE("valuation set sums and counts") {
  const auto s = semigroup({3, 4, 5});
  const std::vector<int> e34{3, 4}, e3{3}, zero{0};
  const auto v = vset_of_monomial_ideal(s, e34);
  const auto sq = vset_sum(v, v);
  CHECK(sq.elements_in(0, 15) == std::vector<int>{6, 7, 8, 9, 10, 11, 12, 13, 14});
  const auto r = vset_of_monomial_ideal(s, zero);
  CHECK(vset_sum(v, r) == v);
  const auto hi = vset_sum(vset_of_monomial_ideal(s, e3), v);
  CHECK(vset_diff_count(sq, hi) == 1);
  CHECK(vset_diff_count(sq, sq) == 0);
  CHECK_THROWS_AS(vset_diff_count(hi, sq), Error);

  const auto b = semigroup({7, 9, 10});
  const std::vector<int> e79{7, 9}, e7{7};
  const auto vi = vset_of_monomial_ideal(b, e79);
  const auto i2 = vset_sum(vi, vi);
  const auto hi2 = vset_sum(vset_of_monomial_ideal(b, e7), vi);
  CHECK(vset_diff_count(i2, hi2) == 2);
  const auto i3 = vset_sum(i2, vi);
  for (int g : {21, 23, 25, 27}) CHECK(i3.contains(g));
}

TEST_CASE("principal length law on valuation sets") {
  for (const auto& s : semigroups_up_to_frobenius(9)) {
    const std::vector<int> zero{0};
    const auto r = vset_of_monomial_ideal(s, zero);
    for (int a : s.elements_in(0, s.conductor() + s.max_minimal_generator() + 1)) {
      const std::vector<int> one{a};
      CHECK(vset_diff_count(r, vset_of_monomial_ideal(s, one)) == static_cast<std::size_t>(a));
    }
  }
}

TEST_CASE("valuation set sum is commutative, associative, with identity") {
  const auto s = semigroup({4, 6, 7});
  const std::vector<int> a{4, 7}, b{6}, c{8, 11}, zero{0};
  const auto va = vset_of_monomial_ideal(s, a);
  const auto vb = vset_of_monomial_ideal(s, b);
  const auto vc = vset_of_monomial_ideal(s, c);
  CHECK(vset_sum(va, vb) == vset_sum(vb, va));
  CHECK(vset_sum(vset_sum(va, vb), vc) == vset_sum(va, vset_sum(vb, vc)));
  CHECK(vset_sum(va, vset_of_monomial_ideal(s, zero)) == va);
  // Additivity along a chain.
  const auto ab = vset_sum(va, vb);
  const auto abc = vset_sum(ab, vc);
  CHECK(vset_diff_count(va, abc) == vset_diff_count(va, ab) + vset_diff_count(ab, abc));
}

TEST_CASE("undefined tail refuses queries") {
  const ValuationSet v({1, 2}, 5, false);
  CHECK(v.contains(2));
  CHECK_FALSE(v.contains(3));
  CHECK_THROWS_AS(v.contains(7), Error);
}
