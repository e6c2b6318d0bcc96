#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grlab {

/// One stated value or verdict from a worked example, with the recomputed
/// value next to it.
struct GoldenClaim {
  std::string example;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Families from the catalogue:
///   (t^n, ..., t^{2n-2}) in <n, ..., 2n-1>       n = 3..6
///   (t^n, t^{n+1}) in <n, n+1, n+2>               n = 3..6
///   (t^n, t^{n+a}) in <n, n+a, n+2a>, n in {2a, 3a}, a <= 4 (divided by the gcd a)
///   (t^7, t^9) in <7,9,10> and (t^5, t^7) in <5,7,8>
std::vector<GoldenClaim> reproduce_examples(std::uint64_t seed = 1);

std::string format_claims(const std::vector<GoldenClaim>& claims);

}  // namespace grlab
