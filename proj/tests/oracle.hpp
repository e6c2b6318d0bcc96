#pragma once

// Brute-force reference computations, written without the library's
// echelon code so tests compare two independent derivations.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// Membership table of <gens> on [0, limit) by dynamic programming.
inline std::vector<bool> semigroup_table(const std::vector<int>& gens, int limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (int n = 1; n < limit; ++n) {
    for (int g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) in[static_cast<std::size_t>(n)] = true;
    }
  }
  return in;
}

/// ∪ (a + S) restricted to [0, limit).
inline std::set<int> monomial_valuations(const std::vector<bool>& s, const std::vector<int>& exps, int limit) {
  std::set<int> out;
  for (int a : exps) {
    for (int n = a; n < limit; ++n) {
      if (s[static_cast<std::size_t>(n - a)]) out.insert(n);
    }
  }
  return out;
}

using Poly = std::map<int, std::uint64_t>;  // exponent -> residue mod p

/// Rank-revealing elimination mod p; returns pivot columns (lowest nonzero
/// column of each reduced row).
inline std::set<int> pivot_columns(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::set<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const std::uint64_t inv = pow_mod(m[row][c], p - 2);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      const std::uint64_t f = m[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[row][k]) % p;
    }
    pivots.insert(static_cast<int>(c));
    ++row;
  }
  return pivots;
}

/// Rows t^s·g mod t^limit for all s ∈ S and all generators g.
inline std::vector<std::vector<std::uint64_t>> multiples(const std::vector<bool>& s, const std::vector<Poly>& gens,
                                                         int limit) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Poly& g : gens) {
    for (int shift = 0; shift < limit; ++shift) {
      if (!s[static_cast<std::size_t>(shift)]) continue;
      std::vector<std::uint64_t> row(static_cast<std::size_t>(limit), 0);
      bool any = false;
      for (auto [e, c] : g) {
        if (e + shift < limit && c != 0) {
          row[static_cast<std::size_t>(e + shift)] = c;
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// v(I) ∩ [0, limit) for I = (gens) over F_p.
inline std::set<int> ideal_valuations(const std::vector<bool>& s, const std::vector<Poly>& gens, int limit,
                                      std::uint64_t p) {
  return pivot_columns(multiples(s, gens, limit), p);
}

/// dim_k of (I mod t^limit).
inline std::size_t ideal_dimension(const std::vector<bool>& s, const std::vector<Poly>& gens, int limit,
                                   std::uint64_t p) {
  return ideal_valuations(s, gens, limit, p).size();
}

}  // namespace oracle
