#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

namespace grlab {

/// Prime field F_p for an odd prime p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kDefaultModulus = 65537;

  /// Throws InvalidInput unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(long v) const noexcept {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws ZeroDivisor on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Uniform over the nonzero residues. Uses the raw engine output so the
  /// sequence is identical across standard libraries.
  Element random_nonzero(std::mt19937_64& rng) const noexcept {
    return static_cast<Element>(rng() % (p_ - 1) + 1);
  }

  /// "a" or "a/b" with optional sign; throws InvalidInput (ZeroDivisor for b = 0 mod p).
  Element parse(const std::string& text) const;

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, with GMP-backed exact arithmetic.
class RationalField {
 public:
  using Element = mpq_class;
  /// Random "general" coefficients are drawn from [-kSampleRange, kSampleRange] \ {0}.
  static constexpr long kSampleRange = 1000;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  Element random_nonzero(std::mt19937_64& rng) const {
    const auto span = static_cast<std::uint64_t>(2 * kSampleRange);
    long v = static_cast<long>(rng() % span) - kSampleRange;
    if (v >= 0) ++v;
    return Element(v);
  }

  /// "a" or "a/b"; throws InvalidInput.
  Element parse(const std::string& text) const;

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

}  // namespace grlab
