#include "grlab/field.hpp"

#include <stdexcept>

#include "grlab/errors.hpp"

namespace grlab {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Splits "[-]a[/b]" into integers; false on malformed text.
bool split_fraction(const std::string& text, long& num, long& den) {
  const auto slash = text.find('/');
  const std::string a = text.substr(0, slash);
  const std::string b = slash == std::string::npos ? "1" : text.substr(slash + 1);
  try {
    std::size_t used_a = 0, used_b = 0;
    num = std::stol(a, &used_a);
    den = std::stol(b, &used_b);
    return used_a == a.size() && used_b == b.size() && !b.empty() && b[0] != '-' && b[0] != '+';
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_odd_prime(p)) {
    throw Error(ErrorCode::InvalidInput, "field modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::ZeroDivisor, "inverse of zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::parse(const std::string& text) const {
  long num = 0, den = 1;
  if (!split_fraction(text, num, den)) throw Error(ErrorCode::InvalidInput, "bad coefficient '" + text + "'");
  return div(from_int(num), from_int(den));
}

RationalField::Element RationalField::parse(const std::string& text) const {
  Element q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidInput, "bad coefficient '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::ZeroDivisor, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroDivisor, "inverse of zero in Q");
  Element r = 1 / a;
  r.canonicalize();
  return r;
}

}  // namespace grlab
