#include "nilpat/coefficients.hpp"

#include <charconv>
#include <limits>

namespace nilpat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::non_prime_modulus: return "NonPrimeModulus";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::mixed_rings: return "MixedRings";
    case ErrorKind::zero_polynomial: return "ZeroPolynomial";
    case ErrorKind::missing_assignment: return "MissingAssignment";
    case ErrorKind::resource_limit: return "ResourceLimit";
    case ErrorKind::zero_divisor_input: return "ZeroDivisorInput";
    case ErrorKind::ragged_input: return "RaggedInput";
    case ErrorKind::mixed_alphabet: return "MixedAlphabet";
    case ErrorKind::bad_symbol: return "BadSymbol";
    case ErrorKind::order_too_large: return "OrderTooLarge";
    case ErrorKind::order_too_small: return "OrderTooSmall";
    case ErrorKind::not_a_realization: return "NotARealization";
    case ErrorKind::wrong_field: return "WrongField";
    case ErrorKind::search_budget_exceeded: return "SearchBudgetExceeded";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::ring_too_large: return "RingTooLarge";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max() || !is_prime(p)) {
    throw Error(ErrorKind::non_prime_modulus, std::to_string(p) + " is not a supported prime modulus");
  }
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const noexcept {
  value_type result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw Error(ErrorKind::division_by_zero, "inverse of 0 in " + name());
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_integer(s0);
}

namespace {

std::int64_t parse_int64(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::parse_error, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

PrimeField::value_type PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_int64(text));
  value_type num = from_integer(parse_int64(text.substr(0, slash)));
  value_type den = from_integer(parse_int64(text.substr(slash + 1)));
  return mul(num, inv(den));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::division_by_zero, "inverse of 0 in Q");
  return value_type(1) / a;
}

RationalField::value_type RationalField::parse(std::string_view text) const {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  value_type v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw Error(ErrorKind::parse_error, "not a rational: '" + std::string(text) + "'");
  }
  if (sgn(v.get_den()) == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  v.canonicalize();
  return v;
}

CoefficientField field_of(const FieldKind& kind) {
  if (const auto* prime = std::get_if<PrimeKind>(&kind)) return PrimeField(prime->p);
  return RationalField{};
}

}  // namespace nilpat
