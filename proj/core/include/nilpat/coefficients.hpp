#pragma once

// Exact scalar arithmetic over the two supported coefficient fields:
// the prime field Z_p and the rationals Q.
//
// Both field classes expose the same member interface so the polynomial and
// Groebner code can be written once as templates over `Field`:
//
//   value_type, zero(), one(), from_integer(n), add, sub, neg, mul, inv,
//   is_zero, is_one, equal, to_string, parse, name, characteristic
//
// Field objects are small immutable values and may be shared across threads.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "nilpat/error.hpp"

namespace nilpat {

/// Trial division; adequate for the desk-scale moduli used here.
bool is_prime(std::int64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// Throws Error(non_prime_modulus) unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "Z_" + std::to_string(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_integer(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws Error(division_by_zero) for a == 0.
  value_type inv(value_type a) const;
  value_type pow(value_type a, std::uint64_t e) const noexcept;

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  std::string to_string(value_type a) const { return std::to_string(a); }
  /// Accepts an optionally signed integer or a fraction "a/b" with b invertible.
  value_type parse(std::string_view text) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(std::int64_t n) const { return value_type(mpz_class(static_cast<long>(n))); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

using CoefficientField = std::variant<PrimeField, RationalField>;

struct PrimeKind {
  std::int64_t p;
};
struct RationalsKind {};
using FieldKind = std::variant<PrimeKind, RationalsKind>;

CoefficientField field_of(const FieldKind& kind);

inline std::string field_name(const CoefficientField& field) {
  return std::visit([](const auto& f) { return f.name(); }, field);
}

/// Canonical image of an integer in `field` (n_F in the usual notation).
template <class Field>
typename Field::value_type embed_integer(std::int64_t n, const Field& field) {
  return field.from_integer(n);
}

template <class Field>
typename Field::value_type invert(const typename Field::value_type& a, const Field& field) {
  return field.inv(a);
}

}  // namespace nilpat
