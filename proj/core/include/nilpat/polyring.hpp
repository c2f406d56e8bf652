#pragma once

// Sparse multivariate polynomials over a coefficient field.
//
// A polynomial lives in a Ring: a field, an ordered VariableSet and a
// MonomialOrder. Terms are kept strictly decreasing in the ring's order with
// no zero coefficients, so two polynomials of the same ring are equal iff
// their term vectors are equal.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilpat/coefficients.hpp"
#include "nilpat/position.hpp"

namespace nilpat {

inline constexpr std::size_t kMaxVariables = 64;

struct Variable {
  std::string name;
  /// Matrix position for z[i,j] variables; {0, 0} for auxiliary ones.
  Position position;

  bool is_position() const noexcept { return position.row > 0; }
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// The variable z[row,col].
Variable position_variable(int row, int col);
Variable named_variable(std::string name);

class VariableSet {
 public:
  VariableSet() = default;
  /// Throws Error(ring_too_large) past kMaxVariables and Error(parse_error)
  /// on a duplicate name.
  explicit VariableSet(std::vector<Variable> variables);
  static VariableSet named(std::initializer_list<std::string_view> names);
  static VariableSet positions(std::span<const Position> positions);

  std::size_t size() const noexcept { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  auto begin() const noexcept { return variables_.begin(); }
  auto end() const noexcept { return variables_.end(); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> index_of(Position position) const;

  /// A copy with `v` inserted before every existing variable.
  VariableSet with_leading(Variable v) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<Variable> variables_;
};

/// Exponent vector with inline storage. Exponents are capped at 255.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_variables);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t num_variables, std::size_t index, unsigned exponent = 1);

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint64_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }
  /// Throws Error(resource_limit) if an exponent would pass 255.
  Monomial operator*(const Monomial& other) const;
  /// Exponent-wise difference; `divisor` must divide *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  std::span<const std::uint8_t> exponents() const noexcept { return {exps_.data(), size_}; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint64_t support_ = 0;
  std::uint16_t size_ = 0;
  std::uint16_t degree_ = 0;
};

enum class OrderKind {
  lex,
  grevlex,
  /// Elimination order: the first `leading_block` variables compared by
  /// grevlex; ties broken by grevlex on the remaining variables.
  block,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::lex;
  std::size_t leading_block = 0;

  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder eliminating(std::size_t leading) { return {OrderKind::block, leading}; }

  /// No size check; both monomials must come from the same ring.
  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string to_string(const MonomialOrder& order);

/// Throws Error(mixed_rings) when the monomials have different lengths.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

template <class Field>
struct Ring {
  Field field;
  VariableSet variables;
  MonomialOrder order;
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field field, VariableSet variables, MonomialOrder order = MonomialOrder::lex()) {
  return std::make_shared<const Ring<Field>>(Ring<Field>{std::move(field), std::move(variables), order});
}

template <class Field>
bool same_ring(const Ring<Field>& a, const Ring<Field>& b) {
  return &a == &b || (a.field == b.field && a.order == b.order && a.variables == b.variables);
}

template <class Field>
struct Term {
  Monomial monomial;
  typename Field::value_type coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

template <class Field>
class Polynomial {
 public:
  using value_type = typename Field::value_type;
  using term_type = Term<Field>;

  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr<Field> ring);

  static Polynomial constant(RingPtr<Field> ring, const value_type& c);
  static Polynomial variable(RingPtr<Field> ring, std::size_t index);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr<Field> ring, std::vector<term_type> terms);
  /// Trusted constructor: `terms` must already be strictly decreasing with
  /// nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr<Field> ring, std::vector<term_type> terms);

  const Ring<Field>& ring() const noexcept { return *ring_; }
  const RingPtr<Field>& ring_ptr() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field; }

  std::span<const term_type> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const;
  /// The leading term in the ring's order; Error(zero_polynomial) for 0.
  const term_type& leading() const;
  unsigned total_degree() const noexcept;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scale(const value_type& c) const;
  Polynomial mul_term(const Monomial& m, const value_type& c) const;
  /// Leading coefficient 1; the zero polynomial is returned unchanged.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(*a.ring_, *b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr<Field> ring_;
  std::vector<term_type> terms_;
};

/// Order-maximal term of `f` with respect to `order`, which need not be the
/// ring's own order. Error(zero_polynomial) for f = 0.
template <class Field>
Term<Field> leading_term(const Polynomial<Field>& f, const MonomialOrder& order);

/// Common total degree of all terms, or nullopt. The zero polynomial reports
/// degree 0; callers that care test is_zero() separately.
template <class Field>
std::optional<unsigned> is_homogeneous(const Polynomial<Field>& f);

/// `values[i]` is the value of variable i.
template <class Field>
typename Field::value_type evaluate(const Polynomial<Field>& f, std::span<const typename Field::value_type> values);

/// Position-keyed assignment; Error(missing_assignment) when a variable of
/// the ring has no value.
template <class Field>
typename Field::value_type evaluate(const Polynomial<Field>& f,
                                    const std::map<Position, typename Field::value_type>& assignment);

/// Rewrites `f` into `target`, matching variables by name. Error(mixed_rings)
/// if `f` uses a variable missing from `target` or the fields differ.
template <class Field>
Polynomial<Field> change_ring(const Polynomial<Field>& f, const RingPtr<Field>& target);

/// Renders as `c*z[i,j]^e*... + ...`, terms in the ring order.
template <class Field>
std::string to_string(const Polynomial<Field>& f);

/// Parses the grammar produced by to_string (plus arbitrary factor order and
/// whitespace). Error(parse_error) on malformed input or unknown variables.
template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const RingPtr<Field>& ring);

}  // namespace nilpat
