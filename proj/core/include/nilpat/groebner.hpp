#pragma once

// Buchberger's algorithm and the ideal operations built on it: membership,
// elimination, colon by a principal ideal and saturation.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilpat/polyring.hpp"

namespace nilpat {

template <class Field>
class Ideal {
 public:
  /// Zero generators are dropped; an empty list is the zero ideal.
  Ideal(RingPtr<Field> ring, std::vector<Polynomial<Field>> generators);

  const RingPtr<Field>& ring_ptr() const noexcept { return ring_; }
  const Ring<Field>& ring() const noexcept { return *ring_; }
  std::span<const Polynomial<Field>> generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }

 private:
  RingPtr<Field> ring_;
  std::vector<Polynomial<Field>> generators_;
};

struct GroebnerOptions {
  /// Gebauer-Moeller pair elimination. When false, every pair is reduced in
  /// creation order (plain Buchberger, used as a cross-check).
  bool use_criteria = true;
  /// S-pair reductions allowed before Error(resource_limit).
  std::size_t max_reductions = 100'000;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_skipped = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
};

template <class Field>
struct GroebnerBasis {
  RingPtr<Field> ring;
  /// Reduced: monic, inter-reduced, sorted by decreasing leading monomial.
  std::vector<Polynomial<Field>> basis;
  MonomialOrder order;
  bool reduced = true;
  GroebnerStats stats;

  bool contains_one() const { return basis.size() == 1 && basis.front().is_one(); }
  Ideal<Field> ideal() const { return Ideal<Field>(ring, basis); }
};

/// Same variables and field, different order.
template <class Field>
RingPtr<Field> with_order(const RingPtr<Field>& ring, const MonomialOrder& order);

/// Full multivariate division remainder. Divisors are tried in list order and
/// the leading term is rewritten first. Uses the ring's order.
template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, std::span<const Polynomial<Field>> divisors);

/// As above but in `order`; the result lives in the ring of `f` with that order.
template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, std::span<const Polynomial<Field>> divisors,
                              const MonomialOrder& order);

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g);

/// Exact quotient f / g. Throws std::logic_error if g does not divide f.
template <class Field>
Polynomial<Field> divide_exact(const Polynomial<Field>& f, const Polynomial<Field>& g);

template <class Field>
GroebnerBasis<Field> buchberger(const Ideal<Field>& ideal, const MonomialOrder& order,
                                const GroebnerOptions& options = {});

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
template <class Field>
bool satisfies_buchberger_criterion(std::span<const Polynomial<Field>> basis);

template <class Field>
bool member(const Polynomial<Field>& f, const Ideal<Field>& ideal, const MonomialOrder& order,
            const GroebnerOptions& options = {});

/// J is contained in I.
template <class Field>
bool ideal_contains(const Ideal<Field>& big, const Ideal<Field>& small, const GroebnerOptions& options = {});

template <class Field>
bool ideal_equal(const Ideal<Field>& a, const Ideal<Field>& b, const GroebnerOptions& options = {});

/// Intersection with the subring of the trailing variables, i.e. the leading
/// `eliminate` variables are removed. Computed from a lex basis; the result
/// lives in the lex version of the ring.
template <class Field>
Ideal<Field> elimination_ideal(const Ideal<Field>& ideal, std::size_t eliminate, const GroebnerOptions& options = {});

/// Same, naming the kept variables; they must be a suffix of the ring's
/// variable order.
template <class Field>
Ideal<Field> elimination_ideal(const Ideal<Field>& ideal, std::span<const std::string> keep,
                               const GroebnerOptions& options = {});

enum class SaturationMethod {
  /// I + (y*f - 1), then eliminate y.
  extra_variable,
  /// I : f, (I : f) : f, ... until the chain stabilises.
  iterated_colon,
};

struct SaturationOptions {
  SaturationMethod method = SaturationMethod::extra_variable;
  /// Order of the auxiliary ring. Lex keeps the auxiliary variable largest
  /// with lex on the rest; `block` is an elimination order that is usually
  /// much cheaper.
  OrderKind auxiliary_order = OrderKind::lex;
  GroebnerOptions groebner;
};

/// I : (f), via I intersected with (f) and exact division by f.
/// Error(zero_divisor_input) for f = 0.
template <class Field>
Ideal<Field> colon_principal(const Ideal<Field>& ideal, const Polynomial<Field>& f,
                             const SaturationOptions& options = {});

/// I : (f)^infinity. Error(zero_divisor_input) for f = 0.
template <class Field>
Ideal<Field> saturate(const Ideal<Field>& ideal, const Polynomial<Field>& f, const SaturationOptions& options = {});

template <class Field>
bool contains_one(const Ideal<Field>& ideal, const GroebnerOptions& options = {});

}  // namespace nilpat
