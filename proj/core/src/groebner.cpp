#include "nilpat/groebner.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace nilpat {

template <class Field>
Ideal<Field>::Ideal(RingPtr<Field> ring, std::vector<Polynomial<Field>> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(*ring_, g.ring())) throw Error(ErrorKind::mixed_rings, "ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

template <class Field>
RingPtr<Field> with_order(const RingPtr<Field>& ring, const MonomialOrder& order) {
  if (ring->order == order) return ring;
  return make_ring(ring->field, ring->variables, order);
}

namespace {

template <class Field>
using TermVec = std::vector<Term<Field>>;

/// Division engine shared by normal_form, S-pair reduction and exact
/// division. The working polynomial is kept in increasing order so that the
/// current leading term sits at the back.
template <class Field>
class Reducer {
 public:
  using value_type = typename Field::value_type;

  Reducer(const Field& field, const MonomialOrder& order) : field_(field), order_(order) {}

  /// Remainder of `f` (terms decreasing) by `divisors`. If `top_only`, stops
  /// at the first leading term that no divisor reduces and returns the rest
  /// unreduced. `sugar`, when given, is raised by the multiplier degrees.
  TermVec<Field> reduce(std::span<const Term<Field>> f, std::span<const Polynomial<Field>* const> divisors,
                        bool top_only, unsigned* sugar = nullptr, const std::vector<unsigned>* divisor_sugar = nullptr) {
    work_.assign(f.rbegin(), f.rend());
    TermVec<Field> remainder;
    while (!work_.empty()) {
      const Term<Field>& lt = work_.back();
      std::size_t hit = divisors.size();
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        const auto& g = divisors[k]->terms().front();
        if (g.monomial.divides(lt.monomial)) {
          hit = k;
          break;
        }
      }
      if (hit == divisors.size()) {
        if (top_only) {
          remainder.assign(work_.rbegin(), work_.rend());
          work_.clear();
          return remainder;
        }
        remainder.push_back(std::move(work_.back()));
        work_.pop_back();
        continue;
      }
      const Polynomial<Field>& g = *divisors[hit];
      const auto& glead = g.terms().front();
      Monomial q = lt.monomial.quotient(glead.monomial);
      value_type c = field_.is_one(glead.coefficient) ? lt.coefficient
                                                      : field_.mul(lt.coefficient, field_.inv(glead.coefficient));
      if (sugar != nullptr && divisor_sugar != nullptr) {
        *sugar = std::max(*sugar, (*divisor_sugar)[hit] + q.degree());
      }
      work_.pop_back();
      subtract_multiple(g.terms().subspan(1), q, c);
    }
    return remainder;
  }

 private:
  /// work_ -= c * q * tail, with tail decreasing.
  void subtract_multiple(std::span<const Term<Field>> tail, const Monomial& q, const value_type& c) {
    if (tail.empty()) return;
    scratch_.clear();
    scratch_.reserve(work_.size() + tail.size());
    auto a = work_.begin();
    const auto a_end = work_.end();
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      Monomial m = it->monomial * q;
      while (a != a_end && order_(a->monomial, m) < 0) scratch_.push_back(std::move(*a++));
      if (a != a_end && a->monomial == m) {
        value_type v = field_.sub(a->coefficient, field_.mul(c, it->coefficient));
        if (!field_.is_zero(v)) scratch_.push_back({std::move(m), std::move(v)});
        ++a;
      } else {
        scratch_.push_back({std::move(m), field_.neg(field_.mul(c, it->coefficient))});
      }
    }
    while (a != a_end) scratch_.push_back(std::move(*a++));
    work_.swap(scratch_);
  }

  const Field& field_;
  MonomialOrder order_;
  TermVec<Field> work_;
  TermVec<Field> scratch_;
};

template <class Field>
std::vector<const Polynomial<Field>*> pointers(std::span<const Polynomial<Field>> polys) {
  std::vector<const Polynomial<Field>*> out;
  for (const auto& p : polys) {
    if (!p.is_zero()) out.push_back(&p);
  }
  return out;
}

/// Reduced Groebner basis from a Groebner basis whose leading monomials are
/// minimal (no leading monomial divides another).
template <class Field>
std::vector<Polynomial<Field>> inter_reduce(std::vector<Polynomial<Field>> basis) {
  if (basis.empty()) return basis;
  const auto& ring = basis.front().ring_ptr();
  const auto& order = ring->order;
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return order(a.leading().monomial, b.leading().monomial) > 0;
  });
  Reducer<Field> reducer(ring->field, order);
  std::vector<Polynomial<Field>> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<const Polynomial<Field>*> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(&basis[j]);
    }
    auto monic = basis[i].monic();
    TermVec<Field> terms{monic.terms().front()};
    auto tail = reducer.reduce(monic.terms().subspan(1), others, false);
    terms.insert(terms.end(), tail.begin(), tail.end());
    out.push_back(Polynomial<Field>::from_sorted_terms(ring, std::move(terms)));
  }
  return out;
}

/// Removes elements whose leading monomial is divisible by another's.
template <class Field>
std::vector<Polynomial<Field>> minimalize(const std::vector<Polynomial<Field>>& polys) {
  std::vector<Polynomial<Field>> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& mi = polys[i].leading().monomial;
    bool redundant = false;
    for (std::size_t j = 0; j < polys.size() && !redundant; ++j) {
      if (j == i) continue;
      const auto& mj = polys[j].leading().monomial;
      // Equal leading monomials: keep the earlier one.
      redundant = mj.divides(mi) && (!(mj == mi) || j < i);
    }
    if (!redundant) out.push_back(polys[i]);
  }
  return out;
}

template <class Field>
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr<Field> ring, const GroebnerOptions& options)
      : ring_(std::move(ring)), options_(options), reducer_(ring_->field, ring_->order) {}

  GroebnerBasis<Field> run(const std::vector<Polynomial<Field>>& generators) {
    GroebnerBasis<Field> result{ring_, {}, ring_->order, true, {}};
    std::vector<Polynomial<Field>> gens = generators;
    const auto& order = ring_->order;
    std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
      return order(a.leading().monomial, b.leading().monomial) < 0;
    });
    for (const auto& g : gens) {
      if (found_unit_) break;
      unsigned sugar = g.total_degree();
      auto reduced = reduce_by_basis(g.terms(), &sugar);
      if (!reduced.empty()) add(std::move(reduced), sugar);
    }
    while (!found_unit_ && !pairs_.empty()) {
      auto pos = select_pair();
      Pair pair = pairs_[pos];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pos));
      if (++stats_.reductions > options_.max_reductions) {
        throw Error(ErrorKind::resource_limit,
                    "Buchberger exceeded " + std::to_string(options_.max_reductions) + " S-pair reductions");
      }
      unsigned sugar = pair.sugar;
      auto spoly = s_poly_terms(polys_[pair.i], polys_[pair.j]);
      auto reduced = reduce_by_basis(spoly, &sugar);
      if (reduced.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      add(std::move(reduced), sugar);
    }
    std::vector<Polynomial<Field>> basis;
    if (found_unit_) {
      basis.push_back(Polynomial<Field>::constant(ring_, ring_->field.one()));
    } else if (options_.use_criteria) {
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (active_[k]) basis.push_back(polys_[k]);
      }
    } else {
      basis = minimalize(polys_);
    }
    result.basis = inter_reduce(std::move(basis));
    result.stats = stats_;
    return result;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  TermVec<Field> reduce_by_basis(std::span<const Term<Field>> f, unsigned* sugar) {
    std::vector<const Polynomial<Field>*> divisors;
    std::vector<unsigned> divisor_sugar;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k] || !options_.use_criteria) {
        divisors.push_back(&polys_[k]);
        divisor_sugar.push_back(sugar_[k]);
      }
    }
    return reducer_.reduce(f, divisors, false, sugar, &divisor_sugar);
  }

  TermVec<Field> s_poly_terms(const Polynomial<Field>& f, const Polynomial<Field>& g) {
    const auto& fl = f.leading().monomial;
    const auto& gl = g.leading().monomial;
    Monomial l = fl.lcm(gl);
    auto a = f.mul_term(l.quotient(fl), ring_->field.one());
    auto b = g.mul_term(l.quotient(gl), ring_->field.one());
    auto d = a - b;
    return TermVec<Field>(d.terms().begin(), d.terms().end());
  }

  void add(TermVec<Field> terms, unsigned sugar) {
    auto h = Polynomial<Field>::from_sorted_terms(ring_, std::move(terms)).monic();
    if (h.leading().monomial.is_one()) found_unit_ = true;
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    if (options_.use_criteria) {
      gebauer_moeller_update(hi);
    } else {
      for (std::size_t k = 0; k < hi; ++k) push_pair(k, hi);
    }
  }

  void push_pair(std::size_t i, std::size_t j) {
    const auto& mi = polys_[i].leading().monomial;
    const auto& mj = polys_[j].leading().monomial;
    Monomial l = mi.lcm(mj);
    unsigned s = std::max(sugar_[i] + l.degree() - mi.degree(), sugar_[j] + l.degree() - mj.degree());
    pairs_.push_back({i, j, l, s});
    ++stats_.pairs_created;
  }

  // Becker-Weispfenning UPDATE: product criterion plus the chain criterion
  // on both the new pairs and the existing ones.
  void gebauer_moeller_update(std::size_t h) {
    const auto& mh = polys_[h].leading().monomial;
    std::deque<std::size_t> candidates;
    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k]) candidates.push_back(k);
    }
    std::vector<std::size_t> kept;
    std::vector<Monomial> kept_lcm;
    while (!candidates.empty()) {
      std::size_t g1 = candidates.front();
      candidates.pop_front();
      const auto& m1 = polys_[g1].leading().monomial;
      Monomial l1 = mh.lcm(m1);
      bool keep = mh.coprime(m1);
      if (!keep) {
        keep = true;
        for (std::size_t g2 : candidates) {
          if (mh.lcm(polys_[g2].leading().monomial).divides(l1)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const auto& l2 : kept_lcm) {
            if (l2.divides(l1)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) {
        kept.push_back(g1);
        kept_lcm.push_back(l1);
      } else {
        ++stats_.pairs_skipped;
      }
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = mh.divides(p.lcm) && !(mh.lcm(polys_[p.i].leading().monomial) == p.lcm) &&
                  !(mh.lcm(polys_[p.j].leading().monomial) == p.lcm);
      if (drop) {
        ++stats_.pairs_skipped;
      } else {
        next.push_back(std::move(p));
      }
    }
    pairs_ = std::move(next);
    for (std::size_t g : kept) {
      if (mh.coprime(polys_[g].leading().monomial)) {
        ++stats_.pairs_skipped;
        continue;
      }
      push_pair(g, h);
    }
    for (std::size_t k = 0; k < h; ++k) {
      if (active_[k] && mh.divides(polys_[k].leading().monomial)) active_[k] = false;
    }
  }

  std::size_t select_pair() const {
    if (!options_.use_criteria) return 0;
    const auto& order = ring_->order;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      auto c = order(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    return best;
  }

  RingPtr<Field> ring_;
  GroebnerOptions options_;
  Reducer<Field> reducer_;
  std::vector<Polynomial<Field>> polys_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool found_unit_ = false;
};

template <class Field>
std::string fresh_name(const VariableSet& vars, std::string base) {
  while (vars.index_of(base)) base += "_";
  return base;
}

template <class Field>
MonomialOrder auxiliary_order(OrderKind kind) {
  return kind == OrderKind::lex ? MonomialOrder::lex() : MonomialOrder::eliminating(1);
}

/// Generators of `gb` that do not involve variable 0, moved to `target`.
template <class Field>
std::vector<Polynomial<Field>> drop_leading_variable(const GroebnerBasis<Field>& gb, const RingPtr<Field>& target) {
  std::vector<Polynomial<Field>> out;
  for (const auto& g : gb.basis) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.monomial[0] == 0; });
    if (free) out.push_back(change_ring(g, target));
  }
  return out;
}

}  // namespace

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, std::span<const Polynomial<Field>> divisors) {
  for (const auto& g : divisors) {
    if (!same_ring(f.ring(), g.ring())) throw Error(ErrorKind::mixed_rings, "divisor from a different ring");
  }
  Reducer<Field> reducer(f.field(), f.ring().order);
  auto ptrs = pointers(divisors);
  return Polynomial<Field>::from_sorted_terms(f.ring_ptr(), reducer.reduce(f.terms(), ptrs, false));
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, std::span<const Polynomial<Field>> divisors,
                              const MonomialOrder& order) {
  if (order == f.ring().order) return normal_form(f, divisors);
  auto ring = with_order(f.ring_ptr(), order);
  std::vector<Polynomial<Field>> moved;
  for (const auto& g : divisors) {
    if (!(g.ring().variables == f.ring().variables)) throw Error(ErrorKind::mixed_rings, "divisor from a different ring");
    moved.push_back(change_ring(g, ring));
  }
  return normal_form(change_ring(f, ring), std::span<const Polynomial<Field>>(moved));
}

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const auto& fl = f.leading();
  const auto& gl = g.leading();
  Monomial l = fl.monomial.lcm(gl.monomial);
  const auto& field = f.field();
  return f.mul_term(l.quotient(fl.monomial), field.inv(fl.coefficient)) -
         g.mul_term(l.quotient(gl.monomial), field.inv(gl.coefficient));
}

template <class Field>
Polynomial<Field> divide_exact(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  if (g.is_zero()) throw Error(ErrorKind::zero_divisor_input, "division by the zero polynomial");
  const auto& field = f.field();
  const auto& gl = g.leading();
  auto lc_inv = field.inv(gl.coefficient);
  std::vector<Term<Field>> quotient;
  Polynomial<Field> rest = f;
  while (!rest.is_zero()) {
    const auto& lt = rest.leading();
    if (!gl.monomial.divides(lt.monomial)) throw std::logic_error("divide_exact: divisor does not divide");
    Term<Field> q{lt.monomial.quotient(gl.monomial), field.mul(lt.coefficient, lc_inv)};
    rest = rest - g.mul_term(q.monomial, q.coefficient);
    quotient.push_back(std::move(q));
  }
  return Polynomial<Field>::from_terms(f.ring_ptr(), std::move(quotient));
}

template <class Field>
GroebnerBasis<Field> buchberger(const Ideal<Field>& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
  auto ring = with_order(ideal.ring_ptr(), order);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, ring));
  return BuchbergerRun<Field>(ring, options).run(gens);
}

template <class Field>
bool satisfies_buchberger_criterion(std::span<const Polynomial<Field>> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

template <class Field>
bool member(const Polynomial<Field>& f, const Ideal<Field>& ideal, const MonomialOrder& order,
            const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  auto gb = buchberger(ideal, order, options);
  return normal_form(change_ring(f, gb.ring), std::span<const Polynomial<Field>>(gb.basis)).is_zero();
}

template <class Field>
bool ideal_contains(const Ideal<Field>& big, const Ideal<Field>& small, const GroebnerOptions& options) {
  auto gb = buchberger(big, big.ring().order, options);
  for (const auto& g : small.generators()) {
    if (!normal_form(change_ring(g, gb.ring), std::span<const Polynomial<Field>>(gb.basis)).is_zero()) return false;
  }
  return true;
}

template <class Field>
bool ideal_equal(const Ideal<Field>& a, const Ideal<Field>& b, const GroebnerOptions& options) {
  return ideal_contains(a, b, options) && ideal_contains(b, a, options);
}

template <class Field>
Ideal<Field> elimination_ideal(const Ideal<Field>& ideal, std::size_t eliminate, const GroebnerOptions& options) {
  auto gb = buchberger(ideal, MonomialOrder::lex(), options);
  std::vector<Polynomial<Field>> kept;
  for (const auto& g : gb.basis) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
      for (std::size_t i = 0; i < eliminate; ++i) {
        if (t.monomial[i] != 0) return false;
      }
      return true;
    });
    if (free) kept.push_back(g);
  }
  return Ideal<Field>(gb.ring, std::move(kept));
}

template <class Field>
Ideal<Field> elimination_ideal(const Ideal<Field>& ideal, std::span<const std::string> keep,
                               const GroebnerOptions& options) {
  const auto& vars = ideal.ring().variables;
  if (keep.size() > vars.size()) throw Error(ErrorKind::mixed_rings, "more kept variables than the ring has");
  const std::size_t eliminate = vars.size() - keep.size();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (vars[eliminate + i].name != keep[i]) {
      throw Error(ErrorKind::mixed_rings, "kept variables must be a suffix of the variable order");
    }
  }
  return elimination_ideal(ideal, eliminate, options);
}

template <class Field>
Ideal<Field> colon_principal(const Ideal<Field>& ideal, const Polynomial<Field>& f, const SaturationOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::zero_divisor_input, "colon by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring())) throw Error(ErrorKind::mixed_rings, "colon operands in different rings");
  const auto& ring = ideal.ring_ptr();
  if (ideal.is_zero()) return ideal;
  if (f.is_constant()) return ideal;

  // I : f = (I intersect (f)) / f, with I intersect (f) = (t*I + (1-t)*f) eliminated by t.
  auto aux = make_ring(ring->field, ring->variables.with_leading(named_variable(fresh_name<Field>(ring->variables, "t"))),
                       auxiliary_order<Field>(options.auxiliary_order));
  auto t = Polynomial<Field>::variable(aux, 0);
  auto one = Polynomial<Field>::constant(aux, aux->field.one());
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * change_ring(g, aux));
  gens.push_back((one - t) * change_ring(f, aux));
  auto gb = buchberger(Ideal<Field>(aux, std::move(gens)), aux->order, options.groebner);
  std::vector<Polynomial<Field>> quotients;
  for (const auto& g : drop_leading_variable(gb, ring)) quotients.push_back(divide_exact(g, f));
  return Ideal<Field>(ring, std::move(quotients));
}

template <class Field>
Ideal<Field> saturate(const Ideal<Field>& ideal, const Polynomial<Field>& f, const SaturationOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::zero_divisor_input, "saturation by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring())) throw Error(ErrorKind::mixed_rings, "saturation operands in different rings");
  const auto& ring = ideal.ring_ptr();
  if (ideal.is_zero() || f.is_constant()) return ideal;

  if (options.method == SaturationMethod::iterated_colon) {
    Ideal<Field> current = ideal;
    while (true) {
      Ideal<Field> next = colon_principal(current, f, options);
      if (ideal_contains(current, next, options.groebner)) return current;
      current = std::move(next);
    }
  }

  auto aux = make_ring(ring->field, ring->variables.with_leading(named_variable(fresh_name<Field>(ring->variables, "y"))),
                       auxiliary_order<Field>(options.auxiliary_order));
  auto y = Polynomial<Field>::variable(aux, 0);
  auto one = Polynomial<Field>::constant(aux, aux->field.one());
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, aux));
  gens.push_back(y * change_ring(f, aux) - one);
  auto gb = buchberger(Ideal<Field>(aux, std::move(gens)), aux->order, options.groebner);
  return Ideal<Field>(ring, drop_leading_variable(gb, ring));
}

template <class Field>
bool contains_one(const Ideal<Field>& ideal, const GroebnerOptions& options) {
  if (ideal.is_zero()) return false;
  return buchberger(ideal, ideal.ring().order, options).contains_one();
}

#define NILPAT_INSTANTIATE_GROEBNER(F)                                                                             \
  template class Ideal<F>;                                                                                         \
  template RingPtr<F> with_order(const RingPtr<F>&, const MonomialOrder&);                                        \
  template Polynomial<F> normal_form(const Polynomial<F>&, std::span<const Polynomial<F>>);                       \
  template Polynomial<F> normal_form(const Polynomial<F>&, std::span<const Polynomial<F>>, const MonomialOrder&); \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);                                \
  template Polynomial<F> divide_exact(const Polynomial<F>&, const Polynomial<F>&);                                \
  template GroebnerBasis<F> buchberger(const Ideal<F>&, const MonomialOrder&, const GroebnerOptions&);            \
  template bool satisfies_buchberger_criterion(std::span<const Polynomial<F>>);                                   \
  template bool member(const Polynomial<F>&, const Ideal<F>&, const MonomialOrder&, const GroebnerOptions&);      \
  template bool ideal_contains(const Ideal<F>&, const Ideal<F>&, const GroebnerOptions&);                         \
  template bool ideal_equal(const Ideal<F>&, const Ideal<F>&, const GroebnerOptions&);                            \
  template Ideal<F> elimination_ideal(const Ideal<F>&, std::size_t, const GroebnerOptions&);                      \
  template Ideal<F> elimination_ideal(const Ideal<F>&, std::span<const std::string>, const GroebnerOptions&);     \
  template Ideal<F> colon_principal(const Ideal<F>&, const Polynomial<F>&, const SaturationOptions&);             \
  template Ideal<F> saturate(const Ideal<F>&, const Polynomial<F>&, const SaturationOptions&);                    \
  template bool contains_one(const Ideal<F>&, const GroebnerOptions&);

NILPAT_INSTANTIATE_GROEBNER(PrimeField)
NILPAT_INSTANTIATE_GROEBNER(RationalField)

}  // namespace nilpat
