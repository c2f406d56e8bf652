#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "nilpat/nilpat.hpp"

using namespace nilpat;

namespace {

template <class Field>
RingPtr<Field> xy_ring(Field f, MonomialOrder order = MonomialOrder::lex()) {
  return make_ring(std::move(f), VariableSet::named({"x", "y"}), order);
}

template <class Field>
Polynomial<Field> poly(std::string_view text, const RingPtr<Field>& ring) {
  return parse_polynomial(text, ring);
}

Monomial mono(std::initializer_list<unsigned> e) {
  std::vector<unsigned> v(e);
  return Monomial::from_exponents(v);
}

/// Random polynomial with small coefficients and exponents.
template <class Field>
Polynomial<Field> random_poly(std::mt19937_64& rng, const RingPtr<Field>& ring) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), len(0, 4);
  std::vector<Term<Field>> terms;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(ring->variables.size());
    for (std::size_t v = 0; v < m.size(); ++v) m.set(v, static_cast<unsigned>(ex(rng)));
    terms.push_back({m, ring->field.from_integer(coef(rng))});
  }
  return Polynomial<Field>::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("compare follows textbook lex") {
  const auto lex = MonomialOrder::lex();
  CHECK(compare(mono({2, 1}), mono({1, 2}), lex) == std::strong_ordering::greater);
  CHECK(compare(mono({2, 1}), mono({2, 1}), lex) == std::strong_ordering::equal);
  CHECK(compare(mono({1, 0}), mono({0, 5}), lex) == std::strong_ordering::greater);
  CHECK(compare(mono({1, 0}), mono({0, 5}), MonomialOrder::grevlex()) == std::strong_ordering::less);
  CHECK_THROWS_AS((void)compare(mono({1, 0}), mono({1}), lex), Error);
}

TEST_CASE("grevlex and block orders") {
  const auto g = MonomialOrder::grevlex();
  // Equal degree: the smaller exponent in the last variable wins.
  CHECK(compare(mono({1, 1, 0}), mono({1, 0, 1}), g) == std::strong_ordering::greater);
  CHECK(compare(mono({0, 2, 0}), mono({1, 0, 1}), g) == std::strong_ordering::greater);
  const auto b = MonomialOrder::eliminating(1);
  CHECK(compare(mono({1, 0, 0}), mono({0, 5, 5}), b) == std::strong_ordering::greater);
  CHECK(compare(mono({0, 2, 0}), mono({0, 1, 0}), b) == std::strong_ordering::greater);
}

TEST_CASE("monomial orders are total and compatible with multiplication") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> ex(0, 3);
  auto rnd = [&] { return mono({ex(rng), ex(rng), ex(rng)}); };
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::eliminating(1),
                            MonomialOrder::eliminating(2)}) {
    for (int i = 0; i < 500; ++i) {
      const auto a = rnd(), b = rnd(), m = rnd();
      const auto ab = compare(a, b, order);
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      CHECK(compare(b, a, order) == (0 <=> ab));
      CHECK(compare(a * m, b * m, order) == ab);
      CHECK(compare(a * m, a, order) != std::strong_ordering::less);
    }
  }
}

TEST_CASE("addition and multiplication") {
  const auto q = xy_ring(RationalField{});
  const auto f = poly("x + 3*y", q);
  CHECK((f + (-f)).is_zero());
  CHECK((poly("x + y", q) * poly("x - y", q)) == poly("x^2 - y^2", q));
  CHECK(to_string(poly("x^2 - y^2", q)) == "x^2 - y^2");

  const PrimeField f2(2);
  const ZnzPattern path = fixture::path_end_loops();
  const auto z = symbolic_matrix(path, f2);
  const auto lhs = (z.entry(1, 1) + z.entry(3, 3)) * z.entry(1, 2);
  CHECK(lhs == parse_polynomial("z[1,1]*z[1,2] + z[1,2]*z[3,3]", z.ring));
  CHECK((z.entry(1, 1) + z.entry(1, 1)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  const auto r5 = make_ring(PrimeField(5), VariableSet::named({"a", "b", "c"}));
  const auto rq = make_ring(RationalField{}, VariableSet::named({"a", "b", "c"}), MonomialOrder::grevlex());
  auto check = [&](const auto& ring) {
    for (int i = 0; i < 150; ++i) {
      const auto f = random_poly(rng, ring), g = random_poly(rng, ring), h = random_poly(rng, ring);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK(f - f == Polynomial(ring));
    }
  };
  check(r5);
  check(rq);
}

TEST_CASE("ring axioms exhaustively over a tiny ring") {
  // Z_2[x] polynomials of degree <= 2.
  const auto r = make_ring(PrimeField(2), VariableSet::named({"x"}));
  std::vector<Polynomial<PrimeField>> all;
  for (unsigned bits = 0; bits < 8; ++bits) {
    std::vector<Term<PrimeField>> t;
    for (unsigned e = 0; e < 3; ++e)
      if (bits & (1U << e)) t.push_back({Monomial::variable(1, 0, e), 1U});
    all.push_back(Polynomial<PrimeField>::from_terms(r, t));
  }
  for (const auto& f : all)
    for (const auto& g : all)
      for (const auto& h : all) {
        REQUIRE((f + g) * h == f * h + g * h);
        REQUIRE((f * g) * h == f * (g * h));
      }
}

TEST_CASE("leading_term") {
  const auto z = symbolic_matrix(fixture::path_end_loops(), RationalField{});
  const auto f = z.entry(1, 1) + z.entry(3, 3);
  const auto lt = leading_term(f, MonomialOrder::lex());
  CHECK(lt.monomial == Monomial::variable(z.ring->variables.size(), 0));
  CHECK(lt.coefficient == 1);
  const auto five = Polynomial<RationalField>::constant(z.ring, 5);
  CHECK(leading_term(five, MonomialOrder::lex()).monomial.is_one());
  CHECK(leading_term(five, MonomialOrder::lex()).coefficient == 5);
  try {
    (void)leading_term(Polynomial<RationalField>(z.ring), MonomialOrder::lex());
    FAIL("expected zero_polynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::zero_polynomial);
  }
}

TEST_CASE("is_homogeneous") {
  const auto z = symbolic_matrix(fixture::path_end_loops(), RationalField{});
  const auto f = parse_polynomial("z[1,2]*z[2,1] + z[2,3]*z[3,2] + z[1,1]*z[3,3]", z.ring);
  CHECK(is_homogeneous(f) == std::optional<unsigned>(2));
  const auto q = xy_ring(RationalField{});
  CHECK_FALSE(is_homogeneous(poly("x + x^2", q)).has_value());
  for (std::uint64_t bits = 0; bits < 512; bits += 7) {
    const auto a = [&] {
      ZnzPattern p(3);
      for (int i = 0; i < 9; ++i)
        if (bits >> i & 1U) p.set(i / 3 + 1, i % 3 + 1, true);
      return p;
    }();
    const auto pi = pattern_ideal(a, RationalField{});
    for (std::size_t i = 0; i < pi.coefficients.size(); ++i) {
      if (pi.coefficients[i].is_zero()) continue;
      CHECK(is_homogeneous(pi.coefficients[i]) == std::optional<unsigned>(i + 1));
    }
  }
}

TEST_CASE("evaluate") {
  const PrimeField f7(7);
  const auto a = fixture::three_cycle_loops();
  const auto pi = pattern_ideal(a, f7);
  std::map<Position, std::uint32_t> diag{{{1, 1}, 4}, {{2, 2}, 2}, {{3, 3}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 6}};
  CHECK(evaluate(pi.coefficients[0], diag) == 0U);
  std::map<Position, std::uint32_t> zero;
  for (auto p : a.stars()) zero[p] = 0;
  for (const auto& f : pi.coefficients) CHECK(evaluate(f, zero) == 0U);

  const PrimeField f2(2);
  const auto d = symbolic_matrix(ZnzPattern::from_rows({"*0", "0*"}), f2);
  const auto prod = d.entry(1, 1) * d.entry(2, 2);
  CHECK(evaluate(prod, std::map<Position, std::uint32_t>{{{1, 1}, 1}, {{2, 2}, 1}}) == 1U);
  try {
    (void)evaluate(prod, std::map<Position, std::uint32_t>{{{1, 1}, 1}});
    FAIL("expected missing_assignment");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::missing_assignment);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(5);
  const auto r = make_ring(PrimeField(13), VariableSet::named({"a", "b", "c"}));
  std::uniform_int_distribution<std::uint32_t> v(0, 12);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_poly(rng, r), g = random_poly(rng, r);
    const std::vector<std::uint32_t> pt{v(rng), v(rng), v(rng)};
    const std::span<const std::uint32_t> s(pt);
    CHECK(evaluate(f * g, s) == r->field.mul(evaluate(f, s), evaluate(g, s)));
    CHECK(evaluate(f + g, s) == r->field.add(evaluate(f, s), evaluate(g, s)));
  }
}

TEST_CASE("parse and print round trip") {
  const auto q = xy_ring(RationalField{});
  for (const char* text : {"x^2 - y^2", "-3/2*x*y + 7", "0", "1", "x^3*y^2 - x + 1/5*y"}) {
    const auto f = poly(text, q);
    CHECK(poly(to_string(f), q) == f);
  }
  CHECK(poly("y*x*2 + x*y", q) == poly("3*x*y", q));
  CHECK_THROWS_AS(poly("x + w", q), Error);
  CHECK_THROWS_AS(poly("x +", q), Error);
  CHECK_THROWS_AS(poly("x^", q), Error);
}

TEST_CASE("mixed rings are rejected") {
  const auto a = xy_ring(RationalField{});
  const auto b = make_ring(RationalField{}, VariableSet::named({"x", "y", "t"}));
  try {
    (void)(poly("x", a) + poly("x", b));
    FAIL("expected mixed_rings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::mixed_rings);
  }
  CHECK(change_ring(poly("x*y + 1", a), b) == poly("x*y + 1", b));
  CHECK_THROWS_AS(change_ring(poly("t", b), a), Error);
}

TEST_CASE("variable sets") {
  CHECK_THROWS_AS(VariableSet::named({"x", "x"}), Error);
  std::vector<Variable> many;
  for (int i = 0; i < 65; ++i) many.push_back(named_variable("v" + std::to_string(i)));
  CHECK_THROWS_AS(VariableSet{many}, Error);
  const auto vs = VariableSet::named({"x", "y"}).with_leading(named_variable("t"));
  CHECK(vs.index_of("t") == std::optional<std::size_t>(0));
  CHECK(vs.index_of("y") == std::optional<std::size_t>(2));
}

TEST_CASE("monomial exponent overflow is a resource limit") {
  const auto m = Monomial::variable(1, 0, 200);
  CHECK_THROWS_AS((void)(m * m), Error);
}
