#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nilpat;

namespace {

template <class T>
const T& payload(const Certificate& c) {
  REQUIRE(std::holds_alternative<T>(c.data));
  return std::get<T>(c.data);
}

Verdict decide(const ZnzPattern& a, std::int64_t p) {
  DecideOptions o;
  o.search.threads = 1;
  return decide_pn(a, p, o);
}

}  // namespace

TEST_CASE("filter_structural") {
  for (const char* label : {"A_{1,1}", "A_{1,2}", "A_{1,3}"}) {
    const auto c = filter_structural(fixture::listed(label).pattern());
    REQUIRE(c.has_value());
    CHECK((c->kind == CertificateKind::single_transversal || c->kind == CertificateKind::single_diagonal));
  }
  const auto a12 = filter_structural(fixture::listed("A_{1,2}").pattern());
  CHECK(a12->kind == CertificateKind::single_diagonal);
  CHECK(payload<MonomialData>(*a12).coefficient == "F_1");
  CHECK(payload<MonomialData>(*a12).positions == std::vector<Position>{{1, 1}});
  const auto a11 = filter_structural(fixture::listed("A_{1,1}").pattern());
  CHECK(a11->kind == CertificateKind::single_transversal);
  CHECK(payload<MonomialData>(*a11).monomial == "z[1,2]*z[2,3]*z[3,1]");
  CHECK_FALSE(filter_structural(fixture::full(3)).has_value());
  CHECK(filter_structural(ZnzPattern::from_rows({"*0", "0*"}))->kind == CertificateKind::single_transversal);
  // Two loops, no 2-cycles, two transversals.
  const auto gap = ZnzPattern::from_rows({"**00", "0**0", "000*", "**00"});
  REQUIRE(transversal_count(gap) == 2);
  const auto d = filter_structural(gap);
  REQUIRE(d.has_value());
  CHECK(d->kind == CertificateKind::no_small_cycles);
  CHECK(payload<CycleGapData>(*d).loops == 2);
  CHECK(payload<CycleGapData>(*d).k_min == 2);
  CHECK(payload<CycleGapData>(*d).k_max == 2);
  CHECK_FALSE(filter_structural(ZnzPattern(2)).has_value());
}

TEST_CASE("filter_z2") {
  const auto a26 = filter_z2(fixture::listed("A_{2,6}").pattern(), 2);
  REQUIRE(a26.has_value());
  CHECK(a26->kind == CertificateKind::z2_parity);
  CHECK(payload<Z2Data>(*a26).loops == 3);
  const auto a45 = filter_z2(fixture::listed("A_{4,5}").pattern(), 2);
  REQUIRE(a45.has_value());
  CHECK(a45->kind == CertificateKind::z2_two_loops_two_2cycles);
  CHECK_FALSE(filter_z2(fixture::full(2), 2).has_value());
  try {
    (void)filter_z2(fixture::full(2), 3);
    FAIL("expected wrong_field");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_field);
  }
}

TEST_CASE("roots_of_unity_split") {
  CHECK(roots_of_unity_split(3, 7));
  CHECK_FALSE(roots_of_unity_split(3, 5));
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 101}) CHECK(roots_of_unity_split(1, p));
  CHECK(roots_of_unity_split(3, 3));
  CHECK(roots_of_unity_split(4, 2));
  CHECK(roots_of_unity_split(6, 7));
  CHECK_FALSE(roots_of_unity_split(6, 5));
  for (int m = 1; m <= 12; ++m)
    for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U}) {
      REQUIRE(roots_of_unity_split(m, p) == oracle::splits_by_division(m, p));
    }
  CHECK_THROWS_AS((void)roots_of_unity_split(3, 4), Error);
}

TEST_CASE("filter_no_small_cycles") {
  const auto a14 = fixture::listed("A_{1,4}").pattern();
  const auto c = filter_no_small_cycles(a14, 5);
  REQUIRE(c.has_value());
  CHECK(c->kind == CertificateKind::roots_of_unity_missing);
  CHECK(payload<RootsData>(*c).m == 3);
  CHECK(payload<RootsData>(*c).p == 5);
  SearchOptions o;
  o.threads = 1;
  CHECK_FALSE(brute_force_search(a14, 5, o).realization.has_value());
  CHECK_FALSE(filter_no_small_cycles(a14, 7).has_value());
  CHECK_FALSE(filter_no_small_cycles(fixture::listed("A_{2,5}").pattern(), 5).has_value());
}

TEST_CASE("saturation_certificate") {
  const auto c = saturation_certificate(fixture::loop_full_block(), PrimeField(2));
  REQUIRE(c.has_value());
  CHECK(c->kind == CertificateKind::saturation_unit);
  const auto& d = payload<SaturationData>(*c);
  CHECK(d.unit_in_colon == std::optional<bool>(false));
  CHECK(d.extension_claim);
  CHECK(d.witness == std::vector<std::string>{"1"});
  CHECK(d.field == "Z_2");

  const auto g = saturation_certificate(fixture::g5(), RationalField{});
  REQUIRE(g.has_value());
  CHECK(payload<SaturationData>(*g).field == "Q");
  CHECK_FALSE(saturation_certificate(fixture::three_cycle_loops(), RationalField{}).has_value());
  CHECK(saturation_certificate(fixture::path_end_loops(), PrimeField(2)).has_value());
}

TEST_CASE("brute_force_search") {
  SearchOptions o;
  o.threads = 1;
  const auto a14 = fixture::listed("A_{1,4}").pattern();
  const auto r = brute_force_search(a14, 7, o);
  REQUIRE(r.realization.has_value());
  CHECK(check_nilpotent(a14, *r.realization));
  CHECK(r.realization->power(3).is_zero());
  CHECK(r.stats.variables == 6);
  CHECK(r.stats.fixed == 2);
  CHECK(r.stats.space == 6 * 6 * 6 * 6);
  CHECK(r.stats.evaluated >= 1);
  CHECK(r.stats.evaluated <= 6 * 6 * 6);

  const auto f2 = brute_force_search(fixture::full(2), 3, o);
  REQUIRE(f2.realization.has_value());
  CHECK(*f2.realization == Matrix<PrimeField>::from_integers(PrimeField(3), {{1, 1}, {2, 2}}));

  const auto a25 = brute_force_search(fixture::listed("A_{2,5}").pattern(), 2, o);
  CHECK_FALSE(a25.realization.has_value());
  CHECK(a25.stats.evaluated == 1);

  const auto empty = brute_force_search(ZnzPattern(2), 5, o);
  REQUIRE(empty.realization.has_value());
  CHECK(empty.realization->is_zero());
}

TEST_CASE("search budget") {
  SearchOptions o;
  o.budget = 10;
  o.threads = 1;
  try {
    (void)brute_force_search(fixture::full(3), 13, o);
    FAIL("expected search_budget_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::search_budget_exceeded);
  }
  DecideOptions d;
  d.search = o;
  d.use_saturation = false;
  const auto v = decide_pn(fixture::full(3), 13, d);
  CHECK(v.status == Status::unknown);
  CHECK(v.certificate.kind == CertificateKind::none);
  CHECK(payload<UnknownData>(v.certificate).stage == "search");
}

TEST_CASE("search results do not depend on the thread count") {
  for (const auto& l : fixture::listed_order3()) {
    const auto a = l.pattern();
    for (std::int64_t p : {7, 13}) {
      SearchOptions one;
      one.threads = 1;
      SearchOptions many;
      many.threads = 4;
      const auto r1 = brute_force_search(a, p, one);
      const auto r4 = brute_force_search(a, p, many);
      REQUIRE(r1.realization.has_value() == r4.realization.has_value());
      if (r1.realization) CHECK(*r1.realization == *r4.realization);
      CHECK(r1.stats.evaluated == r4.stats.evaluated);
    }
  }
}

TEST_CASE("an_realization") {
  const auto r7 = an_realization(3, 7);
  REQUIRE(r7.has_value());
  CHECK(check_nilpotent(an_family(3), *r7));
  std::multiset<std::uint32_t> diag{r7->at(0, 0), r7->at(1, 1), r7->at(2, 2)};
  CHECK(diag == std::multiset<std::uint32_t>{1, 2, 4});
  CHECK(r7->at(2, 2) == 1U);
  const auto r3 = an_realization(3, 3);
  REQUIRE(r3.has_value());
  CHECK(*r3 == Matrix<PrimeField>::from_integers(PrimeField(3), {{1, 1, 0}, {0, 1, 1}, {2, 0, 1}}));
  CHECK(r3->power(3).is_zero());
  CHECK_FALSE(an_realization(3, 5).has_value());
}

TEST_CASE("decide_pn examples") {
  const auto e38 = decide(fixture::loop_full_block(), 2);
  CHECK(e38.status == Status::not_potentially_nilpotent);
  CHECK(e38.certificate.kind == CertificateKind::single_diagonal);
  CHECK(e38.certificate.component == std::vector<int>{1});

  const auto f2 = decide(fixture::full(3), 2);
  CHECK(f2.status == Status::not_potentially_nilpotent);
  CHECK(f2.certificate.kind == CertificateKind::z2_parity);

  const auto f5 = decide(fixture::full(3), 5);
  CHECK(f5.status == Status::potentially_nilpotent);
  REQUIRE(f5.realization.has_value());
  CHECK(check_nilpotent(fixture::full(3), *f5.realization));
  CHECK(f5.certificate.kind == CertificateKind::realization);

  const auto e31 = decide(fixture::path_end_loops(), 2);
  CHECK(e31.status == Status::not_potentially_nilpotent);

  const auto a25 = decide(fixture::listed("A_{2,5}").pattern(), 2);
  CHECK(a25.status == Status::not_potentially_nilpotent);
  CHECK(std::holds_alternative<PrimeKind>(a25.field));
}

TEST_CASE("decide_pn on reducible patterns combines components") {
  // [A_{2,1} | *] over a zero block: PN, realization assembled from blocks.
  const auto a = ZnzPattern::from_rows({"0*0*", "*0*0", "0*0*", "0000"});
  const auto v = decide(a, 5);
  REQUIRE(v.status == Status::potentially_nilpotent);
  REQUIRE(v.realization.has_value());
  CHECK(check_nilpotent(a, *v.realization));

  // A non-PN later component is reported with its own vertices.
  const auto b = ZnzPattern::from_rows({"0*00", "0000", "00**", "00*0"});
  const auto w = decide(b, 5);
  CHECK(w.status == Status::not_potentially_nilpotent);
  CHECK(w.certificate.component == std::vector<int>{3, 4});
  CHECK(w.certificate.kind == CertificateKind::single_diagonal);
  CHECK(payload<MonomialData>(w.certificate).positions == std::vector<Position>{{3, 3}});

  // Stage names come from a fixed vocabulary.
  for (const auto& s : v.stages) {
    CHECK((s.name == "components" || s.name == "structural" || s.name == "z2" || s.name == "roots_of_unity" ||
           s.name == "saturation" || s.name == "search"));
    CHECK(s.micros >= 0);
  }
}

TEST_CASE("certificate positions are reported in the original labelling") {
  const auto a = ZnzPattern::from_rows({"*00", "0*0", "0**"});
  const auto v = decide(a, 3);
  CHECK(v.status == Status::not_potentially_nilpotent);
  CHECK(v.certificate.component == std::vector<int>{1});
  const auto b = ZnzPattern::from_rows({"0*0", "000", "00*"});
  const auto w = decide(b, 3);
  REQUIRE(w.certificate.kind == CertificateKind::single_diagonal);
  CHECK(w.certificate.component == std::vector<int>{3});
  CHECK(payload<MonomialData>(w.certificate).positions == std::vector<Position>{{3, 3}});
}

TEST_CASE("analyze_rationals") {
  const auto g = analyze_rationals(fixture::g5());
  CHECK(g.status == Status::not_potentially_nilpotent);
  CHECK(g.certificate.kind == CertificateKind::saturation_unit);
  CHECK(std::holds_alternative<RationalsKind>(g.field));
  const auto u = analyze_rationals(fixture::three_cycle_loops());
  CHECK(u.status == Status::unknown);
  CHECK(u.certificate.kind == CertificateKind::none);
  CHECK_FALSE(u.realization.has_value());
}

TEST_CASE("every realization passes the power witness") {
  for (const auto& l : fixture::listed_order3()) {
    for (std::int64_t p : {2, 3, 5, 7, 13}) {
      const auto v = decide(l.pattern(), p);
      if (v.status != Status::potentially_nilpotent) continue;
      REQUIRE(v.realization.has_value());
      CHECK(check_nilpotent(l.pattern(), *v.realization));
      CHECK(v.realization->power(3).is_zero());
    }
  }
}

TEST_CASE("saturation certificate never contradicts the search") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n * n)); ++b) {
      const auto a = oracle::from_bits(n, b);
      for (std::int64_t p : {2, 3}) {
        if (!saturation_certificate(a, PrimeField(p))) continue;
        SearchOptions o;
        o.threads = 1;
        REQUIRE_FALSE(brute_force_search(a, p, o).realization.has_value());
      }
    }
  }
}

TEST_CASE("transpose consistency") {
  for (std::uint64_t b = 0; b < 512; ++b) {
    const auto a = oracle::from_bits(3, b);
    for (std::int64_t p : {2, 3, 5, 7}) {
      DecideOptions o;
      o.search.threads = 1;
      o.use_saturation = false;
      REQUIRE(decide_pn(a, p, o).status == decide_pn(transpose(a), p, o).status);
    }
  }
}

TEST_CASE("A_n family law") {
  for (int n = 3; n <= 5; ++n) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      const auto a = an_family(n);
      const bool split = roots_of_unity_split(n, p);
      const auto v = decide(a, p);
      CHECK((v.status == Status::potentially_nilpotent) == split);
      SearchOptions s;
      s.threads = 1;
      CHECK(brute_force_search(a, p, s).realization.has_value() == split);
      const auto r = an_realization(n, p);
      CHECK(r.has_value() == split);
      if (r) CHECK(check_nilpotent(a, *r));
    }
  }
}

TEST_CASE("NILPAT_THREADS overrides the worker count") {
  ::setenv("NILPAT_THREADS", "3", 1);
  CHECK(default_threads() == 3U);
  ::setenv("NILPAT_THREADS", "junk", 1);
  CHECK(default_threads() >= 1U);
  ::unsetenv("NILPAT_THREADS");
  CHECK(default_threads() >= 1U);
}
