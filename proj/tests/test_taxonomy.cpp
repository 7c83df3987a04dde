#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ringlab/assets.hpp"
#include "ringlab/builders.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/derived.hpp"
#include "ringlab/taxonomy.hpp"

using namespace ringlab;

TEST_CASE("clean witnesses of 2 in Z3") {
  const FiniteRing z3 = make_zn(3);
  const auto ws = clean_witnesses(z3, 2);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].e == 0);
  CHECK(ws[0].partner == 2);
  CHECK(ws[0].commutes);
  CHECK(ws[1].e == 1);
  CHECK(ws[1].partner == 1);
  CHECK(ws[1].commutes);

  CHECK(nil_clean_witnesses(z3, 2).empty());

  const ElementProfile p = classify_element(z3, 2);
  CHECK(p.clean);
  CHECK(p.strongly_clean);
  CHECK(!p.uniquely_clean);
  CHECK(!p.nil_clean);
}

TEST_CASE("zero decomposes as 1 + (-1) in any ring") {
  for (const FiniteRing& r :
       {make_zn(5), matrix_ring(make_zn(2), 2), triangular_ring(make_zn(3), 2)}) {
    bool found = false;
    for (const auto& w : clean_witnesses(r, r.zero()))
      if (w.e == r.one() && w.partner == r.neg(r.one())) found = true;
    CHECK(found);
  }
}

TEST_CASE("the unit [[1,1],[1,0]] of M2(Z2) is clean but not strongly nil-clean") {
  const FiniteRing m = matrix_ring(make_zn(2), 2);
  const elem a = 14;  // [[1,1],[1,0]]
  CHECK(!clean_witnesses(m, a).empty());

  const auto nws = nil_clean_witnesses(m, a);
  CHECK(!nws.empty());
  for (const auto& w : nws) CHECK(!w.commutes);

  // a - a^2 is the identity matrix, which is not nilpotent.
  const elem diff = m.sub(a, m.mul(a, a));
  CHECK(diff == m.one());
  CHECK(!nilpotents(m).test(diff));
}

TEST_CASE("Z4: 2 is strongly nil-clean with witness (0, 2)") {
  const FiniteRing z4 = make_zn(4);
  const auto ws = nil_clean_witnesses(z4, 2);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].e == 0);
  CHECK(ws[0].partner == 2);
  CHECK(ws[0].commutes);
  CHECK(classify_element(z4, 2).strongly_nil_clean);
}

TEST_CASE("idempotents and nilpotents are uniquely strongly clean") {
  for (const FiniteRing& r :
       {make_zn(12), matrix_ring(make_zn(2), 2), triangular_ring(make_zn(3), 2),
        group_ring(make_zn(2), cyclic_group(3)), assets::f4()}) {
    CAPTURE(r.source());
    for (elem e : idempotent_list(r)) {
      const ElementProfile p = classify_element(r, e);
      CHECK(p.uniquely_strongly_clean);
      // Uniquely clean exactly when central.
      CHECK(p.uniquely_clean == center(r).test(e));
    }
    for (elem q : nilpotent_list(r))
      CHECK(classify_element(r, q).uniquely_strongly_clean);
  }
}

TEST_CASE("strongly nil-clean elements are strongly clean via (1-e, 2e-1+q)") {
  for (const FiniteRing& r :
       {make_zn(8), triangular_ring(make_zn(2), 2), ks_ring(make_zn(2), 0)}) {
    CAPTURE(r.source());
    for (elem a = 0; a < r.order(); ++a) {
      const ElementProfile p = classify_element(r, a);
      if (!p.strongly_nil_clean) continue;
      CHECK(p.strongly_clean);
      // Rebuild the clean decomposition from a commuting nil-clean one.
      for (const auto& w : p.nil_clean_witnesses) {
        if (!w.commutes) continue;
        const elem e = w.e, q = w.partner;
        const elem f = r.sub(r.one(), e);
        const elem u = r.add(r.sub(r.add(e, e), r.one()), q);  // (2e-1)+q
        CHECK(r.add(f, u) == a);
        CHECK(units(r).test(u));
        CHECK(r.mul(f, a) == r.mul(a, f));
        break;
      }
    }
  }
}

TEST_CASE("lift_idempotent on the worked examples") {
  const FiniteRing z9 = make_zn(9);
  CHECK(lift_idempotent(z9, 3) == 0);

  const FiniteRing z4 = make_zn(4);
  CHECK(lift_idempotent(z4, 2) == 0);

  const FiniteRing z8 = make_zn(8);
  CHECK(lift_idempotent(z8, 3) == 1);  // 3 = 1 + 2 with 2 nilpotent

  // Idempotents are fixed points.
  const FiniteRing z6 = make_zn(6);
  for (elem e : idempotent_list(z6)) CHECK(lift_idempotent(z6, e) == e);

  // 2 - 2^2 = 1 in Z3 is not nilpotent.
  CHECK_THROWS_AS(lift_idempotent(make_zn(3), 2), NotAlmostIdempotent);
}

TEST_CASE("lift_idempotent properties on small corpus rings") {
  for (const auto& entry : build_corpus()) {
    if (entry.ring.order() > 512) continue;
    CAPTURE(entry.name);
    const FiniteRing& r = entry.ring;
    const Bitset& nil = nilpotents(r);
    for (elem a = 0; a < r.order(); ++a) {
      if (!nil.test(r.sub(a, r.mul(a, a)))) continue;
      const elem e = lift_idempotent(r, a);
      CHECK(r.mul(e, e) == e);
      CHECK(nil.test(r.sub(a, e)));
      CHECK(r.mul(e, a) == r.mul(a, e));
      // The lift shows up among the commuting nil-clean witnesses.
      bool found = false;
      for (const auto& w : nil_clean_witnesses(r, a))
        if (w.e == e && w.commutes) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("in NCUC rings, (Nil + U) meets Id only at 1") {
  // Commutative rings are abelian, hence NCUC.
  for (const FiniteRing& r : {make_zn(3), make_zn(6), make_zn(12), assets::f4(),
                              group_ring(make_zn(2), cyclic_group(3))}) {
    CAPTURE(r.source());
    std::set<elem> meet;
    for (elem q : nilpotent_list(r))
      for (elem u : unit_list(r)) {
        const elem s = r.add(q, u);
        if (idempotents(r).test(s)) meet.insert(s);
      }
    CHECK(meet == std::set<elem>{r.one()});
  }
}

TEST_CASE("in NCUC rings, nilpotents are uniquely nil-clean") {
  for (const FiniteRing& r : {make_zn(4), make_zn(8), make_zn(12),
                              group_ring(make_zn(2), cyclic_group(2))}) {
    CAPTURE(r.source());
    for (elem q : nilpotent_list(r))
      CHECK(classify_element(r, q).uniquely_nil_clean);
  }
}

TEST_CASE("commuting nil-clean witness count is recorded separately") {
  const FiniteRing m = matrix_ring(make_zn(2), 2);
  for (elem a = 0; a < m.order(); ++a) {
    const ElementProfile p = classify_element(m, a);
    CHECK(p.commuting_nil_clean_count <= p.nil_clean_count);
    CHECK(p.strongly_nil_clean == (p.commuting_nil_clean_count > 0));
  }
}

TEST_CASE("element id range is enforced") {
  const FiniteRing z4 = make_zn(4);
  CHECK_THROWS_AS(clean_witnesses(z4, 4), IndexOutOfRange);
  CHECK_THROWS_AS(lift_idempotent(z4, 9), IndexOutOfRange);
}
