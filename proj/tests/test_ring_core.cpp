#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "ringlab/builders.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/derived.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/kernels.hpp"

using namespace ringlab;

namespace {

TablePair z2_tables() {
  TablePair t;
  t.add = {{0, 1}, {1, 0}};
  t.mul = {{0, 0}, {0, 1}};
  return t;
}

// Independent oracle for F4: brute-force polynomial arithmetic over Z2 mod
// the irreducible quadratic x^2 + x + 1. Elements are encoded as a0 + 2*a1
// for a0 + a1*x, so 0, 1, x, x+1 get ids 0, 1, 2, 3.
TablePair f4_tables_from_polynomials() {
  auto decode = [](elem v) { return std::pair<elem, elem>{v & 1, v >> 1}; };
  auto encode = [](elem a0, elem a1) { return elem(a0 | (a1 << 1)); };
  TablePair t;
  t.add.assign(4, std::vector<elem>(4));
  t.mul.assign(4, std::vector<elem>(4));
  for (elem a = 0; a < 4; ++a)
    for (elem b = 0; b < 4; ++b) {
      auto [a0, a1] = decode(a);
      auto [b0, b1] = decode(b);
      t.add[a][b] = encode(a0 ^ b0, a1 ^ b1);
      // (a0 + a1 x)(b0 + b1 x) = a0b0 + (a0b1 + a1b0) x + a1b1 x^2,
      // and x^2 = x + 1.
      const elem c0 = (a0 & b0) ^ (a1 & b1);
      const elem c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
      t.mul[a][b] = encode(c0, c1);
    }
  return t;
}

std::set<elem> as_set(const Bitset& b) {
  auto l = b.to_list();
  return {l.begin(), l.end()};
}

}  // namespace

TEST_CASE("validate_tables accepts Z2") {
  const FiniteRing r = validate_tables(z2_tables());
  CHECK(r.order() == 2);
  CHECK(r.zero() == 0);
  CHECK(r.one() == 1);
  CHECK(r.mul(1, 1) == 1);
}

TEST_CASE("validate_tables rejects a flipped entry") {
  TablePair t = z2_tables();
  t.mul[1][1] = 0;  // now nothing acts as a two-sided identity
  CHECK_THROWS_AS(validate_tables(t), NoIdentity);

  TablePair t2 = z2_tables();
  t2.add[1][1] = 1;  // breaks the abelian group structure
  CHECK_THROWS_AS(validate_tables(t2), AxiomViolation);

  TablePair t3 = z2_tables();
  t3.mul[0][1] = 1;  // 0*1 = 1 breaks distributivity
  CHECK_THROWS_AS(validate_tables(t3), AxiomViolation);
}

TEST_CASE("validate_tables rejects out-of-range entries") {
  TablePair t = z2_tables();
  t.mul[0][1] = 7;
  CHECK_THROWS_AS(validate_tables(t), OutOfRangeEntry);
}

TEST_CASE("F4 built from brute-force polynomial arithmetic") {
  const FiniteRing f4 = validate_tables(f4_tables_from_polynomials(), "F4");
  CHECK(f4.order() == 4);
  CHECK(unit_list(f4).size() == 3);
  CHECK(nilpotent_list(f4).size() == 1);  // reduced
  CHECK(idempotent_list(f4).size() == 2);
}

TEST_CASE("bundled f4.ring asset matches the polynomial oracle") {
  std::ifstream in(std::string(RINGLAB_ASSETS_DIR) + "/f4.ring");
  REQUIRE(in);
  const FiniteRing from_file = load_ring_table(in, "F4");
  const FiniteRing from_poly = validate_tables(f4_tables_from_polynomials());
  REQUIRE(from_file.order() == 4);
  for (elem a = 0; a < 4; ++a)
    for (elem b = 0; b < 4; ++b) {
      CHECK(from_file.add(a, b) == from_poly.add(a, b));
      CHECK(from_file.mul(a, b) == from_poly.mul(a, b));
    }
}

TEST_CASE("pow") {
  const FiniteRing z8 = make_zn(8);
  CHECK(pow(z8, 2, 3) == 0);
  CHECK(pow(z8, 5, 0) == z8.one());
  const FiniteRing z9 = make_zn(9);
  CHECK(pow(z9, 3, 2) == 0);
  const FiniteRing z5 = make_zn(5);
  CHECK(pow(z5, 2, 4) == 1);
}

TEST_CASE("derived sets of Z6") {
  const FiniteRing z6 = make_zn(6);
  CHECK(as_set(units(z6)) == std::set<elem>{1, 5});
  CHECK(as_set(idempotents(z6)) == std::set<elem>{0, 1, 3, 4});
  CHECK(as_set(nilpotents(z6)) == std::set<elem>{0});
  CHECK(inverse_of(z6, 5) == 5);
  CHECK(inverse_of(z6, 2) == kNoElem);
}

TEST_CASE("derived sets of Z8") {
  const FiniteRing z8 = make_zn(8);
  CHECK(as_set(nilpotents(z8)) == std::set<elem>{0, 2, 4, 6});
  CHECK(nil_index(z8, 2) == 3);
  CHECK(nil_index(z8, 4) == 2);
  CHECK(nil_index(z8, 0) == 1);
  CHECK(nil_index(z8, 1) == 0);  // not nilpotent
}

TEST_CASE("derived sets of M2(Z2)") {
  const FiniteRing m = matrix_ring(make_zn(2), 2);
  CHECK(unit_list(m).size() == 6);
  // Center is {0, I}; I has digits (1,0,0,1) -> id 9.
  CHECK(as_set(center(m)) == std::set<elem>{0, 9});
  CHECK(m.label(9) == "[[1,0],[0,1]]");
}

TEST_CASE("jacobson radical") {
  CHECK(as_set(jacobson_radical(make_zn(8))) == std::set<elem>{0, 2, 4, 6});
  CHECK(as_set(jacobson_radical(matrix_ring(make_zn(2), 2))) ==
        std::set<elem>{0});
  // T2(Z2) cells (a,b,c) encode a*4 + b*2 + c; E_12 = (0,1,0) -> id 2.
  const FiniteRing t = triangular_ring(make_zn(2), 2);
  CHECK(as_set(jacobson_radical(t)) == std::set<elem>{0, 2});
}

TEST_CASE("order-1 ring") {
  const FiniteRing z1 = make_zn(1);
  CHECK(z1.order() == 1);
  CHECK(z1.zero() == z1.one());
  CHECK(as_set(units(z1)) == std::set<elem>{0});
  CHECK(as_set(idempotents(z1)) == std::set<elem>{0});
  CHECK(as_set(nilpotents(z1)) == std::set<elem>{0});
  CHECK(nil_index(z1, 0) == 1);
  CHECK(as_set(jacobson_radical(z1)) == std::set<elem>{0});
  CHECK(z1.characteristic() == 1);
}

TEST_CASE("characteristic") {
  CHECK(make_zn(6).characteristic() == 6);
  CHECK(matrix_ring(make_zn(2), 2).characteristic() == 2);
  CHECK(direct_product({make_zn(2), make_zn(3)}).characteristic() == 6);
}

TEST_CASE("derived-set invariants over the corpus") {
  for (const auto& entry : build_corpus()) {
    if (entry.ring.order() > 1024) continue;  // big rings covered by acceptance
    CAPTURE(entry.name);
    const FiniteRing& r = entry.ring;
    const DerivedSets& d = derived_sets(r);

    CHECK(d.idempotents.test(r.zero()));
    CHECK(d.idempotents.test(r.one()));
    CHECK(d.units.test(r.one()));
    CHECK(d.nilpotents.test(r.zero()));
    CHECK(d.nil_index[r.zero()] == 1);

    if (r.order() > 1) {
      Bitset both = d.units;
      CHECK(!both.intersects(d.nilpotents));
    }

    // jacobson ∩ idempotents = {0}; J ⊆ Nil for finite rings.
    for (elem e : d.idem_list)
      CHECK(d.jacobson.test(e) == (e == r.zero()));
    CHECK(d.jacobson.is_subset_of(d.nilpotents));

    // Units form a group; inversion is an involution.
    for (elem u : d.unit_list) {
      const elem v = d.inverse_of[u];
      CHECK(d.units.test(v));
      CHECK(d.inverse_of[v] == u);
      CHECK(r.mul(u, v) == r.one());
    }
    for (elem u : d.unit_list)
      for (elem v : d.unit_list) CHECK(d.units.test(r.mul(u, v)));

    // a nilpotent iff zero shows up in the power orbit up to a^order.
    for (elem a = 0; a < r.order(); ++a) {
      bool zero_in_orbit = false;
      elem p = a;
      for (uint32_t k = 1; k <= r.order() && !zero_in_orbit; ++k) {
        zero_in_orbit = p == r.zero();
        p = r.mul(p, a);
      }
      CHECK(zero_in_orbit == d.nilpotents.test(a));
    }

    // J is an ideal and nilpotent as a set.
    CHECK(ideal_closure(r, d.jacobson_list) == d.jacobson);
    CHECK(kernels::set_is_nilpotent(r.view(), d.jacobson_list));
  }
}

TEST_CASE("radical is a nilpotent nil ideal on the order-4096 corpus rings") {
  for (const auto& entry : build_corpus()) {
    if (entry.ring.order() <= 1024) continue;
    CAPTURE(entry.name);
    const FiniteRing& r = entry.ring;
    CHECK(jacobson_radical(r).is_subset_of(nilpotents(r)));
    CHECK(ideal_closure(r, jacobson_list(r)) == jacobson_radical(r));
    CHECK(kernels::set_is_nilpotent(r.view(), jacobson_list(r)));
  }
}

TEST_CASE("readers may race to memoize the same derived sets") {
  const FiniteRing r = matrix_ring(make_zn(4), 2);
  std::array<const DerivedSets*, 4> results{};
  {
    std::vector<std::thread> threads;
    for (size_t i = 0; i < results.size(); ++i)
      threads.emplace_back([&, i] { results[i] = &derived_sets(r); });
    for (auto& t : threads) t.join();
  }
  for (size_t i = 1; i < results.size(); ++i) CHECK(results[i] == results[0]);
  CHECK(results[0]->units == units(r));
  CHECK(results[0]->jacobson == jacobson_radical(r));
}

TEST_CASE("group axioms of bundled and constructed groups") {
  std::ifstream in(std::string(RINGLAB_ASSETS_DIR) + "/s3.group");
  REQUIRE(in);
  const FiniteGroup s3 = load_group_table(in, "S3");
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());

  // A non-associative table must be rejected: (2*2)*1 = 0 but 2*(2*1) = 2.
  std::istringstream broken("order 3\n0 1 2\n1 2 0\n2 0 2\n");
  CHECK_THROWS_AS(load_group_table(broken), AxiomViolation);

  const FiniteGroup c4 = cyclic_group(4);
  CHECK(c4.pow(1, 4) == c4.identity());
  CHECK(c4.pow(1, 2) != c4.identity());

  const FiniteGroup klein = group_product({cyclic_group(2), cyclic_group(2)});
  for (elem g = 0; g < 4; ++g) CHECK(klein.op(g, g) == klein.identity());
}

TEST_CASE("order cap fails fast") {
  CHECK_THROWS_AS(make_zn(70000), OrderCapExceeded);
  CHECK_THROWS_AS(matrix_ring(make_zn(17), 2), OrderCapExceeded);
  const BuildLimits tight{64};
  CHECK_THROWS_AS(make_zn(100, tight), OrderCapExceeded);
  CHECK(make_zn(64, tight).order() == 64);
}

TEST_CASE("table file format errors") {
  {
    std::istringstream in("order 2\n0 1\n1 0\n0 0\n0 9\n");
    CHECK_THROWS_AS(load_ring_table(in), OutOfRangeEntry);
  }
  {
    std::istringstream in("2\n0 1\n1 0\n");
    CHECK_THROWS_AS(load_ring_table(in), OutOfRangeEntry);
  }
  {
    std::istringstream in("order 2\n0 1\n1 0\n0 0\n");
    CHECK_THROWS_AS(load_ring_table(in), OutOfRangeEntry);
  }
}
