#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "dlat/enumerate.hpp"
#include "dlat/invariants.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dlat;

TEST_CASE("lambda sets on the diamond") {
  DistLattice d = fixtures::diamond();
  CHECK(lambda_set(d, d.bottom()).count() == 4);
  int a = d.order().index_of("a");
  Bits lam = lambda_set(d, a);
  CHECK(lam.count() == 3);
  CHECK_FALSE(lam.test(d.order().index_of("b")));
}

TEST_CASE("lambda set on the cube matches the comparability oracle") {
  DistLattice cube = fixtures::b3();
  int v1 = cube.order().index_of("1");
  Bits lam = lambda_set(cube, v1);
  CHECK(lam.count() == 5);
  CHECK(oracles::f_value(cube, v1) == 5);
  std::set<std::string> names;
  for (int v = lam.next(0); v >= 0; v = lam.next(v + 1))
    names.insert(cube.name(v));
  CHECK(names == std::set<std::string>{"e", "1", "12", "13", "123"});

  for (int d = 0; d < cube.size(); ++d)
    CHECK(comparable_count(cube, d) == oracles::f_value(cube, d));
}

TEST_CASE("lambda equals the union of the two intervals and is closed") {
  for (const DistLattice& L :
       {fixtures::diamond(), fixtures::b3(), fixtures::v5(),
        fixtures::double_diamond()})
    for (int d = 0; d < L.size(); ++d) {
      Bits lam = lambda_set(L, d);
      CHECK(lam == (L.order().below(d) | L.order().above(d)));
      for (int x = lam.next(0); x >= 0; x = lam.next(x + 1))
        for (int y = lam.next(x); y >= 0; y = lam.next(y + 1)) {
          CHECK(lam.test(L.join(x, y)));
          CHECK(lam.test(L.meet(x, y)));
        }
    }
}

TEST_CASE("noncomparable counts") {
  CHECK(noncomparable_count(fixtures::chain3()) == 0);
  CHECK(noncomparable_count(fixtures::chain(6)) == 0);
  CHECK(noncomparable_count(fixtures::diamond()) == 1);
  CHECK(noncomparable_count(fixtures::b3()) == 9);  // 28 pairs, 19 comparable
  CHECK(noncomparable_count(fixtures::v5()) == 1);
  CHECK(noncomparable_count(fixtures::double_diamond()) == 2);
}

TEST_CASE("pair scan agrees with the cover-walk oracle") {
  for (const DistLattice& L :
       {fixtures::diamond(), fixtures::b3(), fixtures::v5(),
        fixtures::double_diamond(), fixtures::chain(5)})
    CHECK(noncomparable_count(L) == oracles::pair_count(L));
}

TEST_CASE("diamond enumeration") {
  CHECK(enumerate_diamonds(fixtures::chain3()).empty());

  DistLattice d = fixtures::diamond();
  auto ds = enumerate_diamonds(d);
  REQUIRE(ds.size() == 1);
  CHECK(d.name(ds[0].theta) == "a");
  CHECK(d.name(ds[0].delta) == "b");
  CHECK(ds[0].join == d.top());
  CHECK(ds[0].meet == d.bottom());

  DistLattice cube = fixtures::b3();
  auto cds = enumerate_diamonds(cube);
  REQUIRE(cds.size() == 9);
  bool found = false;
  for (const Diamond& dm : cds)
    found |= cube.name(dm.theta) == "1" && cube.name(dm.delta) == "2" &&
             cube.name(dm.join) == "12" && cube.name(dm.meet) == "e";
  CHECK(found);
}

TEST_CASE("diamonds are canonically oriented, sorted, and distinct as 4-sets") {
  for (const DistLattice& L :
       {fixtures::b3(), fixtures::v5(), fixtures::double_diamond()}) {
    auto ds = enumerate_diamonds(L);
    CHECK(static_cast<std::int64_t>(ds.size()) == noncomparable_count(L));
    std::set<std::set<int>> as_sets;
    for (const Diamond& dm : ds) {
      CHECK(dm.theta < dm.delta);
      CHECK_FALSE(L.comparable(dm.theta, dm.delta));
      CHECK(dm.join == L.join(dm.theta, dm.delta));
      CHECK(dm.meet == L.meet(dm.theta, dm.delta));
      as_sets.insert({dm.theta, dm.delta, dm.join, dm.meet});
    }
    CHECK(as_sets.size() == ds.size());
    CHECK(std::is_sorted(ds.begin(), ds.end()));
  }
}

TEST_CASE("bounds report on the diamond") {
  InvariantRecord r = bounds_report(fixtures::diamond());
  CHECK(r.size == 4);
  CHECK(r.j_size == 3);
  CHECK(r.n == 1);
  CHECK(r.e == 4);
  CHECK(r.f_sum == 14);
  CHECK(r.lower_rank == 1);
  CHECK(r.lower_edge == 1);
  CHECK(r.upper == 2);
  CHECK(r.conjecture_rhs == 1);
  CHECK(r.thick);
}

TEST_CASE("bounds report on the 3-chain") {
  InvariantRecord r = bounds_report(fixtures::chain3());
  CHECK(r.n == 0);
  CHECK(r.e == 2);
  CHECK(r.f_sum == 9);
  CHECK(r.lower_rank == 0);
  CHECK(r.lower_edge == 0);
  CHECK(r.upper == 0);
  CHECK_FALSE(r.thick);
}

TEST_CASE("bounds report on the cube") {
  InvariantRecord r = bounds_report(fixtures::b3());
  CHECK(r.n == 9);
  CHECK(r.e == 12);
  CHECK(r.j_size == 4);
  CHECK(r.f_sum == 46);
  CHECK(r.f_vector[0] == 5);  // element 0 is "1" in the fixture
  CHECK(r.lower_rank == 4);
  CHECK(r.lower_edge == 5);
  CHECK(r.upper == 16);
  CHECK(r.conjecture_rhs == 8);
  CHECK(r.thick);
}

TEST_CASE("bounds report on the glued diamonds and V5") {
  InvariantRecord dd = bounds_report(fixtures::double_diamond());
  CHECK(dd.size == 7);
  CHECK(dd.j_size == 5);
  CHECK(dd.n == 2);
  CHECK(dd.e == 8);
  CHECK(dd.f_sum == 45);
  CHECK_FALSE(dd.thick);

  InvariantRecord v = bounds_report(fixtures::v5());
  CHECK(v.size == 5);
  CHECK(v.j_size == 4);
  CHECK(v.n == 1);
  CHECK(v.e == 5);
  CHECK(v.f_sum == 23);
  CHECK_FALSE(v.thick);
}

TEST_CASE("identity and bound ordering on every small lattice") {
  for (int n = 0; n <= 4; ++n)
    for (const PosetCode& code : enumerate_posets(n)) {
      DistLattice L = ideal_lattice(poset_from_code(code));
      InvariantRecord r = bounds_report(L);
      std::int64_t size2 = static_cast<std::int64_t>(r.size) * r.size;
      CHECK(2 * r.n == size2 - r.f_sum);
      CHECK(r.lower_rank <= r.n);
      CHECK(r.lower_edge <= r.n);
      CHECK(2 * r.n <= static_cast<std::int64_t>(r.size - r.j_size) * r.size);
      CHECK(static_cast<std::int64_t>(enumerate_diamonds(L).size()) == r.n);
      CHECK(noncomparable_count(L) == oracles::pair_count(L));
    }
}
