#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edp/catalog.hpp"
#include "edp/ed_solver.hpp"
#include "edp/error.hpp"
#include "edp/fp_module.hpp"
#include "oracles.hpp"

using namespace edp;

namespace {

SubgroupClass with_index(const FiniteGroup& g, std::size_t index) {
  for (const auto& c : subgroup_classes(g))
    if (c.index == index) return c;
  FAIL("no subgroup of index " << index);
  return {};
}

long binomial(long n, long k) {
  long b = 1;
  for (long i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

TEST_CASE("build_list_L examples") {
  CHECK(build_list_L(Family::M5, 2).module.free_rank() == 3);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const CatalogEntry m1 = build_list_L(Family::M1, p);
    CHECK(m1.module.free_rank() == 1);
    CHECK(m1.module.action(1).is_identity());
    CHECK(m1.expected_ed == 0);
  }
  const CatalogEntry m12 = build_list_L(Family::M12r, 3, 1);
  CHECK(m12.module.free_rank() == 9);
  CHECK(m12.expected_ed == 3);
  CHECK(m12.key == "M12r@p=3,r=1");
}

TEST_CASE("catalog ranks match the table at p = 2, 3, 5") {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& e : list_L_entries(p)) {
      CHECK(e.module.is_lattice());
      CHECK(e.diagnostics.empty());
      CHECK(e.module.free_rank() == e.expected_rank);
    }
}

TEST_CASE("permutation members of the list have ed 0") {
  for (unsigned p : {2u, 3u, 5u}) {
    CHECK(essential_p_dimension(build_list_L(Family::M4, p).module, p).ed == 0);
    CHECK(essential_p_dimension(build_list_L(Family::M2, p).module, p).ed == 0);
  }
}

TEST_CASE("coinvariant dimension matches the rank C column") {
  for (unsigned p : {2u, 3u, 5u})
    for (const auto& e : list_L_entries(p)) {
      const std::size_t w = coinvariants(reduce_mod_p(e.module, p)).dim;
      if (e.family == Family::M7 || e.family == Family::M8) CHECK(w == 1);
      if (family_has_r(e.family)) CHECK(w == 2);
    }
}

TEST_CASE("M10r as a pushout") {
  for (unsigned p : {3u, 5u}) {
    const GroupPtr g = cyclic_p_squared(p);
    const std::size_t p2 = std::size_t(p) * p;
    const GaloisModule amb =
        GaloisModule::permutation(g, std::vector<SubgroupClass>{with_index(*g, p2), with_index(*g, p), with_index(*g, 1)});
    for (unsigned r = 1; r + 2 <= p; ++r) {
      // epsilon - (1-h)^r - x
      IntVector rel(p2 + p + 1);
      for (std::size_t i = 0; i < p; ++i) rel[p * i] += 1;
      for (unsigned l = 0; l <= r; ++l) rel[p2 + l] -= (l % 2 ? -1 : 1) * binomial(r, l);
      rel[p2 + p] = -1;
      const GaloisModule pushout = quotient_by_orbit_relations(amb, {rel}, p).module;
      const CatalogEntry m10 = build_list_L(Family::M10r, p, r);
      CHECK(pushout.free_rank() == p2 + 1);
      CHECK(m10.module.free_rank() == p2 + 1);
      CHECK(genus_equal(pushout, m10.module, p) == GenusAnswer::yes);
      CHECK(essential_p_dimension(pushout, p).ed == essential_p_dimension(m10.module, p).ed);

      IntVector h0(p2 + p + 1), x(p2 + p + 1);
      h0[p2] = 1;
      x[p2 + p] = 1;
      const GaloisModule rest = quotient_by_orbit_relations(amb, {rel, h0, x}, p).module;
      CHECK(rest.free_rank() == p2 - p);
    }
  }
}

TEST_CASE("expected_table") {
  std::vector<long> eds;
  for (const auto& row : expected_table(3)) eds.push_back(row.ed);
  CHECK(eds == std::vector<long>{0, 0, 1, 0, 1, 1, 3, 2, 3, 2, 4, 3});
  const auto t2 = expected_table(2);
  CHECK(t2[7].family == Family::M8);
  CHECK(t2[7].rank == 3);
  CHECK(t2[7].ed == 1);
  const auto t5 = expected_table(5);
  CHECK(t5[10].family == Family::M11r);
  CHECK(t5[10].rank == 24);
  CHECK(t5[10].ed == 6);
}

TEST_CASE("admissible parameters") {
  CHECK(r_range(Family::M9r, 3) == std::pair<unsigned, unsigned>{1, 2});
  CHECK(r_range(Family::M10r, 2).second < r_range(Family::M10r, 2).first);
  CHECK_THROWS_AS(build_list_L(Family::M9r, 3, 3), ValidationError);
  CHECK_THROWS_AS(build_list_L(Family::M9r, 3), ValidationError);
  CHECK_THROWS_AS(build_list_L(Family::M10r, 2, 1), ValidationError);
  CHECK_THROWS_AS(build_list_L(Family::M1, 3, 1), ValidationError);
  CHECK_THROWS_AS(build_list_L(Family::M1, 4), ValidationError);
  CHECK_THROWS_AS(build_list_L(Family::norm_one, 3), ValidationError);
  CHECK(list_L_entries(2).size() == 9);
  CHECK(list_L_entries(3).size() == 13);
  CHECK(list_L_entries(5).size() == 21);
  CHECK(list_L_entries(5, 1).size() == 12);
}

TEST_CASE("norm-one tori") {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto cp = make_cyclic(p);
    const CatalogEntry one = build_norm_one(cp, {with_index(*cp, p)}, p);
    CHECK(one.module.free_rank() == p - 1);
    CHECK(one.expected_ed == 1);
    CHECK(essential_p_dimension(one.module, p).ed == 1);

    const CatalogEntry with_point = build_norm_one(cp, {with_index(*cp, p), with_index(*cp, 1)}, p);
    CHECK(with_point.expected_ed == 0);
    CHECK(essential_p_dimension(with_point.module, p).ed == 0);

    const GroupPtr g = cyclic_p_squared(p);
    const CatalogEntry two = build_norm_one(g, {with_index(*g, p), with_index(*g, p)}, p);
    CHECK(two.module.free_rank() == 2 * p - 1);
    CHECK(two.expected_ed == 1);
    CHECK(essential_p_dimension(two.module, p).ed == 1);
  }
  CHECK_THROWS_AS(build_norm_one(make_cyclic(3), {}, 3), ValidationError);
}

TEST_CASE("cyclic p-groups") {
  const CatalogEntry a = build_cyclic(3, 2, 4);
  CHECK(oracle::mult_order(4, 9) == 3);
  CHECK(a.module.group().order() == 3);
  CHECK(a.module.free_rank() == 0);
  CHECK(a.module.torsion() == std::vector<Integer>{9});
  CHECK(a.expected_ed == 3);
  CHECK(essential_p_dimension(a.module, 3).ed == 3);

  CHECK(oracle::mult_order(3, 8) == 2);
  const CatalogEntry b = build_cyclic(2, 3, 3);
  CHECK(b.expected_ed == 2);
  CHECK(essential_p_dimension(b.module, 2).ed == 2);

  for (unsigned p : {2u, 3u, 5u}) {
    const CatalogEntry t = build_cyclic(p, 1, 1);
    CHECK(t.expected_ed == 1);
    const auto bf = brute_force_min_rank(t.module, p, 4);
    REQUIRE(bf);
    CHECK(bf->min_rank == 1);
    CHECK(essential_p_dimension(t.module, p).ed == 1);
  }

  const CatalogEntry klein = build_twisted_cyclic(2, 3, {3, 5});
  CHECK(klein.module.group().order() == 4);
  CHECK(essential_p_dimension(klein.module, 2).ed == 4);

  CHECK_THROWS_AS(build_cyclic(3, 2, 2), NotPGroupError);  // 2 has order 6 mod 9
  CHECK_THROWS_AS(build_cyclic(3, 2, 3), ValidationError);
}

TEST_CASE("units_group") {
  std::vector<unsigned long> units;
  const GroupPtr u = units_group(8, &units);
  CHECK(units == std::vector<unsigned long>{1, 3, 5, 7});
  for (Element x = 1; x < 4; ++x) CHECK(u->element_order(x) == 2);
  CHECK(units_group(9)->order() == 6);
  CHECK(units_group(2)->order() == 1);
}

TEST_CASE("catalog keys") {
  CHECK(catalog_entry("M11r@p=3,r=1").module.free_rank() == 8);
  CHECK(catalog_entry("M7@p=5").module.free_rank() == 20);
  CHECK(catalog_entry("cyclic@p=3,n=2,a=4").expected_ed == 3);
  CHECK(catalog_entry("cyclic@p=2,n=3,a=3+5").expected_ed == 4);
  const CatalogEntry n1 = catalog_entry("norm_one@p=3,indices=3+3");
  CHECK(n1.module.free_rank() == 5);
  CHECK(n1.key == "norm_one@p=3,indices=3+3");
  const CatalogEntry perm = catalog_entry("permutation@p=2,indices=4+2+1");
  CHECK(perm.module.free_rank() == 7);
  CHECK(essential_p_dimension(perm.module, 2).ed == 0);
  for (const auto& e : list_L_entries(3)) CHECK(catalog_entry(e.key).module.actions() == e.module.actions());

  CHECK_THROWS_AS(catalog_entry("M7"), ValidationError);
  CHECK_THROWS_AS(catalog_entry("M13@p=3"), ValidationError);
  CHECK_THROWS_AS(catalog_entry("M7@p=4"), ValidationError);
  CHECK_THROWS_AS(catalog_entry("M7@p=x"), ValidationError);
  CHECK_THROWS_AS(catalog_entry("M9r@p=3,r=7"), ValidationError);
  CHECK_THROWS_AS(catalog_entry("norm_one@p=3,indices=2"), ValidationError);
}
