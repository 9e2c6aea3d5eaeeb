#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edp/error.hpp"
#include "edp/galois_module.hpp"
#include "edp/verify.hpp"
#include "oracles.hpp"

using namespace edp;

namespace {

GaloisModule sign_module() { return GaloisModule::from_generators(make_cyclic(2), 1, {}, {{1, IntMatrix{{-1}}}}); }

GaloisModule z9_times4() { return GaloisModule::from_generators(make_cyclic(3), 0, {9}, {{1, IntMatrix{{4}}}}); }

SubgroupClass whole(const FiniteGroup& g) { return subgroup_classes(g).back(); }
SubgroupClass trivial(const FiniteGroup& g) { return subgroup_classes(g).front(); }

// Is every row of `sub` in the row lattice of `lattice`?
bool contained(const IntMatrix& sub, const IntMatrix& lattice) {
  if (sub.rows() == 0) return true;
  return row_lattice_basis(lattice.stack(sub)) == row_lattice_basis(lattice);
}

std::size_t lattice_rank(const IntMatrix& rows) { return row_lattice_basis(rows).rows(); }

}  // namespace

TEST_CASE("fixed_submodule examples") {
  SUBCASE("regular Z[C3], whole group") {
    const auto c3 = make_cyclic(3);
    const GaloisModule m = GaloisModule::permutation(c3, trivial(*c3));
    const Submodule f = fixed_submodule(m, whole(*c3));
    REQUIRE(f.basis.rows() == 1);
    CHECK(f.basis.row(0) == IntVector{1, 1, 1});
  }
  SUBCASE("trivial subgroup fixes everything") {
    const auto c3 = make_cyclic(3);
    const GaloisModule m = GaloisModule::permutation(c3, trivial(*c3));
    CHECK(fixed_submodule(m, trivial(*c3)).basis.is_identity());
    const GaloisModule t = z9_times4();
    CHECK(fixed_submodule(t, trivial(t.group())).basis == IntMatrix{{1}});
  }
  SUBCASE("Z/9 with x -> 4x") {
    std::vector<long> fixed;
    for (long x = 0; x < 9; ++x)
      if ((4 * x - x) % 9 == 0) fixed.push_back(x);
    REQUIRE(fixed == std::vector<long>{0, 3, 6});
    const GaloisModule m = z9_times4();
    const Submodule f = fixed_submodule(m, whole(m.group()));
    CHECK(f.basis == IntMatrix{{fixed[1]}});
    for (const auto& g : f.generators) CHECK(std::find(fixed.begin(), fixed.end(), m.reduce(g)[0].get_si()) != fixed.end());
  }
}

TEST_CASE("split_quotient examples") {
  const auto c2 = make_cyclic(2);
  CHECK(split_invariants(GaloisModule::trivial(c2, 3)) == std::vector<Integer>{0, 0, 0});
  // Delta(sign) is generated by x - (-x) = 2x.
  CHECK(split_invariants(sign_module()) == std::vector<Integer>{2});
  const GaloisModule s = split_quotient(sign_module());
  CHECK(s.free_rank() == 0);
  CHECK(s.torsion() == std::vector<Integer>{2});
  // Z[C2] / <e1 - e2> = Z
  CHECK(split_invariants(GaloisModule::permutation(c2, trivial(*c2))) == std::vector<Integer>{0});
}

TEST_CASE("direct_sum examples") {
  const auto c2 = make_cyclic(2);
  const GaloisModule zero = GaloisModule::trivial(c2, 0);
  const GaloisModule sign = sign_module();
  const GaloisModule same = direct_sum(sign, zero);
  CHECK(same.free_rank() == 1);
  CHECK(same.action(1) == sign.action(1));
  const GaloisModule two = direct_sum(sign, sign);
  CHECK(two.free_rank() == 2);
  CHECK(two.action(1) == IntMatrix{{-1, 0}, {0, -1}});
  CHECK_THROWS_AS(direct_sum(sign, GaloisModule::trivial(make_cyclic(3), 1)), ValidationError);

  const auto t = direct_sum(z9_times4(), GaloisModule::from_generators(make_cyclic(3), 0, {3}, {{1, IntMatrix{{1}}}}));
  CHECK(t.torsion() == std::vector<Integer>{3, 9});
}

TEST_CASE("quotient_by_orbit_relations examples") {
  const auto c3 = make_cyclic(3);
  const GaloisModule zc3 = GaloisModule::permutation(c3, trivial(*c3));
  const auto m3 = quotient_by_orbit_relations(zc3, {{1, 1, 1}}, 3).module;
  CHECK(m3.free_rank() == 2);
  CHECK(m3.is_lattice());

  const auto c9 = make_cyclic(9);
  const GaloisModule zg = GaloisModule::permutation(c9, trivial(*c9));
  IntVector eps(9);
  eps[0] = eps[3] = eps[6] = 1;
  const auto m7 = quotient_by_orbit_relations(zg, {eps}, 3).module;
  CHECK(lattice_rank(orbit_rows(zg, {eps})) == 3);
  CHECK(m7.free_rank() == 6);
  CHECK(m7.is_lattice());

  const GaloisModule zg_z = GaloisModule::permutation(c9, std::vector<SubgroupClass>{trivial(*c9), whole(*c9)});
  IntVector rel(10, 1);
  rel[9] = -3;
  const auto m6 = quotient_by_orbit_relations(zg_z, {rel}, 3).module;
  CHECK(m6.free_rank() == 9);
  CHECK(m6.is_lattice());

  // Z[C3] / <3 e1>: torsion Z/3 in three orbit directions is fine at p = 3 ...
  const auto tors = quotient_by_orbit_relations(zc3, {{3, 0, 0}}, 3).module;
  CHECK(tors.free_rank() == 0);
  CHECK(tors.torsion() == std::vector<Integer>{3, 3, 3});
  // ... but 2-torsion is rejected there.
  CHECK_THROWS_AS(quotient_by_orbit_relations(zc3, {{2, 0, 0}}, 3), MixedTorsionError);
}

TEST_CASE("quotient rank equals rank(P) minus rank of the relation module") {
  std::mt19937_64 rng(21);
  for (std::size_t order : {2, 4, 3, 9}) {
    const auto g = make_cyclic(order);
    const unsigned p = order % 2 == 0 ? 2 : 3;
    const auto classes = subgroup_classes(*g);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<SubgroupClass> hs{classes[rng() % classes.size()], classes[rng() % classes.size()]};
      const GaloisModule perm = GaloisModule::permutation(g, hs);
      std::vector<IntVector> rel(1 + rng() % 2, IntVector(perm.num_generators()));
      for (auto& v : rel)
        for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
      try {
        const auto q = quotient_by_orbit_relations(perm, rel, p).module;
        CHECK(q.free_rank() == perm.free_rank() - lattice_rank(orbit_rows(perm, rel)));
      } catch (const MixedTorsionError&) {
      }
    }
  }
}

TEST_CASE("hom_module examples") {
  const auto c2 = make_cyclic(2);
  const GaloisModule triv = GaloisModule::trivial(c2, 1);
  const auto h = hom_module(triv, triv);
  REQUIRE(h.size() == 1);
  CHECK(abs(h[0](0, 0)) == 1);

  // phi = -phi forces phi = 0
  long solutions = 0;
  for (long phi = -5; phi <= 5; ++phi) solutions += (phi == -phi);
  CHECK(solutions == 1);
  CHECK(hom_module(triv, sign_module()).empty());

  // Equivariant 2x2 matrices with entries in {-1,0,1}: 3^rank of them.
  const GaloisModule reg = GaloisModule::permutation(c2, trivial(*c2));
  const IntMatrix s = reg.action(1);
  long count = 0;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c)
        for (long d = -1; d <= 1; ++d) {
          const IntMatrix phi{{a, b}, {c, d}};
          count += (phi * s == s * phi);
        }
  CHECK(count == 9);
  CHECK(hom_module(reg, reg).size() == 2);
  for (const auto& phi : hom_module(reg, reg)) CHECK(phi * s == s * phi);
}

TEST_CASE("fixed submodules shrink as the subgroup grows") {
  std::mt19937_64 rng(22);
  const auto c2 = make_cyclic(2);
  const std::vector<std::pair<GroupPtr, unsigned>> groups{
      {make_cyclic(4), 2}, {direct_product(*c2, *c2), 2}, {make_cyclic(9), 3}, {oracle::dihedral8(), 2}};
  for (const auto& [g, p] : groups) {
    const auto subs = all_subgroups(*g);
    for (int trial = 0; trial < 15; ++trial) {
      const GaloisModule m = random_module(g, p, rng, {3, 2, true, 1, 6});
      for (const auto& big : subs)
        for (const auto& small : subs) {
          if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) continue;
          const auto fb = fixed_submodule(m, subgroup_of(*g, big));
          const auto fs = fixed_submodule(m, subgroup_of(*g, small));
          CHECK(contained(fb.basis, fs.basis));
        }
    }
  }
}

TEST_CASE("split quotient is nonzero when M/pM is") {
  std::mt19937_64 rng(23);
  for (std::size_t order : {2, 3, 4, 9}) {
    const auto g = make_cyclic(order);
    const unsigned p = order % 2 == 0 ? 2 : 3;
    for (int trial = 0; trial < 40; ++trial) {
      const GaloisModule m = random_module(g, p, rng);
      REQUIRE(m.num_generators() > 0);
      const auto inv = split_invariants(m);
      CHECK(std::any_of(inv.begin(), inv.end(), [](const Integer& d) { return d != 1; }));
    }
  }
}

TEST_CASE("split quotient is additive") {
  std::mt19937_64 rng(24);
  for (std::size_t order : {2, 4, 3, 9}) {
    const auto g = make_cyclic(order);
    const unsigned p = order % 2 == 0 ? 2 : 3;
    for (int trial = 0; trial < 30; ++trial) {
      const GaloisModule a = random_module(g, p, rng), b = random_module(g, p, rng);
      auto nontrivial = [](std::vector<Integer> v) {
        v.erase(std::remove(v.begin(), v.end(), Integer(1)), v.end());
        std::sort(v.begin(), v.end());
        return v;
      };
      auto expected = nontrivial(split_invariants(a));
      const auto bi = nontrivial(split_invariants(b));
      expected.insert(expected.end(), bi.begin(), bi.end());
      std::sort(expected.begin(), expected.end());
      CHECK(nontrivial(split_invariants(direct_sum(a, b))) == expected);
    }
  }
}

TEST_CASE("module validation") {
  const auto c2 = make_cyclic(2);
  CHECK_THROWS_AS(GaloisModule::from_generators(c2, 1, {}, {{1, IntMatrix{{2}}}}), ValidationError);
  CHECK_THROWS_AS(GaloisModule::trivial(c2, 0, {6}), MixedTorsionError);
  CHECK_THROWS_AS(GaloisModule::trivial(c2, 0, {9, 3}), ValidationError);
  // x -> 2x is not invertible on Z/4
  CHECK_THROWS_AS(GaloisModule::from_generators(c2, 0, {4}, {{1, IntMatrix{{2}}}}), ValidationError);
  // torsion-to-free block must vanish
  CHECK_THROWS_AS(GaloisModule::from_generators(c2, 1, {2}, {{1, IntMatrix{{1, 1}, {0, 1}}}}), ValidationError);
  // free-to-torsion block is allowed
  CHECK_NOTHROW(GaloisModule::from_generators(c2, 1, {2}, {{1, IntMatrix{{1, 0}, {1, 1}}}}));
}
