#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "edp/error.hpp"
#include "edp/group.hpp"
#include "oracles.hpp"

using namespace edp;

namespace {

std::vector<std::size_t> indices(const std::vector<SubgroupClass>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.index);
  return out;
}

void check_homomorphism(const FiniteGroup& g, const CosetAction& a) {
  const std::size_t n = a.degree();
  for (std::size_t i = 0; i < n; ++i) CHECK(a.permutations[0][i] == i);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (std::size_t i = 0; i < n; ++i)
        CHECK(a.permutations[g.mul(x, y)][i] == a.permutations[x][a.permutations[y][i]]);
}

}  // namespace

TEST_CASE("make_cyclic") {
  CHECK(make_cyclic(1)->order() == 1);
  const auto c9 = make_cyclic(9);
  CHECK(c9->mul(4, 7) == (4 + 7) % 9);
  CHECK(subgroup_classes(*make_cyclic(4)).size() == 3);
}

TEST_CASE("direct_product") {
  const auto c2 = make_cyclic(2), c3 = make_cyclic(3);
  const auto v4 = direct_product(*c2, *c2);
  CHECK(v4->order() == 4);
  for (Element x = 1; x < 4; ++x) CHECK(v4->element_order(x) == 2);

  const auto trivial_times = direct_product(*make_cyclic(1), *c3);
  CHECK(*trivial_times == *c3);

  const auto c6 = direct_product(*c2, *c3);
  // (1,1) is element 1 * 3 + 1; count how many steps it takes to return to the identity.
  const Element x = 1 * 3 + 1;
  std::size_t k = 1;
  for (Element y = x; y != 0; y = c6->mul(y, x)) ++k;
  CHECK(k == 6);
  CHECK(c6->element_order(x) == 6);
}

TEST_CASE("subgroup_classes examples") {
  CHECK(indices(subgroup_classes(*make_cyclic(4))) == std::vector<std::size_t>{4, 2, 1});
  CHECK(indices(subgroup_classes(*make_cyclic(9))) == std::vector<std::size_t>{9, 3, 1});

  const auto c2 = make_cyclic(2);
  const auto v4 = direct_product(*c2, *c2);
  std::vector<std::size_t> expected;
  for (const auto& s : oracle::subgroups_by_subsets(*v4)) expected.push_back(4 / s.size());
  std::sort(expected.rbegin(), expected.rend());
  CHECK(expected == std::vector<std::size_t>{4, 2, 2, 2, 1});
  CHECK(indices(subgroup_classes(*v4)) == expected);
}

TEST_CASE("subgroup_classes are complete up to conjugacy") {
  const auto c2 = make_cyclic(2);
  const std::vector<GroupPtr> groups{make_cyclic(8), direct_product(*c2, *make_cyclic(4)), oracle::dihedral8(),
                                     direct_product(*make_cyclic(3), *make_cyclic(3))};
  for (const auto& g : groups) {
    const auto classes = subgroup_classes(*g);
    const auto all = oracle::subgroups_by_subsets(*g);
    std::size_t counted = 0;
    for (const auto& c : classes) {
      CHECK(c.index * c.order() == g->order());
      std::set<std::vector<Element>> conj;
      for (Element x = 0; x < g->order(); ++x) conj.insert(conjugate(*g, c.representative, x));
      CHECK(conj.size() == c.class_size);
      CHECK(c.representative == *conj.begin());
      counted += c.class_size;
    }
    CHECK(counted == all.size());
    CHECK(classes.front().index == g->order());
    CHECK(classes.back().index == 1);
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) CHECK(classes[i].index >= classes[i + 1].index);
  }
}

TEST_CASE("cyclic p-groups have k+1 subgroup classes") {
  for (std::size_t p : {2, 3, 5})
    for (std::size_t k = 0, n = 1; k <= 3 && n <= 125; ++k, n *= p)
      CHECK(subgroup_classes(*make_cyclic(n)).size() == k + 1);
}

TEST_CASE("coset_action examples") {
  const auto c9 = make_cyclic(9);
  const auto c3 = subgroup_of(*c9, {0, 3, 6});
  const auto a = coset_action(*c9, c3);
  CHECK(a.degree() == 3);
  // the generator 1 cycles all three cosets
  CHECK(a.permutations[1][0] != 0);
  CHECK(a.permutations[1][a.permutations[1][a.permutations[1][0]]] == 0);
  check_homomorphism(*c9, a);

  const auto d8 = oracle::dihedral8();
  const auto reg = coset_action(*d8, subgroup_of(*d8, {0}));
  CHECK(reg.degree() == 8);
  for (Element x = 1; x < 8; ++x)
    for (std::size_t i = 0; i < 8; ++i) CHECK(reg.permutations[x][i] != i);

  std::vector<Element> all(8);
  std::iota(all.begin(), all.end(), 0);
  const auto one = coset_action(*d8, subgroup_of(*d8, all));
  CHECK(one.degree() == 1);
  for (Element x = 0; x < 8; ++x) CHECK(one.permutations[x][0] == 0);

  SubgroupClass bogus{{0, 1}, 4, 1};
  CHECK_THROWS_AS(coset_action(*c9, bogus), ValidationError);
}

TEST_CASE("coset actions are homomorphisms") {
  const auto c3 = make_cyclic(3);
  const std::vector<GroupPtr> groups{make_cyclic(9), oracle::dihedral8(), direct_product(*c3, *c3),
                                     direct_product(*c3, *make_cyclic(9))};
  for (const auto& g : groups)
    for (const auto& h : subgroup_classes(*g)) check_homomorphism(*g, coset_action(*g, h));
}

TEST_CASE("group validation") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2, 0}}), ValidationError);
  // Latin square with identity 0 but not associative
  const std::vector<std::vector<Element>> loop{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup{loop}, ValidationError);
  CHECK(make_cyclic(27)->is_p_group(3));
  CHECK_FALSE(make_cyclic(6)->is_p_group(2));
  CHECK(make_cyclic(1)->is_p_group(5));
  CHECK_FALSE(oracle::dihedral8()->is_abelian());
}
