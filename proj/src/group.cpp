#include "edp/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "edp/error.hpp"

namespace edp {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> cayley) : cayley_(std::move(cayley)) {
  const std::size_t n = cayley_.size();
  if (n == 0) throw ValidationError("group must have at least one element");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw ValidationError("Cayley table is not square");
    for (Element x : row)
      if (x >= n) throw ValidationError("Cayley table entry out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (cayley_[0][a] != a || cayley_[a][0] != a) throw ValidationError("element 0 is not a two-sided identity");
  // Latin square rows give unique solvability; find inverses.
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      const Element ab = cayley_[a][b];
      if (seen[ab]) throw ValidationError("Cayley table row " + std::to_string(a) + " is not a permutation");
      seen[ab] = true;
      if (ab == 0 && cayley_[b][a] == 0) {
        inverse_[a] = b;
        has_inverse = true;
      }
    }
    if (!has_inverse) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
            throw ValidationError("Cayley table is not associative");
  }
  std::vector<Element> generated{0};
  for (Element a = 1; a < n; ++a) {
    if (std::binary_search(generated.begin(), generated.end(), a)) continue;
    generators_.push_back(a);
    generated = closure(generators_);
  }
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_p_group(unsigned p) const {
  if (p < 2) return false;
  std::size_t n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Element> FiniteGroup::closure(const std::vector<Element>& elems) const {
  std::vector<bool> in(order(), false);
  std::deque<Element> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : elems) {
      const Element y = mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element a = 0; a < order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return std::make_shared<const FiniteGroup>(std::move(t));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<Element>> t(na * nb, std::vector<Element>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = static_cast<Element>(a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                     b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  return std::make_shared<const FiniteGroup>(std::move(t));
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& elems) {
  if (elems.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : elems) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[0]) return false;
  for (Element x : elems) {
    if (!in[g.inverse(x)]) return false;
    for (Element y : elems)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

std::vector<Element> conjugate(const FiniteGroup& g, const std::vector<Element>& h, Element x) {
  std::vector<Element> out;
  out.reserve(h.size());
  const Element xi = g.inverse(x);
  for (Element y : h) out.push_back(g.mul(g.mul(x, y), xi));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> found{{0}};
  std::deque<std::vector<Element>> queue{{0}};
  while (!queue.empty()) {
    const std::vector<Element> s = queue.front();
    queue.pop_front();
    std::vector<bool> in(g.order(), false);
    for (Element x : s) in[x] = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<Element> gens = s;
      gens.push_back(x);
      std::vector<Element> t = g.closure(gens);
      if (found.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g) {
  std::map<std::vector<Element>, SubgroupClass> classes;
  std::set<std::vector<Element>> assigned;
  for (const auto& h : all_subgroups(g)) {
    if (assigned.count(h)) continue;
    std::set<std::vector<Element>> conj;
    for (Element x = 0; x < g.order(); ++x) conj.insert(conjugate(g, h, x));
    assigned.insert(conj.begin(), conj.end());
    SubgroupClass c;
    c.representative = *conj.begin();
    c.index = g.order() / h.size();
    c.class_size = conj.size();
    classes.emplace(c.representative, std::move(c));
  }
  std::vector<SubgroupClass> out;
  for (auto& [key, c] : classes) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const SubgroupClass& a, const SubgroupClass& b) { return a.index > b.index; });
  return out;
}

SubgroupClass subgroup_of(const FiniteGroup& g, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(g, elems)) throw ValidationError("element set is not a subgroup");
  std::set<std::vector<Element>> conj;
  for (Element x = 0; x < g.order(); ++x) conj.insert(conjugate(g, elems, x));
  SubgroupClass c;
  c.index = g.order() / elems.size();
  c.class_size = conj.size();
  c.representative = std::move(elems);
  return c;
}

CosetAction coset_action(const FiniteGroup& g, const SubgroupClass& h) {
  if (!is_subgroup(g, h.representative)) throw ValidationError("coset_action: subgroup is not closed");
  CosetAction act;
  act.subgroup = h;
  std::vector<std::int64_t> coset_of(g.order(), -1);
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<Element> coset;
    for (Element y : h.representative) coset.push_back(g.mul(x, y));
    std::sort(coset.begin(), coset.end());
    for (Element y : coset) coset_of[y] = static_cast<std::int64_t>(act.cosets.size());
    act.representatives.push_back(coset.front());
    act.cosets.push_back(std::move(coset));
  }
  act.permutations.assign(g.order(), std::vector<std::uint32_t>(act.cosets.size()));
  for (Element x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < act.cosets.size(); ++i)
      act.permutations[x][i] = static_cast<std::uint32_t>(coset_of[g.mul(x, act.representatives[i])]);
  return act;
}

GroupPtr subgroup_as_group(const FiniteGroup& g, const std::vector<Element>& elems) {
  if (!is_subgroup(g, elems)) throw ValidationError("subgroup_as_group: not a subgroup");
  std::vector<Element> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::map<Element, Element> pos;
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(sorted.size(), std::vector<Element>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j) t[i][j] = pos.at(g.mul(sorted[i], sorted[j]));
  return std::make_shared<const FiniteGroup>(std::move(t));
}

}  // namespace edp
