#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace edp {

using Element = std::uint32_t;

/// A finite group stored extensionally by its Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates closure, identity at index 0 and inverses; associativity is
  /// checked exhaustively when the order is at most 64.
  explicit FiniteGroup(std::vector<std::vector<Element>> cayley);

  std::size_t order() const { return cayley_.size(); }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return cayley_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;
  const std::vector<std::vector<Element>>& cayley() const { return cayley_; }

  /// Order is p^k for some k >= 0.
  bool is_p_group(unsigned p) const;
  bool is_abelian() const;

  /// Deterministic small generating set: greedily adds the least element not yet generated.
  const std::vector<Element>& generators() const { return generators_; }

  /// Smallest subgroup containing `elems`, sorted.
  std::vector<Element> closure(const std::vector<Element>& elems) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.cayley_ == b.cayley_; }

 private:
  std::vector<std::vector<Element>> cayley_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct SubgroupClass {
  std::vector<Element> representative;  // sorted, lexicographically least among its conjugates
  std::size_t index = 0;                // [G : H]
  std::size_t class_size = 0;           // number of conjugates

  std::size_t order() const { return representative.size(); }
  friend bool operator==(const SubgroupClass&, const SubgroupClass&) = default;
};

/// Left-multiplication action of G on the left cosets of a subgroup.
struct CosetAction {
  SubgroupClass subgroup;
  std::vector<std::vector<Element>> cosets;        // sorted by minimal element
  std::vector<Element> representatives;            // minimal element of each coset
  std::vector<std::vector<std::uint32_t>> permutations;  // permutations[g][i] = coset g * coset_i

  std::size_t degree() const { return cosets.size(); }
};

GroupPtr make_cyclic(std::size_t n);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// True if `elems` is a subgroup of g (contains identity, closed under product and inverse).
bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& elems);

/// All subgroups up to conjugacy, by decreasing index, ties broken by representative.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g);

/// Every subgroup (not up to conjugacy), sorted element lists.
std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g);

/// Wraps a sorted element list as a SubgroupClass after checking closure.
SubgroupClass subgroup_of(const FiniteGroup& g, std::vector<Element> elems);

CosetAction coset_action(const FiniteGroup& g, const SubgroupClass& h);

/// The subgroup as a group in its own right; element i is h.representative[i].
GroupPtr subgroup_as_group(const FiniteGroup& g, const std::vector<Element>& elems);

/// Conjugate x h x^-1, sorted.
std::vector<Element> conjugate(const FiniteGroup& g, const std::vector<Element>& h, Element x);

}  // namespace edp
