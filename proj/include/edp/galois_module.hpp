#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "edp/group.hpp"
#include "edp/int_matrix.hpp"

namespace edp {

/// A finitely generated Z[G]-module  Z^n (+) Z/q_1 (+) ... (+) Z/q_t  with q_1 <= ... <= q_t powers of
/// a single prime. Elements are coordinate vectors of length n + t; torsion coordinates are kept
/// reduced into [0, q_j). Each group element acts by a block matrix [[A, 0], [C, D]] on column vectors,
/// with torsion row j taken modulo q_j.
class GaloisModule {
 public:
  GaloisModule() = default;

  /// Full action, one matrix per group element; validated for shape, well-definedness on the
  /// torsion part, and the homomorphism property.
  GaloisModule(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion, std::vector<IntMatrix> action);

  /// Expands an action given on a generating set. Conflicting words raise ValidationError.
  static GaloisModule from_generators(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion,
                                      const std::map<Element, IntMatrix>& generator_action);

  /// Trivial action on Z^n (+) torsion.
  static GaloisModule trivial(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion = {});

  /// Z[G/H] with the coset basis of coset_action.
  static GaloisModule permutation(GroupPtr group, const SubgroupClass& h);

  /// Direct sum of coset modules, in order.
  static GaloisModule permutation(GroupPtr group, const std::vector<SubgroupClass>& hs);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  /// Number of coordinates, n + t.
  std::size_t num_generators() const { return free_rank_ + torsion_.size(); }
  bool is_lattice() const { return torsion_.empty(); }
  bool is_zero() const { return num_generators() == 0; }
  /// The prime underlying the torsion, or 0 for a lattice.
  unsigned torsion_prime() const;

  const IntMatrix& action(Element g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }

  IntVector act(Element g, const IntVector& x) const;
  /// Reduces torsion coordinates into [0, q_j).
  IntVector reduce(IntVector x) const;
  void reduce_matrix(IntMatrix& m) const;

  /// Relation lattice of the presentation: rows q_j e_{n+j}.
  IntMatrix relation_rows() const;

 private:
  GroupPtr group_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  std::vector<IntMatrix> action_;
};

/// Subgroup of a module given by generators, with an HNF basis of the lattice of coordinate vectors
/// they span together with the torsion relations.
struct Submodule {
  std::vector<IntVector> generators;
  IntMatrix basis;  // rows; HNF, includes the relation lattice q_j e_{n+j}
};

/// {x in M : h x = x for all h in H}.
Submodule fixed_submodule(const GaloisModule& m, const SubgroupClass& h);

/// M / span{x - g x}, returned with trivial action.
GaloisModule split_quotient(const GaloisModule& m);

/// Invariant factors of M / span{x - g x} (0 for each free summand, then torsion orders).
std::vector<Integer> split_invariants(const GaloisModule& m);

GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b);

struct Quotient {
  GaloisModule module;
  IntMatrix projection;  // rows: new coordinates as functionals on the old lattice
};

/// Lattice P modulo the Z[G]-submodule generated by `relations`. Basis from the SNF transform of
/// the relation matrix. Throws MixedTorsionError if torsion is not a power of p.
Quotient quotient_by_orbit_relations(const GaloisModule& p_module, const std::vector<IntVector>& relations,
                                     unsigned p);

/// Z-basis of Hom_G(L, M) for lattices; each matrix is rank(M) x rank(L).
std::vector<IntMatrix> hom_module(const GaloisModule& l, const GaloisModule& m);

/// The G-sublattice of a lattice generated by `gens`, as a module in its own right, together with
/// the inclusion (columns are basis vectors in M's coordinates).
struct Sublattice {
  GaloisModule module;
  IntMatrix inclusion;
};
Sublattice sublattice(const GaloisModule& m, const std::vector<IntVector>& gens);

/// Z-span of the G-orbits of `vectors`, as rows.
IntMatrix orbit_rows(const GaloisModule& m, const std::vector<IntVector>& vectors);

/// Same module, different group object check: Cayley tables equal.
bool same_group(const GaloisModule& a, const GaloisModule& b);

}  // namespace edp
