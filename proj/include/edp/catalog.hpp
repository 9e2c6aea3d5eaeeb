#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edp/galois_module.hpp"
#include "edp/group.hpp"

namespace edp {

// M1..M12r are the indecomposable Z[C_{p^2}]-genus representatives, written as quotients of
// Z G (+) Z H (+) Z with G = <g | g^{p^2}> and H = <h | h^p>, g . h^i = h^{i+1}.
enum class Family { M1, M2, M3, M4, M5, M6, M7, M8, M9r, M10r, M11r, M12r, norm_one, cyclic, permutation };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
bool family_has_r(Family f);
/// Admissible r as [first, last]; empty when last < first (e.g. M10r at p = 2).
std::pair<unsigned, unsigned> r_range(Family f, unsigned p);
/// The twelve families of the split-by-C_{p^2} list, in table order.
const std::vector<Family>& list_L_families();

struct CatalogEntry {
  Family family;
  unsigned p = 0;
  std::optional<unsigned> r;
  GaloisModule module;
  std::size_t expected_rank = 0;
  std::optional<long> expected_ed;
  std::string key;
  std::vector<std::string> diagnostics;
};

struct TableRow {
  Family family;
  std::size_t rank;
  long ed;
};

/// Ranks and essential dimensions of M1..M12r at p (independent of r).
std::vector<TableRow> expected_table(unsigned p);

/// The cyclic group C_{p^2}.
GroupPtr cyclic_p_squared(unsigned p);

CatalogEntry build_list_L(Family family, unsigned p, std::optional<unsigned> r = std::nullopt);

/// Every list-L entry at p with all admissible r (capped at max_r when given), in table order.
std::vector<CatalogEntry> list_L_entries(unsigned p, std::optional<unsigned> max_r = std::nullopt);

/// Permutation lattice (+) Z[G/H_i] modulo the all-ones vector.
CatalogEntry build_norm_one(GroupPtr g, const std::vector<SubgroupClass>& hs, unsigned p);

/// (+) Z[G/H_i]; expected ed 0.
CatalogEntry build_permutation(GroupPtr g, const std::vector<SubgroupClass>& hs, unsigned p);

/// Z/p^n with the cyclic group generated by multiplication by the unit a.
CatalogEntry build_cyclic(unsigned p, unsigned n, unsigned long a);

/// Z/p^n with the group of units generated by `units` acting by multiplication.
CatalogEntry build_twisted_cyclic(unsigned p, unsigned n, const std::vector<unsigned long>& units);

/// The unit group of Z/modulus; element i is the i-th unit in increasing order.
GroupPtr units_group(unsigned long modulus, std::vector<unsigned long>* elements = nullptr);

/// Resolves keys such as "M11r@p=3,r=1", "M7@p=5", "cyclic@p=3,n=2,a=4", "norm_one@p=3,indices=3+3",
/// "permutation@p=2,indices=4+2+1". Subgroups in norm_one/permutation keys are the subgroups of
/// C_{p^2} with the given indices.
CatalogEntry catalog_entry(const std::string& key);

}  // namespace edp
