#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edp/fp_module.hpp"
#include "edp/galois_module.hpp"
#include "edp/group.hpp"

namespace edp {

struct CoverSummand {
  SubgroupClass subgroup;
  IntVector generator;  // fixed by `subgroup`, in the module's coordinates
};

/// A permutation lattice (+)_i Z[G/H_i] together with its map to M, coset gH_i |-> g m_i.
struct CoverCertificate {
  std::vector<CoverSummand> summands;
  std::size_t total_rank() const;
};

struct EdResult {
  std::size_t min_rank = 0;
  long ed = 0;  // min_rank - free_rank
  CoverCertificate certificate;
  std::size_t multisets_examined = 0;
  std::size_t coinvariant_dim = 0;
  bool verified = false;
  // Set when the fast path's certificate failed verification and the oracle answered instead.
  bool used_fallback = false;
  std::vector<std::string> diagnostics;
};

/// Minimal rank of a permutation lattice mapping to M with finite cokernel of order prime to p.
/// Requires G to be a p-group and any torsion of M to be p-primary.
EdResult min_permutation_rank(const GaloisModule& m, unsigned p);

/// min_permutation_rank with ed = min_rank - free_rank(M).
EdResult essential_p_dimension(const GaloisModule& m, unsigned p);

/// Matrix (columns in M's coordinates) of the assembled map (+) Z[G/H_i] -> M.
IntMatrix certificate_map(const GaloisModule& m, const CoverCertificate& c);

/// True iff each generator is H_i-fixed and the cokernel of the assembled map is finite of order
/// prime to p. Throws ValidationError on shape mismatch.
bool verify_certificate(const GaloisModule& m, const CoverCertificate& c, unsigned p);

/// Exhaustive search over sums of orbit spans in M/pM (shortest path over subspaces). Independent of
/// the coinvariant reduction used by min_permutation_rank. nullopt when the minimum exceeds
/// rank_budget. Throws ValidationError when p^dim(M/pM) exceeds `enumeration_cap`.
std::optional<EdResult> brute_force_min_rank(const GaloisModule& m, unsigned p, std::size_t rank_budget,
                                             std::size_t enumeration_cap = 1'000'000);

/// A G-set as a disjoint union of coset spaces, plus a G-fixed m in Z[Lambda].
struct Presentation {
  GroupPtr group;
  std::vector<SubgroupClass> orbits;
  IntVector m;
};

/// 0 iff m = 0 or some G-fixed point of Lambda carries a coefficient prime to p, else 1.
/// Only odd p; throws ValidationError for p = 2 or a non-fixed m.
int classify_ed_le_one(const Presentation& presentation, unsigned p);

/// Z[Lambda]/<m> as a module.
GaloisModule presentation_module(const Presentation& presentation, unsigned p);

enum class GenusAnswer { yes, no, unknown };
std::string to_string(GenusAnswer a);

struct GenusOptions {
  std::uint64_t budget = 1'000'000;  // exhaustive search when p^(hom rank) <= budget
  std::size_t random_trials = 64;
  std::uint64_t seed = 0x5eed;
};

/// Whether L_(p) ~ M_(p): some G-map L -> M has determinant prime to p.
GenusAnswer genus_equal(const GaloisModule& l, const GaloisModule& m, unsigned p, const GenusOptions& options = {});

}  // namespace edp
