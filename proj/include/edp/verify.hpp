#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "edp/catalog.hpp"
#include "edp/ed_solver.hpp"
#include "edp/galois_module.hpp"

namespace edp {

// Random quotient of a small permutation lattice: 1-3 coset summands, a few orbit relations with
// entries in [-2, 2], and (optionally) relations p^k v that introduce p-power torsion. Quotients with
// torsion prime to p, or with dim M/pM outside [min_dim, max_dim], are redrawn.
struct RandomModuleOptions {
  std::size_t max_summands = 3;
  std::size_t max_relations = 2;
  bool allow_torsion = true;
  std::size_t min_dim = 1;
  std::size_t max_dim = 4;
};

GaloisModule random_module(const GroupPtr& g, unsigned p, std::mt19937_64& rng, const RandomModuleOptions& options = {});

/// Groups sampled by the oracle check: C2, C4, C2xC2 at p = 2; C_p and C_{p^2} otherwise.
std::vector<std::pair<std::string, GroupPtr>> oracle_groups(unsigned p);

struct CheckReport {
  std::string name;
  std::string unit;  // "pairs", "modules", ...
  std::size_t passed = 0;
  std::size_t total = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && passed == total; }
  /// e.g. "additivity: 78/78 pairs OK"
  std::string summary() const;
};

struct VerifyOptions {
  unsigned p = 3;
  std::uint64_t budget = 1'000'000;  // genus search and brute-force enumeration cap
  std::uint64_t seed = 0x5eed;
  std::size_t modules_per_group = 100;
  std::optional<unsigned> max_r;
};

/// Fast solver against brute force on random modules over oracle_groups(p), then on the catalog at p.
CheckReport check_oracle_equivalence(const VerifyOptions& o);
/// ed(A + B) = ed(A) + ed(B) over unordered pairs of distinct catalog entries.
CheckReport check_additivity(const VerifyOptions& o);
/// Catalog entries vs. prime-to-p index sublattices: genus yes implies equal ed.
CheckReport check_genus_invariance(const VerifyOptions& o);
/// M9r..M12r have zero G-fixed image in the coinvariants.
CheckReport check_trivial_restriction(const VerifyOptions& o);
/// Coinvariant dimension 1 for M7, M8 and 2 for M9r..M12r.
CheckReport check_rank_c(const VerifyOptions& o);

/// One row of a table fixture (expected rank and ed of a family, independent of r).
struct FixtureRow {
  std::string family;
  std::size_t rank = 0;
  long ed = 0;
};
std::vector<FixtureRow> table_fixture(unsigned p);
std::vector<FixtureRow> load_table_fixture(const std::string& path);

/// Computed ranks and ed of every catalog entry at p against `fixture`.
CheckReport check_table(const VerifyOptions& o, const std::vector<FixtureRow>& fixture);

}  // namespace edp
