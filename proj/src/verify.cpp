#include "edp/verify.hpp"

#include <algorithm>
#include <map>

#include "edp/error.hpp"
#include "edp/fp_module.hpp"
#include "edp/io.hpp"

namespace edp {

namespace {

IntVector random_vector(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

const SubgroupClass& whole_group(const std::vector<SubgroupClass>& classes) {
  for (const auto& c : classes)
    if (c.index == 1) return c;
  throw std::logic_error("subgroup list lacks the whole group");
}

}  // namespace

GaloisModule random_module(const GroupPtr& g, unsigned p, std::mt19937_64& rng, const RandomModuleOptions& options) {
  const auto classes = subgroup_classes(*g);
  std::uniform_int_distribution<std::size_t> pick_class(0, classes.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_summands(1, options.max_summands);
  std::uniform_int_distribution<std::size_t> pick_relations(0, options.max_relations);
  std::bernoulli_distribution coin(0.3);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<SubgroupClass> hs;
    const std::size_t k = pick_summands(rng);
    for (std::size_t i = 0; i < k; ++i) hs.push_back(classes[pick_class(rng)]);
    const GaloisModule perm = GaloisModule::permutation(g, hs);
    const std::size_t n = perm.num_generators();

    std::vector<IntVector> rel;
    const std::size_t r = pick_relations(rng);
    for (std::size_t i = 0; i < r; ++i) rel.push_back(random_vector(n, -2, 2, rng));
    if (options.allow_torsion && coin(rng)) {
      IntVector v = random_vector(n, -1, 1, rng);
      const unsigned e = coin(rng) ? 2 : 1;
      for (auto& x : v) x *= e == 2 ? p * p : p;
      rel.push_back(std::move(v));
    }
    if (n - std::min(n, options.max_dim) > 3 * rel.size()) continue;  // hopeless, skip the SNF

    GaloisModule m;
    try {
      m = quotient_by_orbit_relations(perm, rel, p).module;
    } catch (const MixedTorsionError&) {
      continue;
    }
    const std::size_t dim = m.num_generators();
    if (dim >= options.min_dim && dim <= options.max_dim) return m;
  }
  throw std::runtime_error("random_module: no admissible module found");
}

std::vector<std::pair<std::string, GroupPtr>> oracle_groups(unsigned p) {
  if (p == 2) {
    const GroupPtr c2 = make_cyclic(2);
    return {{"C2", c2}, {"C4", make_cyclic(4)}, {"C2xC2", direct_product(*c2, *c2)}};
  }
  const std::string ps = std::to_string(p), p2 = std::to_string(p * p);
  return {{"C" + ps, make_cyclic(p)}, {"C" + p2, make_cyclic(std::size_t(p) * p)}};
}

std::string CheckReport::summary() const {
  std::string s = name + ": " + std::to_string(passed) + "/" + std::to_string(total) + " " + unit + (ok() ? " OK" : " FAILED");
  if (skipped) s += " (" + std::to_string(skipped) + " skipped)";
  return s;
}

CheckReport check_oracle_equivalence(const VerifyOptions& o) {
  CheckReport rep{"oracle-equivalence", "modules", 0, 0, 0, {}};
  std::mt19937_64 rng(o.seed);
  auto compare = [&](const std::string& label, const GaloisModule& m) {
    const EdResult fast = essential_p_dimension(m, o.p);
    std::optional<EdResult> slow;
    try {
      slow = brute_force_min_rank(m, o.p, 64, o.budget);
    } catch (const ValidationError&) {
      ++rep.skipped;
      return;
    }
    ++rep.total;
    if (!slow) {
      rep.failures.push_back(label + ": oracle exceeded its rank budget");
    } else if (slow->min_rank != fast.min_rank) {
      rep.failures.push_back(label + ": solver " + std::to_string(fast.min_rank) + ", oracle " + std::to_string(slow->min_rank));
    } else if (!fast.verified || !verify_certificate(m, fast.certificate, o.p)) {
      rep.failures.push_back(label + ": certificate rejected");
    } else {
      ++rep.passed;
    }
  };
  for (const auto& [name, g] : oracle_groups(o.p))
    for (std::size_t i = 0; i < o.modules_per_group; ++i)
      compare(name + " #" + std::to_string(i), random_module(g, o.p, rng));
  for (const auto& e : list_L_entries(o.p, o.max_r)) compare(e.key, e.module);
  return rep;
}

CheckReport check_additivity(const VerifyOptions& o) {
  CheckReport rep{"additivity", "pairs", 0, 0, 0, {}};
  const auto entries = list_L_entries(o.p, o.max_r);
  std::vector<long> ed;
  for (const auto& e : entries) ed.push_back(essential_p_dimension(e.module, o.p).ed);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      ++rep.total;
      const GaloisModule sum = direct_sum(entries[i].module, entries[j].module);
      const EdResult r = essential_p_dimension(sum, o.p);
      const std::string label = entries[i].key + " + " + entries[j].key;
      if (r.ed != ed[i] + ed[j])
        rep.failures.push_back(label + ": " + std::to_string(r.ed) + " != " + std::to_string(ed[i]) + " + " +
                               std::to_string(ed[j]));
      else if (!r.verified)
        rep.failures.push_back(label + ": certificate rejected");
      else
        ++rep.passed;
    }
  return rep;
}

CheckReport check_genus_invariance(const VerifyOptions& o) {
  CheckReport rep{"genus-invariance", "sublattices", 0, 0, 0, {}};
  std::mt19937_64 rng(o.seed);
  const long q = o.p == 2 ? 3 : 2;
  GenusOptions go;
  go.budget = o.budget;
  go.seed = o.seed;
  for (const auto& e : list_L_entries(o.p, o.max_r)) {
    const std::size_t n = e.module.num_generators();
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(n);
      v[i] = q;
      gens.push_back(std::move(v));
    }
    gens.push_back(random_vector(n, -3, 3, rng));
    const Sublattice sub = sublattice(e.module, gens);
    const GenusAnswer a = genus_equal(sub.module, e.module, o.p, go);
    if (a == GenusAnswer::unknown) {
      ++rep.skipped;
      continue;
    }
    ++rep.total;
    if (a == GenusAnswer::no) {
      rep.failures.push_back(e.key + ": index prime to p but genus test said no");
      continue;
    }
    const long lhs = essential_p_dimension(sub.module, o.p).ed, rhs = essential_p_dimension(e.module, o.p).ed;
    if (lhs != rhs)
      rep.failures.push_back(e.key + ": sublattice ed " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    else
      ++rep.passed;
  }
  return rep;
}

CheckReport check_trivial_restriction(const VerifyOptions& o) {
  CheckReport rep{"trivial-restriction", "modules", 0, 0, 0, {}};
  for (const auto& e : list_L_entries(o.p, o.max_r)) {
    if (e.family != Family::M9r && e.family != Family::M10r && e.family != Family::M11r && e.family != Family::M12r)
      continue;
    ++rep.total;
    const auto classes = subgroup_classes(e.module.group());
    const SubgroupClass& g = whole_group(classes);
    const std::size_t dim = fixed_image_subspace(e.module, g, o.p).dim();
    if (dim != 0)
      rep.failures.push_back(e.key + ": G-fixed image has dimension " + std::to_string(dim));
    else
      ++rep.passed;
  }
  return rep;
}

CheckReport check_rank_c(const VerifyOptions& o) {
  CheckReport rep{"rank-C", "modules", 0, 0, 0, {}};
  for (const auto& e : list_L_entries(o.p, o.max_r)) {
    std::size_t expected = 0;
    if (e.family == Family::M7 || e.family == Family::M8)
      expected = 1;
    else if (family_has_r(e.family))
      expected = 2;
    else
      continue;
    ++rep.total;
    const std::size_t dim = coinvariants(reduce_mod_p(e.module, o.p)).dim;
    if (dim != expected)
      rep.failures.push_back(e.key + ": coinvariant dimension " + std::to_string(dim) + ", expected " +
                             std::to_string(expected));
    else
      ++rep.passed;
  }
  return rep;
}

std::vector<FixtureRow> table_fixture(unsigned p) {
  std::vector<FixtureRow> out;
  for (const auto& row : expected_table(p)) out.push_back({family_name(row.family), row.rank, row.ed});
  return out;
}

std::vector<FixtureRow> load_table_fixture(const std::string& path) {
  const Json j = read_json_file(path);
  const Json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
  if (!rows.is_array()) throw ValidationError(path + ": expected an array of table rows");
  std::vector<FixtureRow> out;
  try {
    for (const auto& r : rows) out.push_back({r.at("family").get<std::string>(), r.at("rank").get<std::size_t>(), r.at("ed").get<long>()});
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return out;
}

CheckReport check_table(const VerifyOptions& o, const std::vector<FixtureRow>& fixture) {
  CheckReport rep{"table", "entries", 0, 0, 0, {}};
  std::map<std::string, FixtureRow> by_family;
  for (const auto& r : fixture) by_family[r.family] = r;
  for (const auto& e : list_L_entries(o.p, o.max_r)) {
    ++rep.total;
    const auto it = by_family.find(family_name(e.family));
    if (it == by_family.end()) {
      rep.failures.push_back(e.key + ": no fixture row");
      continue;
    }
    const EdResult r = essential_p_dimension(e.module, o.p);
    if (e.module.free_rank() != it->second.rank)
      rep.failures.push_back(e.key + ": rank " + std::to_string(e.module.free_rank()) + ", fixture " +
                             std::to_string(it->second.rank));
    else if (r.ed != it->second.ed)
      rep.failures.push_back(e.key + ": ed " + std::to_string(r.ed) + ", fixture " + std::to_string(it->second.ed));
    else if (!r.verified)
      rep.failures.push_back(e.key + ": certificate rejected");
    else
      ++rep.passed;
  }
  return rep;
}

}  // namespace edp
