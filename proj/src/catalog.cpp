#include "edp/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "edp/error.hpp"

namespace edp {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::M1, "M1"},       {Family::M2, "M2"},        {Family::M3, "M3"},
      {Family::M4, "M4"},       {Family::M5, "M5"},        {Family::M6, "M6"},
      {Family::M7, "M7"},       {Family::M8, "M8"},        {Family::M9r, "M9r"},
      {Family::M10r, "M10r"},   {Family::M11r, "M11r"},    {Family::M12r, "M12r"},
      {Family::norm_one, "norm_one"}, {Family::cyclic, "cyclic"}, {Family::permutation, "permutation"}};
  return names;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coordinates of Z G (+) Z H (+) Z x: g^i -> i, h^j -> p^2 + j, x -> p^2 + p.
struct Ambient {
  unsigned p;
  std::size_t size;
  std::size_t g(std::size_t i) const { return i % (p * p); }
  std::size_t h(std::size_t j) const { return p * p + j % p; }
  std::size_t x() const { return p * p + p; }
};

IntVector zero(const Ambient& a) { return IntVector(a.size); }

IntVector delta_g(const Ambient& a) {
  IntVector v = zero(a);
  for (std::size_t i = 0; i < a.p * a.p; ++i) v[a.g(i)] = 1;
  return v;
}

IntVector delta_h(const Ambient& a) {
  IntVector v = zero(a);
  for (std::size_t j = 0; j < a.p; ++j) v[a.h(j)] = 1;
  return v;
}

// epsilon * g^shift = sum_i g^{p i + shift}
IntVector epsilon(const Ambient& a, std::size_t shift = 0) {
  IntVector v = zero(a);
  for (std::size_t i = 0; i < a.p; ++i) v[a.g(a.p * i + shift)] += 1;
  return v;
}

// (1 - h)^e with exact binomial coefficients.
IntVector one_minus_h_pow(const Ambient& a, unsigned e) {
  IntVector v = zero(a);
  Integer binom = 1;
  for (unsigned l = 0; l <= e; ++l) {
    v[a.h(l)] += (l % 2 ? -binom : binom);
    binom = binom * (e - l) / (l + 1);
  }
  return v;
}

IntVector add(IntVector a, const IntVector& b, long sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

std::string make_key(Family f, unsigned p, std::optional<unsigned> r) {
  std::string key = family_name(f) + "@p=" + std::to_string(p);
  if (r) key += ",r=" + std::to_string(*r);
  return key;
}

SubgroupClass subgroup_with_index(const FiniteGroup& g, std::size_t index) {
  for (auto& c : subgroup_classes(g))
    if (c.index == index) return c;
  throw ValidationError("no subgroup of index " + std::to_string(index));
}

unsigned long multiplicative_order(unsigned long a, unsigned long modulus) {
  unsigned long k = 1;
  for (unsigned long x = a % modulus; x != 1 % modulus; x = x * a % modulus) {
    ++k;
    if (k > modulus) throw ValidationError("element is not a unit");
  }
  return k;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : family_names())
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& [fam, n] : family_names())
    if (n == name) return fam;
  return std::nullopt;
}

bool family_has_r(Family f) {
  return f == Family::M9r || f == Family::M10r || f == Family::M11r || f == Family::M12r;
}

std::pair<unsigned, unsigned> r_range(Family f, unsigned p) {
  if (f == Family::M9r) return {1, p - 1};
  if (family_has_r(f)) return {1, p >= 2 ? p - 2 : 0};
  return {1, 0};
}

const std::vector<Family>& list_L_families() {
  static const std::vector<Family> families = {Family::M1, Family::M2,  Family::M3,   Family::M4,
                                               Family::M5, Family::M6,  Family::M7,   Family::M8,
                                               Family::M9r, Family::M10r, Family::M11r, Family::M12r};
  return families;
}

std::vector<TableRow> expected_table(unsigned p) {
  const long q = p;
  const std::size_t p2 = std::size_t(p) * p;
  return {
      {Family::M1, 1, 0},
      {Family::M2, p, 0},
      {Family::M3, p - 1, 1},
      {Family::M4, p2, 0},
      {Family::M5, p2 - 1, 1},
      {Family::M6, p2, 1},
      {Family::M7, p2 - p, q},
      {Family::M8, p2 - p + 1, q - 1},
      {Family::M9r, p2, q},
      {Family::M10r, p2 + 1, q - 1},
      {Family::M11r, p2 - 1, q + 1},
      {Family::M12r, p2, q},
  };
}

GroupPtr cyclic_p_squared(unsigned p) { return make_cyclic(std::size_t(p) * p); }

CatalogEntry build_list_L(Family family, unsigned p, std::optional<unsigned> r) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (family_has_r(family)) {
    const auto [lo, hi] = r_range(family, p);
    if (!r || *r < lo || *r > hi)
      throw ValidationError(family_name(family) + " at p=" + std::to_string(p) + " needs " + std::to_string(lo) +
                            " <= r <= " + std::to_string(hi));
  } else if (r) {
    throw ValidationError(family_name(family) + " takes no r parameter");
  } else if (std::find(list_L_families().begin(), list_L_families().end(), family) == list_L_families().end()) {
    throw ValidationError(family_name(family) + " is not a list-L family");
  }

  const GroupPtr g = cyclic_p_squared(p);
  const SubgroupClass trivial = subgroup_of(*g, {0});
  std::vector<Element> h_elems;
  for (unsigned i = 0; i < p; ++i) h_elems.push_back(i * p);
  const SubgroupClass gp = subgroup_of(*g, h_elems);  // stabilizer of h^i; Z[G/<g^p>] = Z H
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  const SubgroupClass whole = subgroup_of(*g, all);

  // Every family is a quotient of Z G (+) Z H (+) Z x; unused summands are killed by relations.
  const GaloisModule ambient = GaloisModule::permutation(g, std::vector<SubgroupClass>{trivial, gp, whole});
  const Ambient a{p, ambient.num_generators()};
  auto unit = [&](std::size_t i) {
    IntVector v = zero(a);
    v[i] = 1;
    return v;
  };
  const IntVector kill_g = unit(a.g(0)), kill_h = unit(a.h(0)), kill_x = unit(a.x());

  std::vector<IntVector> rel;
  switch (family) {
    case Family::M1:
      rel = {kill_g, kill_h};
      break;
    case Family::M2:
      rel = {kill_g, kill_x};
      break;
    case Family::M3:
      rel = {kill_g, kill_x, delta_h(a)};
      break;
    case Family::M4:
      rel = {kill_h, kill_x};
      break;
    case Family::M5:
      rel = {kill_h, kill_x, delta_g(a)};
      break;
    case Family::M6: {
      IntVector v = delta_g(a);
      v[a.x()] = -static_cast<long>(p);
      rel = {kill_h, v};
      break;
    }
    case Family::M7:
      rel = {kill_h, kill_x, epsilon(a)};
      break;
    case Family::M8:
      rel = {kill_h, kill_x, add(epsilon(a), epsilon(a, 1), -1)};
      break;
    case Family::M9r:
      rel = {kill_x, add(epsilon(a), one_minus_h_pow(a, *r), -1)};
      break;
    case Family::M10r:
      rel = {kill_x, add(add(epsilon(a), epsilon(a, 1), -1), one_minus_h_pow(a, *r + 1), -1)};
      break;
    case Family::M11r:
      rel = {kill_x, add(epsilon(a), one_minus_h_pow(a, *r), -1), delta_h(a)};
      break;
    case Family::M12r:
      rel = {kill_x, add(add(epsilon(a), epsilon(a, 1), -1), one_minus_h_pow(a, *r + 1), -1), delta_h(a)};
      break;
    default:
      break;
  }

  CatalogEntry e{family, p, r, quotient_by_orbit_relations(ambient, rel, p).module, 0, std::nullopt, make_key(family, p, r), {}};
  for (const auto& row : expected_table(p))
    if (row.family == family) {
      e.expected_rank = row.rank;
      e.expected_ed = row.ed;
    }
  if (!e.module.is_lattice())
    e.diagnostics.push_back(e.key + ": quotient has torsion of " + std::to_string(e.module.torsion().size()) + " cyclic factors");
  if (e.module.free_rank() != e.expected_rank)
    e.diagnostics.push_back(e.key + ": free rank " + std::to_string(e.module.free_rank()) + " differs from table rank " +
                            std::to_string(e.expected_rank));
  return e;
}

std::vector<CatalogEntry> list_L_entries(unsigned p, std::optional<unsigned> max_r) {
  std::vector<CatalogEntry> out;
  for (Family f : list_L_families()) {
    if (!family_has_r(f)) {
      out.push_back(build_list_L(f, p));
      continue;
    }
    const auto [lo, hi] = r_range(f, p);
    for (unsigned r = lo; r <= hi && (!max_r || r <= *max_r); ++r) out.push_back(build_list_L(f, p, r));
  }
  return out;
}

CatalogEntry build_norm_one(GroupPtr g, const std::vector<SubgroupClass>& hs, unsigned p) {
  if (hs.empty()) throw ValidationError("norm-one torus needs at least one orbit");
  const GaloisModule perm = GaloisModule::permutation(g, hs);
  const IntVector ones(perm.num_generators(), 1);
  CatalogEntry e{Family::norm_one, p, std::nullopt, quotient_by_orbit_relations(perm, {ones}, p).module,
                 perm.num_generators() - 1, 0, "", {}};
  const bool all_divisible = std::all_of(hs.begin(), hs.end(), [&](const SubgroupClass& h) { return h.index % p == 0; });
  e.expected_ed = all_divisible ? 1 : 0;
  std::string key = "norm_one@p=" + std::to_string(p) + ",indices=";
  for (std::size_t i = 0; i < hs.size(); ++i) key += (i ? "+" : "") + std::to_string(hs[i].index);
  e.key = key;
  return e;
}

CatalogEntry build_permutation(GroupPtr g, const std::vector<SubgroupClass>& hs, unsigned p) {
  GaloisModule perm = GaloisModule::permutation(g, hs);
  const std::size_t rank = perm.num_generators();
  std::string key = "permutation@p=" + std::to_string(p) + ",indices=";
  for (std::size_t i = 0; i < hs.size(); ++i) key += (i ? "+" : "") + std::to_string(hs[i].index);
  return CatalogEntry{Family::permutation, p, std::nullopt, std::move(perm), rank, 0, key, {}};
}

GroupPtr units_group(unsigned long modulus, std::vector<unsigned long>* elements) {
  std::vector<unsigned long> units;
  for (unsigned long u = 1; u <= std::max(1UL, modulus); ++u)
    if (std::gcd(u % modulus, modulus) == 1 || modulus == 1) units.push_back(u % std::max(modulus, 1UL));
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  // Identity (1) first, then the rest ascending.
  std::stable_partition(units.begin(), units.end(), [&](unsigned long u) { return u == 1 % modulus; });
  std::map<unsigned long, Element> pos;
  for (std::size_t i = 0; i < units.size(); ++i) pos[units[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> t(units.size(), std::vector<Element>(units.size()));
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j) t[i][j] = pos.at(units[i] * units[j] % modulus);
  if (elements) *elements = units;
  return std::make_shared<const FiniteGroup>(std::move(t));
}

CatalogEntry build_twisted_cyclic(unsigned p, unsigned n, const std::vector<unsigned long>& units) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (n == 0) throw ValidationError("n must be positive");
  unsigned long modulus = 1;
  for (unsigned i = 0; i < n; ++i) modulus *= p;
  std::vector<unsigned long> values;
  const GroupPtr all = units_group(modulus, &values);
  std::vector<Element> gens;
  for (unsigned long u : units) {
    const auto it = std::find(values.begin(), values.end(), u % modulus);
    if (it == values.end()) throw ValidationError(std::to_string(u) + " is not a unit mod " + std::to_string(modulus));
    gens.push_back(static_cast<Element>(it - values.begin()));
  }
  const std::vector<Element> sub = all->closure(gens);
  const GroupPtr gamma = subgroup_as_group(*all, sub);
  if (!gamma->is_p_group(p))
    throw NotPGroupError("unit group generated has order " + std::to_string(gamma->order()));
  std::vector<IntMatrix> action;
  for (Element x : sub) action.push_back(IntMatrix{{static_cast<long>(values[x])}});
  GaloisModule m(gamma, 0, {Integer(modulus)}, std::move(action));
  std::string key = "cyclic@p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",a=";
  for (std::size_t i = 0; i < units.size(); ++i) key += (i ? "+" : "") + std::to_string(units[i]);
  return CatalogEntry{Family::cyclic, p, std::nullopt, std::move(m), 0, static_cast<long>(gamma->order()), key, {}};
}

CatalogEntry build_cyclic(unsigned p, unsigned n, unsigned long a) {
  CatalogEntry e = build_twisted_cyclic(p, n, {a});
  unsigned long modulus = 1;
  for (unsigned i = 0; i < n; ++i) modulus *= p;
  e.expected_ed = static_cast<long>(multiplicative_order(a, modulus));
  return e;
}

CatalogEntry catalog_entry(const std::string& key) {
  const auto at = key.find('@');
  if (at == std::string::npos) throw ValidationError("catalog key needs '@': " + key);
  const auto family = parse_family(key.substr(0, at));
  if (!family) throw ValidationError("unknown catalog family in key: " + key);
  std::map<std::string, std::string> params;
  std::stringstream ss(key.substr(at + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ValidationError("malformed catalog parameter '" + item + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  auto number = [&](const std::string& name) -> unsigned long {
    const auto it = params.find(name);
    if (it == params.end()) throw ValidationError("catalog key " + key + " lacks " + name);
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(it->second, &used);
      if (used != it->second.size()) throw ValidationError("bad number");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("catalog parameter " + name + " is not a number: " + it->second);
    }
  };
  auto number_list = [&](const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end()) throw ValidationError("catalog key " + key + " lacks " + name);
    std::vector<unsigned long> out;
    std::stringstream ls(it->second);
    std::string tok;
    while (std::getline(ls, tok, '+')) {
      try {
        out.push_back(std::stoul(tok));
      } catch (const std::exception&) {
        throw ValidationError("catalog parameter " + name + " is not a '+'-separated list: " + it->second);
      }
    }
    return out;
  };
  const auto p = static_cast<unsigned>(number("p"));
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  switch (*family) {
    case Family::cyclic: {
      const auto units = number_list("a");
      const auto n = static_cast<unsigned>(number("n"));
      return units.size() == 1 ? build_cyclic(p, n, units.front()) : build_twisted_cyclic(p, n, units);
    }
    case Family::norm_one:
    case Family::permutation: {
      const GroupPtr g = cyclic_p_squared(p);
      std::vector<SubgroupClass> hs;
      for (unsigned long idx : number_list("indices")) hs.push_back(subgroup_with_index(*g, idx));
      return *family == Family::norm_one ? build_norm_one(g, hs, p) : build_permutation(g, hs, p);
    }
    default:
      break;
  }
  std::optional<unsigned> r;
  if (params.count("r")) r = static_cast<unsigned>(number("r"));
  return build_list_L(*family, p, r);
}

}  // namespace edp
