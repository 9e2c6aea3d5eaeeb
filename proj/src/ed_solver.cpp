#include "edp/ed_solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>

#include "edp/error.hpp"

namespace edp {

std::size_t CoverCertificate::total_rank() const {
  std::size_t r = 0;
  for (const auto& s : summands) r += s.subgroup.index;
  return r;
}

namespace {

void check_inputs(const GaloisModule& m, unsigned p) {
  if (!m.group().is_p_group(p))
    throw NotPGroupError("group of order " + std::to_string(m.group().order()) + " at p=" + std::to_string(p));
  const unsigned q = m.torsion_prime();
  if (q != 0 && q != p) throw MixedTorsionError("module torsion is not " + std::to_string(p) + "-primary");
}

// A subgroup class together with the images of its fixed lattice in the coinvariant space.
struct ClassImage {
  SubgroupClass subgroup;
  std::size_t cost = 0;
  std::vector<FpVector> images;  // distinct nonzero images of fixed-lattice basis vectors
  std::vector<IntVector> lifts;  // integral preimage of each image
  Subspace span;
};

std::vector<ClassImage> class_images(const GaloisModule& m, const Coinvariants& w, unsigned p) {
  std::vector<ClassImage> out;
  for (auto& h : subgroup_classes(m.group())) {
    ClassImage c;
    c.cost = h.index;
    c.span = Subspace(w.dim, p);
    const Submodule fixed = fixed_submodule(m, h);
    for (const auto& v : fixed.generators) {
      FpVector img = w.projection.apply(reduce_vector(v, p));
      if (std::all_of(img.begin(), img.end(), [](std::uint32_t x) { return x == 0; })) continue;
      if (std::find(c.images.begin(), c.images.end(), img) != c.images.end()) continue;
      c.span.insert(img);
      c.images.push_back(std::move(img));
      c.lifts.push_back(m.reduce(v));
    }
    c.subgroup = std::move(h);
    out.push_back(std::move(c));
  }
  return out;
}

// Rado's condition for the slots (indices into `cands`) over the quotient by `chosen`:
// every set of distinct classes must span at least as many new dimensions as it has slots.
bool rado_feasible(const std::vector<ClassImage>& cands, const std::vector<std::size_t>& slots,
                   const Subspace& chosen) {
  std::vector<std::size_t> distinct;
  std::vector<std::size_t> count;
  for (std::size_t s : slots) {
    if (!distinct.empty() && distinct.back() == s) {
      ++count.back();
    } else {
      distinct.push_back(s);
      count.push_back(1);
    }
  }
  const std::size_t k = distinct.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Subspace sum = chosen;
    std::size_t need = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      sum = sum.sum(cands[distinct[i]].span);
      need += count[i];
    }
    if (sum.dim() - chosen.dim() < need) return false;
  }
  return true;
}

}  // namespace

IntMatrix certificate_map(const GaloisModule& m, const CoverCertificate& c) {
  std::vector<IntVector> cols;
  for (const auto& s : c.summands) {
    if (s.generator.size() != m.num_generators()) throw ValidationError("certificate generator has wrong length");
    const CosetAction act = coset_action(m.group(), s.subgroup);
    for (Element rep : act.representatives) cols.push_back(m.act(rep, s.generator));
  }
  return IntMatrix::from_rows(cols, m.num_generators()).transpose();
}

bool verify_certificate(const GaloisModule& m, const CoverCertificate& c, unsigned p) {
  for (const auto& s : c.summands) {
    if (s.generator.size() != m.num_generators()) throw ValidationError("certificate generator has wrong length");
    const IntVector g = m.reduce(s.generator);
    for (Element x : s.subgroup.representative)
      if (m.act(x, g) != g) return false;
  }
  const std::size_t n = m.num_generators();
  if (n == 0) return true;
  // Cokernel of the map, as Z^n modulo image columns and torsion relations.
  const IntMatrix rel = certificate_map(m, c).transpose().stack(m.relation_rows());
  if (rel.rows() < n) return false;
  const SmithForm sf = smith_normal_form(rel);
  for (const Integer& d : sf.d) {
    if (sgn(d) == 0) return false;
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) return false;
  }
  return true;
}

std::optional<EdResult> brute_force_min_rank(const GaloisModule& m, unsigned p, std::size_t rank_budget,
                                             std::size_t enumeration_cap) {
  check_inputs(m, p);
  EdResult result;
  if (m.is_zero()) {
    result.verified = true;
    return result;
  }
  const FpGaloisModule fp = reduce_mod_p(m, p);
  const std::size_t n = fp.dim();
  {
    std::size_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (space > enumeration_cap / p) throw ValidationError("brute force: p^dim(M/pM) exceeds the enumeration cap");
      space *= p;
    }
  }

  // Every orbit span reachable by one summand: (span, cost, class, integral generator).
  struct Move {
    Subspace span;
    std::size_t cost;
    SubgroupClass subgroup;
    IntVector lift;
  };
  std::vector<Move> moves;
  std::set<std::pair<std::size_t, Subspace>> seen_moves;
  for (const auto& h : subgroup_classes(m.group())) {
    const Submodule fixed = fixed_submodule(m, h);
    Subspace image(n, p);
    std::vector<FpVector> basis;
    std::vector<IntVector> lifts;
    for (const auto& v : fixed.generators) {
      FpVector r = reduce_vector(v, p);
      if (image.insert(r)) {
        basis.push_back(std::move(r));
        lifts.push_back(v);
      }
    }
    const std::size_t k = basis.size();
    std::vector<std::uint32_t> coeff(k, 0);
    // Odometer over F_p^k \ {0}.
    for (;;) {
      std::size_t i = 0;
      while (i < k && ++coeff[i] == p) coeff[i++] = 0;
      if (i == k) break;
      FpVector v(n, 0);
      IntVector lift(m.num_generators());
      for (std::size_t j = 0; j < k; ++j) {
        if (coeff[j] == 0) continue;
        for (std::size_t t = 0; t < n; ++t) v[t] = (v[t] + coeff[j] * basis[j][t]) % p;
        for (std::size_t t = 0; t < lift.size(); ++t) lift[t] += coeff[j] * lifts[j][t];
      }
      Subspace o = orbit_span(fp, v);
      if (!seen_moves.emplace(h.index, o).second) continue;
      moves.push_back({std::move(o), h.index, h, m.reduce(lift)});
    }
  }

  // Shortest path from the zero subspace to F_p^n; edge = add one orbit span.
  struct Node {
    std::size_t dist;
    std::size_t prev;  // node id
    std::size_t move;  // move index
  };
  std::map<Subspace, std::size_t> ids;
  std::vector<Subspace> states;
  std::vector<Node> nodes;
  using Entry = std::pair<std::size_t, std::size_t>;  // (dist, id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const Subspace start(n, p);
  ids.emplace(start, 0);
  states.push_back(start);
  nodes.push_back({0, 0, 0});
  queue.emplace(0, 0);
  std::vector<bool> done(1, false);
  std::optional<std::size_t> goal;
  while (!queue.empty()) {
    const auto [dist, id] = queue.top();
    queue.pop();
    if (done[id] || dist != nodes[id].dist) continue;
    done[id] = true;
    ++result.multisets_examined;
    if (states[id].dim() == n) {
      goal = id;
      break;
    }
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      const std::size_t nd = dist + moves[mv].cost;
      if (nd > rank_budget) continue;
      if (states[id].contains(moves[mv].span)) continue;
      Subspace next = states[id].sum(moves[mv].span);
      auto [it, inserted] = ids.emplace(std::move(next), states.size());
      if (inserted) {
        states.push_back(it->first);
        nodes.push_back({nd, id, mv});
        done.push_back(false);
        queue.emplace(nd, it->second);
      } else if (nd < nodes[it->second].dist) {
        nodes[it->second] = {nd, id, mv};
        queue.emplace(nd, it->second);
      }
    }
  }
  if (!goal) return std::nullopt;
  for (std::size_t id = *goal; id != 0; id = nodes[id].prev) {
    const Move& mv = moves[nodes[id].move];
    result.certificate.summands.push_back({mv.subgroup, mv.lift});
  }
  std::reverse(result.certificate.summands.begin(), result.certificate.summands.end());
  result.min_rank = nodes[*goal].dist;
  result.ed = static_cast<long>(result.min_rank) - static_cast<long>(m.free_rank());
  result.coinvariant_dim = coinvariants(fp).dim;
  result.verified = verify_certificate(m, result.certificate, p);
  return result;
}

EdResult min_permutation_rank(const GaloisModule& m, unsigned p) {
  check_inputs(m, p);
  EdResult result;
  if (m.is_zero()) {
    result.verified = true;
    return result;
  }
  const FpGaloisModule fp = reduce_mod_p(m, p);
  const Coinvariants w = coinvariants(fp);
  const std::size_t d = w.dim;
  result.coinvariant_dim = d;

  std::vector<ClassImage> all = class_images(m, w, p);
  std::stable_sort(all.begin(), all.end(), [](const ClassImage& a, const ClassImage& b) { return a.cost < b.cost; });
  // A class is dominated by an earlier (no more expensive) one whose image contains its image.
  std::vector<ClassImage> cands;
  for (auto& c : all) {
    if (c.span.dim() == 0) continue;
    const bool dominated = std::any_of(cands.begin(), cands.end(), [&](const ClassImage& e) { return e.span.contains(c.span); });
    if (!dominated) cands.push_back(std::move(c));
  }

  // Multisets of d candidates in order of (total cost, index sequence).
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  std::set<std::vector<std::size_t>> visited;
  auto cost_of = [&](const std::vector<std::size_t>& seq) {
    std::size_t c = 0;
    for (std::size_t s : seq) c += cands[s].cost;
    return c;
  };
  std::vector<std::size_t> first(d, 0);
  queue.emplace(cost_of(first), first);
  visited.insert(first);
  std::optional<std::vector<std::size_t>> found;
  const Subspace empty(d, p);
  while (!queue.empty()) {
    Key key = queue.top();
    queue.pop();
    ++result.multisets_examined;
    if (rado_feasible(cands, key.second, empty)) {
      found = std::move(key.second);
      break;
    }
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::size_t> next = key.second;
      if (next[i] + 1 >= cands.size()) continue;
      if (i + 1 < d && next[i] + 1 > next[i + 1]) continue;
      ++next[i];
      if (visited.insert(next).second) queue.emplace(cost_of(next), std::move(next));
    }
  }
  if (!found) throw std::logic_error("no feasible multiset; the trivial subgroup always covers W");

  // Greedy transversal, keeping the remaining slots Rado-feasible over what is chosen so far.
  Subspace chosen(d, p);
  for (std::size_t k = 0; k < d; ++k) {
    const ClassImage& c = cands[(*found)[k]];
    const std::vector<std::size_t> rest(found->begin() + static_cast<std::ptrdiff_t>(k + 1), found->end());
    bool picked = false;
    for (std::size_t g = 0; g < c.images.size() && !picked; ++g) {
      if (chosen.contains(c.images[g])) continue;
      Subspace next = chosen;
      next.insert(c.images[g]);
      if (!rado_feasible(cands, rest, next)) continue;
      chosen = std::move(next);
      result.certificate.summands.push_back({c.subgroup, c.lifts[g]});
      picked = true;
    }
    if (!picked) throw std::logic_error("transversal extraction failed on a Rado-feasible multiset");
  }
  result.min_rank = result.certificate.total_rank();
  result.ed = static_cast<long>(result.min_rank) - static_cast<long>(m.free_rank());
  result.verified = verify_certificate(m, result.certificate, p);

  if (!result.verified) {
    result.diagnostics.push_back("defect: certificate from the coinvariant solver failed integral verification; "
                                 "falling back to exhaustive search");
    auto oracle = brute_force_min_rank(m, p, d * m.group().order());
    if (!oracle) throw std::logic_error("oracle fallback exceeded its budget");
    oracle->used_fallback = true;
    oracle->diagnostics = result.diagnostics;
    oracle->multisets_examined += result.multisets_examined;
    return *oracle;
  }
  return result;
}

EdResult essential_p_dimension(const GaloisModule& m, unsigned p) { return min_permutation_rank(m, p); }

int classify_ed_le_one(const Presentation& presentation, unsigned p) {
  if (p == 2) throw ValidationError("classify_ed_le_one is only defined for odd p");
  const GaloisModule perm = GaloisModule::permutation(presentation.group, presentation.orbits);
  if (presentation.m.size() != perm.num_generators()) throw ValidationError("m has wrong length for Lambda");
  for (Element g = 0; g < perm.group().order(); ++g)
    if (perm.act(g, presentation.m) != presentation.m) throw ValidationError("m not fixed");
  if (std::all_of(presentation.m.begin(), presentation.m.end(), [](const Integer& x) { return sgn(x) == 0; }))
    return 0;
  std::size_t offset = 0;
  for (const auto& h : presentation.orbits) {
    if (h.index == 1 && !mpz_divisible_ui_p(presentation.m[offset].get_mpz_t(), p)) return 0;
    offset += h.index;
  }
  return 1;
}

GaloisModule presentation_module(const Presentation& presentation, unsigned p) {
  const GaloisModule perm = GaloisModule::permutation(presentation.group, presentation.orbits);
  return quotient_by_orbit_relations(perm, {presentation.m}, p).module;
}

std::string to_string(GenusAnswer a) {
  switch (a) {
    case GenusAnswer::yes:
      return "yes";
    case GenusAnswer::no:
      return "no";
    case GenusAnswer::unknown:
      break;
  }
  return "unknown";
}

GenusAnswer genus_equal(const GaloisModule& l, const GaloisModule& m, unsigned p, const GenusOptions& options) {
  if (!l.is_lattice() || !m.is_lattice()) throw ValidationError("genus_equal expects lattices");
  if (!same_group(l, m)) throw ValidationError("genus_equal: modules are over different groups");
  if (l.free_rank() != m.free_rank()) return GenusAnswer::no;
  const std::size_t n = l.free_rank();
  if (n == 0) return GenusAnswer::yes;
  std::vector<FpMatrix> basis;
  for (const auto& phi : hom_module(l, m)) basis.push_back(FpMatrix::reduce(phi, p));
  const std::size_t k = basis.size();
  if (k == 0) return GenusAnswer::no;

  auto invertible = [&](const std::vector<std::uint32_t>& c) {
    FpMatrix sum(n, n, p);
    for (std::size_t t = 0; t < k; ++t) {
      if (c[t] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sum(i, j) = (sum(i, j) + c[t] * basis[t](i, j)) % p;
    }
    return determinant_mod_p(std::move(sum)) != 0;
  };

  // Random points first: a hit settles "yes" without the full enumeration.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
  std::vector<std::uint32_t> c(k);
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    for (auto& x : c) x = coin(rng);
    if (invertible(c)) return GenusAnswer::yes;
  }

  std::uint64_t points = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (points > options.budget / p) return GenusAnswer::unknown;
    points *= p;
  }
  std::fill(c.begin(), c.end(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k) break;
    if (invertible(c)) return GenusAnswer::yes;
  }
  return GenusAnswer::no;
}

}  // namespace edp
