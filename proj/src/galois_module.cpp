#include "edp/galois_module.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "edp/error.hpp"

namespace edp {

namespace {

// Smallest prime factor of q > 1.
unsigned long smallest_prime_factor(const Integer& q) {
  if (q < 2) return 0;
  if (mpz_even_p(q.get_mpz_t())) return 2;
  for (unsigned long f = 3;; f += 2) {
    if (mpz_divisible_ui_p(q.get_mpz_t(), f)) return f;
    if (Integer(f) * f > q) break;
  }
  if (!q.fits_ulong_p()) throw ValidationError("torsion order too large to factor");
  return q.get_ui();
}

bool is_power_of(const Integer& q, unsigned long p) {
  if (q < 1 || p < 2) return false;
  Integer r = q;
  while (r > 1) {
    if (!mpz_divisible_ui_p(r.get_mpz_t(), p)) return false;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
  }
  return true;
}

std::vector<Element> subgroup_generators(const FiniteGroup& g, const std::vector<Element>& h) {
  std::vector<Element> gens;
  std::vector<Element> generated{0};
  for (Element x : h) {
    if (std::binary_search(generated.begin(), generated.end(), x)) continue;
    gens.push_back(x);
    generated = g.closure(gens);
  }
  return gens;
}

}  // namespace

GaloisModule::GaloisModule(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion,
                           std::vector<IntMatrix> action)
    : group_(std::move(group)), free_rank_(free_rank), torsion_(std::move(torsion)), action_(std::move(action)) {
  if (!group_) throw ValidationError("module has no group");
  const std::size_t n = num_generators();
  if (action_.size() != group_->order()) throw ValidationError("need one action matrix per group element");
  unsigned long prime = 0;
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    const Integer& q = torsion_[j];
    if (q < 2) throw ValidationError("torsion orders must be at least 2");
    if (j && torsion_[j - 1] > q) throw ValidationError("torsion orders must be nondecreasing");
    const unsigned long f = smallest_prime_factor(q);
    if (prime == 0) prime = f;
    if (!is_power_of(q, prime)) throw MixedTorsionError("torsion " + q.get_str() + " is not a power of " + std::to_string(prime));
  }
  for (auto& a : action_) {
    if (a.rows() != n || a.cols() != n) throw ValidationError("action matrix has wrong shape");
    reduce_matrix(a);
    for (std::size_t i = 0; i < free_rank_; ++i)
      for (std::size_t j = free_rank_; j < n; ++j)
        if (sgn(a(i, j)) != 0) throw ValidationError("torsion-to-free block must vanish");
    for (std::size_t j = 0; j < torsion_.size(); ++j)
      for (std::size_t k = 0; k < torsion_.size(); ++k) {
        const Integer t = torsion_[k] * a(free_rank_ + j, free_rank_ + k);
        if (!mpz_divisible_p(t.get_mpz_t(), torsion_[j].get_mpz_t()))
          throw ValidationError("torsion block is not well defined on Z/" + torsion_[k].get_str());
      }
  }
  if (!action_[0].is_identity()) throw ValidationError("identity element must act trivially");
  for (Element s : group_->generators())
    for (Element x = 0; x < group_->order(); ++x) {
      IntMatrix prod = action_[s] * action_[x];
      reduce_matrix(prod);
      if (!(prod == action_[group_->mul(s, x)]))
        throw ValidationError("action is not a homomorphism at (" + std::to_string(s) + ", " + std::to_string(x) + ")");
    }
}

GaloisModule GaloisModule::from_generators(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion,
                                           const std::map<Element, IntMatrix>& generator_action) {
  if (!group) throw ValidationError("module has no group");
  const std::size_t n = free_rank + torsion.size();
  // Reduction helper mirrors reduce_matrix before the module exists.
  auto reduce = [&](IntMatrix& m) {
    for (std::size_t j = 0; j < torsion.size(); ++j)
      for (std::size_t c = 0; c < n; ++c) mpz_fdiv_r(m(free_rank + j, c).get_mpz_t(), m(free_rank + j, c).get_mpz_t(),
                                                     torsion[j].get_mpz_t());
  };
  std::vector<Element> gens;
  std::map<Element, IntMatrix> gen_mats;
  for (const auto& [g, mat] : generator_action) {
    if (g >= group->order()) throw ValidationError("action given for unknown element " + std::to_string(g));
    if (mat.rows() != n || mat.cols() != n) throw ValidationError("action matrix has wrong shape");
    IntMatrix m = mat;
    reduce(m);
    gens.push_back(g);
    gen_mats.emplace(g, std::move(m));
  }
  std::vector<IntMatrix> action(group->order());
  std::vector<bool> known(group->order(), false);
  action[0] = IntMatrix::identity(n);
  known[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element y = group->mul(s, x);
      IntMatrix m = gen_mats.at(s) * action[x];
      reduce(m);
      if (known[y]) {
        if (!(m == action[y])) throw ValidationError("generator action is inconsistent with the group relations");
        continue;
      }
      action[y] = std::move(m);
      known[y] = true;
      queue.push_back(y);
    }
  }
  if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
    throw ValidationError("given elements do not generate the group");
  return GaloisModule(std::move(group), free_rank, std::move(torsion), std::move(action));
}

GaloisModule GaloisModule::trivial(GroupPtr group, std::size_t free_rank, std::vector<Integer> torsion) {
  const std::size_t n = free_rank + torsion.size();
  std::vector<IntMatrix> action(group->order(), IntMatrix::identity(n));
  return GaloisModule(std::move(group), free_rank, std::move(torsion), std::move(action));
}

GaloisModule GaloisModule::permutation(GroupPtr group, const SubgroupClass& h) {
  return permutation(std::move(group), std::vector<SubgroupClass>{h});
}

GaloisModule GaloisModule::permutation(GroupPtr group, const std::vector<SubgroupClass>& hs) {
  std::size_t n = 0;
  std::vector<CosetAction> acts;
  for (const auto& h : hs) {
    acts.push_back(coset_action(*group, h));
    n += acts.back().degree();
  }
  std::vector<IntMatrix> action(group->order(), IntMatrix(n, n));
  for (Element g = 0; g < group->order(); ++g) {
    std::size_t offset = 0;
    for (const auto& a : acts) {
      for (std::size_t i = 0; i < a.degree(); ++i) action[g](offset + a.permutations[g][i], offset + i) = 1;
      offset += a.degree();
    }
  }
  return GaloisModule(std::move(group), n, {}, std::move(action));
}

unsigned GaloisModule::torsion_prime() const {
  if (torsion_.empty()) return 0;
  return static_cast<unsigned>(smallest_prime_factor(torsion_.front()));
}

IntVector GaloisModule::act(Element g, const IntVector& x) const { return reduce(action_[g] * x); }

IntVector GaloisModule::reduce(IntVector x) const {
  if (x.size() != num_generators()) throw ValidationError("vector length does not match module");
  for (std::size_t j = 0; j < torsion_.size(); ++j)
    mpz_fdiv_r(x[free_rank_ + j].get_mpz_t(), x[free_rank_ + j].get_mpz_t(), torsion_[j].get_mpz_t());
  return x;
}

void GaloisModule::reduce_matrix(IntMatrix& m) const {
  for (std::size_t j = 0; j < torsion_.size(); ++j)
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_fdiv_r(m(free_rank_ + j, c).get_mpz_t(), m(free_rank_ + j, c).get_mpz_t(), torsion_[j].get_mpz_t());
}

IntMatrix GaloisModule::relation_rows() const {
  IntMatrix r(torsion_.size(), num_generators());
  for (std::size_t j = 0; j < torsion_.size(); ++j) r(j, free_rank_ + j) = torsion_[j];
  return r;
}

bool same_group(const GaloisModule& a, const GaloisModule& b) {
  return a.group_ptr() == b.group_ptr() || a.group() == b.group();
}

Submodule fixed_submodule(const GaloisModule& m, const SubgroupClass& h) {
  const FiniteGroup& g = m.group();
  if (!is_subgroup(g, h.representative)) throw ValidationError("fixed_submodule: not a subgroup");
  const std::size_t n = m.num_generators();
  const std::size_t f = m.free_rank();
  const std::size_t t = m.torsion().size();
  const std::vector<Element> gens = subgroup_generators(g, h.representative);

  // Unknowns: x (n coordinates), then one slack per (generator, torsion row) absorbing multiples of q_j.
  const std::size_t unknowns = n + gens.size() * t;
  IntMatrix system(gens.size() * n, unknowns);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const IntMatrix& a = m.action(gens[s]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) system(s * n + i, j) = a(i, j) - (i == j ? 1 : 0);
      if (i >= f) system(s * n + i, n + s * t + (i - f)) = -m.torsion()[i - f];
    }
  }
  const IntMatrix kernel = integer_kernel(system);
  std::vector<std::size_t> rows(kernel.rows()), cols(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  Submodule out;
  out.basis = row_lattice_basis(kernel.select(rows, cols));
  for (std::size_t i = 0; i < out.basis.rows(); ++i) out.generators.push_back(out.basis.row(i));
  return out;
}

std::vector<Integer> split_invariants(const GaloisModule& m) {
  const std::size_t n = m.num_generators();
  const FiniteGroup& g = m.group();
  IntMatrix rel = m.relation_rows();
  for (Element s : g.generators()) {
    const IntMatrix& a = m.action(s);
    IntMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows(i, j) = (i == j ? 1 : 0) - a(j, i);
    rel = rel.stack(rows);
  }
  std::vector<Integer> out;
  if (n == 0) return out;
  if (rel.rows() == 0) return std::vector<Integer>(n, 0);
  const SmithForm sf = smith_normal_form(rel);
  std::size_t free = n - std::min(rel.rows(), n);
  std::vector<Integer> torsion;
  for (const Integer& d : sf.d) {
    if (sgn(d) == 0)
      ++free;
    else if (d > 1)
      torsion.push_back(d);
  }
  out.assign(free, 0);
  out.insert(out.end(), torsion.begin(), torsion.end());
  return out;
}

GaloisModule split_quotient(const GaloisModule& m) {
  std::size_t free = 0;
  std::vector<Integer> torsion;
  for (const Integer& d : split_invariants(m)) {
    if (sgn(d) == 0)
      ++free;
    else
      torsion.push_back(d);
  }
  std::sort(torsion.begin(), torsion.end());
  return GaloisModule::trivial(m.group_ptr(), free, std::move(torsion));
}

GaloisModule direct_sum(const GaloisModule& a, const GaloisModule& b) {
  if (!same_group(a, b)) throw ValidationError("direct_sum: modules are over different groups");
  const std::size_t fa = a.free_rank(), fb = b.free_rank();
  const std::size_t ta = a.torsion().size(), tb = b.torsion().size();
  const std::size_t n = fa + fb + ta + tb;
  // Old coordinate of a / b -> new coordinate. Torsion gets merged in nondecreasing order.
  std::vector<std::pair<Integer, std::size_t>> tors;  // (order, 0..ta-1 for a, ta.. for b)
  for (std::size_t j = 0; j < ta; ++j) tors.emplace_back(a.torsion()[j], j);
  for (std::size_t j = 0; j < tb; ++j) tors.emplace_back(b.torsion()[j], ta + j);
  std::stable_sort(tors.begin(), tors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::size_t> pos_a(fa + ta), pos_b(fb + tb);
  for (std::size_t i = 0; i < fa; ++i) pos_a[i] = i;
  for (std::size_t i = 0; i < fb; ++i) pos_b[i] = fa + i;
  std::vector<Integer> torsion;
  for (std::size_t k = 0; k < tors.size(); ++k) {
    torsion.push_back(tors[k].first);
    const std::size_t src = tors[k].second;
    if (src < ta)
      pos_a[fa + src] = fa + fb + k;
    else
      pos_b[fb + (src - ta)] = fa + fb + k;
  }
  std::vector<IntMatrix> action(a.group().order(), IntMatrix(n, n));
  for (Element g = 0; g < a.group().order(); ++g) {
    const IntMatrix& ma = a.action(g);
    const IntMatrix& mb = b.action(g);
    for (std::size_t i = 0; i < pos_a.size(); ++i)
      for (std::size_t j = 0; j < pos_a.size(); ++j) action[g](pos_a[i], pos_a[j]) = ma(i, j);
    for (std::size_t i = 0; i < pos_b.size(); ++i)
      for (std::size_t j = 0; j < pos_b.size(); ++j) action[g](pos_b[i], pos_b[j]) = mb(i, j);
  }
  return GaloisModule(a.group_ptr(), fa + fb, std::move(torsion), std::move(action));
}

IntMatrix orbit_rows(const GaloisModule& m, const std::vector<IntVector>& vectors) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors)
    for (Element g = 0; g < m.group().order(); ++g) rows.push_back(m.act(g, v));
  IntMatrix gens = IntMatrix::from_rows(rows, m.num_generators()).stack(m.relation_rows());
  return row_lattice_basis(gens);
}

Quotient quotient_by_orbit_relations(const GaloisModule& p_module, const std::vector<IntVector>& relations,
                                     unsigned p) {
  if (!p_module.is_lattice()) throw ValidationError("quotient_by_orbit_relations expects a lattice");
  const std::size_t n = p_module.num_generators();
  for (const auto& r : relations)
    if (r.size() != n) throw ValidationError("relation vector has wrong length");
  const IntMatrix rel = orbit_rows(p_module, relations);

  // Coordinates y = V^T x send the relation lattice onto the diagonal lattice of the SNF.
  IntMatrix transform = IntMatrix::identity(n);
  std::vector<Integer> d;
  if (rel.rows() > 0) {
    SmithForm sf = smith_normal_form(rel);
    transform = sf.v.transpose();
    d = std::move(sf.d);
  }
  d.resize(n, 0);

  std::vector<std::size_t> free_coords;
  std::vector<std::pair<Integer, std::size_t>> torsion_coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(d[i]) == 0)
      free_coords.push_back(i);
    else if (d[i] > 1) {
      if (!is_power_of(d[i], p))
        throw MixedTorsionError("quotient has torsion Z/" + d[i].get_str() + " at p=" + std::to_string(p));
      torsion_coords.emplace_back(d[i], i);
    }
  }
  std::stable_sort(torsion_coords.begin(), torsion_coords.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::size_t> kept = free_coords;
  std::vector<Integer> torsion;
  for (const auto& [q, i] : torsion_coords) {
    kept.push_back(i);
    torsion.push_back(q);
  }

  const IntMatrix inverse = unimodular_inverse(transform);
  std::vector<IntMatrix> action;
  action.reserve(p_module.group().order());
  for (Element g = 0; g < p_module.group().order(); ++g) {
    const IntMatrix conj = transform * p_module.action(g) * inverse;
    action.push_back(conj.select(kept, kept));
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  Quotient out{GaloisModule(p_module.group_ptr(), free_coords.size(), std::move(torsion), std::move(action)),
               transform.select(kept, all)};
  out.module.reduce_matrix(out.projection);
  return out;
}

std::vector<IntMatrix> hom_module(const GaloisModule& l, const GaloisModule& m) {
  if (!l.is_lattice() || !m.is_lattice()) throw ValidationError("hom_module expects lattices");
  if (!same_group(l, m)) throw ValidationError("hom_module: modules are over different groups");
  const std::size_t nl = l.num_generators(), nm = m.num_generators();
  const auto& gens = l.group().generators();
  // phi(i, j) is unknown i * nl + j; equation phi * L_s - M_s * phi == 0.
  IntMatrix system(gens.size() * nm * nl, nm * nl);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const IntMatrix& ls = l.action(gens[s]);
    const IntMatrix& ms = m.action(gens[s]);
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t j = 0; j < nl; ++j) {
        const std::size_t row = (s * nm + i) * nl + j;
        for (std::size_t k = 0; k < nl; ++k)
          if (sgn(ls(k, j)) != 0) system(row, i * nl + k) += ls(k, j);
        for (std::size_t k = 0; k < nm; ++k)
          if (sgn(ms(i, k)) != 0) system(row, k * nl + j) -= ms(i, k);
      }
  }
  std::vector<IntMatrix> basis;
  if (nl == 0 || nm == 0) return basis;
  const IntMatrix kernel = gens.empty() ? IntMatrix::identity(nm * nl) : integer_kernel(system);
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    IntMatrix phi(nm, nl);
    for (std::size_t i = 0; i < nm; ++i)
      for (std::size_t j = 0; j < nl; ++j) phi(i, j) = kernel(r, i * nl + j);
    basis.push_back(std::move(phi));
  }
  return basis;
}

namespace {

// Coefficients of v in the row basis of an HNF matrix; throws if v is outside the lattice.
IntVector solve_in_hnf(const IntMatrix& basis, IntVector v) {
  IntVector coeffs(basis.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    while (sgn(basis(i, col)) == 0) ++col;
    if (!mpz_divisible_p(v[col].get_mpz_t(), basis(i, col).get_mpz_t()))
      throw ValidationError("vector is not in the sublattice");
    mpz_divexact(coeffs[i].get_mpz_t(), v[col].get_mpz_t(), basis(i, col).get_mpz_t());
    for (std::size_t j = col; j < v.size(); ++j) v[j] -= coeffs[i] * basis(i, j);
  }
  for (const auto& x : v)
    if (sgn(x) != 0) throw ValidationError("vector is not in the sublattice");
  return coeffs;
}

}  // namespace

Sublattice sublattice(const GaloisModule& m, const std::vector<IntVector>& gens) {
  if (!m.is_lattice()) throw ValidationError("sublattice expects a lattice");
  const IntMatrix basis = orbit_rows(m, gens);
  const std::size_t r = basis.rows();
  std::vector<IntMatrix> action;
  for (Element g = 0; g < m.group().order(); ++g) {
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      const IntVector c = solve_in_hnf(basis, m.act(g, basis.row(i)));
      for (std::size_t j = 0; j < r; ++j) a(j, i) = c[j];
    }
    action.push_back(std::move(a));
  }
  return {GaloisModule(m.group_ptr(), r, {}, std::move(action)), basis.transpose()};
}

}  // namespace edp
