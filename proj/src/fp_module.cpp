#include "edp/fp_module.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "edp/error.hpp"

namespace edp {

FpMatrix FpMatrix::identity(std::size_t n, unsigned p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::reduce(const IntMatrix& m, unsigned p) {
  FpMatrix out(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<std::uint32_t>(mpz_fdiv_ui(m(i, j).get_mpz_t(), p));
  return out;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

FpVector FpMatrix::apply(const FpVector& x) const {
  if (x.size() != cols_) throw ValidationError("F_p matrix-vector product: dimension mismatch");
  FpVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t((*this)(i, j)) * x[j];
    y[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return y;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw ValidationError("F_p matrix product: mismatch");
  FpMatrix c(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += std::uint64_t(a(i, k)) * b(k, j);
      c(i, j) = static_cast<std::uint32_t>(acc % a.p_);
    }
  return c;
}

std::uint32_t inverse_mod(std::uint32_t a, unsigned p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ValidationError("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

// In-place row reduction; returns rank and multiplies `det` by the determinant factors.
std::size_t eliminate(FpMatrix& m, std::uint64_t* det) {
  const unsigned p = m.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
      if (det) *det = (*det * (p - 1)) % p;
    }
    if (det) *det = (*det * m(r, c)) % p;
    const std::uint32_t inv = inverse_mod(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = static_cast<std::uint32_t>((std::uint64_t(m(r, j)) * inv) % p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const std::uint32_t f = m(i, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = static_cast<std::uint32_t>((m(i, j) + std::uint64_t(p - f) * m(r, j)) % p);
    }
    ++r;
  }
  return r;
}

}  // namespace

std::uint32_t determinant_mod_p(FpMatrix m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
  if (m.rows() == 0) return 1 % m.prime();
  std::uint64_t det = 1;
  const std::size_t r = eliminate(m, &det);
  return r == m.rows() ? static_cast<std::uint32_t>(det) : 0;
}

std::size_t rank_mod_p(FpMatrix m) { return eliminate(m, nullptr); }

FpVector reduce_vector(const IntVector& v, unsigned p) {
  FpVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(v[i].get_mpz_t(), p));
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim, unsigned p, const std::vector<FpVector>& vectors) {
  Subspace s(ambient_dim, p);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, unsigned p) {
  Subspace s(ambient_dim, p);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    FpVector e(ambient_dim, 0);
    e[i] = 1;
    s.insert(std::move(e));
  }
  return s;
}

FpVector Subspace::reduce(FpVector v) const {
  if (v.size() != ambient_) throw ValidationError("vector length does not match subspace");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::uint32_t f = v[pivots_[k]];
    if (f == 0) continue;
    const FpVector& b = basis_[k];
    for (std::size_t j = 0; j < ambient_; ++j)
      v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(p_ - f) * b[j]) % p_);
  }
  return v;
}

bool Subspace::insert(FpVector v) {
  for (auto& x : v) x %= p_;
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < ambient_ && v[c] == 0) ++c;
  if (c == ambient_) return false;
  const std::uint32_t inv = inverse_mod(v[c], p_);
  for (auto& x : v) x = static_cast<std::uint32_t>((std::uint64_t(x) * inv) % p_);
  for (auto& b : basis_) {
    const std::uint32_t f = b[c];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      b[j] = static_cast<std::uint32_t>((b[j] + std::uint64_t(p_ - f) * v[j]) % p_);
  }
  const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
  const auto k = it - pivots_.begin();
  pivots_.insert(it, c);
  basis_.insert(basis_.begin() + k, std::move(v));
  return true;
}

bool Subspace::contains(FpVector v) const {
  for (auto& x : v) x %= p_;
  const FpVector r = reduce(std::move(v));
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const FpVector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

FpGaloisModule::FpGaloisModule(GroupPtr group, unsigned p, std::vector<FpMatrix> action)
    : group_(std::move(group)), p_(p), action_(std::move(action)) {
  if (!group_) throw ValidationError("F_p module has no group");
  if (action_.size() != group_->order()) throw ValidationError("need one action matrix per group element");
  dim_ = action_.front().rows();
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_ || a.prime() != p_) throw ValidationError("F_p action has wrong shape");
    if (determinant_mod_p(a) == 0) throw ValidationError("F_p action matrix is singular");
  }
  for (Element s : group_->generators())
    for (Element x = 0; x < group_->order(); ++x)
      if (!(action_[s] * action_[x] == action_[group_->mul(s, x)]))
        throw ValidationError("F_p action is not a homomorphism");
}

FpGaloisModule reduce_mod_p(const GaloisModule& m, unsigned p) {
  const unsigned q = m.torsion_prime();
  if (q != 0 && q != p)
    throw ValidationError("module torsion is " + std::to_string(q) + "-primary, not " + std::to_string(p) + "-primary");
  std::vector<FpMatrix> action;
  action.reserve(m.group().order());
  for (const auto& a : m.actions()) action.push_back(FpMatrix::reduce(a, p));
  if (m.num_generators() == 0) action.assign(m.group().order(), FpMatrix(0, 0, p));
  return FpGaloisModule(m.group_ptr(), p, std::move(action));
}

Coinvariants coinvariants(const FpGaloisModule& m) {
  const unsigned p = m.prime();
  if (!m.group().is_p_group(p))
    throw NotPGroupError("group of order " + std::to_string(m.group().order()) + " at p=" + std::to_string(p));
  const std::size_t n = m.dim();
  Coinvariants out;
  out.radical = Subspace(n, p);
  for (Element s : m.group().generators()) {
    const FpMatrix& a = m.action(s);
    for (std::size_t j = 0; j < n; ++j) {
      FpVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = (a(i, j) + p - (i == j ? 1 : 0)) % p;
      out.radical.insert(std::move(col));
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (k < out.radical.pivots().size() && out.radical.pivots()[k] == j)
      ++k;
    else
      free_cols.push_back(j);
  }
  out.dim = free_cols.size();
  out.projection = FpMatrix(out.dim, n, p);
  for (std::size_t j = 0; j < n; ++j) {
    FpVector e(n, 0);
    e[j] = 1;
    const FpVector r = out.radical.reduce(std::move(e));
    for (std::size_t i = 0; i < free_cols.size(); ++i) out.projection(i, j) = r[free_cols[i]];
  }
  return out;
}

Subspace fixed_image_subspace(const GaloisModule& m, const SubgroupClass& h, const Coinvariants& w, unsigned p) {
  const Submodule fixed = fixed_submodule(m, h);
  Subspace s(w.dim, p);
  for (const auto& v : fixed.generators) s.insert(w.projection.apply(reduce_vector(v, p)));
  return s;
}

Subspace fixed_image_subspace(const GaloisModule& m, const SubgroupClass& h, unsigned p) {
  return fixed_image_subspace(m, h, coinvariants(reduce_mod_p(m, p)), p);
}

Subspace orbit_span(const FpGaloisModule& m, const FpVector& v) {
  if (v.size() != m.dim()) throw ValidationError("orbit_span: vector length does not match module");
  Subspace s(m.dim(), m.prime());
  for (Element g = 0; g < m.group().order(); ++g) s.insert(m.action(g).apply(v));
  return s;
}

Subspace submodule_span(const FpGaloisModule& m, const std::vector<FpVector>& vectors) {
  Subspace s(m.dim(), m.prime());
  for (const auto& v : vectors)
    for (Element g = 0; g < m.group().order(); ++g) s.insert(m.action(g).apply(v));
  return s;
}

}  // namespace edp
