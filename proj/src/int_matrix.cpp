#include "edp/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "edp/error.hpp"

namespace edp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  if (v.size() != cols_) throw ValidationError("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (sgn((*this)(src, j)) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (sgn(k) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (sgn((*this)(i, src)) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                             const Integer& v) {
  Integer x, y;
  for (std::size_t j = 0; j < cols_; ++j) {
    Integer& ra = (*this)(a, j);
    Integer& rb = (*this)(b, j);
    if (sgn(ra) == 0 && sgn(rb) == 0) continue;
    x = s * ra + t * rb;
    y = u * ra + v * rb;
    ra.swap(x);
    rb.swap(y);
  }
}

void IntMatrix::combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                             const Integer& v) {
  Integer x, y;
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer& ca = (*this)(i, a);
    Integer& cb = (*this)(i, b);
    if (sgn(ca) == 0 && sgn(cb) == 0) continue;
    x = s * ca + t * cb;
    y = u * ca + v * cb;
    ca.swap(x);
    cb.swap(y);
  }
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

IntMatrix IntMatrix::stack(const IntMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw ValidationError("stack: column mismatch");
  IntMatrix s(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

IntMatrix IntMatrix::augment(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw ValidationError("augment: row mismatch");
  IntMatrix s(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) s(i, cols_ + j) = other(i, j);
  }
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix difference: dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw ValidationError("matrix-vector product: dimension mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(x[j]) != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a(piv, k)) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// g = s*a + t*b with g = gcd(a, b) >= 0.
void gcdext(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row-style HNF in place; u (when given) accumulates the row operations. Each column is cleared
// Euclid-style from its smallest entry, which keeps intermediate entries small.
std::size_t hermite_in_place(IntMatrix& h, IntMatrix* u) {
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == h.rows() || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == h.rows()) break;
      if (best != r) {
        h.swap_rows(r, best);
        if (u) u->swap_rows(r, best);
      }
      bool clear = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (sgn(h(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        const Integer nq = -q;
        h.add_row_multiple(i, r, nq);
        if (u) u->add_row_multiple(i, r, nq);
        if (sgn(h(i, c)) != 0) clear = false;
      }
      if (clear) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      h.negate_row(r);
      if (u) u->negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Integer fq = floor_div(h(i, c), h(r, c));
      if (sgn(fq) == 0) continue;
      const Integer nq = -fq;
      h.add_row_multiple(i, r, nq);
      if (u) u->add_row_multiple(i, r, nq);
    }
    ++r;
  }
  return r;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  out.rank = hermite_in_place(out.h, &out.u);
  return out;
}

namespace {

// gcdext, except that a pivot dividing b is kept in place (s = 1, t = 0); otherwise the
// row and column passes can swap entries back and forth forever.
void pivot_coefficients(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b) {
  if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    g = a;
    s = 1;
    t = 0;
    return;
  }
  gcdext(g, s, t, a, b);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  Integer g, s, t, a_div, b_div;

  for (std::size_t k = 0; k < n; ++k) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = k; i < a.rows(); ++i)
      for (std::size_t j = k; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    a.swap_rows(k, pi);
    u.swap_rows(k, pi);
    a.swap_cols(k, pj);
    v.swap_cols(k, pj);

    for (;;) {
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (sgn(a(i, k)) == 0) continue;
        pivot_coefficients(g, s, t, a(k, k), a(i, k));
        mpz_divexact(a_div.get_mpz_t(), a(k, k).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b_div.get_mpz_t(), a(i, k).get_mpz_t(), g.get_mpz_t());
        const Integer nb = -b_div;
        a.combine_rows(k, i, s, t, nb, a_div);
        u.combine_rows(k, i, s, t, nb, a_div);
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (sgn(a(k, j)) == 0) continue;
        pivot_coefficients(g, s, t, a(k, k), a(k, j));
        mpz_divexact(a_div.get_mpz_t(), a(k, k).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b_div.get_mpz_t(), a(k, j).get_mpz_t(), g.get_mpz_t());
        const Integer nb = -b_div;
        a.combine_cols(k, j, s, t, nb, a_div);
        v.combine_cols(k, j, s, t, nb, a_div);
      }
      bool column_clear = true;
      for (std::size_t i = k + 1; i < a.rows(); ++i)
        if (sgn(a(i, k)) != 0) column_clear = false;
      if (!column_clear) continue;

      // Pivot must divide the whole trailing block.
      std::size_t bad_row = a.rows();
      for (std::size_t i = k + 1; i < a.rows() && bad_row == a.rows(); ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == a.rows()) break;
      a.add_row_multiple(k, bad_row, 1);
      u.add_row_multiple(k, bad_row, 1);
    }
    if (sgn(a(k, k)) < 0) {
      a.negate_row(k);
      u.negate_row(k);
    }
  }

  SmithForm out{std::vector<Integer>(n), std::move(u), std::move(v)};
  for (std::size_t i = 0; i < n; ++i) out.d[i] = a(i, i);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = hf.rank; i < hf.u.rows(); ++i) rows.push_back(hf.u.row(i));
  if (rows.empty()) return IntMatrix(0, m.cols());
  return row_lattice_basis(IntMatrix::from_rows(rows, m.cols()));
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of non-square matrix");
  HermiteForm hf = hermite_normal_form(m);
  if (!hf.h.is_identity()) throw ValidationError("matrix is not unimodular");
  return std::move(hf.u);
}

IntMatrix row_lattice_basis(const IntMatrix& gens) {
  IntMatrix h = gens;
  const std::size_t rank = hermite_in_place(h, nullptr);
  std::vector<std::size_t> rows(rank), cols(gens.cols());
  for (std::size_t i = 0; i < rank; ++i) rows[i] = i;
  for (std::size_t j = 0; j < gens.cols(); ++j) cols[j] = j;
  return h.select(rows, cols);
}

}  // namespace edp
