#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace edp {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  void set_row(std::size_t i, const IntVector& v);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row dst += k * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // (row a, row b) <- (s*a + t*b, u*a + v*b)
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v);
  void combine_cols(std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v);

  // Submatrix with the given row and column indices.
  IntMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  // Rows of *this followed by rows of other.
  IntMatrix stack(const IntMatrix& other) const;
  // Columns of *this followed by columns of other.
  IntMatrix augment(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntVector& v);

Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  // row-style HNF
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  std::vector<Integer> d;  // min(rows, cols) entries, d[i] | d[i+1], zeros last
  IntMatrix u;             // rows x rows, unimodular
  IntMatrix v;             // cols x cols, unimodular
};

/// u * m * v == diag(d).
SmithForm smith_normal_form(const IntMatrix& m);

/// Rows form a Z-basis of {x : m * x == 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws ValidationError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Nonzero rows of the HNF of the row lattice spanned by `gens`.
IntMatrix row_lattice_basis(const IntMatrix& gens);

}  // namespace edp
