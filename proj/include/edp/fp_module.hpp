#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edp/galois_module.hpp"
#include "edp/group.hpp"

namespace edp {

using FpVector = std::vector<std::uint32_t>;

/// Dense matrix over F_p, row-major; entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, unsigned p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols) {}
  static FpMatrix identity(std::size_t n, unsigned p);
  /// Entrywise reduction of an integer matrix.
  static FpMatrix reduce(const IntMatrix& m, unsigned p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned prime() const { return p_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FpVector row(std::size_t i) const;

  FpVector apply(const FpVector& x) const;
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned p_ = 2;
  std::vector<std::uint32_t> data_;
};

std::uint32_t inverse_mod(std::uint32_t a, unsigned p);
std::uint32_t determinant_mod_p(FpMatrix m);
std::size_t rank_mod_p(FpMatrix m);
FpVector reduce_vector(const IntVector& v, unsigned p);

/// Subspace of F_p^n held as a reduced row-echelon basis, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, unsigned p) : ambient_(ambient_dim), p_(p) {}
  static Subspace span(std::size_t ambient_dim, unsigned p, const std::vector<FpVector>& vectors);
  static Subspace full(std::size_t ambient_dim, unsigned p);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  unsigned prime() const { return p_; }
  const std::vector<FpVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v; returns false if v was already in the span.
  bool insert(FpVector v);
  bool contains(FpVector v) const;
  bool contains(const Subspace& other) const;
  /// Reduces v against the basis; zero iff v is in the span.
  FpVector reduce(FpVector v) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis_ < b.basis_; }

 private:
  std::size_t ambient_ = 0;
  unsigned p_ = 2;
  std::vector<FpVector> basis_;      // sorted by pivot
  std::vector<std::size_t> pivots_;  // pivot column of each basis row
};

/// An F_p[G]-module: one invertible matrix per group element.
class FpGaloisModule {
 public:
  FpGaloisModule(GroupPtr group, unsigned p, std::vector<FpMatrix> action);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  unsigned prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const FpMatrix& action(Element g) const { return action_[g]; }

 private:
  GroupPtr group_;
  unsigned p_;
  std::size_t dim_ = 0;
  std::vector<FpMatrix> action_;
};

/// M / pM: one coordinate per free generator and per torsion summand.
FpGaloisModule reduce_mod_p(const GaloisModule& m, unsigned p);

struct Coinvariants {
  std::size_t dim = 0;
  FpMatrix projection;  // dim x m.dim(), kernel is span{x - g x}
  Subspace radical;     // span{x - g x}
};

/// Coinvariant (radical) quotient. Throws NotPGroupError unless G is a p-group.
Coinvariants coinvariants(const FpGaloisModule& m);

/// Image of the integral fixed points M^H in the coinvariant quotient of M / pM.
Subspace fixed_image_subspace(const GaloisModule& m, const SubgroupClass& h, unsigned p);

/// As above with a precomputed reduction and coinvariant projection.
Subspace fixed_image_subspace(const GaloisModule& m, const SubgroupClass& h, const Coinvariants& w, unsigned p);

Subspace orbit_span(const FpGaloisModule& m, const FpVector& v);

/// Smallest F_p[G]-submodule containing the vectors.
Subspace submodule_span(const FpGaloisModule& m, const std::vector<FpVector>& vectors);

}  // namespace edp
