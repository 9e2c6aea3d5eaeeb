#pragma once

// Small, deliberately naive reference computations used as test oracles. None of them call into
// the library's normal-form, fixed-point or solver code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include "edp/group.hpp"
#include "edp/int_matrix.hpp"

namespace oracle {

using Mat = std::vector<std::vector<long>>;

inline Mat to_ll(const edp::IntMatrix& m) {
  Mat out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

// Cofactor expansion; fine for the <= 6x6 matrices used here.
inline long det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(s);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      s[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors (determinantal divisor D_k).
inline long minor_gcd(const Mat& m, std::size_t k) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  long g = 0;
  subsets(r, k, [&](const std::vector<std::size_t>& rows) {
    subsets(c, k, [&](const std::vector<std::size_t>& cols) {
      Mat sub(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
      g = std::gcd(g, std::labs(det(sub)));
    });
  });
  return g;
}

// Invariant factors d_k = D_k / D_{k-1}; zeros once D_k vanishes.
inline std::vector<long> invariant_factors(const Mat& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::vector<long> d;
  long prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    const long dk = prev == 0 ? 0 : minor_gcd(m, k);
    d.push_back(dk == 0 ? 0 : dk / prev);
    prev = dk;
  }
  return d;
}

// Every subgroup, found by testing each subset containing the identity for closure.
inline std::vector<std::vector<edp::Element>> subgroups_by_subsets(const edp::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<edp::Element>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); mask += 2) {
    std::vector<edp::Element> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<edp::Element>(i));
    bool closed = true;
    for (auto a : s)
      for (auto b : s)
        if (!(mask >> g.mul(a, b) & 1)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

// Dihedral group of order 8 as permutations of the square's corners; element 0 is the identity.
inline edp::GroupPtr dihedral8() {
  using Perm = std::vector<int>;
  const Perm rot{1, 2, 3, 0}, flip{0, 3, 2, 1};
  auto compose = [](const Perm& a, const Perm& b) {  // a after b
    Perm c(4);
    for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<Perm> elems{{0, 1, 2, 3}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& s : {rot, flip}) {
      const Perm x = compose(s, elems[i]);
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
  std::vector<std::vector<edp::Element>> t(elems.size(), std::vector<edp::Element>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Perm x = compose(elems[i], elems[j]);
      t[i][j] = static_cast<edp::Element>(std::find(elems.begin(), elems.end(), x) - elems.begin());
    }
  return std::make_shared<const edp::FiniteGroup>(std::move(t));
}

inline unsigned long mult_order(unsigned long a, unsigned long modulus) {
  unsigned long k = 1, x = a % modulus;
  while (x != 1) {
    x = x * a % modulus;
    ++k;
  }
  return k;
}

}  // namespace oracle
