#pragma once

// Reference computations that share no code with the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using IntMatrix = std::vector<std::vector<long long>>;

// Leibniz determinant over the integers.
inline ringlab::BigInt det(const IntMatrix& M) {
  std::size_t n = M.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ringlab::BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    ringlab::BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= M[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinant divisors: s_k = d_k / d_{k-1},
// d_k = gcd of all k x k minors.
inline std::vector<ringlab::BigInt> invariant_factors(const IntMatrix& A) {
  std::size_t m = A.size(), n = A[0].size(), r = std::min(m, n);
  std::vector<ringlab::BigInt> d{1};
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(m, k, 0, cur, rows);
    subsets(n, k, 0, cur, cols);
    ringlab::BigInt g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        IntMatrix minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = A[rs[i]][cs[j]];
        g = gcd(g, abs(det(minor)));
      }
    d.push_back(g);
  }
  std::vector<ringlab::BigInt> s;
  for (std::size_t k = 1; k <= r; ++k) s.push_back(d[k - 1] == 0 || d[k] == 0 ? ringlab::BigInt(0) : d[k] / d[k - 1]);
  return s;
}

// Fixed corpus: [[2,4],[6,8]] followed by 99 seeded matrices up to 3x3, entries in [-9, 9].
inline std::vector<IntMatrix> integer_matrix_corpus() {
  std::vector<IntMatrix> out{{{2, 4}, {6, 8}}};
  std::mt19937_64 rng(100);
  while (out.size() < 100) {
    std::size_t m = rng() % 3 + 1, n = rng() % 3 + 1;
    IntMatrix A(m, std::vector<long long>(n));
    for (auto& row : A)
      for (auto& x : row) x = static_cast<long long>(rng() % 19) - 9;
    out.push_back(A);
  }
  return out;
}

// |R^m / column span of A| for a finite ring, by brute-force subgroup closure.
inline std::uint64_t cokernel_size(const ringlab::Ring& R, const std::vector<std::vector<ringlab::Element>>& A) {
  std::size_t m = A.size(), n = A[0].size();
  using Vec = std::vector<std::uint64_t>;
  std::set<Vec> span{Vec(m, 0)};
  std::vector<Vec> frontier{Vec(m, 0)};
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j)
    for (std::uint64_t r = 0; r < R.order(); ++r) {
      Vec g(m);
      for (std::size_t i = 0; i < m; ++i) g[i] = R.mul_index(r, A[i][j].index());
      gens.push_back(g);
    }
  while (!frontier.empty()) {
    Vec v = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Vec w(m);
      for (std::size_t i = 0; i < m; ++i) w[i] = R.add_index(v[i], g[i]);
      if (span.insert(w).second) frontier.push_back(w);
    }
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= R.order();
  return total / span.size();
}

}  // namespace oracle
