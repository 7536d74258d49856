#pragma once

// Independent reference computations used only by the tests. They are
// deliberately naive and share no code paths with the library kernels.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "springer/partitions.hpp"

namespace oracle {

using Rows = std::vector<std::vector<long long>>;

/// ℓ-core by stripping ℓ-rim hooks: on beta-numbers a rim hook of length ℓ
/// is a bead b with b - ℓ >= 0 unoccupied.
inline springer::Partition l_core(const springer::Partition& p, int ell) {
  const int len = static_cast<int>(p.length());
  std::set<int> beads;
  for (int i = 0; i < len; ++i) beads.insert(p[i] + (len - 1 - i));
  for (bool moved = true; moved;) {
    moved = false;
    for (int b : beads)
      if (b >= ell && !beads.count(b - ell)) {
        beads.erase(b);
        beads.insert(b - ell);
        moved = true;
        break;
      }
  }
  std::vector<int> parts;
  int i = 0;
  for (auto it = beads.rbegin(); it != beads.rend(); ++it, ++i) {
    const int part = *it - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return springer::Partition(parts);
}

/// Leibniz expansion; only for tiny matrices.
inline long long leibniz_det(const Rows& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    long long term = 1;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m[i][perm[i]];
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[j] < perm[i]) sign = -sign;
    }
    det += sign * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

namespace detail {
inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}
}  // namespace detail

/// Invariant factors from determinantal divisors d_k = gcd of k x k minors.
inline std::vector<long long> invariant_factors_by_minors(const Rows& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    detail::subsets(r, k, rs, cur);
    detail::subsets(c, k, cs, cur);
    long long g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        Rows minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[ri[i]][ci[j]];
        g = std::gcd(g, std::llabs(leibniz_det(minor)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Smith form by plain elementary row and column operations: bring the gcd
/// of the leading row and column to the corner with Euclid steps.
inline std::vector<long long> invariant_factors_by_reduction(Rows a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::vector<long long> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // find any nonzero entry in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m && pi == m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    for (bool done = false; !done;) {
      done = true;
      for (std::size_t i = t + 1; i < m; ++i)
        while (a[i][t] != 0) {
          const long long q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[t], a[i]);
          done = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        while (a[t][j] != 0) {
          const long long q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0)
            for (auto& row : a) std::swap(row[t], row[j]);
          done = false;
        }
      if (!done) continue;
      for (std::size_t i = t + 1; i < m && done; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < n; ++c) a[t][c] += a[i][c];
            done = false;
            break;
          }
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

}  // namespace oracle
