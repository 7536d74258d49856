#pragma once

// Integral Specht modules S^λ on the standard polytabloid basis.
//
// A tabloid of shape λ is stored as the vector (r_1, ..., r_n), r_k the row
// holding k, packed 4 bits per entry with r_1 most significant; numeric order
// of keys is then lexicographic order of row vectors. The tabloid {t} of a
// standard tableau t is the lex-smallest tabloid occurring in the polytabloid
// e_t (with coefficient 1), and distinct standard tableaux have distinct {t}.
// Any element of S^λ is therefore expanded in the standard basis by
// repeatedly cancelling its lex-smallest tabloid.
//
// The standard basis is ordered by row-reading word (rows top to bottom, each
// left to right), lexicographically.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/flinalg.hpp"
#include "springer/meataxe.hpp"
#include "springer/partitions.hpp"

namespace springer {

/// A tableau as its list of rows.
using Tableau = std::vector<std::vector<int>>;

inline std::vector<int> row_reading_word(const Tableau& t) {
  std::vector<int> word;
  for (const auto& row : t) word.insert(word.end(), row.begin(), row.end());
  return word;
}

/// Standard Young tableaux of shape lam, sorted by row-reading word.
inline std::vector<Tableau> standard_tableaux(const Partition& lam) {
  std::vector<Tableau> out;
  Tableau t(lam.length());
  const int n = lam.size();
  // place 1..n one at a time at the end of a row whose length stays legal
  const auto fill = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(t);
      return;
    }
    for (std::size_t r = 0; r < lam.length(); ++r) {
      const int len = static_cast<int>(t[r].size());
      if (len == lam[r]) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) <= len) continue;
      t[r].push_back(k);
      self(self, k + 1);
      t[r].pop_back();
    }
  };
  fill(fill, 1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return row_reading_word(a) < row_reading_word(b);
  });
  return out;
}

namespace detail {

using TabloidKey = std::uint64_t;
using Polytabloid = std::map<TabloidKey, long long>;

inline constexpr int kMaxSpechtN = 15;

inline int tabloid_digit(TabloidKey key, int k, int n) {
  return static_cast<int>((key >> (4 * (n - k))) & 0xF);
}

inline TabloidKey swap_digits(TabloidKey key, int i, int n) {
  const int a = tabloid_digit(key, i, n), b = tabloid_digit(key, i + 1, n);
  if (a == b) return key;
  const int sa = 4 * (n - i), sb = 4 * (n - i - 1);
  key &= ~((TabloidKey{0xF} << sa) | (TabloidKey{0xF} << sb));
  return key | (TabloidKey(b) << sa) | (TabloidKey(a) << sb);
}

inline TabloidKey tabloid_of(const Tableau& t, int n) {
  TabloidKey key = 0;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int k : t[r]) key |= TabloidKey(r) << (4 * (n - k));
  return key;
}

inline long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw EngineError("Specht coefficient overflow");
  return out;
}

inline long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw EngineError("Specht coefficient overflow");
  return out;
}

/// e_t = sum over the column stabiliser C_t of sign(σ) {σ t}.
inline Polytabloid polytabloid(const Tableau& t, const Partition& lam) {
  const int n = lam.size();
  std::vector<std::vector<int>> columns(lam.empty() ? 0 : lam[0]);
  for (const auto& row : t)
    for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
  Polytabloid out;
  // odometer over one permutation per column
  std::vector<std::vector<int>> perms;
  for (const auto& col : columns) {
    std::vector<int> p(col.size());
    std::iota(p.begin(), p.end(), 0);
    perms.push_back(p);
  }
  for (;;) {
    TabloidKey key = 0;
    int sign = 1;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& p = perms[c];
      for (std::size_t r = 0; r < p.size(); ++r) {
        key |= TabloidKey(r) << (4 * (n - columns[c][p[r]]));
        for (std::size_t s = r + 1; s < p.size(); ++s)
          if (p[s] < p[r]) sign = -sign;
      }
    }
    out[key] += sign;
    std::size_t c = 0;
    while (c < perms.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
    if (c == perms.size()) break;
  }
  return out;
}

}  // namespace detail

/// Everything integral about S^λ: basis, generator matrices, Gram matrix.
struct SpechtData {
  Partition shape;
  std::vector<Tableau> basis;
  std::vector<IntMatrix> gens;  ///< s_1 .. s_{n-1}; column j = image of e_{t_j}
  IntMatrix gram;
};

namespace detail {

inline SpechtData build_specht(const Partition& lam) {
  const int n = lam.size();
  if (n < 1 || n > kMaxSpechtN) throw DomainError("Specht modules need 1 <= n <= 15");
  SpechtData data{lam, standard_tableaux(lam), {}, {}};
  const std::size_t d = data.basis.size();
  std::vector<Polytabloid> polys;
  std::unordered_map<TabloidKey, std::size_t> leading;
  for (std::size_t j = 0; j < d; ++j) {
    polys.push_back(polytabloid(data.basis[j], lam));
    leading.emplace(tabloid_of(data.basis[j], n), j);
  }

  const auto expand = [&](Polytabloid v) {
    std::vector<long long> coords(d, 0);
    for (auto it = v.begin(); it != v.end(); it = v.begin()) {
      if (it->second == 0) {
        v.erase(it);
        continue;
      }
      const auto hit = leading.find(it->first);
      if (hit == leading.end())
        throw EngineError("straightening met a non-standard leading tabloid");
      const long long c = it->second;
      coords[hit->second] = c;
      for (const auto& [key, coef] : polys[hit->second]) {
        long long& slot = v[key];
        slot = checked_add(slot, -checked_mul(c, coef));
        if (slot == 0) v.erase(key);
      }
    }
    return coords;
  };

  for (int i = 1; i < n; ++i) {
    IntMatrix g(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Polytabloid image;
      for (const auto& [key, coef] : polys[j]) image[swap_digits(key, i, n)] = coef;
      const auto coords = expand(std::move(image));
      for (std::size_t r = 0; r < d; ++r) g(r, j) = coords[r];
    }
    data.gens.push_back(std::move(g));
  }

  data.gram = IntMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      long long s = 0;
      const auto& small = polys[a].size() <= polys[b].size() ? polys[a] : polys[b];
      const auto& large = polys[a].size() <= polys[b].size() ? polys[b] : polys[a];
      for (const auto& [key, coef] : small) {
        const auto it = large.find(key);
        if (it != large.end()) s = checked_add(s, checked_mul(coef, it->second));
      }
      data.gram(a, b) = s;
      data.gram(b, a) = s;
    }
  return data;
}

}  // namespace detail

/// Cached integral data for S^λ; safe to call concurrently.
inline std::shared_ptr<const SpechtData> specht_data(const Partition& lam) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const SpechtData>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(lam); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const SpechtData>(detail::build_specht(lam));
  std::lock_guard lock(mutex);
  return cache.emplace(lam, std::move(built)).first->second;
}

inline IntMatrix gram_matrix(const Partition& lam) { return specht_data(lam)->gram; }

/// F_ℓ ⊗ S^λ on the standard polytabloid basis.
inline ModuleRep specht_rep(const Partition& lam, long long ell) {
  require_field_prime(ell);
  const auto data = specht_data(lam);
  std::vector<FMatrix> gens;
  for (const auto& g : data->gens) gens.push_back(g.mod(static_cast<Residue>(ell)));
  return ModuleRep(static_cast<Residue>(ell), data->basis.size(), lam.size(), std::move(gens));
}

/// D^μ: F_ℓ ⊗ S^μ modulo the radical of the Gram form.
inline ModuleRep simple_module(const Partition& mu, long long ell) {
  require_field_prime(ell);
  if (!is_l_regular(mu, static_cast<int>(ell)))
    throw DomainError("D^mu needs an ell-regular mu; " + mu.to_string() + " is not " +
                      std::to_string(ell) + "-regular");
  const Residue f = static_cast<Residue>(ell);
  const ModuleRep s = specht_rep(mu, ell);
  const Subspace radical = Subspace::from_columns(nullspace_f(specht_data(mu)->gram.mod(f)));
  return quotient(s, radical);
}

}  // namespace springer
