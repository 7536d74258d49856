#pragma once

// Composition factors of F_ℓ S_n-modules, identified against the simple
// modules D^μ, and the ℓ-modular decomposition matrix of S_n.

#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "springer/decmat.hpp"
#include "springer/errors.hpp"
#include "springer/meataxe.hpp"
#include "springer/partitions.hpp"
#include "springer/specht.hpp"

namespace springer {

/// D^μ, built once per (μ, ℓ); safe to call concurrently.
inline std::shared_ptr<const ModuleRep> cached_simple_module(const Partition& mu, long long ell) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, long long>, std::shared_ptr<const ModuleRep>> cache;
  const auto key = std::pair{mu, ell};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const ModuleRep>(simple_module(mu, ell));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

struct FactorCount {
  Partition mu;
  int multiplicity = 0;
  friend bool operator==(const FactorCount&, const FactorCount&) = default;
};

/// Composition factors of rep as multiplicities of D^μ, μ ℓ-regular, listed in
/// canonical partition order. rep.gens() must be the images of s_1..s_{n-1}.
inline std::vector<FactorCount> composition_factors(const ModuleRep& rep, std::uint64_t seed = 0) {
  const int n = rep.group_degree();
  const long long ell = rep.ell();
  if (rep.gens().size() != static_cast<std::size_t>(std::max(n - 1, 0)))
    throw DomainError("module does not carry n-1 Coxeter generators");
  const auto candidates = l_regular_partitions_of(n, static_cast<int>(ell));
  MeatAxe engine(MeatAxeOptions{seed});
  std::vector<int> counts(candidates.size(), 0);
  for (const auto& factor : engine.composition_factors(rep)) {
    int match = -1;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto simple = cached_simple_module(candidates[c], ell);
      if (simple->dim() != factor.dim() || !engine.isomorphic(factor, *simple)) continue;
      if (match >= 0)
        throw EngineError("composition factor matches both D^" + candidates[match].to_string() +
                          " and D^" + candidates[c].to_string());
      match = static_cast<int>(c);
    }
    if (match < 0)
      throw EngineError("composition factor of dimension " + std::to_string(factor.dim()) +
                        " matches no simple module");
    ++counts[match];
  }
  std::vector<FactorCount> out;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (counts[c] > 0) out.push_back({candidates[c], counts[c]});
  return out;
}

struct DecompositionOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  int max_n = 8;
};

inline constexpr int kHardMaxN = 10;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// d_{λμ} = [F_ℓ ⊗ S^λ : D^μ]. Rows: partitions_of(n); columns: the
/// ℓ-regular partitions in the same order. Each row uses its own engine
/// seeded from (seed, row), so the result does not depend on threads.
inline DecompositionMatrix decomposition_matrix_symmetric(int n, long long ell,
                                                          DecompositionOptions options = {}) {
  require_field_prime(ell);
  if (options.max_n > kHardMaxN)
    throw DomainError("max_n may not exceed " + std::to_string(kHardMaxN));
  if (n < 1 || n > options.max_n)
    throw DomainError("decomposition matrices need 1 <= n <= " + std::to_string(options.max_n) +
                      ", got n = " + std::to_string(n));
  const auto rows = partitions_of(n);
  const auto cols = l_regular_partitions_of(n, static_cast<int>(ell));
  DecompositionMatrix d;
  d.group = "S_" + std::to_string(n);
  d.n = n;
  d.ell = ell;
  d.row_order = "reverse-lex";
  for (const auto& p : rows) d.row_labels.push_back(p.to_string());
  for (const auto& p : cols) d.col_labels.push_back(p.to_string());
  d.entries = IntMatrix(rows.size(), cols.size());

  std::vector<std::vector<FactorCount>> results(rows.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        results[i] = composition_factors(specht_rep(rows[i], ell),
                                         detail::splitmix64(options.seed ^ (i * 0x100000001b3ULL)));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& f : results[i])
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (cols[j] == f.mu) d.entries(i, j) = f.multiplicity;
  return d;
}

}  // namespace springer
