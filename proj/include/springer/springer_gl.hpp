#pragma once

// The modular Springer correspondence for GL_n: S^lam goes to the orbit of
// Jordan type lam', D^mu to (x_{mu'}, 1), and nilpotent-cone decomposition
// numbers are the S_n ones read through the transpose.

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "springer/basicset.hpp"
#include "springer/errors.hpp"
#include "springer/modrep.hpp"
#include "springer/partitions.hpp"

namespace springer {

/// A nilpotent orbit of GL_n (by Jordan type) with the trivial local system.
struct NilpotentPairGL {
  Partition orbit;
  friend bool operator==(const NilpotentPairGL&, const NilpotentPairGL&) = default;
};

inline NilpotentPairGL psi_ordinary(const Partition& lam) { return {conjugate(lam)}; }

inline NilpotentPairGL psi_modular(const Partition& mu, long long ell) {
  require_field_prime(ell);
  if (!is_l_regular(mu, static_cast<int>(ell)))
    throw DomainError(mu.to_string() + " is not " + std::to_string(ell) + "-regular");
  return {conjugate(mu)};
}

/// Partitions of n sorted so that lam' increases lexicographically, which
/// extends the closure order on the orbits x_{lam'} from the zero orbit up.
inline std::vector<Partition> springer_order(int n) {
  std::vector<Partition> parts = partitions_of(n);
  std::sort(parts.begin(), parts.end(),
            [](const Partition& a, const Partition& b) { return conjugate(a) < conjugate(b); });
  return parts;
}

namespace detail {

inline std::shared_ptr<const DecompositionMatrix> cached_decomposition(int n, long long ell,
                                                                       const DecompositionOptions& opts) {
  using Key = std::tuple<int, long long, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const DecompositionMatrix>> cache;
  const Key key{n, ell, opts.seed};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto d = std::make_shared<const DecompositionMatrix>(decomposition_matrix_symmetric(n, ell, opts));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace detail

/// d^N_{lam,mu} = d^{S_n}_{lam',mu'}; an empty pair gives 1.
inline long long d_nilcone(const Partition& lam, const Partition& mu, long long ell,
                           const DecompositionOptions& opts = {}) {
  if (lam.size() != mu.size())
    throw DomainError("d_nilcone needs |lam| = |mu|: " + lam.to_string() + " vs " + mu.to_string());
  require_field_prime(ell);
  const Partition lam_t = conjugate(lam), mu_t = conjugate(mu);
  if (!is_l_regular(mu_t, static_cast<int>(ell)))
    throw DomainError("(x_" + mu.to_string() + ", 1) is not in the modular image: " +
                      mu_t.to_string() + " is not " + std::to_string(ell) + "-regular");
  if (lam.size() == 0) return 1;
  const auto d = detail::cached_decomposition(lam.size(), ell, opts);
  return d->entries(d->row_index(lam_t.to_string()), d->col_index(mu_t.to_string()))
      .convert_to<long long>();
}

/// The rows of d (labeled by partitions of n) permuted into springer_order(n).
inline DecompositionMatrix springer_ordered(const DecompositionMatrix& d) {
  if (d.n < 1) throw DomainError("springer_ordered needs a symmetric-group matrix");
  DecompositionMatrix out = d;
  out.row_order = "springer";
  out.row_labels.clear();
  std::vector<std::size_t> rows, cols;
  for (const auto& p : springer_order(d.n)) {
    rows.push_back(d.row_index(p.to_string()));
    out.row_labels.push_back(p.to_string());
  }
  for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(j);
  out.entries = d.entries.select(rows, cols);
  return out;
}

/// leq(a, b) when the orbit of row b lies in the closure of the orbit of row
/// a, i.e. lam_a' dominates lam_b'. Nonzero entries sit at or below the row
/// that carries the 1 of their column.
inline RowOrder orbit_closure_order(const DecompositionMatrix& d) {
  std::vector<Partition> orbits;
  for (const auto& label : d.row_labels) orbits.push_back(conjugate(Partition::parse(label)));
  return [orbits](std::size_t a, std::size_t b) { return dominates(orbits[a], orbits[b]); };
}

struct RcCheck {
  RowColumnRemoval removal;
  long long lhs = 0;
  long long rhs = 0;
  bool equal() const noexcept { return lhs == rhs; }
};

/// Compares d^N_{lam,mu} with the number after erasing common rows and columns.
inline RcCheck check_rc_removal(const Partition& lam, const Partition& mu, long long ell,
                                const DecompositionOptions& opts = {}) {
  RcCheck out;
  out.removal = remove_common_rows_cols(lam, mu);
  out.lhs = d_nilcone(lam, mu, ell, opts);
  out.rhs = d_nilcone(out.removal.lam_hat, out.removal.mu_hat, ell, opts);
  return out;
}

struct RcSweep {
  int checked = 0;
  int skipped = 0;  ///< comparable pairs with mu' not ell-regular
  std::vector<std::pair<std::pair<Partition, Partition>, RcCheck>> failures;
};

/// check_rc_removal over every pair lam ⊵ mu
/// with 1 <= |lam| <= max_n.
inline RcSweep rc_sweep(int max_n, long long ell, const DecompositionOptions& opts = {}) {
  require_field_prime(ell);
  RcSweep out;
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        if (!dominates(lam, mu)) continue;
        if (!is_l_regular(conjugate(mu), static_cast<int>(ell))) {
          ++out.skipped;
          continue;
        }
        auto r = check_rc_removal(lam, mu, ell, opts);
        ++out.checked;
        if (!r.equal()) out.failures.push_back({{lam, mu}, std::move(r)});
      }
  }
  return out;
}

}  // namespace springer
