#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

/// A partition: weakly decreasing list of positive parts. The empty
/// partition (n = 0) is a legal value.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw DomainError("partition parts must be positive: " + to_string());
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing: " +
                          to_string());
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses "3,1,1" (or "3 1 1"); "-" and "" are the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text == "-" || text.empty()) return Partition();
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw DomainError("cannot parse partition '" + std::string(text) + "'");
      }
      if (used != token.size())
        throw DomainError("cannot parse partition '" + std::string(text) + "'");
      parts.push_back(value);
      token.clear();
    };
    for (char c : text) {
      if (c == ',' || c == ' ')
        flush();
      else
        token.push_back(c);
    }
    flush();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// The integer n this partitions.
  int size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// i-th part, 0 beyond the length.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  std::string to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Plain lexicographic order on the part lists.
  friend auto operator<=>(const Partition&, const Partition&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
  }

 private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p.parts().front(), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

/// p ⊵ q: every partial sum of p is at least the matching partial sum of q.
inline bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DomainError("dominance needs partitions of the same n: " +
                      p.to_string() + " vs " + q.to_string());
  int sp = 0, sq = 0;
  const std::size_t len = std::max(p.length(), q.length());
  for (std::size_t k = 0; k < len; ++k) {
    sp += p[k];
    sq += q[k];
    if (sp < sq) return false;
  }
  return true;
}

/// No part value is repeated ell or more times.
inline bool is_l_regular(const Partition& p, int ell) {
  if (ell < 2) throw DomainError("ell must be at least 2");
  std::size_t i = 0;
  const auto& parts = p.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (static_cast<int>(j - i) >= ell) return false;
    i = j;
  }
  return true;
}

namespace detail {
inline void enumerate_partitions(int remaining, int max_part,
                                 std::vector<int>& prefix,
                                 std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
/// This is the canonical row/column order used throughout the library.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::enumerate_partitions(n, n, prefix, out);
  return out;
}

inline std::vector<Partition> l_regular_partitions_of(int n, int ell) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_l_regular(p, ell)) out.push_back(p);
  return out;
}

/// True when a precedes b in the canonical (reverse-lexicographic) order.
inline bool precedes(const Partition& a, const Partition& b) { return a > b; }

/// Number of standard Young tableaux of shape p (hook length formula).
inline long long standard_tableaux_count(const Partition& p) {
  const Partition conj = conjugate(p);
  std::vector<long long> numer(p.size());
  std::iota(numer.begin(), numer.end(), 1);
  // Cancel each hook against the factors of n! so nothing overflows.
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      long long hook = p[i] - j - 1 + conj[j] - static_cast<int>(i);
      for (auto& f : numer) {
        if (hook == 1) break;
        const long long g = std::gcd(f, hook);
        f /= g;
        hook /= g;
      }
    }
  }
  long long count = 1;
  for (long long f : numer) count *= f;
  return count;
}

enum class RemovalOrder { rows_first, columns_first };

struct RowColumnRemoval {
  int rows = 0;     ///< leading rows erased
  int columns = 0;  ///< leading columns erased
  Partition lam_hat;
  Partition mu_hat;
};

namespace detail {
inline int leading_equal(const Partition& a, const Partition& b) {
  int r = 0;
  while (static_cast<std::size_t>(r) < a.length() &&
         static_cast<std::size_t>(r) < b.length() && a[r] == b[r])
    ++r;
  return r;
}

inline Partition drop_rows(const Partition& p, int r) {
  const auto& parts = p.parts();
  return Partition(std::vector<int>(parts.begin() + std::min<std::size_t>(r, parts.size()),
                                    parts.end()));
}

inline Partition drop_columns(const Partition& p, int s) {
  std::vector<int> out;
  for (int part : p.parts())
    if (part > s) out.push_back(part - s);
  return Partition(std::move(out));
}
}  // namespace detail

/// Erases the leading rows and columns shared by lam and mu (lam ⊵ mu).
/// With rows_first the shared rows are counted and erased, then the shared
/// columns of what remains; columns_first is the mirror image. Every ν in
/// the interval [mu, lam] is checked to share the erased rows and columns.
inline RowColumnRemoval remove_common_rows_cols(
    const Partition& lam, const Partition& mu,
    RemovalOrder order = RemovalOrder::rows_first) {
  if (!dominates(lam, mu))
    throw DomainError("row/column removal needs lam ⊵ mu: " + lam.to_string() +
                      " vs " + mu.to_string());
  RowColumnRemoval out;
  if (order == RemovalOrder::rows_first) {
    out.rows = detail::leading_equal(lam, mu);
    const Partition l1 = detail::drop_rows(lam, out.rows);
    const Partition m1 = detail::drop_rows(mu, out.rows);
    out.columns = detail::leading_equal(conjugate(l1), conjugate(m1));
    out.lam_hat = detail::drop_columns(l1, out.columns);
    out.mu_hat = detail::drop_columns(m1, out.columns);
  } else {
    out.columns = detail::leading_equal(conjugate(lam), conjugate(mu));
    const Partition l1 = detail::drop_columns(lam, out.columns);
    const Partition m1 = detail::drop_columns(mu, out.columns);
    out.rows = detail::leading_equal(l1, m1);
    out.lam_hat = detail::drop_rows(l1, out.rows);
    out.mu_hat = detail::drop_rows(m1, out.rows);
  }

  // Every ν in [mu, lam] must carry exactly the erased rows and columns.
  const auto prefix = [](const Partition& p, int k) {
    std::vector<int> head;
    for (int i = 0; i < k; ++i) head.push_back(p[i]);
    return head;
  };
  const auto erased = [&](const Partition& nu) {
    if (order == RemovalOrder::rows_first)
      return std::pair{prefix(nu, out.rows),
                       prefix(conjugate(detail::drop_rows(nu, out.rows)),
                              out.columns)};
    return std::pair{prefix(conjugate(nu), out.columns),
                     prefix(detail::drop_columns(nu, out.columns), out.rows)};
  };
  const auto expected = erased(lam);
  for (const auto& nu : partitions_of(lam.size())) {
    if (!dominates(lam, nu) || !dominates(nu, mu)) continue;
    if (erased(nu) != expected)
      throw EngineError("row/column removal: interval element " +
                        nu.to_string() + " does not share the erased boxes");
  }
  return out;
}

}  // namespace springer
