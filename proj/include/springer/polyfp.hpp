#pragma once

// Univariate polynomials over F_ℓ: characteristic polynomials of FMatrix
// values and splitting into distinct irreducible factors
// (distinct-degree + Cantor–Zassenhaus equal-degree factorization).

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "springer/flinalg.hpp"

namespace springer {

class FPoly {
 public:
  explicit FPoly(Residue ell) : ell_(ell) {}
  FPoly(Residue ell, std::vector<Residue> coeffs)
      : ell_(ell), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= ell_;
    normalize();
  }

  static FPoly constant(Residue ell, Residue c) { return FPoly(ell, {c}); }
  static FPoly x(Residue ell) { return FPoly(ell, {0, 1}); }

  Residue ell() const noexcept { return ell_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Residue>& coeffs() const noexcept { return c_; }

  FPoly monic() const {
    if (is_zero()) return *this;
    const std::uint64_t inv = inverse_mod(lead(), ell_);
    FPoly out = *this;
    for (auto& x : out.c_) x = static_cast<Residue>((x * inv) % ell_);
    return out;
  }

  friend FPoly operator+(const FPoly& a, const FPoly& b) {
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.ell_;
    return FPoly(a.ell_, std::move(c));
  }

  friend FPoly operator-(const FPoly& a, const FPoly& b) {
    std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = (a.coeff(i) + a.ell_ - b.coeff(i)) % a.ell_;
    return FPoly(a.ell_, std::move(c));
  }

  friend FPoly operator*(const FPoly& a, const FPoly& b) {
    if (a.is_zero() || b.is_zero()) return FPoly(a.ell_);
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.ell_;
    std::vector<Residue> c(acc.begin(), acc.end());
    return FPoly(a.ell_, std::move(c));
  }

  /// Quotient and remainder of a by a nonzero b.
  friend std::pair<FPoly, FPoly> divmod(const FPoly& a, const FPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const Residue ell = a.ell_;
    if (a.degree() < b.degree()) return {FPoly(ell), a};
    std::vector<Residue> rem = a.c_;
    std::vector<Residue> quo(a.c_.size() - b.c_.size() + 1, 0);
    const std::uint64_t inv = inverse_mod(b.lead(), ell);
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      const std::uint64_t top = rem[i + b.degree()];
      if (top == 0) continue;
      const std::uint64_t q = (top * inv) % ell;
      quo[i] = static_cast<Residue>(q);
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        rem[i + j] = static_cast<Residue>((rem[i + j] + (ell - q) * b.c_[j]) % ell);
    }
    return {FPoly(ell, std::move(quo)), FPoly(ell, std::move(rem))};
  }

  friend FPoly operator%(const FPoly& a, const FPoly& b) { return divmod(a, b).second; }
  friend FPoly operator/(const FPoly& a, const FPoly& b) { return divmod(a, b).first; }

  friend bool operator==(const FPoly&, const FPoly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Residue ell_;
  std::vector<Residue> c_;
};

/// Monic gcd (zero if both are zero).
inline FPoly gcd(FPoly a, FPoly b) {
  while (!b.is_zero()) {
    FPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline FPoly powmod(FPoly base, Integer exponent, const FPoly& modulus) {
  FPoly result = FPoly::constant(base.ell(), 1) % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if ((exponent & 1) != 0) result = (result * base) % modulus;
    exponent >>= 1;
    if (exponent > 0) base = (base * base) % modulus;
  }
  return result;
}

/// p(A) by Horner's rule.
inline FMatrix evaluate(const FPoly& p, const FMatrix& a) {
  const Residue ell = a.ell();
  FMatrix acc(ell, a.rows(), a.cols());
  const FMatrix id = FMatrix::identity(ell, a.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + id.scaled(p.coeff(i));
  return acc;
}

/// Characteristic polynomial det(xI - A) via reduction to Hessenberg form.
inline FPoly charpoly(const FMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("charpoly of a non-square matrix");
  const Residue ell = a.ell();
  const std::size_t n = a.rows();
  FMatrix h = a;
  const auto at = [&](std::size_t i, std::size_t j) -> Residue& { return h.row(i)[j]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && at(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(i, j), at(m, j));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, m));
    }
    const std::uint64_t inv = inverse_mod(at(m, m - 1), ell);
    for (std::size_t r = m + 1; r < n; ++r) {
      const std::uint64_t u = (std::uint64_t{at(r, m - 1)} * inv) % ell;
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        at(r, j) = static_cast<Residue>((at(r, j) + (ell - u) * at(m, j)) % ell);
      for (std::size_t k = 0; k < n; ++k)
        at(k, m) = static_cast<Residue>((at(k, m) + u * at(k, r)) % ell);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  // written 0-based below.
  std::vector<FPoly> p;
  p.push_back(FPoly::constant(ell, 1));
  for (std::size_t k = 0; k < n; ++k) {
    FPoly next = (FPoly::x(ell) - FPoly::constant(ell, at(k, k))) * p[k];
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = (prod * at(i + 1, i)) % ell;
      if (prod == 0) break;
      const std::uint64_t coef = (prod * at(i, k)) % ell;
      if (coef == 0) continue;
      next = next - p[i] * FPoly::constant(ell, static_cast<Residue>(coef));
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace detail {

inline FPoly random_poly(Residue ell, int max_degree, std::mt19937_64& rng) {
  std::vector<Residue> c(max_degree + 1);
  for (auto& x : c) x = static_cast<Residue>(rng() % ell);
  return FPoly(ell, std::move(c));
}

inline void equal_degree_split(const FPoly& g, int d, std::mt19937_64& rng,
                               std::vector<FPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Residue ell = g.ell();
  for (;;) {
    FPoly a = random_poly(ell, g.degree() - 1, rng);
    if (a.degree() < 1) continue;
    FPoly b(ell);
    if (ell == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      FPoly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    } else {
      Integer e = 1;
      for (int i = 0; i < d; ++i) e *= ell;
      b = powmod(a, (e - 1) / 2, g) - FPoly::constant(ell, 1);
    }
    FPoly q = gcd(b, g);
    if (q.degree() > 0 && q.degree() < g.degree()) {
      equal_degree_split(q, d, rng, out);
      equal_degree_split(g / q, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Distinct monic irreducible factors of f, ordered by degree then by
/// coefficient list. Multiplicities are dropped.
inline std::vector<FPoly> distinct_irreducible_factors(const FPoly& f,
                                                       std::mt19937_64& rng) {
  if (f.degree() < 1) return {};
  const Residue ell = f.ell();
  FPoly rest = f.monic();
  std::vector<FPoly> out;
  FPoly h = FPoly::x(ell) % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, Integer(ell), rest);
    FPoly g = gcd(h - FPoly::x(ell), rest);
    if (g.degree() > 0) {
      detail::equal_degree_split(g, d, rng, out);
      for (FPoly q = gcd(rest, g); q.degree() > 0; q = gcd(rest, g)) rest = rest / q;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  std::sort(out.begin(), out.end(), [](const FPoly& a, const FPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

}  // namespace springer
