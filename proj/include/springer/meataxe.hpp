#pragma once

// Modules over F_ℓ given by generator matrices, and a MeatAxe: spinning,
// Norton's irreducibility test on random algebra elements, submodule and
// quotient actions, composition factors, and a standard-basis isomorphism
// test for absolutely irreducible modules.
//
// Matrices act on column vectors. All randomness comes from a caller-seeded
// std::mt19937_64 whose raw output is reduced with %, so results do not
// depend on the standard library's distribution implementations.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/flinalg.hpp"
#include "springer/polyfp.hpp"

namespace springer {

using Vec = std::vector<Residue>;

/// A module for S_n (or any group presented by Coxeter generators s_i)
/// given by the images of the generators.
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(Residue ell, std::size_t dim, int group_degree, std::vector<FMatrix> gens)
      : ell_(ell), dim_(dim), group_degree_(group_degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.rows() != dim_ || g.cols() != dim_ || g.ell() != ell_)
        throw DomainError("generator shape does not match module dimension");
#ifndef NDEBUG
    check_relations();
#endif
  }

  Residue ell() const noexcept { return ell_; }
  std::size_t dim() const noexcept { return dim_; }
  int group_degree() const noexcept { return group_degree_; }
  const std::vector<FMatrix>& gens() const noexcept { return gens_; }

  /// s_i^2 = 1, (s_i s_{i+1})^3 = 1, (s_i s_j)^2 = 1 for |i-j| > 1.
  /// Throws DomainError naming the first failing relation.
  void check_relations() const {
    const FMatrix id = FMatrix::identity(ell_, dim_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!(gens_[i] * gens_[i] == id))
        throw DomainError("generator s_" + std::to_string(i + 1) + " is not an involution");
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        const FMatrix p = gens_[i] * gens_[j];
        const FMatrix q = j == i + 1 ? p * p * p : p * p;
        if (!(q == id))
          throw DomainError("braid relation fails for s_" + std::to_string(i + 1) +
                            ", s_" + std::to_string(j + 1));
      }
    }
  }

 private:
  Residue ell_ = 2;
  std::size_t dim_ = 0;
  int group_degree_ = 1;
  std::vector<FMatrix> gens_;
};

inline Vec act(const FMatrix& g, const Vec& v) {
  Vec out(g.rows(), 0);
  const Residue ell = g.ell();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::uint64_t acc = 0;
    const auto row = g.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc += std::uint64_t{row[j]} * v[j];
    out[i] = static_cast<Residue>(acc % ell);
  }
  return out;
}

inline Vec column(const FMatrix& m, std::size_t j) {
  Vec v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/// A subspace of F_ℓ^d held in reduced row echelon form.
struct Subspace {
  Echelon basis;  // rows span the subspace

  std::size_t dim() const noexcept { return basis.pivots.size(); }

  static Subspace from_rows(const FMatrix& rows) {
    Echelon e = rref(rows);
    FMatrix trimmed(rows.ell(), e.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) trimmed.row(i)[j] = e.matrix(i, j);
    return {Echelon{std::move(trimmed), std::move(e.pivots)}};
  }

  static Subspace from_columns(const FMatrix& cols) { return from_rows(cols.transpose()); }

  /// v minus its projection along the pivots; zero exactly when v lies inside.
  Vec reduce(Vec v) const {
    const Residue ell = basis.matrix.ell();
    for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
      const std::uint64_t f = v[basis.pivots[i]];
      if (f == 0) continue;
      const auto row = basis.matrix.row(i);
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = static_cast<Residue>((v[j] + (ell - f) * row[j]) % ell);
    }
    return v;
  }
};

namespace detail {

/// Incremental semi-echelon basis used while spinning.
class SpinBasis {
 public:
  SpinBasis(Residue ell, std::size_t dim) : ell_(ell), dim_(dim) {}

  /// Adds v if independent; returns whether it was added.
  bool add(Vec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint64_t f = v[pivots_[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] = static_cast<Residue>((v[j] + (ell_ - f) * rows_[k][j]) % ell_);
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const std::uint64_t inv = inverse_mod(v[p], ell_);
    for (auto& x : v) x = static_cast<Residue>((x * inv) % ell_);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t size() const noexcept { return rows_.size(); }

  FMatrix as_rows() const {
    FMatrix m(ell_, rows_.size(), dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) m.row(i)[j] = rows_[i][j];
    return m;
  }

 private:
  Residue ell_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

/// The smallest subspace containing seed and stable under every generator.
inline Subspace spin(const std::vector<FMatrix>& gens, const Vec& seed, Residue ell) {
  const std::size_t d = seed.size();
  detail::SpinBasis basis(ell, d);
  std::vector<Vec> queue;
  if (basis.add(seed)) queue.push_back(seed);
  for (std::size_t k = 0; k < queue.size() && basis.size() < d; ++k)
    for (const auto& g : gens) {
      Vec w = act(g, queue[k]);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  return Subspace::from_rows(basis.as_rows());
}

/// Action on an invariant subspace, in the coordinates of its RREF basis.
inline ModuleRep submodule(const ModuleRep& m, const Subspace& u) {
  const std::size_t k = u.dim();
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) {
    FMatrix a(m.ell(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
      Vec w = act(g, Vec(u.basis.matrix.row(j).begin(), u.basis.matrix.row(j).end()));
      for (std::size_t i = 0; i < k; ++i) a.row(i)[j] = w[u.basis.pivots[i]];
      if (!std::ranges::all_of(u.reduce(std::move(w)), [](Residue x) { return x == 0; }))
        throw EngineError("subspace is not invariant under the generators");
    }
    gens.push_back(std::move(a));
  }
  return ModuleRep(m.ell(), k, m.group_degree(), std::move(gens));
}

/// Action on V/U with basis the images of the non-pivot unit vectors.
inline ModuleRep quotient(const ModuleRep& m, const Subspace& u) {
  const std::size_t d = m.dim();
  std::vector<bool> is_pivot(d, false);
  for (auto p : u.basis.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) free.push_back(j);
  std::vector<FMatrix> gens;
  for (const auto& g : m.gens()) {
    FMatrix a(m.ell(), free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      const Vec w = u.reduce(column(g, free[j]));
      for (std::size_t i = 0; i < free.size(); ++i) a.row(i)[j] = w[free[i]];
    }
    gens.push_back(std::move(a));
  }
  return ModuleRep(m.ell(), free.size(), m.group_degree(), std::move(gens));
}

namespace detail {

/// Random elements of the enveloping algebra, built in lockstep for several
/// modules so that the same abstract element is evaluated in each.
class ElementPool {
 public:
  static constexpr std::size_t kCapacity = 24;

  explicit ElementPool(std::vector<const ModuleRep*> modules) : modules_(std::move(modules)) {
    for (const auto* m : modules_) {
      std::vector<FMatrix> mats = m->gens();
      if (mats.empty()) mats.push_back(FMatrix::identity(m->ell(), m->dim()));
      pool_.push_back(std::move(mats));
    }
  }

  std::vector<FMatrix> next(std::mt19937_64& rng) {
    const Residue ell = modules_.front()->ell();
    const std::size_t size = pool_.front().size();
    const std::size_t i = rng() % size, j = rng() % size;
    const std::size_t slot = size < kCapacity ? size : rng() % size;
    for (auto& mats : pool_) {
      FMatrix prod = mats[i] * mats[j];
      if (slot == mats.size())
        mats.push_back(std::move(prod));
      else
        mats[slot] = std::move(prod);
    }
    // random coefficients on the whole pool
    std::vector<std::pair<std::size_t, Residue>> combo;
    for (std::size_t k = 0; k < pool_.front().size(); ++k)
      if (const auto c = static_cast<Residue>(rng() % ell); c != 0) combo.emplace_back(k, c);
    const Residue shift = static_cast<Residue>(rng() % ell);
    std::vector<FMatrix> out;
    for (std::size_t m = 0; m < pool_.size(); ++m) {
      FMatrix theta = FMatrix::identity(ell, modules_[m]->dim()).scaled(shift);
      for (const auto& [k, c] : combo) theta = theta + pool_[m][k].scaled(c);
      out.push_back(std::move(theta));
    }
    return out;
  }

 private:
  std::vector<const ModuleRep*> modules_;
  std::vector<std::vector<FMatrix>> pool_;
};

inline std::vector<FMatrix> transposes(const std::vector<FMatrix>& gens) {
  std::vector<FMatrix> out;
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

}  // namespace detail

struct MeatAxeOptions {
  std::uint64_t seed = 0;
  int max_attempts = 500;
};

class MeatAxe {
 public:
  explicit MeatAxe(MeatAxeOptions options = {}) : options_(options), rng_(options.seed) {}

  /// A proper nonzero submodule, or nothing when m is proved irreducible.
  std::optional<Subspace> find_submodule(const ModuleRep& m) {
    const std::size_t d = m.dim();
    if (d <= 1) return std::nullopt;
    const Residue ell = m.ell();
    const auto gens_t = detail::transposes(m.gens());
    detail::ElementPool pool({&m});
    for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
      const FMatrix theta = pool.next(rng_).front();
      const auto factors = distinct_irreducible_factors(charpoly(theta), rng_);
      // small factors first; large ones rarely give a clean test
      for (std::size_t f = 0; f < factors.size() && f < 3; ++f) {
        const FPoly& p = factors[f];
        const FMatrix pt = evaluate(p, theta);
        const FMatrix kernel = nullspace_f(pt);
        Subspace u = spin(m.gens(), column(kernel, 0), ell);
        if (u.dim() < d) return u;
        const FMatrix kernel_t = nullspace_f(pt.transpose());
        const Subspace w = spin(gens_t, column(kernel_t, 0), ell);
        if (w.dim() < d) return Subspace::from_columns(nullspace_f(w.basis.matrix));
        if (kernel.cols() == static_cast<std::size_t>(p.degree())) return std::nullopt;
      }
    }
    throw EngineError("MeatAxe: no decision after " + std::to_string(options_.max_attempts) +
                      " random elements (dimension " + std::to_string(d) + ")");
  }

  /// Composition factors in the order met by a depth-first submodule/quotient
  /// recursion (submodule side first).
  std::vector<ModuleRep> composition_factors(const ModuleRep& m) {
    std::vector<ModuleRep> out;
    std::vector<ModuleRep> stack{m};
    while (!stack.empty()) {
      ModuleRep cur = std::move(stack.back());
      stack.pop_back();
      if (cur.dim() == 0) continue;
      auto u = find_submodule(cur);
      if (!u) {
        out.push_back(std::move(cur));
        continue;
      }
      stack.push_back(quotient(cur, *u));
      stack.push_back(submodule(cur, *u));
    }
    return out;
  }

  /// Isomorphism test; x must be absolutely irreducible.
  bool isomorphic(const ModuleRep& x, const ModuleRep& y) {
    if (x.ell() != y.ell() || x.dim() != y.dim() || x.gens().size() != y.gens().size())
      return false;
    const std::size_t d = x.dim();
    if (d == 0) return true;
    if (d == 1 || x.gens().empty()) return x.gens() == y.gens();
    const Residue ell = x.ell();
    detail::ElementPool pool({&x, &y});
    for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
      const auto thetas = pool.next(rng_);
      const FPoly cx = charpoly(thetas[0]);
      if (!(cx == charpoly(thetas[1]))) return false;
      for (const auto& p : distinct_irreducible_factors(cx, rng_)) {
        if (p.degree() != 1) break;
        const Residue c = (ell - p.coeff(0)) % ell;
        const FMatrix shift = FMatrix::identity(ell, d).scaled(c);
        const FMatrix kx = nullspace_f(thetas[0] - shift);
        if (kx.cols() != 1) continue;
        const FMatrix ky = nullspace_f(thetas[1] - shift);
        if (ky.cols() != 1) return false;
        return same_standard_form(x, column(kx, 0), y, column(ky, 0));
      }
    }
    throw EngineError("isomorphism test: no element with a simple eigenvalue found");
  }

 private:
  static bool same_standard_form(const ModuleRep& x, const Vec& vx, const ModuleRep& y,
                                 const Vec& vy) {
    const std::size_t d = x.dim();
    const Residue ell = x.ell();
    // standard basis of x from vx, recorded as (source index, generator)
    detail::SpinBasis echelon(ell, d);
    std::vector<Vec> bx{vx}, by{vy};
    echelon.add(vx);
    for (std::size_t k = 0; k < bx.size() && bx.size() < d; ++k)
      for (std::size_t g = 0; g < x.gens().size() && bx.size() < d; ++g) {
        Vec w = act(x.gens()[g], bx[k]);
        if (!echelon.add(w)) continue;
        bx.push_back(std::move(w));
        by.push_back(act(y.gens()[g], by[k]));
      }
    if (bx.size() < d) throw EngineError("isomorphism test: first module is reducible");
    FMatrix px(ell, d, d), py(ell, d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        px.row(i)[j] = bx[j][i];
        py.row(i)[j] = by[j][i];
      }
    const auto px_inv = inverse_f(px);
    if (!px_inv) throw EngineError("isomorphism test: singular standard basis");
    if (rank_f(py) < d) return false;
    for (std::size_t g = 0; g < x.gens().size(); ++g)
      if (!(y.gens()[g] * py == py * (*px_inv * x.gens()[g] * px))) return false;
    return true;
  }

  MeatAxeOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace springer
