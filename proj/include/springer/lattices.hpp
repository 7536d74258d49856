#pragma once

// Root-lattice arithmetic on Cartan matrices: P/Q, long-root subsystems,
// simply-laced covers with their diagram automorphisms, and the F_ell-modules
// F_ell (x) P/Q of the cover.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "springer/errors.hpp"
#include "springer/flinalg.hpp"
#include "springer/meataxe.hpp"
#include "springer/modrep.hpp"

namespace springer {

struct CartanType {
  char letter = 'A';
  int rank = 1;

  /// Accepts "E6", "E_6", "e6".
  static CartanType parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (c != '_' && c != ' ') s.push_back(c);
    if (s.size() < 2) throw DomainError("bad Cartan type '" + text + "'");
    CartanType t;
    t.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    std::size_t used = 0;
    try {
      t.rank = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
      throw DomainError("bad Cartan type '" + text + "'");
    }
    if (used != s.size() - 1) throw DomainError("bad Cartan type '" + text + "'");
    t.validate();
    return t;
  }

  void validate() const {
    bool ok = false;
    switch (letter) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 2; break;
      case 'D': ok = rank >= 3; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: break;
    }
    if (!ok || rank > 64) throw DomainError("inadmissible Cartan type " + to_string());
  }

  bool simply_laced() const noexcept { return letter == 'A' || letter == 'D' || letter == 'E'; }

  std::string to_string() const { return std::string(1, letter) + "_" + std::to_string(rank); }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

namespace detail {

/// Gram matrix of the simple roots, Bourbaki numbering, short roots of
/// squared length 2.
inline std::vector<std::vector<long long>> simple_root_gram(const CartanType& t) {
  t.validate();
  const int r = t.rank;
  std::vector<std::vector<long long>> g(r, std::vector<long long>(r, 0));
  const auto link = [&](int i, int j, long long v) { g[i][j] = g[j][i] = v; };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < r; ++i) g[i][i] = i + 1 < r ? 4 : 2;
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < r; ++i) g[i][i] = i + 1 < r ? 2 : 4;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < r; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

inline IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

}  // namespace detail

/// A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
inline IntMatrix cartan_matrix_of(const CartanType& t) {
  const auto g = detail::simple_root_gram(t);
  const std::size_t r = g.size();
  IntMatrix a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = 2 * g[i][j] / g[j][j];
  return a;
}

inline IntMatrix cartan_matrix_of(const std::vector<CartanType>& product) {
  std::vector<IntMatrix> blocks;
  for (const auto& t : product) blocks.push_back(cartan_matrix_of(t));
  return detail::block_diagonal(blocks);
}

/// Invariant factors of the Cartan matrix that are not 1.
inline std::vector<Integer> fundamental_group_invariants(const CartanType& t) {
  std::vector<Integer> out;
  for (const auto& f : smith_normal_form(cartan_matrix_of(t)))
    if (f != 1) out.push_back(f);
  return out;
}

/// Components of the subsystem generated by the long simple roots.
inline std::vector<CartanType> long_root_subsystem(const CartanType& t) {
  if (t.simply_laced()) {
    t.validate();
    return {t};
  }
  const auto g = detail::simple_root_gram(t);
  const int r = t.rank;
  long long longest = 0;
  for (int i = 0; i < r; ++i) longest = std::max(longest, g[i][i]);
  std::vector<bool> seen(r, false);
  std::vector<CartanType> out;
  for (int i = 0; i < r; ++i) {
    if (seen[i] || g[i][i] != longest) continue;
    // walk the component; in the non-simply-laced types it is a path
    int size = 0, edges = 0;
    std::vector<int> todo{i};
    seen[i] = true;
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      ++size;
      for (int w = 0; w < r; ++w)
        if (w != v && g[v][w] != 0 && g[w][w] == longest) {
          ++edges;
          if (!seen[w]) {
            seen[w] = true;
            todo.push_back(w);
          }
        }
    }
    if (edges / 2 != size - 1) throw EngineError("long-root component is not a path");
    out.push_back({'A', size});
  }
  return out;
}

/// Number of invariant factors of the Cartan matrix of the long-root
/// subsystem divisible by ell.
inline int minimal_decnumber(const CartanType& t, long long ell) {
  require_field_prime(ell);
  int count = 0;
  for (const auto& f : smith_normal_form(cartan_matrix_of(long_root_subsystem(t))))
    if (f % ell == 0) ++count;
  return count;
}

/// Permutation of simple-root indices, p[i] = image of i.
using NodePermutation = std::vector<std::size_t>;

struct CoverDatum {
  CartanType hat_type;
  std::string aut_group;  ///< "1", "S2" or "S3"
  /// Coxeter generators of aut_group (none, one, or two transpositions/involutions).
  std::vector<NodePermutation> aut_action;

  int group_degree() const { return aut_group == "S3" ? 3 : aut_group == "S2" ? 2 : 1; }
};

namespace detail {
inline NodePermutation swap_nodes(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  NodePermutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (auto [a, b] : pairs) std::swap(p[a], p[b]);
  return p;
}
}  // namespace detail

/// The simply-laced diagram whose subregular singularity, with its symmetry
/// group A, belongs to t: B_n -> A_{2n-1}/S2, C_n -> D_{n+1}/S2,
/// F_4 -> E_6/S2, G_2 -> D_4/S3, simply-laced types -> themselves.
inline CoverDatum simply_laced_cover(const CartanType& t) {
  t.validate();
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.letter) {
    case 'B': {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, 2 * n - 2 - i);
      return {{'A', 2 * t.rank - 1}, "S2", {detail::swap_nodes(2 * n - 1, pairs)}};
    }
    case 'C':
      return {{'D', t.rank + 1}, "S2", {detail::swap_nodes(n + 1, {{n - 1, n}})}};
    case 'F':
      return {{'E', 6}, "S2", {detail::swap_nodes(6, {{0, 5}, {2, 4}})}};
    case 'G':
      // outer nodes 1, 3, 4 of D_4; generators (1 3) and (3 4)
      return {{'D', 4}, "S3", {detail::swap_nodes(4, {{0, 2}}), detail::swap_nodes(4, {{2, 3}})}};
    default:
      return {t, "1", {}};
  }
}

/// C[p(i)][p(j)] = C[i][j] for all i, j.
inline bool preserves_cartan(const IntMatrix& c, const NodePermutation& p) {
  if (p.size() != c.rows()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (c(p[i], p[j]) != c(i, j)) return false;
  return true;
}

struct SubregularModule {
  CoverDatum cover;
  std::vector<Integer> invariants;  ///< nontrivial invariant factors of Cartan(hat_type)
  ModuleRep module;                 ///< F_ell (x) P/Q with the action of A
  std::vector<FactorCount> multiplicities;  ///< every simple F_ell A-module, zeros included

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["type"] = cover.hat_type.to_string();
    j["group"] = cover.aut_group;
    j["ell"] = module.ell();
    std::vector<std::string> inv;
    for (const auto& f : invariants) inv.push_back(f.str());
    j["invariants"] = inv;
    j["dim"] = module.dim();
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& f : multiplicities) m[f.mu.to_string()] = f.multiplicity;
    j["multiplicities"] = m;
    return j;
  }
};

/// coker(C mod ell) for the Cartan matrix C of the cover, with A permuting the
/// fundamental-weight coordinates. Simple modules of A = S_k are labeled by
/// ell-regular partitions of k, the trivial one by (k).
inline SubregularModule subregular_module(const CartanType& t, long long ell, std::uint64_t seed = 0) {
  require_field_prime(ell);
  const auto p = static_cast<Residue>(ell);
  SubregularModule out;
  out.cover = simply_laced_cover(t);
  const IntMatrix c = cartan_matrix_of(out.cover.hat_type);
  for (const auto& f : smith_normal_form(c))
    if (f != 1) out.invariants.push_back(f);
  const std::size_t r = c.rows();
  std::vector<FMatrix> gens;
  for (const auto& perm : out.cover.aut_action) {
    if (!preserves_cartan(c, perm)) throw EngineError("stored permutation is not a diagram automorphism");
    FMatrix m(p, r, r);
    for (std::size_t i = 0; i < r; ++i) m.set(perm[i], i, 1);
    gens.push_back(std::move(m));
  }
  const int degree = out.cover.group_degree();
  const ModuleRep weights(p, r, degree, gens);
  out.module = quotient(weights, Subspace::from_columns(c.mod(p)));
  const auto found = composition_factors(out.module, seed);
  for (const auto& mu : l_regular_partitions_of(degree, static_cast<int>(ell))) {
    int k = 0;
    for (const auto& f : found)
      if (f.mu == mu) k = f.multiplicity;
    out.multiplicities.push_back({mu, k});
  }
  return out;
}

}  // namespace springer
