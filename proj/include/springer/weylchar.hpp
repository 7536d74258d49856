#pragma once

// Ordinary character tables: S_n by the Murnaghan–Nakayama rule, and W(G_2)
// generated from its two simple reflections.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"
#include "springer/flinalg.hpp"
#include "springer/partitions.hpp"

namespace springer {

struct CharacterTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> class_labels;
  IntMatrix values;  ///< rows = characters, columns = classes
  std::vector<long long> class_orders;
  std::vector<long long> class_sizes;

  long long group_order() const {
    return std::accumulate(class_sizes.begin(), class_sizes.end(), 0LL);
  }

  /// Values at the identity class (column 0).
  std::vector<long long> degrees() const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < values.rows(); ++i) out.push_back(values(i, 0).convert_to<long long>());
    return out;
  }

  /// The columns listed in classes, all rows.
  IntMatrix restrict_to(const std::vector<std::size_t>& classes) const {
    std::vector<std::size_t> rows(values.rows());
    std::iota(rows.begin(), rows.end(), 0);
    return values.select(rows, classes);
  }

  /// Tab-separated: '#'-prefixed header of class labels, one row per character.
  std::string to_tsv() const {
    std::ostringstream os;
    os << '#';
    for (const auto& c : class_labels) os << '\t' << c;
    os << '\n';
    for (std::size_t i = 0; i < values.rows(); ++i) {
      os << row_labels[i];
      for (std::size_t j = 0; j < values.cols(); ++j) os << '\t' << values(i, j);
      os << '\n';
    }
    return os.str();
  }
};

namespace detail {

inline std::vector<int> beta_numbers(const Partition& p) {
  const int len = static_cast<int>(p.length());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(p[i] + len - 1 - i);
  return beta;  // strictly decreasing
}

inline Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i)
    if (const int part = beta[i] - (len - 1 - i); part > 0) parts.push_back(part);
  return Partition(std::move(parts));
}

using MnMemo = std::map<std::pair<Partition, Partition>, long long>;

/// χ^lam at a permutation of cycle type rho (parts removed largest first).
inline long long murnaghan_nakayama(const Partition& lam, const Partition& rho, MnMemo& memo) {
  if (rho.empty()) return 1;
  const auto key = std::pair{lam, rho};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const std::vector<int> beta = beta_numbers(lam);
  const std::set<int> occupied(beta.begin(), beta.end());
  long long value = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b < k || occupied.count(b - k)) continue;
    int between = 0;
    for (int c : beta)
      if (c > b - k && c < b) ++between;
    std::vector<int> moved = beta;
    moved[i] = b - k;
    const long long sub = murnaghan_nakayama(from_beta(moved), rest, memo);
    value += (between % 2 ? -sub : sub);
  }
  memo.emplace(key, value);
  return value;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// z_rho = prod_i i^{m_i} m_i!
inline long long centralizer_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int part : rho.parts()) ++mult[part];
  long long z = 1;
  for (const auto& [part, m] : mult) {
    for (int j = 0; j < m; ++j) z *= part;
    z *= factorial(m);
  }
  return z;
}

}  // namespace detail

inline long long symmetric_character_value(const Partition& lam, const Partition& rho) {
  if (lam.size() != rho.size())
    throw DomainError("character value needs |lam| = |rho|: " + lam.to_string() + " vs " +
                      rho.to_string());
  detail::MnMemo memo;
  return detail::murnaghan_nakayama(lam, rho, memo);
}

/// Rows follow partitions_of(n); columns run the other way, so the identity
/// class (1^n) comes first.
inline CharacterTable symmetric_character_table(int n) {
  if (n < 1 || n > 12) throw DomainError("symmetric character tables need 1 <= n <= 12");
  const auto parts = partitions_of(n);
  const std::vector<Partition> classes(parts.rbegin(), parts.rend());
  CharacterTable t;
  t.values = IntMatrix(parts.size(), parts.size());
  detail::MnMemo memo;
  for (const auto& p : parts) t.row_labels.push_back(p.to_string());
  for (const auto& p : classes) {
    t.class_labels.push_back(p.to_string());
    long long order = 1;
    for (int part : p.parts()) order = std::lcm(order, static_cast<long long>(part));
    t.class_orders.push_back(order);
    t.class_sizes.push_back(detail::factorial(n) / detail::centralizer_order(p));
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      t.values(i, j) = detail::murnaghan_nakayama(parts[i], classes[j], memo);
  return t;
}

/// Classes whose element order is prime to ell.
inline std::vector<std::size_t> l_regular_classes(const CharacterTable& t, long long ell) {
  if (ell < 2) throw DomainError("ell must be at least 2");
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < t.class_orders.size(); ++c)
    if (std::gcd(t.class_orders[c], ell) == 1) out.push_back(c);
  return out;
}

namespace detail {

using Mat2 = std::array<long long, 4>;  // row-major 2x2

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline long long trace(const Mat2& a) { return a[0] + a[3]; }
inline long long det(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }

}  // namespace detail

/// W(G_2) in the root basis, alpha_1 short and alpha_2 long, acting by
/// s_i(alpha_j) = alpha_j - A_ji alpha_i with Cartan matrix [[2,-1],[-3,2]].
///
/// Classes (Carter's labels): 1, A_1 (long reflections), A~_1 (short
/// reflections), A_1+A~_1 (= -1), A_2 (order 3), G_2 (Coxeter class).
/// Characters, listed in the order of the Springer correspondence:
///   chi(1,0)   trivial
///   chi(1,3)'  -1 on long reflections, 1 on short ones
///   chi(2,2)   Sym^2 of the reflection representation minus the trivial
///   chi(2,1)   the reflection representation
///   chi(1,3)'' -1 on short reflections, 1 on long ones
///   chi(1,6)   sign
inline CharacterTable g2_character_table() {
  using detail::Mat2;
  const long long a[2][2] = {{2, -1}, {-3, 2}};
  // column j of s_i holds the coordinates of s_i(alpha_j)
  const auto reflection = [&](int i) {
    Mat2 m{1, 0, 0, 1};
    for (int j = 0; j < 2; ++j) m[i * 2 + j] -= a[j][i];
    return m;
  };
  const std::array<Mat2, 2> gens{reflection(0), reflection(1)};

  // elements with (eps_short, eps_long) carried along the generation
  struct Element {
    Mat2 m;
    int eps_short;
    int eps_long;
  };
  std::vector<Element> elements{{{1, 0, 0, 1}, 1, 1}};
  std::set<Mat2> seen{elements[0].m};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (int i = 0; i < 2; ++i) {
      Element e{detail::mul(gens[i], elements[k].m), elements[k].eps_short, elements[k].eps_long};
      (i == 0 ? e.eps_short : e.eps_long) *= -1;
      if (seen.insert(e.m).second) elements.push_back(e);
    }
  if (elements.size() != 12) throw EngineError("W(G_2) did not close up at 12 elements");

  const auto index_of = [&](const Mat2& m) {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k].m == m) return k;
    throw EngineError("element outside W(G_2)");
  };
  const auto inverse = [&](const Mat2& m) {
    const long long d = detail::det(m);
    return Mat2{m[3] * d, -m[1] * d, -m[2] * d, m[0] * d};
  };
  const auto order_of = [&](const Mat2& m) {
    Mat2 p = m;
    long long k = 1;
    while (p != Mat2{1, 0, 0, 1}) {
      p = detail::mul(p, m);
      ++k;
    }
    return k;
  };

  // conjugacy classes by closure under conjugation
  std::vector<int> class_of(12, -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < 12; ++k) {
    if (class_of[k] >= 0) continue;
    std::vector<std::size_t> cls;
    for (const auto& g : elements) {
      const std::size_t c = index_of(detail::mul(detail::mul(g.m, elements[k].m), inverse(g.m)));
      if (class_of[c] < 0) {
        class_of[c] = static_cast<int>(classes.size());
        cls.push_back(c);
      }
    }
    classes.push_back(cls);
  }
  if (classes.size() != 6) throw EngineError("W(G_2) should have 6 classes");

  // name each class by order and reflection type
  const std::size_t s_long = index_of(gens[1]);
  std::vector<std::pair<std::string, std::size_t>> named;
  for (const auto& cls : classes) {
    const Mat2& m = elements[cls.front()].m;
    const long long ord = order_of(m);
    std::string label;
    if (ord == 1)
      label = "1";
    else if (ord == 2 && detail::det(m) == -1)
      label = class_of[cls.front()] == class_of[s_long] ? "A_1" : "A~_1";
    else if (ord == 2)
      label = "A_1+A~_1";
    else if (ord == 3)
      label = "A_2";
    else
      label = "G_2";
    named.emplace_back(label, cls.front());
  }
  const std::vector<std::string> order{"1", "A_1", "A~_1", "A_1+A~_1", "A_2", "G_2"};

  CharacterTable t;
  t.row_labels = {"chi(1,0)", "chi(1,3)'", "chi(2,2)", "chi(2,1)", "chi(1,3)''", "chi(1,6)"};
  t.values = IntMatrix(6, 6);
  for (std::size_t c = 0; c < order.size(); ++c) {
    std::size_t rep = 12;
    for (const auto& [label, k] : named)
      if (label == order[c]) rep = k;
    if (rep == 12) throw EngineError("W(G_2) class " + order[c] + " not found");
    const Element& e = elements[rep];
    const long long tr = detail::trace(e.m), tr2 = detail::trace(detail::mul(e.m, e.m));
    t.class_labels.push_back(order[c]);
    t.class_orders.push_back(order_of(e.m));
    t.class_sizes.push_back(static_cast<long long>(classes[class_of[rep]].size()));
    const std::array<long long, 6> col{1,  e.eps_long,  (tr * tr + tr2) / 2 - 1,
                                       tr, e.eps_short, detail::det(e.m)};
    for (std::size_t r = 0; r < 6; ++r) t.values(r, c) = col[r];
  }
  return t;
}

}  // namespace springer
