#pragma once

// Basic sets from restricted characters, and checks on a claimed
// unitriangular shape of a decomposition matrix.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "springer/decmat.hpp"
#include "springer/errors.hpp"
#include "springer/flinalg.hpp"

namespace springer {

struct BasicSetResult {
  std::vector<std::size_t> selected_rows;
  std::vector<std::size_t> witness_ranks;  ///< rank of rows 0..i, one entry per row
};

/// Scans rows top to bottom and keeps each row that is not in the rational
/// span of the rows above it. The caller orders rows compatibly with the
/// Springer order.
inline BasicSetResult springer_basic_set(const IntMatrix& restricted) {
  BasicSetResult result;
  // echelon rows kept so far, each with its pivot column
  std::vector<std::vector<Integer>> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < restricted.rows(); ++i) {
    std::vector<Integer> row(restricted.cols());
    for (std::size_t j = 0; j < restricted.cols(); ++j) row[j] = restricted(i, j);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::size_t c = pivots[k];
      if (row[c] == 0) continue;
      const Integer a = basis[k][c], b = row[c];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = a * row[j] - b * basis[k][j];
      detail::remove_content(row);
    }
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot < row.size()) {
      // clear the new pivot column from the earlier rows
      for (auto& other : basis) {
        if (other[pivot] == 0) continue;
        const Integer a = row[pivot], b = other[pivot];
        for (std::size_t j = 0; j < row.size(); ++j) other[j] = a * other[j] - b * row[j];
        detail::remove_content(other);
      }
      basis.push_back(std::move(row));
      pivots.push_back(pivot);
      result.selected_rows.push_back(i);
    }
    result.witness_ranks.push_back(basis.size());
  }
  return result;
}

/// leq(a, b) for row indices a, b: "a <= b" in the chosen partial order.
using RowOrder = std::function<bool(std::size_t, std::size_t)>;

struct UnitriangularViolation {
  enum class Kind { diagonal, order } kind;
  std::size_t row;
  std::size_t col;
  Integer value;

  std::string describe(const DecompositionMatrix& d) const {
    std::string s = kind == Kind::diagonal ? "diagonal entry " : "entry above the order ";
    s += "d[" + d.row_labels[row] + ", " + d.col_labels[col] + "] = " + value.str();
    return s;
  }
};

struct UnitriangularReport {
  std::vector<UnitriangularViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// beta[F] is the row attached to column F. Checks d[beta(F), F] = 1 and that
/// d[E, F] != 0 implies E <= beta(F).
inline UnitriangularReport verify_unitriangular(const DecompositionMatrix& d,
                                                const std::vector<std::size_t>& beta,
                                                const RowOrder& leq) {
  if (beta.size() != d.cols()) throw DomainError("beta must name one row per column");
  std::set<std::size_t> seen;
  for (std::size_t r : beta) {
    if (r >= d.rows()) throw DomainError("beta points past the last row");
    if (!seen.insert(r).second) throw DomainError("beta is not injective");
  }
  UnitriangularReport report;
  for (std::size_t f = 0; f < d.cols(); ++f) {
    if (d.entries(beta[f], f) != 1)
      report.violations.push_back({UnitriangularViolation::Kind::diagonal, beta[f], f, d.entries(beta[f], f)});
    for (std::size_t e = 0; e < d.rows(); ++e)
      if (d.entries(e, f) != 0 && e != beta[f] && !leq(e, beta[f]))
        report.violations.push_back({UnitriangularViolation::Kind::order, e, f, d.entries(e, f)});
  }
  return report;
}

/// Row order given by position: a <= b iff a comes no later than b.
inline bool listed_order(std::size_t a, std::size_t b) { return a <= b; }

/// beta sending each column to the row with the same label.
inline std::vector<std::size_t> beta_by_label(const DecompositionMatrix& d) {
  std::vector<std::size_t> beta;
  for (const auto& label : d.col_labels) beta.push_back(d.row_index(label));
  return beta;
}

/// [K P_F : E] = d_{E,F}: the transpose, rows F and columns E.
inline DecompositionMatrix e_matrix(const DecompositionMatrix& d) {
  DecompositionMatrix e = d;
  std::swap(e.row_labels, e.col_labels);
  e.entries = d.entries.transpose();
  return e;
}

/// C = D^T D.
inline IntMatrix cartan_matrix(const DecompositionMatrix& d) {
  return d.entries.transpose() * d.entries;
}

inline nlohmann::ordered_json basic_set_report(const std::vector<std::string>& row_labels,
                                               const BasicSetResult& result,
                                               const std::vector<std::string>& violations = {}) {
  nlohmann::ordered_json j;
  j["selected"] = nlohmann::ordered_json::array();
  for (std::size_t i : result.selected_rows) j["selected"].push_back(row_labels.at(i));
  j["ranks"] = result.witness_ranks;
  j["violations"] = violations;
  return j;
}

}  // namespace springer
