#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "springer/errors.hpp"
#include "springer/flinalg.hpp"

namespace springer {

/// Labeled decomposition matrix: rows are ordinary irreducibles, columns are
/// modular irreducibles, entry (E, F) = [E : F].
struct DecompositionMatrix {
  std::string group;      ///< e.g. "S_4" or "G2"
  int n = 0;              ///< degree for symmetric groups, 0 otherwise
  long long ell = 0;
  std::string row_order;  ///< how rows are ordered, e.g. "reverse-lex"
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntMatrix entries;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }

  std::size_t row_index(const std::string& label) const {
    for (std::size_t i = 0; i < row_labels.size(); ++i)
      if (row_labels[i] == label) return i;
    throw DomainError("no row labeled '" + label + "'");
  }

  std::size_t col_index(const std::string& label) const {
    for (std::size_t j = 0; j < col_labels.size(); ++j)
      if (col_labels[j] == label) return j;
    throw DomainError("no column labeled '" + label + "'");
  }

  /// Labels match the shape, entries are nonnegative, no column is zero.
  void check() const {
    if (row_labels.size() != rows() || col_labels.size() != cols())
      throw DomainError("decomposition matrix labels do not match its shape");
    for (std::size_t j = 0; j < cols(); ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (entries(i, j) < 0) throw DomainError("negative decomposition number");
        nonzero = nonzero || entries(i, j) != 0;
      }
      if (!nonzero) throw DomainError("zero column " + col_labels[j]);
    }
  }

  std::vector<std::vector<long long>> rows_as_ints() const {
    std::vector<std::vector<long long>> out(rows(), std::vector<long long>(cols()));
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) out[i][j] = entries(i, j).convert_to<long long>();
    return out;
  }

  /// Tab-separated; the header line starts with '#' and lists column labels.
  std::string to_tsv() const {
    std::ostringstream os;
    os << '#';
    for (const auto& c : col_labels) os << '\t' << c;
    os << '\n';
    for (std::size_t i = 0; i < rows(); ++i) {
      os << row_labels[i];
      for (std::size_t j = 0; j < cols(); ++j) os << '\t' << entries(i, j);
      os << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["group"] = group;
    if (n > 0) j["n"] = n;
    j["ell"] = ell;
    j["row_order"] = row_order;
    j["rows"] = row_labels;
    j["cols"] = col_labels;
    j["entries"] = rows_as_ints();
    return j;
  }
};

}  // namespace springer
