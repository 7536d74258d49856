#pragma once

// Decomposition matrices of exceptional Weyl groups, read from JSON fixtures
// (one file per type and ell). Rows are listed in the order of the Springer
// correspondence; the modular image is read off the top 1 of each column.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <ostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/crc.hpp>
#include <nlohmann/json.hpp>

#include "springer/decmat.hpp"
#include "springer/errors.hpp"
#include "springer/lattices.hpp"

#ifndef SPRINGER_DEFAULT_DATA_DIR
#define SPRINGER_DEFAULT_DATA_DIR "data/exc"
#endif

namespace springer {

/// An orbit with a local system; the trivial local system is the empty string.
/// Fixture form: "G_2(a_1),21" or just "A~_1".
struct ExcPairLabel {
  std::string orbit_name;
  std::string local_system;

  static ExcPairLabel parse(const std::string& text) {
    ExcPairLabel p;
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 0) cut = i;
    }
    p.orbit_name = text.substr(0, cut);
    if (cut != std::string::npos) {
      p.local_system = text.substr(cut + 1);
      if (p.local_system.empty() || p.local_system.find_first_not_of("0123456789") != std::string::npos)
        throw DataError("bad local system in pair '" + text + "'");
    }
    if (p.orbit_name.empty()) throw DataError("empty orbit name in pair '" + text + "'");
    return p;
  }

  std::string to_string() const { return local_system.empty() ? orbit_name : orbit_name + "," + local_system; }

  /// "(G_2(a_1),21)" with a nontrivial local system, the bare orbit otherwise.
  std::string display() const {
    return local_system.empty() ? orbit_name : "(" + orbit_name + "," + local_system + ")";
  }

  friend auto operator<=>(const ExcPairLabel&, const ExcPairLabel&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ExcPairLabel& p) { return os << p.display(); }
};

struct ExcRow {
  ExcPairLabel pair;
  std::string chr;
  std::vector<long long> entries;
};

struct ExcNode {
  std::string chr;
  ExcPairLabel pair;
};

struct MatrixBlock {
  std::vector<ExcRow> rows;
  std::size_t ncols = 0;
};

/// Brauer tree of a defect-one block; a line, listed from one end.
struct TreeBlock {
  std::vector<ExcNode> chain;
};

struct DefectZeroBlock {
  std::vector<ExcNode> items;
};

using ExcBlock = std::variant<MatrixBlock, TreeBlock, DefectZeroBlock>;

struct ExcTable {
  CartanType group_type;
  long long ell = 0;
  bool complete = false;
  std::vector<ExcBlock> blocks;
};

namespace detail {

/// d from "chi(d,b)", primes allowed.
inline long long character_degree(const std::string& chr) {
  static const std::regex re(R"(chi\((\d+),(\d+)\)'*)");
  std::smatch m;
  if (!std::regex_match(chr, m, re)) throw DataError("bad character label '" + chr + "'");
  return std::stoll(m[1].str());
}

inline long long exceptional_weyl_order(const CartanType& t) {
  const std::string s = t.to_string();
  if (s == "G_2") return 12;
  if (s == "F_4") return 1152;
  if (s == "E_6") return 51840;
  if (s == "E_7") return 2903040;
  if (s == "E_8") return 696729600;
  throw DomainError(s + " is not an exceptional type");
}

inline std::size_t exceptional_character_count(const CartanType& t) {
  const std::string s = t.to_string();
  if (s == "G_2") return 6;
  if (s == "F_4") return 25;
  if (s == "E_6") return 25;
  if (s == "E_7") return 60;
  if (s == "E_8") return 112;
  throw DomainError(s + " is not an exceptional type");
}

inline int valuation(long long x, long long ell) {
  int v = 0;
  while (x != 0 && x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

inline std::string fixture_stem(const CartanType& t, long long ell) {
  return std::string(1, t.letter) + std::to_string(t.rank) + "_l" + std::to_string(ell);
}

}  // namespace detail

/// A block as a matrix: a tree with k+1 nodes gives 1 at (i,i-1) and (i,i),
/// a defect-zero block the identity.
inline MatrixBlock expand(const ExcBlock& block) {
  return std::visit(
      [](const auto& b) -> MatrixBlock {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, MatrixBlock>) {
          return b;
        } else {
          MatrixBlock m;
          const bool tree = std::is_same_v<B, TreeBlock>;
          const auto& nodes = [&]() -> const std::vector<ExcNode>& {
            if constexpr (std::is_same_v<B, TreeBlock>)
              return b.chain;
            else
              return b.items;
          }();
          m.ncols = tree ? (nodes.empty() ? 0 : nodes.size() - 1) : nodes.size();
          for (std::size_t i = 0; i < nodes.size(); ++i) {
            ExcRow row{nodes[i].pair, nodes[i].chr, std::vector<long long>(m.ncols, 0)};
            if (!tree) {
              row.entries[i] = 1;
            } else {
              if (i < m.ncols) row.entries[i] = 1;
              if (i > 0) row.entries[i - 1] = 1;
            }
            m.rows.push_back(std::move(row));
          }
          return m;
        }
      },
      block);
}

inline std::string default_data_dir() {
  if (const char* env = std::getenv("SPRINGER_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return SPRINGER_DEFAULT_DATA_DIR;
}

inline std::filesystem::path fixture_path(const CartanType& t, long long ell, const std::string& data_dir) {
  return std::filesystem::path(data_dir) / (detail::fixture_stem(t, ell) + ".json");
}

inline std::uint32_t crc32_of_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

namespace detail {

inline ExcNode parse_node(const nlohmann::json& j) {
  ExcNode n{j.at("char").get<std::string>(), ExcPairLabel::parse(j.at("pair").get<std::string>())};
  character_degree(n.chr);
  return n;
}

}  // namespace detail

/// Parses a fixture document. Row widths, entry signs and labels are checked here.
inline ExcTable parse_table(const nlohmann::json& doc) {
  ExcTable t;
  try {
    t.group_type = CartanType::parse(doc.at("type").get<std::string>());
    detail::exceptional_weyl_order(t.group_type);
    t.ell = doc.at("ell").get<long long>();
    t.complete = doc.at("complete").get<bool>();
    for (const auto& b : doc.at("blocks")) {
      const std::string kind = b.at("kind").get<std::string>();
      if (kind == "matrix") {
        MatrixBlock m;
        for (const auto& r : b.at("rows")) {
          ExcRow row{ExcPairLabel::parse(r.at("pair").get<std::string>()), r.at("char").get<std::string>(),
                     r.at("entries").get<std::vector<long long>>()};
          detail::character_degree(row.chr);
          if (m.rows.empty()) m.ncols = row.entries.size();
          if (row.entries.size() != m.ncols) throw DataError("ragged matrix block at " + row.chr);
          for (long long e : row.entries)
            if (e < 0) throw DataError("negative entry in row " + row.chr);
          m.rows.push_back(std::move(row));
        }
        if (m.rows.empty() || m.ncols == 0) throw DataError("empty matrix block");
        t.blocks.emplace_back(std::move(m));
      } else if (kind == "tree") {
        TreeBlock tb;
        for (const auto& n : b.at("chain")) tb.chain.push_back(detail::parse_node(n));
        t.blocks.emplace_back(std::move(tb));
      } else if (kind == "defect0") {
        DefectZeroBlock d;
        for (const auto& n : b.at("items")) d.items.push_back(detail::parse_node(n));
        t.blocks.emplace_back(std::move(d));
      } else {
        throw DataError("unknown block kind '" + kind + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed fixture: ") + e.what());
  } catch (const DomainError& e) {
    throw DataError(std::string("malformed fixture: ") + e.what());
  }
  return t;
}

inline ExcTable load_table(const CartanType& t, long long ell, const std::string& data_dir = default_data_dir()) {
  detail::exceptional_weyl_order(t);
  require_field_prime(ell);
  const auto path = fixture_path(t, ell, data_dir);
  std::ifstream in(path);
  if (!in) throw DataError("no fixture for " + t.to_string() + " at ell = " + std::to_string(ell) + " (" +
                           path.string() + ")");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  ExcTable table = parse_table(doc);
  if (!(table.group_type == t) || table.ell != ell)
    throw DataError(path.string() + " holds " + table.group_type.to_string() + " at ell = " +
                    std::to_string(table.ell));
  return table;
}

/// Leading row of each column of a block; nullopt for a zero column.
inline std::vector<std::optional<std::size_t>> leading_rows(const MatrixBlock& m) {
  std::vector<std::optional<std::size_t>> out(m.ncols);
  for (std::size_t j = 0; j < m.ncols; ++j)
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      if (j < m.rows[i].entries.size() && m.rows[i].entries[j] != 0) {
        out[j] = i;
        break;
      }
  return out;
}

/// The pair at the top of each column, block by block.
inline std::vector<ExcPairLabel> extract_modular_image(const ExcTable& t) {
  std::vector<ExcPairLabel> image;
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    const MatrixBlock m = expand(t.blocks[b]);
    const auto lead = leading_rows(m);
    for (std::size_t j = 0; j < m.ncols; ++j) {
      if (!lead[j]) throw DataError("block " + std::to_string(b) + " has a zero column");
      const ExcRow& row = m.rows[*lead[j]];
      if (row.entries[j] != 1)
        throw DataError("top entry of column " + std::to_string(j) + " in block " + std::to_string(b) +
                        " is " + std::to_string(row.entries[j]) + " at " + row.chr);
      image.push_back(row.pair);
    }
  }
  return image;
}

/// Pairs listed in the table but not in the image, in listed order.
inline std::vector<ExcPairLabel> missing_pairs(const ExcTable& t) {
  const auto image = extract_modular_image(t);
  const std::set<ExcPairLabel> hit(image.begin(), image.end());
  std::vector<ExcPairLabel> out;
  for (const auto& block : t.blocks)
    for (const auto& row : expand(block).rows)
      if (!hit.count(row.pair)) out.push_back(row.pair);
  return out;
}

/// Block-diagonal assembly; rows keep the listed order, columns are named by
/// the pair at their top 1.
inline DecompositionMatrix assemble(const ExcTable& t) {
  if (!t.complete)
    throw DomainError(t.group_type.to_string() + " at ell = " + std::to_string(t.ell) +
                      " is tabulated only partially");
  std::vector<MatrixBlock> parts;
  std::size_t nrows = 0, ncols = 0;
  for (const auto& b : t.blocks) {
    parts.push_back(expand(b));
    nrows += parts.back().rows.size();
    ncols += parts.back().ncols;
  }
  DecompositionMatrix d;
  d.group = t.group_type.to_string();
  d.ell = t.ell;
  d.row_order = "springer";
  d.entries = IntMatrix(nrows, ncols);
  for (const auto& p : extract_modular_image(t)) d.col_labels.push_back(p.to_string());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& m : parts) {
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      d.row_labels.push_back(m.rows[i].chr);
      for (std::size_t j = 0; j < m.ncols; ++j) d.entries(r0 + i, c0 + j) = m.rows[i].entries[j];
    }
    r0 += m.rows.size();
    c0 += m.ncols;
  }
  return d;
}

/// d^W_{E,F} with E given by its row pair and F by the pair at its top 1;
/// 0 when the two lie in different blocks. Works on partial tables.
inline long long decomposition_number(const ExcTable& t, const ExcPairLabel& row_pair,
                                      const ExcPairLabel& column_pair) {
  bool row_seen = false, col_seen = false;
  for (const auto& block : t.blocks) {
    const MatrixBlock m = expand(block);
    const auto lead = leading_rows(m);
    std::optional<std::size_t> r, c;
    for (std::size_t i = 0; i < m.rows.size(); ++i)
      if (m.rows[i].pair == row_pair) r = i;
    for (std::size_t j = 0; j < m.ncols; ++j)
      if (lead[j] && m.rows[*lead[j]].pair == column_pair) c = j;
    row_seen = row_seen || r.has_value();
    col_seen = col_seen || c.has_value();
    if (r && c) return m.rows[*r].entries[*c];
  }
  if (!row_seen) throw DomainError("no row with pair " + row_pair.display());
  if (!col_seen) throw DomainError(column_pair.display() + " is not in the modular image");
  return 0;
}

struct StructureViolation {
  enum class Check { leading_entry, leading_order, tree_shape, defect_one, consistency } check;
  std::size_t block;
  std::string message;
};

inline std::string check_name(StructureViolation::Check c) {
  switch (c) {
    case StructureViolation::Check::leading_entry: return "leading-entry";
    case StructureViolation::Check::leading_order: return "leading-order";
    case StructureViolation::Check::tree_shape: return "tree-shape";
    case StructureViolation::Check::defect_one: return "defect-one";
    case StructureViolation::Check::consistency: return "consistency";
  }
  return "?";
}

struct StructureReport {
  std::vector<StructureViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(StructureViolation::Check c) const {
    std::size_t k = 0;
    for (const auto& v : violations) k += v.check == c;
    return k;
  }
};

inline StructureReport verify_structure(const ExcTable& t) {
  using Check = StructureViolation::Check;
  StructureReport report;
  const auto fail = [&](Check c, std::size_t b, std::string msg) { report.violations.push_back({c, b, std::move(msg)}); };

  std::set<ExcPairLabel> image;
  std::set<std::string> chars;
  std::size_t nrows = 0, ncols = 0;
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    if (const auto* tree = std::get_if<TreeBlock>(&t.blocks[b]); tree && tree->chain.size() < 2)
      fail(Check::tree_shape, b, "a Brauer tree needs at least two nodes");
    const MatrixBlock m = expand(t.blocks[b]);
    nrows += m.rows.size();
    ncols += m.ncols;
    for (const auto& row : m.rows) {
      if (!chars.insert(row.chr).second) fail(Check::consistency, b, row.chr + " listed twice");
      if (row.entries.size() != m.ncols) {
        fail(Check::consistency, b, "row " + row.chr + " has " + std::to_string(row.entries.size()) +
                                        " entries, expected " + std::to_string(m.ncols));
        continue;
      }
      bool nonzero = false;
      for (long long e : row.entries) {
        if (e < 0) fail(Check::consistency, b, "negative entry in row " + row.chr);
        nonzero = nonzero || e != 0;
      }
      if (!nonzero && m.ncols > 0) fail(Check::consistency, b, "row " + row.chr + " is zero");
    }
    const auto lead = leading_rows(m);
    std::optional<std::size_t> previous;
    for (std::size_t j = 0; j < m.ncols; ++j) {
      if (!lead[j]) {
        fail(Check::leading_entry, b, "column " + std::to_string(j) + " is zero");
        continue;
      }
      const ExcRow& top = m.rows[*lead[j]];
      if (top.entries[j] != 1)
        fail(Check::leading_entry, b,
             "column " + std::to_string(j) + " starts with " + std::to_string(top.entries[j]) + " at " + top.chr);
      else
        image.insert(top.pair);
      if (previous && *lead[j] <= *previous)
        fail(Check::leading_order, b, "column " + std::to_string(j) + " starts at " + top.chr + ", not below column " +
                                          std::to_string(j - 1));
      previous = lead[j];
    }
  }

  // each defect-one block leaves exactly one of its pairs out of the image
  if (t.complete) {
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
      const auto* tree = std::get_if<TreeBlock>(&t.blocks[b]);
      if (tree == nullptr) continue;
      std::size_t out = 0;
      for (const auto& node : tree->chain) out += !image.count(node.pair);
      if (out != 1)
        fail(Check::defect_one, b, "block leaves " + std::to_string(out) + " pairs out of the image, expected 1");
    }
    const std::size_t expected = detail::exceptional_character_count(t.group_type);
    if (nrows != expected)
      fail(Check::consistency, t.blocks.size(),
           std::to_string(nrows) + " characters listed, W has " + std::to_string(expected));
  }
  if (image.size() != ncols && report.count(Check::leading_entry) == 0)
    fail(Check::consistency, t.blocks.size(),
         std::to_string(image.size()) + " distinct image pairs for " + std::to_string(ncols) + " columns");
  return report;
}

/// Degree bookkeeping, independent of verify_structure: the Brauer character
/// degrees solved from the top rows must be positive and fit every row; a
/// defect-zero character carries the full ell-part of |W|, a tree character
/// one factor ell less.
inline std::vector<std::string> verify_degrees(const ExcTable& t) {
  std::vector<std::string> out;
  const long long order = detail::exceptional_weyl_order(t.group_type);
  const int full = detail::valuation(order, t.ell);
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    const std::string where = "block " + std::to_string(b) + ": ";
    const MatrixBlock m = expand(t.blocks[b]);
    const auto lead = leading_rows(m);
    std::vector<long long> phi(m.ncols, 0);
    // solve column by column in the order of the top rows
    std::vector<std::size_t> cols(m.ncols);
    std::iota(cols.begin(), cols.end(), 0);
    bool solvable = std::all_of(lead.begin(), lead.end(), [](const auto& l) { return l.has_value(); });
    if (solvable) std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return *lead[a] < *lead[b]; });
    for (std::size_t idx = 0; idx < cols.size() && solvable; ++idx) {
      const std::size_t j = cols[idx];
      const ExcRow& row = m.rows[*lead[j]];
      long long rest = detail::character_degree(row.chr);
      for (std::size_t k = 0; k < idx; ++k) rest -= row.entries[cols[k]] * phi[cols[k]];
      if (rest % row.entries[j] != 0) {
        out.push_back(where + "degree of column " + std::to_string(j) + " is not integral");
        solvable = false;
        break;
      }
      phi[j] = rest / row.entries[j];
      if (phi[j] <= 0) out.push_back(where + "column " + std::to_string(j) + " has degree " + std::to_string(phi[j]));
    }
    if (solvable)
      for (const auto& row : m.rows) {
        long long sum = 0;
        for (std::size_t k = 0; k < m.ncols && k < row.entries.size(); ++k) sum += row.entries[k] * phi[k];
        if (sum != detail::character_degree(row.chr))
          out.push_back(where + row.chr + " decomposes to degree " + std::to_string(sum));
      }
    int expected = -1;
    if (std::holds_alternative<DefectZeroBlock>(t.blocks[b])) expected = full;
    if (std::holds_alternative<TreeBlock>(t.blocks[b])) expected = full - 1;
    if (expected >= 0)
      for (const auto& row : m.rows)
        if (detail::valuation(detail::character_degree(row.chr), t.ell) != expected)
          out.push_back(where + row.chr + " has the wrong " + std::to_string(t.ell) + "-part for its defect");
  }
  return out;
}

/// Every character should carry the same pair in every table of one type.
inline std::vector<std::string> label_conflicts(const std::vector<ExcTable>& tables) {
  std::map<std::pair<std::string, std::string>, ExcPairLabel> seen;  // (type, char) -> pair
  std::vector<std::string> out;
  for (const auto& t : tables)
    for (const auto& block : t.blocks)
      for (const auto& row : expand(block).rows) {
        const auto key = std::pair{t.group_type.to_string(), row.chr};
        const auto [it, fresh] = seen.emplace(key, row.pair);
        if (!fresh && !(it->second == row.pair))
          out.push_back(key.first + " " + row.chr + ": " + it->second.display() + " vs " + row.pair.display() +
                        " at ell = " + std::to_string(t.ell));
      }
  return out;
}

inline nlohmann::ordered_json structure_report_json(const ExcTable& t, const StructureReport& r,
                                                    const std::vector<std::string>& degree_problems) {
  nlohmann::ordered_json j;
  j["type"] = t.group_type.to_string();
  j["ell"] = t.ell;
  j["complete"] = t.complete;
  j["blocks"] = t.blocks.size();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"check", check_name(v.check)}, {"block", v.block}, {"message", v.message}});
  j["degree_problems"] = degree_problems;
  return j;
}

/// "0, A~_1": image pairs in column order.
inline std::string format_pairs(const std::vector<ExcPairLabel>& pairs) {
  std::string s;
  for (std::size_t i = 0; i < pairs.size(); ++i) s += (i ? ", " : "") + pairs[i].display();
  return s;
}

}  // namespace springer
