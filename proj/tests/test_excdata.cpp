#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "springer/basicset.hpp"
#include "springer/excdata.hpp"
#include "springer/lattices.hpp"
#include "springer/weylchar.hpp"

using springer::CartanType;
using springer::ExcPairLabel;
using springer::ExcTable;
using Check = springer::StructureViolation::Check;

namespace {

struct Shipped {
  const char* type;
  long long ell;
  std::uint32_t crc;
};

// CRC-32 of the fixture files as transcribed
const Shipped kShipped[] = {
    {"G2", 2, 0xe8192409}, {"G2", 3, 0x0e7d49d5}, {"F4", 2, 0x6d70ea00}, {"F4", 3, 0xd4cc1ea7},
    {"E6", 2, 0x342068f8}, {"E6", 3, 0x82a4e0da}, {"E6", 5, 0xa751cde8}, {"E7", 5, 0x56ca7d1e},
    {"E7", 7, 0x1a4d1fad}, {"E8", 5, 0x7bd8b0f7}, {"E8", 7, 0xd54a19ee},
};

ExcTable load(const char* type, long long ell) { return springer::load_table(CartanType::parse(type), ell); }

// Reads a list written the way the tables write pairs, e.g.
// "0, A_1, (\tilde A_1, 2), A_1 + \tilde A_1".
std::vector<ExcPairLabel> from_tex(const std::string& tex) {
  std::vector<std::string> items(1);
  int depth = 0;
  for (char c : tex) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      items.emplace_back();
    else
      items.back().push_back(c);
  }
  std::vector<ExcPairLabel> out;
  for (std::string s : items) {
    for (std::size_t at; (at = s.find("\\tilde ")) != std::string::npos;) s.replace(at, 7, "~");
    std::string compact;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == ' ') continue;
      if (s[i] == '~' && i + 1 < s.size()) {  // "~A" -> "A~"
        compact.push_back(s[++i]);
        compact.push_back('~');
        continue;
      }
      compact.push_back(s[i]);
    }
    if (compact.front() == '(' && compact.back() == ')') compact = compact.substr(1, compact.size() - 2);
    out.push_back(ExcPairLabel::parse(compact));
  }
  return out;
}

std::set<ExcPairLabel> as_set(const std::vector<ExcPairLabel>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ExcData, ChecksumsMatchTranscription) {
  for (const auto& s : kShipped) {
    const auto path = springer::fixture_path(CartanType::parse(s.type), s.ell, springer::default_data_dir());
    EXPECT_EQ(springer::crc32_of_file(path), s.crc) << path;
  }
}

TEST(ExcData, PairLabels) {
  const auto p = ExcPairLabel::parse("G_2(a_1),21");
  EXPECT_EQ(p.orbit_name, "G_2(a_1)");
  EXPECT_EQ(p.local_system, "21");
  EXPECT_EQ(p.display(), "(G_2(a_1),21)");
  EXPECT_EQ(ExcPairLabel::parse("A~_1").display(), "A~_1");
  EXPECT_THROW(ExcPairLabel::parse(",2"), springer::DataError);
  EXPECT_THROW(ExcPairLabel::parse("A_1,x"), springer::DataError);
  EXPECT_EQ(from_tex("0, A_1, (\\tilde A_1, 2), A_1 + \\tilde A_1"),
            (std::vector<ExcPairLabel>{{"0", ""}, {"A_1", ""}, {"A~_1", "2"}, {"A_1+A~_1", ""}}));
}

TEST(ExcData, LoadExamples) {
  const auto g2 = load("G2", 2);
  ASSERT_EQ(g2.blocks.size(), 2u);
  const auto& m = std::get<springer::MatrixBlock>(g2.blocks[0]);
  EXPECT_EQ(m.rows.size(), 4u);
  EXPECT_EQ(m.ncols, 1u);
  EXPECT_EQ(std::get<springer::TreeBlock>(g2.blocks[1]).chain.size(), 2u);

  const auto g3 = load("G2", 3);
  ASSERT_EQ(g3.blocks.size(), 2u);
  for (const auto& b : g3.blocks) EXPECT_EQ(std::get<springer::TreeBlock>(b).chain.size(), 3u);

  const auto e6 = load("E6", 5);
  ASSERT_EQ(e6.blocks.size(), 3u);
  EXPECT_EQ(std::get<springer::TreeBlock>(e6.blocks[0]).chain.size(), 5u);
  EXPECT_EQ(std::get<springer::TreeBlock>(e6.blocks[1]).chain.size(), 5u);
  EXPECT_EQ(std::get<springer::DefectZeroBlock>(e6.blocks[2]).items.size(), 15u);

  const auto e7 = load("E7", 5);
  int trees = 0;
  for (const auto& b : e7.blocks)
    if (const auto* t = std::get_if<springer::TreeBlock>(&b)) {
      ++trees;
      EXPECT_EQ(t->chain.size(), 5u);
      EXPECT_EQ(springer::expand(b).ncols, 4u);
    }
  EXPECT_EQ(trees, 6);
}

TEST(ExcData, LoadErrors) {
  EXPECT_THROW(load("E7", 2), springer::DataError);  // optional fixture, not shipped
  EXPECT_THROW(load("B3", 2), springer::DomainError);
  EXPECT_THROW(load("G2", 4), springer::DomainError);
  EXPECT_THROW(springer::load_table(CartanType::parse("G2"), 2, "/nonexistent"), springer::DataError);

  const auto dir = std::filesystem::temp_directory_path() / "springer_excdata_test";
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& text) {
    std::ofstream(dir / "G2_l2.json") << text;
    return springer::load_table(CartanType::parse("G2"), 2, dir.string());
  };
  EXPECT_THROW(write("{not json"), springer::DataError);
  EXPECT_THROW(write(R"js({"type":"G2","ell":2,"complete":true,"blocks":[{"kind":"cube"}]})js"), springer::DataError);
  EXPECT_THROW(write(R"js({"type":"G2","ell":3,"complete":true,"blocks":[]})js"), springer::DataError);
  EXPECT_THROW(write(R"js({"type":"G2","ell":2,"complete":true,"blocks":[{"kind":"matrix","rows":[)js"
                     R"js({"pair":"0","char":"chi(1,0)","entries":[1]},{"pair":"A_1","char":"chi(1,3)'","entries":[1,0]}]}]})js"),
               springer::DataError);
  EXPECT_THROW(write(R"js({"type":"G2","ell":2,"complete":true,"blocks":[{"kind":"defect0","items":[)js"
                     R"js({"pair":"0","char":"psi(1,0)"}]}]})js"),
               springer::DataError);
  EXPECT_NO_THROW(write(R"js({"type":"G2","ell":2,"complete":false,"blocks":[]})js"));

  // the environment variable redirects the default directory
  ::setenv("SPRINGER_DATA_DIR", dir.string().c_str(), 1);
  EXPECT_EQ(springer::default_data_dir(), dir.string());
  EXPECT_FALSE(springer::load_table(CartanType::parse("G2"), 2).complete);
  ::unsetenv("SPRINGER_DATA_DIR");
  EXPECT_TRUE(load("G2", 2).complete);
  std::filesystem::remove_all(dir);
}

TEST(ExcData, ExpandTreeAndDefectZero) {
  springer::TreeBlock t{{{"chi(1,0)", {"0", ""}}, {"chi(2,1)", {"A_1", ""}}, {"chi(1,6)", {"G_2", ""}}}};
  const auto m = springer::expand(t);
  ASSERT_EQ(m.ncols, 2u);
  EXPECT_EQ(m.rows[0].entries, (std::vector<long long>{1, 0}));
  EXPECT_EQ(m.rows[1].entries, (std::vector<long long>{1, 1}));
  EXPECT_EQ(m.rows[2].entries, (std::vector<long long>{0, 1}));
  springer::DefectZeroBlock d{{{"chi(9,2)", {"A_1", ""}}, {"chi(9,6)'", {"B_2", "2"}}}};
  const auto id = springer::expand(d);
  EXPECT_EQ(id.rows[0].entries, (std::vector<long long>{1, 0}));
  EXPECT_EQ(id.rows[1].entries, (std::vector<long long>{0, 1}));
}

TEST(ExcData, Assemble) {
  const auto g2 = springer::assemble(load("G2", 2));
  EXPECT_EQ(g2.rows(), 6u);
  EXPECT_EQ(g2.cols(), 2u);  // two 2-regular classes
  EXPECT_EQ(g2.rows_as_ints(), (std::vector<std::vector<long long>>{
                                   {1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  EXPECT_NO_THROW(g2.check());
  const auto g3 = springer::assemble(load("G2", 3));
  EXPECT_EQ(g3.rows(), 6u);
  EXPECT_EQ(g3.cols(), 4u);
  const auto f4 = springer::assemble(load("F4", 3));
  EXPECT_EQ(f4.rows(), 25u);
  EXPECT_EQ(f4.cols(), 14u);
  EXPECT_THROW(springer::assemble(load("E8", 5)), springer::DomainError);
  for (const auto& s : kShipped) {
    const auto t = load(s.type, s.ell);
    if (!t.complete) continue;
    const auto d = springer::assemble(t);
    EXPECT_EQ(d.rows(), springer::detail::exceptional_character_count(t.group_type));
    EXPECT_EQ(d.cols(), springer::extract_modular_image(t).size());
    EXPECT_NO_THROW(d.check());
  }
}

TEST(ExcData, CompletenessFlags) {
  for (const auto& s : kShipped) {
    const auto t = load(s.type, s.ell);
    std::size_t rows = 0;
    for (const auto& b : t.blocks) rows += springer::expand(b).rows.size();
    EXPECT_EQ(t.complete, rows == springer::detail::exceptional_character_count(t.group_type)) << s.type << s.ell;
  }
  EXPECT_FALSE(load("E8", 5).complete);
  EXPECT_TRUE(load("E8", 7).complete);
}

TEST(ExcData, AllShippedFixturesVerify) {
  std::vector<ExcTable> all;
  for (const auto& s : kShipped) {
    const auto t = load(s.type, s.ell);
    const auto report = springer::verify_structure(t);
    for (const auto& v : report.violations) ADD_FAILURE() << s.type << " " << s.ell << ": " << v.message;
    EXPECT_EQ(springer::verify_degrees(t), std::vector<std::string>{}) << s.type << " " << s.ell;
    all.push_back(t);
  }
  EXPECT_EQ(springer::label_conflicts(all), std::vector<std::string>{});
}

TEST(ExcData, ImagesAsStated) {
  EXPECT_EQ(springer::extract_modular_image(load("G2", 2)), from_tex("0, \\tilde A_1"));
  EXPECT_EQ(springer::extract_modular_image(load("G2", 3)), from_tex("0, \\tilde A_1, A_1, (G_2(a_1), 3)"));
  EXPECT_EQ(springer::extract_modular_image(load("F4", 2)), from_tex("0, A_1, (\\tilde A_1, 2), A_1 + \\tilde A_1"));
  EXPECT_EQ(springer::format_pairs(springer::extract_modular_image(load("G2", 2))), "0, A~_1");
}

TEST(ExcData, MissingPairs) {
  EXPECT_EQ(as_set(springer::missing_pairs(load("E7", 5))),
            as_set(from_tex("E_7, E_7(a_1), E_7(a_2), (E_7(a_3),11), (E_7(a_3),2), E_6")));
  EXPECT_EQ(as_set(springer::missing_pairs(load("E7", 7))), as_set(from_tex("E_7, (E_7(a_4),11)")));
  EXPECT_EQ(as_set(springer::missing_pairs(load("G2", 3))), as_set(from_tex("G_2, (G_2(a_1),21)")));

  // at ell = 7 the last listed pair of E_8 lies outside the tables
  const auto e8 = load("E8", 7);
  const auto stated = from_tex("E_8, E_8(a_1), (E_8(b_4),11), D_7, (E_8(a_7), 11111)");
  const auto missing = as_set(springer::missing_pairs(e8));
  EXPECT_EQ(missing, as_set({stated.begin(), stated.end() - 1}));
  for (const auto& b : e8.blocks)
    for (const auto& r : springer::expand(b).rows) EXPECT_NE(r.pair, stated.back());

  // the missing pair of each tree is its last node
  for (const auto& s : kShipped) {
    const auto t = load(s.type, s.ell);
    const auto miss = as_set(springer::missing_pairs(t));
    for (const auto& b : t.blocks)
      if (const auto* tree = std::get_if<springer::TreeBlock>(&b)) {
        EXPECT_TRUE(miss.count(tree->chain.back().pair));
      }
  }
}

TEST(ExcData, DecompositionNumberLookup) {
  const auto t = load("F4", 3);
  EXPECT_EQ(springer::decomposition_number(t, {"0", ""}, {"0", ""}), 1);
  EXPECT_EQ(springer::decomposition_number(t, {"B_2", "2"}, {"0", ""}), 0);  // different blocks
  EXPECT_THROW(springer::decomposition_number(t, {"nowhere", ""}, {"0", ""}), springer::DomainError);
  EXPECT_THROW(springer::decomposition_number(t, {"0", ""}, {"F_4", ""}), springer::DomainError);
}

namespace {

springer::MatrixBlock& matrix_block(ExcTable& t, std::size_t b) { return std::get<springer::MatrixBlock>(t.blocks[b]); }

std::set<Check> failed_checks(const ExcTable& t) {
  std::set<Check> out;
  for (const auto& v : springer::verify_structure(t).violations) out.insert(v.check);
  return out;
}

}  // namespace

TEST(ExcDataFaults, LeadingEntryNotOne) {
  auto t = load("F4", 2);
  auto& m = matrix_block(t, 0);
  ASSERT_EQ(m.rows[1].entries[1], 1);  // top of column 1
  m.rows[1].entries[1] = 2;
  EXPECT_EQ(failed_checks(t), std::set<Check>{Check::leading_entry});
  EXPECT_THROW(springer::extract_modular_image(t), springer::DataError);
  EXPECT_FALSE(springer::verify_degrees(t).empty());
}

TEST(ExcDataFaults, ColumnsOutOfOrder) {
  auto t = load("E6", 2);
  auto& m = matrix_block(t, 0);
  for (auto& r : m.rows) std::swap(r.entries[1], r.entries[2]);
  EXPECT_EQ(failed_checks(t), std::set<Check>{Check::leading_order});
  // still consistent degrees: only the order is wrong
  EXPECT_EQ(springer::verify_degrees(t), std::vector<std::string>{});
}

TEST(ExcDataFaults, TreeTooShort) {
  auto t = load("E7", 7);
  auto& tree = std::get<springer::TreeBlock>(t.blocks[0]);
  t.blocks.push_back(springer::TreeBlock{{tree.chain.back()}});
  tree.chain.pop_back();
  t.complete = false;  // the defect-one count only applies to full tables
  EXPECT_EQ(failed_checks(t), std::set<Check>{Check::tree_shape});
}

TEST(ExcDataFaults, DefectOneBlockOmitsNothing) {
  auto t = load("G2", 2);
  auto& tree = std::get<springer::TreeBlock>(t.blocks[1]);
  tree.chain.back().pair = {"0", ""};  // now every pair of the tree is in the image
  EXPECT_EQ(failed_checks(t), std::set<Check>{Check::defect_one});
}

TEST(ExcDataFaults, Consistency) {
  auto t = load("F4", 3);
  std::get<springer::DefectZeroBlock>(t.blocks[3]).items.pop_back();
  EXPECT_EQ(failed_checks(t), std::set<Check>{Check::consistency});

  auto u = load("G2", 2);
  matrix_block(u, 0).rows[2].entries = {0};
  EXPECT_EQ(failed_checks(u), std::set<Check>{Check::consistency});

  auto w = load("G2", 3);
  std::get<springer::TreeBlock>(w.blocks[1]).chain[0].chr = "chi(1,0)";
  EXPECT_EQ(failed_checks(w), std::set<Check>{Check::consistency});
}

TEST(ExcDataFaults, DegreeCheckCatchesInteriorEntries) {
  auto t = load("F4", 2);
  auto& m = matrix_block(t, 0);
  // an entry below the top of its column: invisible to the structural checks
  std::set<std::size_t> tops;
  for (const auto& l : springer::leading_rows(m)) tops.insert(*l);
  std::size_t row = 0;
  while (tops.count(row) || m.rows[row].entries[0] == 0) ++row;
  m.rows[row].entries[0] += 1;
  EXPECT_TRUE(springer::verify_structure(t).ok());
  EXPECT_EQ(springer::verify_degrees(t).size(), 1u);
}

TEST(ExcData, LabelConflictsAcrossPrimes) {
  auto a = load("G2", 2), b = load("G2", 3);
  std::get<springer::TreeBlock>(b.blocks[0]).chain[1].pair = {"A_1", ""};  // chi(2,2) relabeled
  EXPECT_EQ(springer::label_conflicts({a, b}).size(), 1u);
}

// The minimal orbit A_1 against the trivial column.
TEST(ExcData, MinimalOrbitFormula) {
  const ExcPairLabel minimal{"A_1", ""}, zero{"0", ""};
  const std::vector<std::pair<const char*, std::vector<long long>>> cases{
      {"G2", {2, 3}}, {"F4", {2, 3}}, {"E6", {2, 3, 5}}};
  for (const auto& [type, ells] : cases)
    for (long long ell : ells) {
      const auto t = load(type, ell);
      EXPECT_EQ(springer::decomposition_number(t, minimal, zero),
                springer::minimal_decnumber(CartanType::parse(type), ell))
          << type << " ell = " << ell;
    }
}

// E_6(a_1) is never in the modular image, so the subregular entry is read
// through the sign twist: regular/subregular become the trivial column and
// the row of the minimal orbit.
TEST(ExcData, SubregularFormulaForE6) {
  const ExcPairLabel minimal{"A_1", ""}, zero{"0", ""};
  for (long long ell : {2, 3, 5}) {
    const auto m = springer::subregular_module(CartanType::parse("E6"), ell);
    const auto t = load("E6", ell);
    EXPECT_EQ(static_cast<long long>(m.module.dim()), springer::decomposition_number(t, minimal, zero));
    EXPECT_EQ(m.module.dim(), ell == 3 ? 1u : 0u);
    const auto image = as_set(springer::extract_modular_image(t));
    EXPECT_FALSE(image.count({"E_6(a_1)", ""}));
  }
}

TEST(ExcData, G2FixturesAgreeWithLiveTable) {
  const auto table = springer::g2_character_table();
  for (long long ell : {2, 3}) {
    const auto fixture = load("G2", ell);
    const auto d = springer::assemble(fixture);
    // restricted ordinary characters = D * Brauer characters
    const auto regular = springer::l_regular_classes(table, ell);
    const auto restricted = table.restrict_to(regular);
    const auto image = springer::extract_modular_image(fixture);
    springer::IntMatrix brauer(d.cols(), regular.size());
    std::vector<std::size_t> top(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) {
      std::size_t i = 0;
      while (d.entries(i, j) == 0) ++i;
      top[j] = i;
    }
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const std::size_t live_row = std::find(table.row_labels.begin(), table.row_labels.end(), d.row_labels[top[j]]) -
                                   table.row_labels.begin();
      ASSERT_LT(live_row, table.row_labels.size());
      for (std::size_t c = 0; c < regular.size(); ++c) {
        springer::Integer v = restricted(live_row, c);
        for (std::size_t k = 0; k < j; ++k) v -= d.entries(top[j], k) * brauer(k, c);
        brauer(j, c) = v;
      }
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      const std::size_t live_row = std::find(table.row_labels.begin(), table.row_labels.end(), d.row_labels[r]) -
                                   table.row_labels.begin();
      ASSERT_LT(live_row, table.row_labels.size());
      for (std::size_t c = 0; c < regular.size(); ++c) {
        springer::Integer v = 0;
        for (std::size_t k = 0; k < d.cols(); ++k) v += d.entries(r, k) * brauer(k, c);
        EXPECT_EQ(v, restricted(live_row, c)) << d.row_labels[r] << " ell = " << ell;
      }
    }
    // the basic set found live is the set of top rows
    const auto basic = springer::springer_basic_set(restricted);
    std::set<std::string> live, from_fixture;
    for (std::size_t i : basic.selected_rows) live.insert(table.row_labels[i]);
    for (std::size_t i : top) from_fixture.insert(d.row_labels[i]);
    EXPECT_EQ(live, from_fixture) << "ell = " << ell;
  }
}
