// Builds the character table of W(G_2), extracts the Springer basic set at
// ell = 2 and 3, and compares it with the top rows of the stored tables.

#include <iostream>

#include "springer/springer.hpp"

int main() {
  using namespace springer;
  const auto table = g2_character_table();
  std::cout << table.to_tsv() << '\n';
  for (long long ell : {2, 3}) {
    const auto restricted = table.restrict_to(l_regular_classes(table, ell));
    const auto basic = springer_basic_set(restricted);
    std::cout << "ell = " << ell << ": " << basic_set_report(table.row_labels, basic).dump() << '\n';

    const auto fixture = load_table(CartanType::parse("G2"), ell);
    const auto d = assemble(fixture);
    std::cout << "  stored matrix\n" << d.to_tsv();
    std::cout << "  image: " << format_pairs(extract_modular_image(fixture)) << "\n\n";
  }
}
