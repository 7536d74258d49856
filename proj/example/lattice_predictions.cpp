// Decomposition numbers predicted from root data: the minimal orbit against
// the trivial representation, and the subregular orbit against the regular
// one via F_ell (x) P/Q of the simply-laced cover.

#include <iostream>

#include "springer/springer.hpp"

int main() {
  using namespace springer;
  for (const char* name : {"B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    const auto t = CartanType::parse(name);
    std::cout << t.to_string() << "  long roots:";
    for (const auto& c : long_root_subsystem(t)) std::cout << ' ' << c.to_string();
    std::cout << '\n';
    for (long long ell : {2, 3, 5}) {
      const auto sub = subregular_module(t, ell);
      std::cout << "  ell = " << ell << "  minimal: " << minimal_decnumber(t, ell)
                << "  subregular: " << sub.to_json().dump() << '\n';
    }
  }
}
