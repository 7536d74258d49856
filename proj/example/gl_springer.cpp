// Decomposition numbers of the nilpotent cone of GL_n read through the
// transpose, with rows listed from the zero orbit upwards.

#include <cstdlib>
#include <iostream>

#include "springer/springer.hpp"

int main(int argc, char** argv) {
  using namespace springer;
  const int n = argc > 1 ? std::atoi(argv[1]) : 5;
  const long long ell = argc > 2 ? std::atoll(argv[2]) : 2;

  const auto d = springer_ordered(decomposition_matrix_symmetric(n, ell));
  std::cout << "# d for S_" << n << " mod " << ell << ", rows in Springer order\n" << d.to_tsv() << '\n';

  std::cout << "# modular Springer map D^mu -> x_mu'\n";
  for (const auto& mu : l_regular_partitions_of(n, static_cast<int>(ell)))
    std::cout << mu << "\t-> x_" << psi_modular(mu, ell).orbit << '\n';

  const auto sweep = rc_sweep(n, ell);
  std::cout << "\nrow/column removal: " << sweep.checked << " pairs checked, " << sweep.failures.size()
            << " failures\n";
}
