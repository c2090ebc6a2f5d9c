// Lists the largest subsemilattices of T(n) and checks that each one is some
// E_t with a power-set order.
//
//   largest_semilattices [n]      (default 4, at most 5)

#include <cstdlib>
#include <iostream>

#include "semilat/semilat.hpp"

int main(int argc, char** argv) {
  using namespace semilat;
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  if (n < 1 || n > kDefaultEnumerationCap) {
    std::cerr << "n must lie in [1, " << kDefaultEnumerationCap << "]\n";
    return 2;
  }

  const auto largest = max_size_semilattices(n);
  std::cout << largest.size() << " semilattices of size " << largest.front().size()
            << " in T(" << n << ")\n";
  for (const auto& s : largest) {
    const auto t = n == 1 ? 0 : find_anchor(s).t;
    const auto boolean = is_boolean_lattice(s);
    std::cout << "\nE_" << t << (s == make_Et(n, t) ? "" : " (mismatch!)") << ", "
              << boolean.atoms.size() << " atoms\n"
              << io::format_semilattice_text(s, t);
  }

  const auto report = spectrum(n);
  std::cout << "\nsizes of maximal semilattices:\n" << io::spectrum_csv(report);
}
