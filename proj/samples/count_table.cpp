// d_N, ell_N and t_N for small levels, with the routes that computed them.
#include <iomanip>
#include <iostream>

#include "genlambda/genlambda.hpp"

using namespace genlambda;

int main() {
  std::cout << std::setw(4) << "N" << std::setw(10) << "d_N" << std::setw(8) << "ell_N" << std::setw(8) << "t_N" << "  routes\n";
  for (i64 n = 3; n <= 30; ++n) {
    const CountReport r = count_report(n);
    std::cout << std::setw(4) << n << std::setw(10) << r.d_n << std::setw(8) << r.enumerated.ell << std::setw(8) << r.enumerated.t << "  enum";
    if (r.prop_claimed) std::cout << (r.prop_sums == r.enumerated ? " = sums" : " != sums");
    if (r.prime_power) std::cout << (*r.prime_power == r.enumerated ? " = prime power" : " != prime power");
    std::cout << "\n";
  }
}
