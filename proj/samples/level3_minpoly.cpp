// Builds F(X, Y) for level 3, prints it, and factors its two ramified specializations.
#include <iostream>

#include "genlambda/genlambda.hpp"

using namespace genlambda;

int main() {
  const BivarPoly f = build_F(3);
  std::cout << "F(X, Y) for N = 3, deg_X " << f.deg_x() << ", deg_Y " << f.deg_y() << "\n";
  for (std::size_t i = 0; i < f.P.size(); ++i) {
    std::cout << "  X^" << f.deg_x() - static_cast<long>(i) << ":";
    for (std::size_t k = 0; k < f.P[i].coeffs().size(); ++k) std::cout << "  (" << f.P[i].coeffs()[k].to_string() << ") Y^" << k;
    std::cout << "\n";
  }

  for (i64 y : {0, 1728}) {
    const auto cert = specialize_and_factor(f, CycNum::from_int(3, y));
    std::cout << "F(X, " << y << ") = c H^" << (y == 0 ? 3 : 2) << ", roots of H:\n";
    for (auto r : numeric_roots(cert.h)) std::cout << "  " << r << "\n";
  }

  const auto rj = rational_j_expression(f);
  std::cout << "j = -Q1(Lambda)/Q0(Lambda) matches the closed form: " << std::boolalpha << rj.closed_form_ok.value_or(false) << "\n";
}
