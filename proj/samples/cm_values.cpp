// Lambda at a few CM points, next to the root of F(X, j(tau)) it must be.
#include <iomanip>
#include <iostream>

#include "genlambda/genlambda.hpp"

using namespace genlambda;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  const BivarPoly f = build_F(n);
  const std::vector<std::pair<std::string, cplx>> points{
      {"i", {0, 1}}, {"sqrt(-2)", {0, std::sqrt(2.0)}}, {"(1+sqrt(-7))/2", half_integral_point(7)}, {"(1+sqrt(-163))/2", half_integral_point(163)}};
  std::cout << std::setprecision(12);
  for (const auto& [name, tau] : points) {
    const cplx lam = eval_lambda_numeric(SL2Mat::identity(), n, tau).value;
    const cplx j = eval_j_numeric(tau);
    std::cout << name << ": j = " << j << ", Lambda = " << lam << ", |F(Lambda, j)| / |F|_1 = ";
    double scale = 0;
    for (const auto& p : f.P) scale = scale * std::abs(lam) + std::abs(p.eval(j));
    std::cout << std::abs(f.eval(lam, j)) / scale << "\n";
  }
}
