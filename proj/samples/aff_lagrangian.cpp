// Builds aff(R^3) with the regular nilpotent functional and prints the
// transversal Lagrangian subalgebras L and L'.

#include <iostream>

#include "symplie/symplie.hpp"

int main() {
  using namespace symplie;
  const AffFunctional alpha = regular_pair(3);
  std::cout << "orbit open: " << std::boolalpha << orbit_is_open(alpha) << '\n';
  std::cout << "orientation: " << orientation(alpha) << '\n';

  DecompositionReport report = lagrangian_pair(alpha);
  std::cout << "L  = " << to_json(report.L_sub).dump() << '\n';
  std::cout << "L' = " << to_json(report.Lprime_sub).dump() << '\n';
  std::cout << "all checks pass: " << report.all_verified() << '\n';
  return report.all_verified() ? 0 : 1;
}
