// Reduces the 4-dimensional Heisenberg-type symplectic algebra to a point,
// one central line at a time.

#include <iostream>

#include "symplie/symplie.hpp"

int main() {
  using namespace symplie;
  SymplecticStructure s = heisenberg4_symplectic();
  LSATable t = lsa_product(s);
  std::cout << "e1.e0 = " << to_json(t.product_basis(1, 0)).dump() << '\n';

  for (const ReductionStep& step : reduction_chain(s)) {
    std::cout << step.ambient.dim() << " -> " << step.reduced.dim() << "  z = "
              << to_json(step.iso_basis.basis_vector(0)).dump() << '\n';
  }
  std::cout << "momentum at e0: " << to_json(momentum_cocycle(s, unit_vector(4, 0)).value).dump() << '\n';
}
