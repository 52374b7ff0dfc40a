#pragma once

// Built-in example algebras.
//   abelian2, abelian4, abelian6, abelian8: R^{2k} with w = sum e_{2i}* ^ e_{2i+1}*
//   heis4: [e0, e1] = e2 (plus central e3), w = e0* ^ e2* + e1* ^ e3*
//   aff1, aff2, aff3: aff(R^n) with w = delta alpha, alpha = (e_{n-1}*, nilblock)

#include <optional>
#include <string>
#include <vector>

#include "symplie/affn.hpp"
#include "symplie/io.hpp"

namespace symplie {

inline std::vector<std::string> catalog_names() {
  return {"abelian2", "abelian4", "abelian6", "abelian8", "heis4", "aff1", "aff2", "aff3"};
}

inline SymplecticStructure abelian_symplectic(std::size_t half) {
  const std::size_t n = 2 * half;
  Matrix omega(n, n);
  for (std::size_t i = 0; i < half; ++i) {
    omega(2 * i, 2 * i + 1) = 1;
    omega(2 * i + 1, 2 * i) = -1;
  }
  return SymplecticStructure::make(LieAlgebra::abelian(n), std::move(omega));
}

inline LieAlgebra heisenberg4() { return LieAlgebra::make(4, {{0, 1, {{2, 1}}}}); }

inline SymplecticStructure heisenberg4_symplectic() {
  Matrix omega{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  return SymplecticStructure::make(heisenberg4(), std::move(omega));
}

inline std::optional<SymplecticStructure> catalog_entry(const std::string& name) {
  if (name == "heis4") return heisenberg4_symplectic();
  for (std::size_t k = 1; k <= 4; ++k)
    if (name == "abelian" + std::to_string(2 * k)) return abelian_symplectic(k);
  for (std::size_t n = 1; n <= 3; ++n)
    if (name == "aff" + std::to_string(n)) return aff_symplectic(regular_pair(n));
  return std::nullopt;
}

/// Whether a catalog entry is nilpotent (abelian and Heisenberg entries).
inline bool catalog_nilpotent(const std::string& name) { return name.rfind("aff", 0) != 0; }

}  // namespace symplie
