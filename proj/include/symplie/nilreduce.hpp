#pragma once

// Central reduction of nilpotent symplectic Lie algebras and the
// double-extension test.

#include <optional>
#include <string>
#include <vector>

#include "symplie/symplectic.hpp"

namespace symplie {

/// Reduction by the line spanned by a central element z. Since z is central,
/// span(z) is an isotropic ideal and z^perp is an ideal of codimension one, so
/// the reduced algebra z^perp / span(z) has dimension dim - 2. Without `z`,
/// the first canonical basis vector of the center is used.
inline ReductionStep central_reduction(const SymplecticStructure& s, std::optional<Vector> z = std::nullopt) {
  const LieAlgebra& l = s.algebra();
  if (!is_nilpotent(l)) throw Error(ErrorKind::NotNilpotent, "central reduction needs a nilpotent algebra");
  Subspace c = center(l);
  if (!z) {
    if (c.is_zero()) throw Error(ErrorKind::TrivialCenter, "center is zero");
    z = c.basis_vector(0);
  }
  if (z->size() != l.dim()) throw Error(ErrorKind::DimensionMismatch, "central element length");
  if (is_zero(*z) || !c.contains(*z)) throw Error(ErrorKind::NotCentral, "element is zero or not central", Witness{{}, *z});

  const Subspace line = Subspace::span(l.dim(), {*z});
  const Subspace orth = orthogonal(s, line);
  if (auto w = ideal_witness(l, orth))
    throw Error(ErrorKind::InternalInvariantViolation, "z^perp is not an ideal", *w);
  ReductionStep step = reduce(s, line);
  if (step.reduced.dim() + 2 != s.dim())
    throw Error(ErrorKind::InternalInvariantViolation, "central reduction must drop the dimension by two");
  return step;
}

/// Central reductions down to dimension zero, dim/2 steps.
inline std::vector<ReductionStep> reduction_chain(const SymplecticStructure& s) {
  std::vector<ReductionStep> chain;
  const SymplecticStructure* current = &s;
  while (current->dim() > 0) {
    chain.push_back(central_reduction(*current));
    current = &chain.back().reduced;
  }
  return chain;
}

struct DoubleExtensionVerdict {
  bool yes = false;
  std::string reason;  // violated clause when !yes
  std::optional<SymplecticStructure> reduced;
  Witness witness;
};

/// Whether s is a symplectic double extension of H^perp/H: H is an isotropic
/// subalgebra, [H, H^perp] lies in H and H^perp/H carries a valid symplectic
/// structure.
inline DoubleExtensionVerdict is_double_extension(const SymplecticStructure& s, const Subspace& h) {
  const LieAlgebra& l = s.algebra();
  DoubleExtensionVerdict v;
  if (auto w = subalgebra_witness(l, h)) {
    v.reason = "H is not a subalgebra";
    v.witness = *w;
    return v;
  }
  const Subspace orth = orthogonal(s, h);
  if (!orth.contains(h)) {
    v.reason = "H is not isotropic";
    for (std::size_t a = 0; a < h.dim() && v.witness.empty(); ++a)
      for (std::size_t b = a + 1; b < h.dim(); ++b) {
        Rational f = s.form(h.basis().row(a), h.basis().row(b));
        if (!f.is_zero()) {
          v.witness = Witness{{a, b}, {f}};
          break;
        }
      }
    return v;
  }
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = 0; b < orth.dim(); ++b) {
      Vector br = l.bracket(h.basis().row(a), orth.basis().row(b));
      if (!h.contains(br)) {
        v.reason = "[H, H^perp] is not contained in H";
        v.witness = Witness{{a, b}, br};
        return v;
      }
    }
  if (auto w = subalgebra_witness(l, orth)) {
    v.reason = "H^perp is not a subalgebra";
    v.witness = *w;
    return v;
  }
  Quotient q = quotient(s, orth, h);
  try {
    v.reduced = SymplecticStructure::make(q.algebra, q.omega);
  } catch (const Error& e) {
    v.reason = std::string("H^perp/H is not symplectic: ") + e.what();
    v.witness = e.witness();
    return v;
  }
  v.yes = true;
  return v;
}

}  // namespace symplie
