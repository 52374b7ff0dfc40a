#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace symplie;
using oracle::error_kind;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

LieAlgebra aff1_left() { return LieAlgebra::make(2, {{0, 1, {{0, 1}}}}); }

/// A spread of valid structures: catalog entries, heis4 shifted by
/// coboundaries, random abelian forms and random open aff(R^n) functionals.
std::vector<SymplecticStructure> sample_structures() {
  std::vector<SymplecticStructure> out;
  for (const auto& name : catalog_names()) out.push_back(*catalog_entry(name));
  oracle::Gen gen(31);
  SymplecticStructure h = heisenberg4_symplectic();
  while (out.size() < catalog_names().size() + 3) {
    Matrix w = h.omega() + coboundary(h.algebra(), gen.vector(4, 2));
    if (!det(w).is_zero()) out.push_back(SymplecticStructure::make(h.algebra(), w));
  }
  for (int t = 0; t < 3; ++t) {
    Matrix a = gen.matrix(4, 4, 2);
    Matrix w = a - a.transpose();
    if (!det(w).is_zero()) out.push_back(SymplecticStructure::make(LieAlgebra::abelian(4), w));
  }
  for (int t = 0; t < 6; ++t) {
    std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    AffFunctional a{n, gen.vector(n, 2), gen.matrix(n, n, 2)};
    if (orbit_is_open(a)) out.push_back(aff_symplectic(a));
  }
  return out;
}

}  // namespace

TEST(MakeSymplectic, Examples) {
  Matrix w2{{0, 1}, {-1, 0}};
  EXPECT_NO_THROW(SymplecticStructure::make(LieAlgebra::abelian(2), w2));
  EXPECT_NO_THROW(heisenberg4_symplectic());
}

TEST(MakeSymplectic, MutatedHeisenbergFormIsNotClosed) {
  Matrix bad{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
  try {
    SymplecticStructure::make(heisenberg4(), bad);
    FAIL() << "accepted a non-closed form";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotClosed);
    const auto& idx = err.witness().indices;
    ASSERT_EQ(idx.size(), 3u);
    // the cyclic sum at the witness triple, recomputed
    Rational cyc;
    std::size_t t[3] = {idx[0], idx[1], idx[2]};
    for (int r = 0; r < 3; ++r) {
      Vector br = oracle::raw_bracket(heisenberg4(), e(4, t[r]), e(4, t[(r + 1) % 3]));
      cyc += dot(left_multiply(br, bad), e(4, t[(r + 2) % 3]));
    }
    EXPECT_FALSE(cyc.is_zero());
  }
}

TEST(MakeSymplectic, RejectsBadForms) {
  EXPECT_EQ(error_kind([] { SymplecticStructure::make(LieAlgebra::abelian(2), Matrix{{0, 1}, {1, 0}}); }),
            ErrorKind::NotAntisymmetric);
  EXPECT_EQ(error_kind([] { SymplecticStructure::make(LieAlgebra::abelian(2), Matrix(2, 2)); }), ErrorKind::Degenerate);
  EXPECT_EQ(error_kind([] { SymplecticStructure::make(LieAlgebra::abelian(3), Matrix(2, 2)); }),
            ErrorKind::DimensionMismatch);
}

TEST(LsaProduct, Abelian) { EXPECT_TRUE(lsa_product(abelian_symplectic(2)).is_zero()); }

TEST(LsaProduct, Heisenberg) {
  LSATable t = lsa_product(heisenberg4_symplectic());
  EXPECT_EQ(t.product_basis(1, 0), (Vector{0, 0, -1, 0}));
  EXPECT_TRUE(is_zero(t.product_basis(0, 1)));
}

TEST(LsaProduct, AffLine) {
  SymplecticStructure s = aff_symplectic({1, Vector{1}, Matrix(1, 1)});
  LSATable t = lsa_product(s);
  EXPECT_EQ(t.product_basis(0, 1), (Vector{-1, 0}));
  EXPECT_EQ(t.product_basis(1, 0), (Vector{0, 0}));
  EXPECT_EQ(t.product_basis(1, 1), (Vector{0, -1}));
  EXPECT_EQ(t.product_basis(0, 0), (Vector{0, 0}));
}

TEST(Coboundary, Examples) {
  EXPECT_TRUE(coboundary(LieAlgebra::abelian(3), Vector{1, 2, 3}).is_zero());
  Matrix d = coboundary(aff1_left(), Vector{1, 0});
  EXPECT_EQ(d(0, 1), Rational(-1));
  Matrix hd = coboundary(heisenberg4(), e(4, 2));
  Matrix expected(4, 4);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  EXPECT_EQ(hd, expected);
  EXPECT_TRUE(det(hd).is_zero());
}

TEST(Frobenius, Examples) {
  EXPECT_FALSE(frobenius_solve(heisenberg4_symplectic()));
  EXPECT_FALSE(frobenius_solve(abelian_symplectic(2)));
  LieAlgebra a = aff1_left();
  SymplecticStructure s = SymplecticStructure::make(a, coboundary(a, Vector{1, 0}));
  auto alpha = frobenius_solve(s);
  ASSERT_TRUE(alpha);
  EXPECT_EQ(coboundary(a, *alpha), s.omega());
}

TEST(Orthogonal, Examples) {
  SymplecticStructure h = heisenberg4_symplectic();
  EXPECT_EQ(orthogonal(h, Subspace::zero(4)), Subspace::full(4));
  EXPECT_TRUE(orthogonal(h, Subspace::full(4)).is_zero());
  EXPECT_EQ(orthogonal(h, Subspace::span(4, {e(4, 2)})), Subspace::span(4, {e(4, 1), e(4, 2), e(4, 3)}));
}

TEST(Classify, Examples) {
  SymplecticStructure h = heisenberg4_symplectic();
  EXPECT_EQ(classify(h, Subspace::span(4, {e(4, 2)})).kind, SubspaceKind::isotropic);
  EXPECT_EQ(classify(h, Subspace::span(4, {e(4, 2), e(4, 3)})).kind, SubspaceKind::lagrangian);
  EXPECT_EQ(classify(h, Subspace::span(4, {e(4, 0), e(4, 2)})).kind, SubspaceKind::symplectic);
  EXPECT_EQ(classify(h, Subspace::span(4, {e(4, 1), e(4, 2), e(4, 3)})).kind, SubspaceKind::coisotropic);
  EXPECT_EQ(classify(h, Subspace::span(4, {e(4, 0) + e(4, 1), e(4, 2), e(4, 3)})).kind, SubspaceKind::coisotropic);
  Classification g = classify(h, Subspace::span(4, {e(4, 0), e(4, 1)}));
  EXPECT_TRUE(g.isotropic);
  EXPECT_EQ(g.kind, SubspaceKind::lagrangian);
}

TEST(Reduce, HeisenbergLagrangianIdeal) {
  ReductionStep r = reduce(heisenberg4_symplectic(), Subspace::span(4, {e(4, 2), e(4, 3)}));
  EXPECT_EQ(r.mode, ReductionMode::reduced);
  EXPECT_EQ(r.kernel_basis, r.iso_basis);
  EXPECT_EQ(r.reduced.dim(), 0u);
}

TEST(Reduce, HeisenbergCentralLine) {
  ReductionStep r = reduce(heisenberg4_symplectic(), Subspace::span(4, {e(4, 2)}));
  EXPECT_EQ(r.orth_basis, Subspace::span(4, {e(4, 1), e(4, 2), e(4, 3)}));
  EXPECT_EQ(r.kernel_basis, Subspace::span(4, {e(4, 2)}));
  ASSERT_EQ(r.reduced.dim(), 2u);
  EXPECT_TRUE(is_zero(r.reduced.algebra().tensor()));
  EXPECT_EQ(r.reduced.omega(), (Matrix{{0, 1}, {-1, 0}}));
  ASSERT_EQ(r.lift.size(), 2u);
  EXPECT_EQ(r.lift[0], e(4, 1));
  EXPECT_EQ(r.lift[1], e(4, 3));
}

TEST(Reduce, DiscreteProduct) {
  ReductionStep r = reduce(abelian_symplectic(2), Subspace::span(4, {e(4, 0), e(4, 1)}));
  EXPECT_EQ(r.mode, ReductionMode::discrete);
  EXPECT_TRUE(r.kernel_basis.is_zero());
  EXPECT_EQ(r.iso_basis.dim() + r.orth_basis.dim(), 4u);
  ASSERT_TRUE(r.ideal);
  EXPECT_EQ(r.ideal->dim(), 2u);
  EXPECT_EQ(r.reduced.dim(), 2u);
}

TEST(Reduce, RejectsNonIdeal) {
  EXPECT_EQ(error_kind([] { reduce(heisenberg4_symplectic(), Subspace::span(4, {e(4, 0)})); }), ErrorKind::NotAnIdeal);
}

TEST(Momentum, Examples) {
  oracle::Gen gen(32);
  SymplecticStructure ab = abelian_symplectic(2);
  Vector x = gen.vector(4);
  EXPECT_EQ(momentum_cocycle(ab, x).value, left_multiply(x, ab.omega()));
  MomentumSeries m = momentum_cocycle(heisenberg4_symplectic(), e(4, 0));
  EXPECT_EQ(m.value, (Vector{0, Rational(-1, 2), 1, 0}));
  EXPECT_EQ(m.order, 2u);
  EXPECT_TRUE(is_zero(momentum_cocycle(heisenberg4_symplectic(), Vector(4)).value));
}

TEST(Momentum, NonNilpotentNeedsTruncation) {
  SymplecticStructure s = aff_symplectic(regular_pair(1));
  EXPECT_EQ(error_kind([&] { momentum_cocycle(s, e(2, 1)); }), ErrorKind::NotNilpotent);
  // ad*(e1) on aff(R^1) fixes e0* up to sign, so the partial sums are exact
  // truncations of an exponential series
  MomentumSeries m = momentum_cocycle(s, e(2, 1), 3);
  Vector t1 = s.contract(e(2, 1));
  Matrix c = s.algebra().coad_matrix(e(2, 1));
  Vector expected = t1 + Rational(1, 2) * (c * t1) + Rational(1, 6) * (c * (c * t1));
  EXPECT_EQ(m.value, expected);
}

TEST(SymplecticProperty, LsaProductSatisfiesEquationsOnTriples) {
  for (const auto& s : sample_structures()) {
    LSATable t = lsa_product(s);
    EXPECT_TRUE(oracle::lsa_defining_identity(s, t));
    EXPECT_TRUE(oracle::left_symmetric_on_triples(t));
    EXPECT_TRUE(oracle::compatible_on_pairs(t, s.algebra()));
  }
}

TEST(SymplecticProperty, OrthogonalOfIdealIsLsaAndLieSubalgebra) {
  for (const auto& s : sample_structures()) {
    LSATable t = lsa_product(s);
    const LieAlgebra& l = s.algebra();
    std::vector<Subspace> ideals{center(l), derived_ideal(l)};
    if (s.dim() % 2 == 0 && s.dim() >= 2 && l.names().size() == s.dim() && l.names()[0] == "t0") {
      std::size_t n = 1;
      while (aff_dim(n) < s.dim()) ++n;
      ideals.push_back(translations(n));
    }
    for (const auto& i : ideals) {
      ASSERT_TRUE(is_ideal(l, i));
      Subspace orth = orthogonal(s, i);
      EXPECT_TRUE(is_lsa_subalgebra(t, orth));
      EXPECT_TRUE(is_subalgebra(l, orth));
      ReductionStep r = reduce(s, i);
      EXPECT_EQ(r.reduced.dim(), orth.dim() - r.kernel_basis.dim());
      EXPECT_FALSE(det(r.reduced.omega()).is_zero());
      EXPECT_FALSE(closedness_witness(r.reduced.algebra(), r.reduced.omega()));
    }
  }
}

TEST(SymplecticProperty, CoboundaryIsClosedAndFrobeniusRoundTrips) {
  oracle::Gen gen(33);
  for (const auto& s : sample_structures()) {
    for (int t = 0; t < 5; ++t) {
      Matrix d = coboundary(s.algebra(), gen.vector(s.dim()));
      EXPECT_FALSE(closedness_witness(s.algebra(), d));
      EXPECT_EQ(d, -d.transpose());
    }
    if (auto alpha = frobenius_solve(s)) {
      EXPECT_EQ(coboundary(s.algebra(), *alpha), s.omega());
    }
  }
}

TEST(SymplecticProperty, MomentumLinearTermIsContraction) {
  oracle::Gen gen(34);
  for (const auto& s : sample_structures())
    for (int t = 0; t < 5; ++t) {
      Vector x = gen.vector(s.dim());
      EXPECT_EQ(momentum_cocycle(s, x, 1).value, left_multiply(x, s.omega()));
    }
}
