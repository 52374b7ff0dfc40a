#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symplie/exactlin.hpp"

namespace symplie {

struct BracketTerm {
  std::size_t k;
  Rational c;
};

/// [e_lhs, e_rhs] = sum of c * e_k over `out`.
struct BracketEntry {
  std::size_t lhs;
  std::size_t rhs;
  std::vector<BracketTerm> out;
};

/// First basis triple (i < j < k) on which the Jacobi sum is nonzero, together
/// with the offending vector. `c` is the dense tensor indexed (i*n + j)*n + k.
inline std::optional<Witness> jacobi_witness(std::size_t n, const std::vector<Rational>& c) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return c[(i * n + j) * n + k]; };
  // [[e_a, e_b], e_d] = sum_m c_ab^m [e_m, e_d]
  auto nested = [&](std::size_t a, std::size_t b, std::size_t d, Vector& acc) {
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& cm = at(a, b, m);
      if (cm.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        if (!at(m, d, l).is_zero()) acc[l] += cm * at(m, d, l);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc(n);
        nested(i, j, k, acc);
        nested(j, k, i, acc);
        nested(k, i, j, acc);
        if (!is_zero(acc)) return Witness{{i, j, k}, acc};
      }
  return std::nullopt;
}

/// A finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Instances are always validated
/// (antisymmetric and Jacobi).
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Builds from a sparse bracket list; brackets not listed are zero and the
  /// (j, i) entries are filled in by antisymmetry.
  static LieAlgebra make(std::size_t dim, const std::vector<BracketEntry>& brackets,
                         std::vector<std::string> names = {}) {
    std::vector<Rational> c(dim * dim * dim);
    std::vector<char> set(dim * dim, 0);
    for (const auto& e : brackets) {
      if (e.lhs >= dim || e.rhs >= dim)
        throw Error(ErrorKind::IndexOutOfRange, "bracket index out of range", Witness{{e.lhs, e.rhs}, {}});
      Vector row(dim);
      std::vector<char> seen(dim, 0);
      for (const auto& t : e.out) {
        if (t.k >= dim)
          throw Error(ErrorKind::IndexOutOfRange, "bracket output index out of range", Witness{{e.lhs, e.rhs, t.k}, {}});
        if (seen[t.k] && row[t.k] != t.c)
          throw Error(ErrorKind::AntisymmetryConflict, "contradictory duplicate coefficient", Witness{{e.lhs, e.rhs, t.k}, {}});
        seen[t.k] = 1;
        row[t.k] = t.c;
      }
      if (e.lhs == e.rhs) {
        if (!is_zero(row))
          throw Error(ErrorKind::AntisymmetryConflict, "[e_i, e_i] must vanish", Witness{{e.lhs, e.rhs}, row});
        continue;
      }
      const std::size_t ij = e.lhs * dim + e.rhs;
      const std::size_t ji = e.rhs * dim + e.lhs;
      if (set[ij] || set[ji]) {
        for (std::size_t k = 0; k < dim; ++k)
          if (c[ij * dim + k] != row[k])
            throw Error(ErrorKind::AntisymmetryConflict, "bracket given twice with different values",
                        Witness{{e.lhs, e.rhs}, row});
        continue;
      }
      set[ij] = set[ji] = 1;
      for (std::size_t k = 0; k < dim; ++k) {
        c[ij * dim + k] = row[k];
        c[ji * dim + k] = -row[k];
      }
    }
    return from_tensor(dim, std::move(c), std::move(names));
  }

  /// Builds from a dense tensor, checking antisymmetry and Jacobi.
  static LieAlgebra from_tensor(std::size_t dim, std::vector<Rational> c, std::vector<std::string> names = {}) {
    if (c.size() != dim * dim * dim) throw Error(ErrorKind::DimensionMismatch, "structure tensor has wrong size");
    if (!names.empty() && names.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis name count");
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (c[(i * dim + j) * dim + k] != -c[(j * dim + i) * dim + k])
            throw Error(ErrorKind::AntisymmetryConflict, "structure constants are not antisymmetric", Witness{{i, j, k}, {}});
    if (auto w = jacobi_witness(dim, c)) throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails", *w);
    LieAlgebra l;
    l.dim_ = dim;
    l.c_ = std::move(c);
    l.names_ = std::move(names);
    return l;
  }

  static LieAlgebra abelian(std::size_t dim) { return make(dim, {}); }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] const std::vector<Rational>& tensor() const { return c_; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::string name(std::size_t i) const {
    return names_.empty() ? "e" + std::to_string(i) : names_.at(i);
  }

  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return {first, first + static_cast<std::ptrdiff_t>(dim_)};
  }

  [[nodiscard]] Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "bracket: coordinate length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        const Rational uv = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!structure(i, j, k).is_zero()) out[k] += uv * structure(i, j, k);
      }
    }
    return out;
  }

  /// Matrix of v -> [x, v].
  [[nodiscard]] Matrix ad_matrix(std::span<const Rational> x) const {
    if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "ad_matrix: coordinate length");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!structure(i, j, k).is_zero()) m(k, j) += x[i] * structure(i, j, k);
    }
    return m;
  }

  /// Coadjoint action on covector coordinates: (ad*(x) b)(v) = -b([x, v]).
  [[nodiscard]] Matrix coad_matrix(std::span<const Rational> x) const { return -ad_matrix(x).transpose(); }

  [[nodiscard]] Matrix ad_basis(std::size_t i) const { return ad_matrix(unit_vector(dim_, i)); }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
  std::vector<std::string> names_;
};

inline Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = l.structure(i, j, k);
  return kernel(stacked);
}

/// span of [a, b] for a in `left`, b in `right`.
inline Subspace bracket_span(const LieAlgebra& l, const Subspace& left, const Subspace& right) {
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < left.dim(); ++a)
    for (std::size_t b = 0; b < right.dim(); ++b) gens.push_back(l.bracket(left.basis().row(a), right.basis().row(b)));
  return Subspace::span(l.dim(), gens);
}

inline Subspace derived_ideal(const LieAlgebra& l) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) gens.push_back(l.bracket_basis(i, j));
  return Subspace::span(l.dim(), gens);
}

/// C^1 = g, C^{k+1} = [g, C^k]; stops at zero or when the series stabilizes
/// (the stable term appears once).
inline std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  const Subspace all = Subspace::full(l.dim());
  std::vector<Subspace> series{all};
  while (!series.back().is_zero()) {
    Subspace next = bracket_span(l, all, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

struct Nilpotency {
  bool nilpotent = false;
  /// First k with C^k = 0 (abelian algebras have nilindex 2); empty when the
  /// algebra is not nilpotent.
  std::optional<std::size_t> nilindex;
};

inline Nilpotency nilpotency(const LieAlgebra& l) {
  auto series = lower_central_series(l);
  if (!series.back().is_zero()) return {};
  return {true, series.size()};
}

inline bool is_nilpotent(const LieAlgebra& l) { return nilpotency(l).nilpotent; }

inline Vector ad_traces(const LieAlgebra& l) {
  Vector t(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t k = 0; k < l.dim(); ++k) t[i] += l.structure(i, k, k);
  return t;
}

/// tr ad(x) = 0 for all x; equivalently the flat connection of a symplectic
/// structure on the group is geodesically complete.
inline bool is_unimodular(const LieAlgebra& l) { return is_zero(ad_traces(l)); }

/// Basis pair (a, b) of s with [s_a, s_b] outside s, if any.
inline std::optional<Witness> subalgebra_witness(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension");
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vector v = l.bracket(s.basis().row(a), s.basis().row(b));
      if (!s.contains(v)) return Witness{{a, b}, v};
    }
  return std::nullopt;
}

/// (i, b) with [e_i, s_b] outside s, if any.
inline std::optional<Witness> ideal_witness(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      Vector v = l.bracket(unit_vector(l.dim(), i), s.basis().row(b));
      if (!s.contains(v)) return Witness{{i, b}, v};
    }
  return std::nullopt;
}

inline bool is_subalgebra(const LieAlgebra& l, const Subspace& s) { return !subalgebra_witness(l, s); }
inline bool is_ideal(const LieAlgebra& l, const Subspace& s) { return !ideal_witness(l, s); }

}  // namespace symplie
