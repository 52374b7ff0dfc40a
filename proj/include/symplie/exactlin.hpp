#pragma once

// Exact linear algebra over the rationals: row reduction, solving, kernels,
// determinants and canonical subspaces.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "symplie/matrix.hpp"

namespace symplie {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The first nonzero entry of a column is taken as
/// pivot, so the result depends only on the row space of the input.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead_row, j).is_zero()) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// One exact solution of a x = b (free variables zero), or nullopt when the
/// system is inconsistent.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

/// Fraction-free (Bareiss) determinant.
inline Rational det(Matrix a) {
  if (!a.square()) throw Error(ErrorKind::NonSquare, "det of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::NonSquare, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

/// A linear subspace of Q^n, stored canonically as the nonzero rows of the
/// RREF of any spanning set. Two equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient), {}); }
  static Subspace full(std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, Matrix::identity(ambient), std::move(piv));
  }

  /// Row space of `gens` (any number of rows, dependent or zero rows allowed).
  static Subspace row_space(const Matrix& gens) {
    auto [red, pivots] = rref(gens);
    Matrix basis(pivots.size(), gens.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = 0; c < gens.cols(); ++c) basis(r, c) = red(r, c);
    return Subspace(gens.cols(), std::move(basis), std::move(pivots));
  }

  static Subspace span(std::size_t ambient, const std::vector<Vector>& gens) {
    return row_space(Matrix::from_rows(gens, ambient));
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  [[nodiscard]] std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }

  /// Coefficients of v in the stored basis, or nullopt if v is not in the span.
  [[nodiscard]] std::optional<Vector> coordinates(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "Subspace::coordinates: length");
    Vector coeff(dim());
    Vector rest(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      coeff[i] = rest[pivots_[i]];
      if (coeff[i].is_zero()) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        if (!basis_(i, c).is_zero()) rest[c] -= coeff[i] * basis_(i, c);
    }
    if (!symplie::is_zero(rest)) return std::nullopt;
    return coeff;
  }

  [[nodiscard]] bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
  [[nodiscard]] bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Vector from coefficients in the stored basis.
  [[nodiscard]] Vector combine(std::span<const Rational> coeff) const { return left_multiply(coeff, basis_); }

  /// Coordinate axes at the non-pivot indices; together with this subspace
  /// they span the ambient space.
  [[nodiscard]] std::vector<std::size_t> complement_axes() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (p < pivots_.size() && pivots_[p] == i)
        ++p;
      else
        out.push_back(i);
    }
    return out;
  }

  [[nodiscard]] Subspace sum(const Subspace& other) const {
    require_same_ambient(other);
    Matrix gens(dim() + other.dim(), ambient_);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t c = 0; c < ambient_; ++c) gens(r, c) = basis_(r, c);
    for (std::size_t r = 0; r < other.dim(); ++r)
      for (std::size_t c = 0; c < ambient_; ++c) gens(dim() + r, c) = other.basis_(r, c);
    return row_space(gens);
  }

  /// Vectors orthogonal to every basis row under the standard pairing.
  [[nodiscard]] Subspace annihilator() const;

  [[nodiscard]] Subspace intersect(const Subspace& other) const {
    require_same_ambient(other);
    return annihilator().sum(other.annihilator()).annihilator();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void require_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces live in different spaces");
  }

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {x : a x = 0}.
inline Subspace kernel(const Matrix& a) {
  auto [red, pivots] = rref(a);
  std::vector<Vector> gens;
  std::size_t p = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (p < pivots.size() && pivots[p] == f) {
      ++p;
      continue;
    }
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), gens);
}

inline Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  return kernel(basis_);
}

}  // namespace symplie
