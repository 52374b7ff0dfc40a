#pragma once

// Test-only oracles. These recompute quantities by routes that do not go
// through the library code under test.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "symplie/symplie.hpp"

namespace oracle {

using symplie::Matrix;
using symplie::Rational;
using symplie::Vector;

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational d;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = a(r, cc);
    Rational term = a(0, c) * cofactor_det(minor);
    d += (c % 2 == 0) ? term : -term;
  }
  return d;
}

/// Bracket from raw structure constants, summing over basis pairs.
inline Vector raw_bracket(const symplie::LieAlgebra& l, const Vector& u, const Vector& v) {
  const std::size_t n = l.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * l.tensor()[(i * n + j) * n + k];
  return out;
}

/// Jacobi on every basis triple, by direct nested brackets.
inline bool jacobi_holds(const symplie::LieAlgebra& l) {
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector ei = symplie::unit_vector(n, i), ej = symplie::unit_vector(n, j), ek = symplie::unit_vector(n, k);
        Vector s = raw_bracket(l, raw_bracket(l, ei, ej), ek);
        s = s + raw_bracket(l, raw_bracket(l, ej, ek), ei);
        s = s + raw_bracket(l, raw_bracket(l, ek, ei), ej);
        if (!symplie::is_zero(s)) return false;
      }
  return true;
}

/// (xy)z - x(yz) = (yx)z - y(xz) on all basis triples, term by term.
inline bool left_symmetric_on_triples(const symplie::LSATable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = symplie::unit_vector(n, i), y = symplie::unit_vector(n, j), z = symplie::unit_vector(n, k);
        Vector lhs = t.product(t.product(x, y), z) - t.product(x, t.product(y, z));
        Vector rhs = t.product(t.product(y, x), z) - t.product(y, t.product(x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

inline bool compatible_on_pairs(const symplie::LSATable& t, const symplie::LieAlgebra& l) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x = symplie::unit_vector(n, i), y = symplie::unit_vector(n, j);
      if (t.product(x, y) - t.product(y, x) != raw_bracket(l, x, y)) return false;
    }
  return true;
}

/// Defining identity of the LSA product: w(x.y, z) = -w(y, [x, z]).
inline bool lsa_defining_identity(const symplie::SymplecticStructure& s, const symplie::LSATable& t) {
  const std::size_t n = s.dim();
  auto form = [&](const Vector& a, const Vector& b) {
    Rational r;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) r += a[p] * s.omega()(p, q) * b[q];
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector x = symplie::unit_vector(n, i), y = symplie::unit_vector(n, j), z = symplie::unit_vector(n, k);
        if (form(t.product(x, y), z) != -form(y, raw_bracket(s.algebra(), x, z))) return false;
      }
  return true;
}

// aff(R^n) through (n+1)x(n+1) matrices [[v, y], [0, 0]].

inline Matrix aff_to_matrix(std::size_t n, const Vector& c) {
  Matrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) m(i, n) = c[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c[n + i * n + j];
  return m;
}

inline Vector matrix_to_aff(std::size_t n, const Matrix& m) {
  Vector c(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) c[i] = m(i, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[n + i * n + j] = m(i, j);
  return c;
}

inline Vector aff_matrix_bracket(std::size_t n, const Vector& u, const Vector& v) {
  Matrix a = aff_to_matrix(n, u), b = aff_to_matrix(n, v);
  return matrix_to_aff(n, a * b - b * a);
}

/// alpha(x, u) = g(x) + tr(M u) evaluated on an aff vector.
inline Rational eval_functional(const symplie::AffFunctional& a, const Vector& c) {
  const std::size_t n = a.n;
  Rational r;
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) r += a.g[i] * c[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = c[n + i * n + j];
  return r + (a.M * u).trace();
}

/// exp of a nilpotent matrix as a finite sum.
inline Matrix nilpotent_exp(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (Rational(1) / Rational(static_cast<long>(k))) * (term * x);
    sum = sum + term;
  }
  return sum;
}

/// Kind of the symplie::Error thrown by f, or nullopt if f returns.
template <class F>
std::optional<symplie::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const symplie::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 5) {
    long num = integer(-bound, bound);
    long den = integer(1, 4);
    return Rational(num, den);
  }

  Vector vector(std::size_t n, long bound = 5) {
    Vector v(n);
    for (auto& x : v) x = rational(bound);
    return v;
  }

  Matrix matrix(std::size_t r, std::size_t c, long bound = 5) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(bound);
    return m;
  }

  /// Invertible matrix with det of the requested sign (+1 or -1).
  Matrix invertible(std::size_t n, int sign) {
    for (;;) {
      Matrix m = matrix(n, n, 3);
      Rational d = symplie::det(m);
      if (d.is_zero()) continue;
      if (d.sign() != sign) {
        for (std::size_t j = 0; j < n; ++j) m(0, j) = -m(0, j);
      }
      return m;
    }
  }

  symplie::AffGroupElement element(std::size_t n, int det_sign = 1) { return {vector(n), invertible(n, det_sign)}; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
