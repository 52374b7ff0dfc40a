#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "symplie/liealg.hpp"

namespace symplie {

inline std::optional<Witness> antisymmetry_witness(const Matrix& omega) {
  for (std::size_t i = 0; i < omega.rows(); ++i)
    for (std::size_t j = i; j < omega.cols(); ++j)
      if (omega(i, j) != -omega(j, i)) return Witness{{i, j}, {}};
  return std::nullopt;
}

/// First basis triple on which w([x,y],z) + w([y,z],x) + w([z,x],y) != 0.
/// The witness vector holds the single nonzero cyclic sum.
inline std::optional<Witness> closedness_witness(const LieAlgebra& l, const Matrix& omega) {
  const std::size_t n = l.dim();
  auto pair = [&](std::size_t a, std::size_t b, std::size_t d) {
    Rational s;
    for (std::size_t m = 0; m < n; ++m)
      if (!l.structure(a, b, m).is_zero() && !omega(m, d).is_zero()) s += l.structure(a, b, m) * omega(m, d);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational s = pair(i, j, k) + pair(j, k, i) + pair(k, i, j);
        if (!s.is_zero()) return Witness{{i, j, k}, {s}};
      }
  return std::nullopt;
}

/// A Lie algebra with a nondegenerate scalar 2-cocycle. Instances are always
/// validated.
class SymplecticStructure {
 public:
  SymplecticStructure() = default;

  static SymplecticStructure make(LieAlgebra algebra, Matrix omega) {
    const std::size_t n = algebra.dim();
    if (omega.rows() != n || omega.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "omega must be dim x dim");
    if (auto w = antisymmetry_witness(omega)) throw Error(ErrorKind::NotAntisymmetric, "omega is not antisymmetric", *w);
    if (auto w = closedness_witness(algebra, omega)) throw Error(ErrorKind::NotClosed, "omega is not a 2-cocycle", *w);
    Subspace rad = kernel(omega);
    if (!rad.is_zero()) throw Error(ErrorKind::Degenerate, "omega is degenerate", Witness{{}, rad.basis_vector(0)});
    SymplecticStructure s;
    s.algebra_ = std::move(algebra);
    s.omega_ = std::move(omega);
    return s;
  }

  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const Matrix& omega() const { return omega_; }
  [[nodiscard]] std::size_t dim() const { return algebra_.dim(); }

  [[nodiscard]] Rational form(std::span<const Rational> u, std::span<const Rational> v) const {
    return dot(left_multiply(u, omega_), v);
  }

  /// i(x)w as covector coordinates: y -> w(x, y).
  [[nodiscard]] Vector contract(std::span<const Rational> x) const { return left_multiply(x, omega_); }

 private:
  LieAlgebra algebra_;
  Matrix omega_;
};

/// Structure constants of a left-symmetric product: e_i . e_j = sum_k a(i,j,k) e_k.
class LSATable {
 public:
  LSATable() = default;
  LSATable(std::size_t dim, std::vector<Rational> a) : dim_(dim), a_(std::move(a)) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& entry(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] Vector product_basis(std::size_t i, std::size_t j) const {
    auto first = a_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return {first, first + static_cast<std::ptrdiff_t>(dim_)};
  }
  [[nodiscard]] Vector product(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim_ || v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "LSA product: length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        const Rational uv = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!entry(i, j, k).is_zero()) out[k] += uv * entry(i, j, k);
      }
    }
    return out;
  }
  /// Matrix of z -> e_i . z.
  [[nodiscard]] Matrix left_mult(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = entry(i, j, k);
    return m;
  }
  [[nodiscard]] bool is_zero() const { return symplie::is_zero(a_); }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> a_;
};

/// Pair (i, j) with e_i.e_j - e_j.e_i != [e_i, e_j].
inline std::optional<Witness> compatibility_witness(const LSATable& t, const LieAlgebra& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector d = t.product_basis(i, j) - t.product_basis(j, i) - l.bracket_basis(i, j);
      if (!is_zero(d)) return Witness{{i, j}, d};
    }
  return std::nullopt;
}

/// Left symmetry (xy)z - x(yz) = (yx)z - y(xz), checked in operator form
/// L_{xy - yx} = L_x L_y - L_y L_x. Witness is (i, j, k) with z = e_k.
inline std::optional<Witness> left_symmetry_witness(const LSATable& t) {
  const std::size_t n = t.dim();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(t.left_mult(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector d = t.product_basis(i, j) - t.product_basis(j, i);
      Matrix lhs(n, n);
      for (std::size_t m = 0; m < n; ++m)
        if (!d[m].is_zero()) lhs = lhs + d[m] * left[m];
      Matrix diff = lhs - commutator(left[i], left[j]);
      if (diff.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Vector col = diff.column(k);
        if (!is_zero(col)) return Witness{{i, j, k}, col};
      }
    }
  return std::nullopt;
}

/// The left-symmetric product of a symplectic Lie algebra: x.y is the unique
/// vector with w(x.y, z) = -w(y, [x, z]) for all z.
inline LSATable lsa_product(const SymplecticStructure& s) {
  const std::size_t n = s.dim();
  const LieAlgebra& l = s.algebra();
  // w(v, e_k) = (w^T v)_k, so v = (w^T)^{-1} rhs.
  auto inv = inverse(s.omega().transpose());
  if (!inv) throw Error(ErrorKind::InternalInvariantViolation, "validated omega is singular");
  std::vector<Rational> a(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs(n);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (!l.structure(i, k, m).is_zero() && !s.omega()(j, m).is_zero())
            rhs[k] -= s.omega()(j, m) * l.structure(i, k, m);
      Vector v = *inv * rhs;
      for (std::size_t k = 0; k < n; ++k) a[(i * n + j) * n + k] = v[k];
    }
  LSATable t(n, std::move(a));
  if (auto w = compatibility_witness(t, l))
    throw Error(ErrorKind::InternalInvariantViolation, "LSA product is not compatible with the bracket", *w);
  if (auto w = left_symmetry_witness(t))
    throw Error(ErrorKind::InternalInvariantViolation, "LSA product is not left-symmetric", *w);
  return t;
}

/// delta alpha (x, y) = -alpha([x, y]).
inline Matrix coboundary(const LieAlgebra& l, std::span<const Rational> alpha) {
  const std::size_t n = l.dim();
  if (alpha.size() != n) throw Error(ErrorKind::DimensionMismatch, "coboundary: covector length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = -dot(l.bracket_basis(i, j), alpha);
  if (auto w = closedness_witness(l, m))
    throw Error(ErrorKind::InternalInvariantViolation, "coboundary is not closed", *w);
  return m;
}

/// alpha with coboundary(alpha) == omega (free variables zero), if one exists.
inline std::optional<Vector> frobenius_solve(const SymplecticStructure& s) {
  const std::size_t n = s.dim();
  const LieAlgebra& l = s.algebra();
  std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  Matrix a(pairs, n);
  Vector b(pairs);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++r) {
      for (std::size_t k = 0; k < n; ++k) a(r, k) = -l.structure(i, j, k);
      b[r] = s.omega()(i, j);
    }
  auto alpha = solve(a, b);
  if (alpha && !(coboundary(l, *alpha) == s.omega()))
    throw Error(ErrorKind::InternalInvariantViolation, "Frobenius solution fails the round trip", Witness{{}, *alpha});
  return alpha;
}

/// {y : w(x, y) = 0 for all x in w_sub}.
inline Subspace orthogonal(const SymplecticStructure& s, const Subspace& w_sub) {
  if (w_sub.ambient_dim() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "orthogonal: ambient dimension");
  if (w_sub.is_zero()) return Subspace::full(s.dim());
  return kernel(w_sub.basis() * s.omega());
}

enum class SubspaceKind { symplectic, isotropic, coisotropic, lagrangian, generic };

inline std::string_view to_string(SubspaceKind k) {
  switch (k) {
    case SubspaceKind::symplectic: return "symplectic";
    case SubspaceKind::isotropic: return "isotropic";
    case SubspaceKind::coisotropic: return "coisotropic";
    case SubspaceKind::lagrangian: return "Lagrangian";
    case SubspaceKind::generic: return "generic";
  }
  return "generic";
}

struct Classification {
  SubspaceKind kind = SubspaceKind::generic;
  bool isotropic = false;
  bool coisotropic = false;
  bool symplectic = false;
};

/// Kind precedence: Lagrangian, symplectic, isotropic, coisotropic, generic.
/// All flags are reported independently.
inline Classification classify(const SymplecticStructure& s, const Subspace& w_sub) {
  Subspace orth = orthogonal(s, w_sub);
  Classification c;
  c.isotropic = orth.contains(w_sub);
  c.coisotropic = w_sub.contains(orth);
  c.symplectic = w_sub.intersect(orth).is_zero();
  if (c.isotropic && c.coisotropic)
    c.kind = SubspaceKind::lagrangian;
  else if (c.symplectic)
    c.kind = SubspaceKind::symplectic;
  else if (c.isotropic)
    c.kind = SubspaceKind::isotropic;
  else if (c.coisotropic)
    c.kind = SubspaceKind::coisotropic;
  return c;
}

/// The quotient A/B of a subalgebra A by an ideal B of A, with the form
/// restricted to representatives. Representatives are the rows of A's basis
/// at the non-pivot positions of B written in A-coordinates.
struct Quotient {
  LieAlgebra algebra;
  Matrix omega;
  std::vector<Vector> lift;  // ambient vectors representing the quotient basis
  Matrix projection;         // A-coordinates -> quotient coordinates
};

inline Quotient quotient(const SymplecticStructure& s, const Subspace& a, const Subspace& b) {
  const LieAlgebra& l = s.algebra();
  const std::size_t da = a.dim();
  std::vector<Vector> b_in_a;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto c = a.coordinates(b.basis().row(i));
    if (!c) throw Error(ErrorKind::InternalInvariantViolation, "quotient: B is not inside A");
    b_in_a.push_back(std::move(*c));
  }
  Subspace b_coords = Subspace::span(da, b_in_a);
  std::vector<std::size_t> axes = b_coords.complement_axes();
  const std::size_t r = axes.size();

  // Rows of `change`: complement axes, then B; A-coordinates = change^T q.
  Matrix change(da, da);
  for (std::size_t i = 0; i < r; ++i) change(i, axes[i]) = 1;
  for (std::size_t i = 0; i < b_coords.dim(); ++i)
    for (std::size_t c = 0; c < da; ++c) change(r + i, c) = b_coords.basis()(i, c);
  auto inv = inverse(change.transpose());
  if (!inv) throw Error(ErrorKind::InternalInvariantViolation, "quotient: complement is not complementary");
  Matrix proj(r, da);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < da; ++c) proj(i, c) = (*inv)(i, c);

  Quotient q;
  for (std::size_t i = 0; i < r; ++i) q.lift.push_back(a.basis_vector(axes[i]));
  std::vector<Rational> tensor(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vector br = l.bracket(q.lift[i], q.lift[j]);
      auto in_a = a.coordinates(br);
      if (!in_a) throw Error(ErrorKind::InternalInvariantViolation, "quotient: A is not a subalgebra", Witness{{i, j}, br});
      Vector red = proj * *in_a;
      for (std::size_t k = 0; k < r; ++k) tensor[(i * r + j) * r + k] = red[k];
    }
  q.omega = Matrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) q.omega(i, j) = s.form(q.lift[i], q.lift[j]);
  try {
    q.algebra = LieAlgebra::from_tensor(r, std::move(tensor));
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalInvariantViolation, std::string("quotient bracket invalid: ") + e.what(), e.witness());
  }
  q.projection = std::move(proj);
  return q;
}

/// Pair (a, b) of basis indices of `left` and `right` whose LSA product leaves
/// `target`.
inline std::optional<Witness> lsa_closure_witness(const LSATable& t, const Subspace& left, const Subspace& right,
                                                  const Subspace& target) {
  for (std::size_t a = 0; a < left.dim(); ++a)
    for (std::size_t b = 0; b < right.dim(); ++b) {
      Vector v = t.product(left.basis().row(a), right.basis().row(b));
      if (!target.contains(v)) return Witness{{a, b}, v};
    }
  return std::nullopt;
}

inline bool is_lsa_subalgebra(const LSATable& t, const Subspace& s) { return !lsa_closure_witness(t, s, s, s); }

enum class ReductionMode { discrete, reduced };

inline std::string_view to_string(ReductionMode m) { return m == ReductionMode::discrete ? "discrete" : "reduced"; }

/// One symplectic reduction by an ideal I.
struct ReductionStep {
  SymplecticStructure ambient;
  Subspace iso_basis;     // I
  Subspace orth_basis;    // I^perp
  Subspace kernel_basis;  // K = I cap I^perp
  SymplecticStructure reduced;               // I^perp / K
  std::optional<SymplecticStructure> ideal;  // I with the restricted form (discrete mode only)
  std::vector<Vector> lift;                  // ambient representatives of the reduced basis
  Matrix projection;                         // I^perp-coordinates -> reduced coordinates
  ReductionMode mode = ReductionMode::reduced;
};

namespace detail {

inline SymplecticStructure validated_quotient(const Quotient& q, std::string_view what) {
  try {
    return SymplecticStructure::make(q.algebra, q.omega);
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalInvariantViolation, std::string(what) + ": " + e.what(), e.witness());
  }
}

inline void require(std::optional<Witness> w, std::string_view what) {
  if (w) throw Error(ErrorKind::InternalInvariantViolation, std::string(what), *w);
}

}  // namespace detail

/// Reduction by an ideal. With K = 0 the algebra splits as I x I^perp and both
/// factors are returned with their restricted forms; otherwise K is an
/// ideal of I^perp with zero induced product and I^perp/K carries the
/// pushed-forward nondegenerate form.
inline ReductionStep reduce(const SymplecticStructure& s, const Subspace& ideal) {
  const LieAlgebra& l = s.algebra();
  if (auto w = ideal_witness(l, ideal)) throw Error(ErrorKind::NotAnIdeal, "reduce requires an ideal", *w);
  ReductionStep step;
  step.ambient = s;
  step.iso_basis = ideal;
  step.orth_basis = orthogonal(s, ideal);
  step.kernel_basis = ideal.intersect(step.orth_basis);
  const Subspace& orth = step.orth_basis;
  const Subspace& k = step.kernel_basis;

  LSATable t = lsa_product(s);
  detail::require(lsa_closure_witness(t, orth, orth, orth), "I^perp is not closed under the LSA product");
  detail::require(subalgebra_witness(l, orth), "I^perp is not a Lie subalgebra");

  const Subspace none = Subspace::zero(s.dim());
  if (k.is_zero()) {
    step.mode = ReductionMode::discrete;
    if (ideal.dim() + orth.dim() != s.dim())
      throw Error(ErrorKind::InternalInvariantViolation, "dim I + dim I^perp != dim");
    Quotient qi = quotient(s, ideal, none);
    step.ideal = detail::validated_quotient(qi, "restriction to I");
    Quotient qo = quotient(s, orth, none);
    step.reduced = detail::validated_quotient(qo, "restriction to I^perp");
    step.lift = std::move(qo.lift);
    step.projection = std::move(qo.projection);
    return step;
  }

  step.mode = ReductionMode::reduced;
  detail::require(lsa_closure_witness(t, orth, k, k), "K is not a left LSA ideal of I^perp");
  detail::require(lsa_closure_witness(t, k, orth, k), "K is not a right LSA ideal of I^perp");
  detail::require(lsa_closure_witness(t, k, k, none), "induced product on K is not zero");
  for (std::size_t a = 0; a < orth.dim(); ++a)
    for (std::size_t b = 0; b < k.dim(); ++b) {
      Vector v = l.bracket(orth.basis().row(a), k.basis().row(b));
      if (!k.contains(v)) throw Error(ErrorKind::InternalInvariantViolation, "K is not a Lie ideal of I^perp", Witness{{a, b}, v});
    }
  Quotient q = quotient(s, orth, k);
  step.reduced = detail::validated_quotient(q, "reduced form");
  step.lift = std::move(q.lift);
  step.projection = std::move(q.projection);
  return step;
}

struct MomentumSeries {
  Vector value;
  /// Largest k whose term (1/k!) ad*(x)^{k-1} i(x)w is nonzero; 0 if none.
  std::size_t order = 0;
};

/// sum_{k >= 1} (1/k!) ad*(x)^{k-1} i(x)w. Without `max_order`, ad*(x) must be
/// nilpotent and the series is summed to termination; otherwise it is
/// truncated after `max_order` terms.
inline MomentumSeries momentum_cocycle(const SymplecticStructure& s, std::span<const Rational> x,
                                       std::optional<std::size_t> max_order = std::nullopt) {
  const std::size_t n = s.dim();
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "momentum_cocycle: coordinate length");
  Matrix coad = s.algebra().coad_matrix(x);
  std::size_t terms = 0;
  if (max_order) {
    terms = *max_order;
  } else {
    if (!power(coad, static_cast<unsigned>(n)).is_zero())
      throw Error(ErrorKind::NotNilpotent, "ad*(x) is not nilpotent", Witness{{}, Vector(x.begin(), x.end())});
    terms = n;
  }
  MomentumSeries out{Vector(n), 0};
  Vector term = s.contract(x);
  for (std::size_t k = 1; k <= terms; ++k) {
    if (k > 1) term = coad * term;
    if (is_zero(term)) break;
    out.value = out.value + (Rational(1) / factorial(static_cast<unsigned>(k))) * term;
    out.order = k;
  }
  return out;
}

}  // namespace symplie
