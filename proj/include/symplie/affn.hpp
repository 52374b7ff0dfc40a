#pragma once

// The affine Lie algebra aff(R^n) = R^n x gl(R^n) as a Frobenius Lie algebra.
//
// Basis order: translations t_0..t_{n-1}, then matrix units E_ij row-major
// (index n + i*n + j). Bracket: [(x,u), (y,v)] = (u y - v x, [u, v]).
// A functional (g, M) acts as alpha(x, u) = g(x) + tr(M u).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symplie/symplectic.hpp"

namespace symplie {

struct AffFunctional {
  std::size_t n = 0;
  Vector g;
  Matrix M;
};

/// Group element (x, T) acting by y -> T y + x.
struct AffGroupElement {
  Vector x;
  Matrix T;
};

inline std::size_t aff_dim(std::size_t n) { return n * (n + 1); }
inline std::size_t aff_unit_index(std::size_t n, std::size_t i, std::size_t j) { return n + i * n + j; }

inline LieAlgebra build_aff(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eij = aff_unit_index(n, i, j);
      // [E_ij, t_j] = t_i
      br.push_back({eij, j, {{i, 1}}});
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t ekl = aff_unit_index(n, k, l);
          if (ekl <= eij) continue;
          // [E_ij, E_kl] = d_jk E_il - d_li E_kj
          std::vector<BracketTerm> out;
          if (j == k && l == i) {
            if (i != j) {
              out.push_back({aff_unit_index(n, i, i), 1});
              out.push_back({aff_unit_index(n, j, j), -1});
            }
          } else if (j == k) {
            out.push_back({aff_unit_index(n, i, l), 1});
          } else if (l == i) {
            out.push_back({aff_unit_index(n, k, j), -1});
          }
          if (!out.empty()) br.push_back({eij, ekl, std::move(out)});
        }
    }
  return LieAlgebra::make(aff_dim(n), br, std::move(names));
}

/// aff coordinates of (y, v).
inline Vector aff_vector(std::span<const Rational> y, const Matrix& v) {
  const std::size_t n = y.size();
  Vector out(aff_dim(n));
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[aff_unit_index(n, i, j)] = v(i, j);
  return out;
}

/// Regular nilpotent N with N e_k = e_{k+1}, N e_{n-1} = 0.
inline Matrix nilblock(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) m(k + 1, k) = 1;
  return m;
}

/// (g = last dual basis vector, M = nilblock), the regular nilpotent pair.
inline AffFunctional regular_pair(std::size_t n) { return {n, unit_vector(n, n - 1), nilblock(n)}; }

namespace detail {

inline void check_functional(const AffFunctional& a) {
  if (a.g.size() != a.n || a.M.rows() != a.n || a.M.cols() != a.n)
    throw Error(ErrorKind::DimensionMismatch, "functional (g, M) does not match n");
}

inline void check_element(const AffGroupElement& el) {
  if (el.T.rows() != el.x.size() || el.T.cols() != el.x.size())
    throw Error(ErrorKind::DimensionMismatch, "group element (x, T) sizes differ");
}

inline Matrix checked_inverse(const Matrix& t) {
  auto inv = inverse(t);
  if (!inv) throw Error(ErrorKind::SingularT, "T is singular", Witness{{}, kernel(t).basis_vector(0)});
  return *inv;
}

}  // namespace detail

/// Coordinates of alpha in the dual of the aff basis; tr(M E_ij) = M[j][i].
inline Vector functional_covector(const AffFunctional& a) {
  detail::check_functional(a);
  return aff_vector(a.g, a.M.transpose());
}

inline Matrix delta_alpha(const AffFunctional& a) { return coboundary(build_aff(a.n), functional_covector(a)); }

inline bool orbit_is_open(const AffFunctional& a) { return !det(delta_alpha(a)).is_zero(); }

/// aff(R^n) with w = delta alpha; OrbitNotOpen when degenerate.
inline SymplecticStructure aff_symplectic(const AffFunctional& a) {
  Matrix omega = delta_alpha(a);
  Subspace rad = kernel(omega);
  if (!rad.is_zero()) throw Error(ErrorKind::OrbitNotOpen, "delta alpha is degenerate", Witness{{}, rad.basis_vector(0)});
  return SymplecticStructure::make(build_aff(a.n), std::move(omega));
}

/// Rows g M^0, g M^1, ..., g M^{n-1}.
inline Matrix krylov_rows(const AffFunctional& a) {
  detail::check_functional(a);
  Matrix k(a.n, a.n);
  Vector row = a.g;
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t c = 0; c < a.n; ++c) k(i, c) = row[c];
    row = left_multiply(row, a.M);
  }
  return k;
}

/// Sign of det of the rows tM^{n-1} g, ..., tM g, g.
inline int orientation(const AffFunctional& a) {
  Matrix omega = delta_alpha(a);
  if (det(omega).is_zero())
    throw Error(ErrorKind::OrbitNotOpen, "orientation needs an open orbit", Witness{{}, kernel(omega).basis_vector(0)});
  Matrix k = krylov_rows(a);
  Matrix flipped(a.n, a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t c = 0; c < a.n; ++c) flipped(i, c) = k(a.n - 1 - i, c);
  return det(flipped).sign();
}

/// (x1, T1)(x2, T2) = (x1 + T1 x2, T1 T2).
inline AffGroupElement compose(const AffGroupElement& a, const AffGroupElement& b) {
  detail::check_element(a);
  detail::check_element(b);
  return {a.x + (a.T * b.x), a.T * b.T};
}

/// Ad* of (x, T) = (x, I)(0, T):
///   Ad*_(0,U) (h, N) = (tU^{-1} h, U N U^{-1}),
///   Ad*_(x,I) (h, N) = (h, N + h x x) with (h x x)(y) = h(y) x.
/// This is a left action: apply(a b) = apply(a) o apply(b).
inline AffFunctional coadjoint_apply(const AffGroupElement& el, const AffFunctional& beta) {
  detail::check_functional(beta);
  detail::check_element(el);
  if (el.x.size() != beta.n) throw Error(ErrorKind::DimensionMismatch, "element and functional sizes differ");
  const std::size_t n = beta.n;
  Matrix tinv = detail::checked_inverse(el.T);
  AffFunctional out{n, tinv.transpose() * beta.g, el.T * beta.M * tinv};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!el.x[i].is_zero() && !out.g[j].is_zero()) out.M(i, j) += el.x[i] * out.g[j];
  return out;
}

/// Momentum map of the translation subgroup: J_H(x, T) = tT^{-1} g.
inline Vector momentum_translations(std::span<const Rational> g, const AffGroupElement& el) {
  detail::check_element(el);
  if (g.size() != el.x.size()) throw Error(ErrorKind::DimensionMismatch, "covector and element sizes differ");
  return detail::checked_inverse(el.T).transpose() * g;
}

/// x with g(M^i x) = 0 for i < n-1 and g(M^{n-1} x) = 1.
inline Vector cyclic_vector(const AffFunctional& a) {
  Matrix k = krylov_rows(a);
  Subspace null = kernel(k);
  if (!null.is_zero()) throw Error(ErrorKind::NoCyclicVector, "g is not cyclic for tM", Witness{{}, null.basis_vector(0)});
  auto x = solve(k, unit_vector(a.n, a.n - 1));
  if (!x) throw Error(ErrorKind::InternalInvariantViolation, "nonsingular Krylov system has no solution");
  return *x;
}

namespace detail {

inline void require_open_nilpotent(const AffFunctional& a) {
  Matrix omega = delta_alpha(a);
  if (det(omega).is_zero())
    throw Error(ErrorKind::OrbitNotOpen, "coadjoint orbit is not open", Witness{{}, kernel(omega).basis_vector(0)});
  if (!power(a.M, static_cast<unsigned>(a.n)).is_zero()) throw Error(ErrorKind::NotNilpotent, "M is not nilpotent");
}

inline Matrix top_left(const Matrix& m, std::size_t k) {
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace detail

/// The functional of the reduced algebra aff(Ker g).
struct ReducedPair {
  Vector g1;                       // tM g, as a covector on R^n
  Matrix M1;                       // compression of M to Ker g along M^{n-1} x
  std::vector<Vector> kernel_basis;  // canonical basis of Ker g
  Vector supplement;               // M^{n-1} x
  /// (g1 restricted to Ker g, M1) in kernel_basis coordinates.
  [[nodiscard]] AffFunctional next() const {
    const std::size_t m = kernel_basis.size();
    Vector g(m);
    for (std::size_t a = 0; a < m; ++a) g[a] = dot(g1, kernel_basis[a]);
    return {m, std::move(g), M1};
  }
};

/// Solves tr(M u) = g1(u(M^{n-1} x)) + tr(M1 u') where u' is u restricted to
/// Ker g and projected along M^{n-1} x. The identity is checked on every
/// matrix unit.
inline ReducedPair reduced_pair(const AffFunctional& a) {
  detail::require_open_nilpotent(a);
  const std::size_t n = a.n;
  Vector x = cyclic_vector(a);
  ReducedPair rp;
  rp.supplement = power(a.M, static_cast<unsigned>(n - 1)) * x;
  Matrix grow(1, n);
  for (std::size_t c = 0; c < n; ++c) grow(0, c) = a.g[c];
  rp.kernel_basis = kernel(grow).basis_vectors();
  std::vector<Vector> cols = rp.kernel_basis;
  cols.push_back(rp.supplement);
  Matrix change = Matrix::from_columns(cols, n);
  Matrix cinv = detail::checked_inverse(change);
  rp.M1 = detail::top_left(cinv * a.M * change, n - 1);
  rp.g1 = left_multiply(a.g, a.M);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix u(n, n);
      u(i, j) = 1;
      Matrix u_red = detail::top_left(cinv * u * change, n - 1);
      Rational rhs = rp.g1[i] * rp.supplement[j] + (rp.M1 * u_red).trace();
      if (a.M(j, i) != rhs)
        throw Error(ErrorKind::InternalInvariantViolation, "trace identity fails on a matrix unit", Witness{{i, j}, {}});
    }
  if (!power(rp.M1, static_cast<unsigned>(n - 1)).is_zero())
    throw Error(ErrorKind::InternalInvariantViolation, "M1 is not nilpotent");
  return rp;
}

/// Commutant {u : [u, M] = 0} embedded in aff as (0, u).
inline Subspace commutant(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix eq(n * n, n * n);
  // ([u, M])_ij = sum_k u_ik M_kj - M_ik u_kj, unknown u_pq at column p*n + q.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        eq(i * n + j, i * n + k) += m(k, j);
        eq(i * n + j, k * n + j) -= m(i, k);
      }
  Subspace gl = kernel(eq);
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < gl.dim(); ++r) {
    Vector v(aff_dim(n));
    for (std::size_t c = 0; c < n * n; ++c) v[n + c] = gl.basis()(r, c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(aff_dim(n), gens);
}

inline Subspace translations(std::size_t n) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vector(aff_dim(n), i));
  return Subspace::span(aff_dim(n), gens);
}

struct Splitting {
  Subspace ideal;   // translations I
  Subspace orth;    // I^perp under delta alpha
  Subspace commutant;  // C(M) embedded in gl
  bool direct_sum = false;        // aff = I^perp (+) C(M)
  bool subalgebras = false;       // I^perp and C(M) are Lie subalgebras
  bool lsa_ideal = false;         // I is a 2-sided LSA ideal of I^perp
};

inline Splitting orthogonal_splitting(const AffFunctional& a) {
  SymplecticStructure s = aff_symplectic(a);
  const LieAlgebra& l = s.algebra();
  Splitting sp;
  sp.ideal = translations(a.n);
  sp.orth = orthogonal(s, sp.ideal);
  sp.commutant = commutant(a.M);
  sp.direct_sum = sp.orth.intersect(sp.commutant).is_zero() && sp.orth.dim() + sp.commutant.dim() == l.dim();
  sp.subalgebras = is_subalgebra(l, sp.orth) && is_subalgebra(l, sp.commutant);
  LSATable t = lsa_product(s);
  sp.lsa_ideal = sp.orth.contains(sp.ideal) && !lsa_closure_witness(t, sp.orth, sp.ideal, sp.ideal) &&
                 !lsa_closure_witness(t, sp.ideal, sp.orth, sp.ideal);
  return sp;
}

struct DecompositionReport {
  Vector cyclic_x;
  Matrix B;  // columns x, Nx, ..., N^{n-1} x
  Subspace L_sub;
  Subspace Lprime_sub;
  std::vector<Subspace> K_list;  // K_n, ..., K_1
  std::vector<Subspace> C_list;  // C(N), C(N_1), ..., C(N_{n-1})
  std::vector<AffFunctional> reduced_pairs;  // successive reduced functionals, sizes n-1 .. 1

  bool L_subalgebra = false;
  bool Lprime_subalgebra = false;
  bool L_lagrangian = false;
  bool Lprime_lagrangian = false;
  bool transversal = false;
  bool K_sum_is_L = false;
  bool C_sum_is_Lprime = false;
  bool pieces_abelian = false;
  bool pieces_isotropic = false;
  bool reductions_match = false;  // dim K_i equals the i-th translation ideal

  [[nodiscard]] bool all_verified() const {
    return L_subalgebra && Lprime_subalgebra && L_lagrangian && Lprime_lagrangian && transversal && K_sum_is_L &&
           C_sum_is_Lprime && pieces_abelian && pieces_isotropic && reductions_match;
  }
};

/// The transversal Lagrangian subalgebras L (strictly upper triangular) and
/// L' (lower triangular, last row zero) of aff(R^n) seen as (n+1)x(n+1)
/// matrices in the basis B = {x, Nx, ..., N^{n-1} x}.
///
/// K_i (i < n) holds the entries (a, i) with a < i of the linear part
/// (0-based column i); K_n is the translation column. C(N_m) is the commutant
/// of N_m inside gl(span{b_0..b_{m-1}}): span{I_m, N_m, ..., N_m^{m-1}} with
/// I_m the identity on the first m basis vectors.
inline DecompositionReport lagrangian_pair(const AffFunctional& a) {
  detail::require_open_nilpotent(a);
  const std::size_t n = a.n;
  const std::size_t dim = aff_dim(n);
  SymplecticStructure s = aff_symplectic(a);
  const LieAlgebra& l = s.algebra();

  DecompositionReport r;
  r.cyclic_x = cyclic_vector(a);
  std::vector<Vector> cols{r.cyclic_x};
  for (std::size_t k = 1; k < n; ++k) cols.push_back(a.M * cols.back());
  r.B = Matrix::from_columns(cols, n);
  Matrix binv = detail::checked_inverse(r.B);

  auto linear_in_b = [&](const Matrix& vb) { return aff_vector(Vector(n), r.B * vb * binv); };
  auto unit = [&](std::size_t i, std::size_t j) {
    Matrix u(n, n);
    u(i, j) = 1;
    return linear_in_b(u);
  };
  auto translation_in_b = [&](std::size_t i) { return aff_vector(r.B.column(i), Matrix(n, n)); };

  std::vector<Vector> lgens;
  std::vector<Vector> lpgens;
  for (std::size_t i = 0; i < n; ++i) lgens.push_back(translation_in_b(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) (i < j ? lgens : lpgens).push_back(unit(i, j));
  r.L_sub = Subspace::span(dim, lgens);
  r.Lprime_sub = Subspace::span(dim, lpgens);

  {
    std::vector<Vector> kn;
    for (std::size_t i = 0; i < n; ++i) kn.push_back(translation_in_b(i));
    r.K_list.push_back(Subspace::span(dim, kn));
  }
  for (std::size_t col = n - 1; col >= 1; --col) {
    std::vector<Vector> ki;
    for (std::size_t row = 0; row < col; ++row) ki.push_back(unit(row, col));
    r.K_list.push_back(Subspace::span(dim, ki));
  }

  auto commutant_stage = [&](std::size_t m) {
    std::vector<Vector> gens;
    Matrix shift(n, n);
    for (std::size_t k = 0; k + 1 < m; ++k) shift(k + 1, k) = 1;
    Matrix p(n, n);
    for (std::size_t k = 0; k < m; ++k) p(k, k) = 1;
    for (std::size_t e = 0; e < m; ++e) {
      gens.push_back(linear_in_b(p));
      p = shift * p;
    }
    return Subspace::span(dim, gens);
  };
  r.C_list.push_back(commutant_stage(n));
  for (std::size_t m = 1; m < n; ++m) r.C_list.push_back(commutant_stage(m));

  auto direct_sum_equals = [&](const std::vector<Subspace>& parts, const Subspace& whole) {
    Subspace acc = Subspace::zero(dim);
    std::size_t total = 0;
    for (const auto& p : parts) {
      acc = acc.sum(p);
      total += p.dim();
    }
    return total == whole.dim() && acc == whole;
  };

  r.L_subalgebra = is_subalgebra(l, r.L_sub);
  r.Lprime_subalgebra = is_subalgebra(l, r.Lprime_sub);
  r.L_lagrangian = classify(s, r.L_sub).kind == SubspaceKind::lagrangian;
  r.Lprime_lagrangian = classify(s, r.Lprime_sub).kind == SubspaceKind::lagrangian;
  r.transversal = r.L_sub.intersect(r.Lprime_sub).is_zero();
  r.K_sum_is_L = direct_sum_equals(r.K_list, r.L_sub);
  r.C_sum_is_Lprime = direct_sum_equals(r.C_list, r.Lprime_sub);

  r.pieces_abelian = true;
  r.pieces_isotropic = true;
  auto inspect = [&](const Subspace& p) {
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = i + 1; j < p.dim(); ++j) {
        if (!is_zero(l.bracket(p.basis().row(i), p.basis().row(j)))) r.pieces_abelian = false;
        if (!s.form(p.basis().row(i), p.basis().row(j)).is_zero()) r.pieces_isotropic = false;
      }
  };
  for (const auto& p : r.K_list) inspect(p);
  for (const auto& p : r.C_list) inspect(p);

  AffFunctional cur = a;
  r.reductions_match = r.K_list.front() == translations(n);
  while (cur.n > 1) {
    cur = reduced_pair(cur).next();
    r.reduced_pairs.push_back(cur);
    // the K for this stage has dimension equal to the stage's translation count
    const std::size_t stage = r.reduced_pairs.size();
    if (r.K_list.at(stage).dim() != cur.n) r.reductions_match = false;
  }
  return r;
}

}  // namespace symplie
