#ifndef MALCEV_CONSTRUCTIONS_HPP
#define MALCEV_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/report.hpp"

namespace malcev {

/// A scalar algebra failed one of the commutative, associative, unital axioms.
class ScalarAlgebraError : public AlgebraError {
public:
  ScalarAlgebraError(const std::string& what, IdentityReport report)
      : AlgebraError(what), report_(std::move(report)) {}
  const IdentityReport& report() const { return report_; }

private:
  IdentityReport report_;
};

/// A pairing violates skewness, bilinearity or one of its defining relations.
class PairingError : public AlgebraError {
public:
  PairingError(const std::string& what, IdentityReport report) : AlgebraError(what), report_(std::move(report)) {}
  const IdentityReport& report() const { return report_; }

private:
  IdentityReport report_;
};

/// Commutative associative unital algebra used as a coefficient ring.
struct CommutativeScalarAlgebra {
  Algebra algebra;
  Vector unit;

  std::size_t dim() const { return algebra.dim(); }
  Vector mul(const Vector& x, const Vector& y) const { return algebra.multiply(x, y); }
  Vector scalar(const Rational& q) const { return q * unit; }
};

/// Scans commutativity (pairs), associativity (triples) and the unit law; reports the first failure.
IdentityReport scalar_algebra_report(const Algebra& a, const Vector& unit);
CommutativeScalarAlgebra verify_scalar_algebra(const Algebra& a, const Vector& unit);
/// Solves for a two-sided unit; returns nullopt when none exists.
std::optional<Vector> find_unit(const Algebra& a);

CommutativeScalarAlgebra rationals();
/// Q[t]/(t^k) with basis 1, t, ..., t^(k-1).
CommutativeScalarAlgebra truncated_polynomials(std::size_t k);
/// Q x ... x Q (k factors) with basis of orthogonal idempotents e1..ek.
CommutativeScalarAlgebra rational_product(std::size_t k);

// --- Pairings --------------------------------------------------------------

/// Skew U-valued form on a U-module V, stored over a Q-basis w_0..w_{n-1} of V.
///
/// `action[k]` is the matrix of w -> w*u_k on V coordinates, where u_k runs over
/// the basis of U. `entries[i][j]` is the U-coordinate vector of <w_i, w_j>.
/// For a free module B^r the Q-basis is e_k (x) b_i, ordered k-major, and
/// `rank` records r.
struct PairingForm {
  CommutativeScalarAlgebra scalars;
  std::size_t v_dim = 0;
  std::size_t rank = 0;
  std::vector<Matrix> action;
  std::vector<std::vector<Vector>> entries;

  /// <x, y> for V vectors given in Q-coordinates.
  Vector evaluate(const Vector& x, const Vector& y) const;
  /// w * u for w in V and u in U.
  Vector act(const Vector& w, const Vector& u) const;
};

/// Free module B^r with the pairing <e_k, e_l> = grid[k][l] extended B-bilinearly.
PairingForm free_pairing(const CommutativeScalarAlgebra& b, std::size_t r, const std::vector<std::vector<Vector>>& grid);
/// <(a,b),(c,d)> = -4 alpha (ad - bc) on B^2.
PairingForm det_pairing(const CommutativeScalarAlgebra& b, const Vector& alpha);
/// Q-coordinates of the vector (c_1, ..., c_r) of B^r with B-valued components.
Vector free_vector(const CommutativeScalarAlgebra& b, const std::vector<Vector>& components);

/// Runs, in order: module axioms, U-bilinearity, skewness, the cyclic relation
/// w<u,v> + u<v,w> + v<w,u> = 0 on basis triples, and the quadratic relation
/// <w,t><u,v> + <u,t><v,w> + <v,t><w,u> = 0 on basis quadruples.
IdentityReport pairing_report(const PairingForm& p);

// --- sl2 and its extensions ------------------------------------------------

/// Basis E, F, H with EH = E, FH = -F, EF = H/2.
Algebra sl2();

/// Trace-zero matrices over B, basis X*b for X in (E, F, H), X-major.
Algebra sl2_of(const CommutativeScalarAlgebra& b);

/// 2x2 matrix over B, entries (a, b; c, d) stored row-major as B-vectors.
struct Mat2 {
  std::array<Vector, 4> e;

  const Vector& at(int r, int c) const { return e[r * 2 + c]; }
  Vector& at(int r, int c) { return e[r * 2 + c]; }
};

Mat2 mat2_zero(const CommutativeScalarAlgebra& b);
Mat2 mat2_mul(const CommutativeScalarAlgebra& b, const Mat2& x, const Mat2& y);
Mat2 mat2_sub(const Mat2& x, const Mat2& y);
Mat2 mat2_scale(const CommutativeScalarAlgebra& b, const Vector& s, const Mat2& x);
/// (a b; c d) -> (d -b; -c a)
Mat2 symplectic_star(const Mat2& x);

/// Coordinates in sl2_of(b) of a trace-zero matrix, and back.
Vector sl2_coords(const CommutativeScalarAlgebra& b, const Mat2& m);
Mat2 sl2_matrix(const CommutativeScalarAlgebra& b, const Vector& coords);

/// sl2(B) + V(1) + V(2) with the product built from the pairing. The V part
/// lists w(1), w(2) for each Q-basis vector w of V. Refuses pairings that fail
/// pairing_report.
Algebra build_extension(const CommutativeScalarAlgebra& b, const PairingForm& pairing, std::string name = {});

/// sl2(B) + vM2(B) with A.B = AB - BA, A.vB = v(A*B - AB), vA.vB = BA* - AB*.
Algebra m7_of(const CommutativeScalarAlgebra& b);
/// As m7_of with the vM2 x vM2 block scaled by alpha.
Algebra m_tilde(const CommutativeScalarAlgebra& b, const Vector& alpha);
/// Coordinates of vM in m7_of(b) and m_tilde(b, alpha).
Vector odd_coords(const CommutativeScalarAlgebra& b, const Mat2& m);

/// The five-dimensional non-Lie table on E, F, H, u(1), u(2).
Algebra m5();
/// The seven-dimensional table on E, F, H, u(1), u(2), v(1), v(2) with <u,v> = lambda.
Algebra m7_scalar(const Rational& lambda);

// --- Plucker relations -----------------------------------------------------

/// Sparse polynomial over Q in a fixed number of variables.
class SparsePoly {
public:
  using Exponents = std::vector<unsigned>;

  explicit SparsePoly(std::size_t variables = 0) : vars_(variables) {}
  static SparsePoly constant(std::size_t variables, const Rational& c);
  static SparsePoly variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Terms in graded lexicographic order.
  std::vector<std::pair<Exponents, Rational>> terms() const;
  Rational evaluate(const std::vector<Rational>& point) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

private:
  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  void add_term(const Exponents& e, const Rational& c);

  std::size_t vars_;
  std::map<Exponents, Rational, GradedLex> terms_;
};

/// Skewness and u_ij u_kl + u_ik u_lj + u_il u_jk = 0 over a grid of scalar-algebra values.
IdentityReport plucker_check(const CommutativeScalarAlgebra& b, const std::vector<std::vector<Vector>>& grid);
/// The same scan over polynomial entries; failure values are omitted.
IdentityReport plucker_check(const std::vector<std::vector<SparsePoly>>& grid);
/// alpha_ij = x_i y_j - x_j y_i in Q[x_1..x_n, y_1..y_n], checked against the relations.
IdentityReport det_plucker_generators(std::size_t n);
std::vector<std::vector<SparsePoly>> det_minors(std::size_t n);

} // namespace malcev

#endif
