#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <random>

#include "malcev/constructions.hpp"
#include "malcev/identities.hpp"
#include "oracles.hpp"

using namespace malcev;

namespace {

/// Independent 2x2 matrices over a scalar algebra, row-major.
using M2 = std::array<Vector, 4>;

M2 m2_zero(const CommutativeScalarAlgebra& b) { return {Vector(b.dim()), Vector(b.dim()), Vector(b.dim()), Vector(b.dim())}; }

M2 m2_mul(const CommutativeScalarAlgebra& b, const M2& x, const M2& y) {
  M2 out = m2_zero(b);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) out[r * 2 + c] = out[r * 2 + c] + b.mul(x[r * 2 + k], y[k * 2 + c]);
  return out;
}

M2 m2_sub(const M2& x, const M2& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]}; }

M2 m2_star(const M2& x) { return {x[3], -x[1], -x[2], x[0]}; }

/// Basis element i of the even part, realized with E = (0 0; 1/2 0), F = (0 -1/2; 0 0), H = (1/2 0; 0 -1/2).
M2 even_basis(const CommutativeScalarAlgebra& b, std::size_t idx) {
  const std::size_t d = b.dim();
  const std::size_t x = idx / d;
  const Vector beta = Rational(1, 2) * b.algebra.basis_vector(idx % d);
  M2 m = m2_zero(b);
  if (x == 0) m[2] = beta;
  if (x == 1) m[1] = -beta;
  if (x == 2) {
    m[0] = beta;
    m[3] = -beta;
  }
  return m;
}

/// Coordinates of a trace-free matrix (p q; r -p): E-block 2r, F-block -2q, H-block 2p.
Vector even_coords(const CommutativeScalarAlgebra& b, const M2& m, std::size_t n) {
  const std::size_t d = b.dim();
  REQUIRE(is_zero(m[0] + m[3]));
  Vector out(n);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = 2 * m[2][i];
    out[d + i] = -2 * m[1][i];
    out[2 * d + i] = 2 * m[0][i];
  }
  return out;
}

/// Odd basis element at index 3d + (col*d + i)*2 + row is v times beta_i in entry (row, col).
M2 odd_basis(const CommutativeScalarAlgebra& b, std::size_t idx) {
  const std::size_t d = b.dim();
  const std::size_t k = idx - 3 * d;
  const std::size_t row = k % 2;
  const std::size_t col = (k / 2) / d;
  const std::size_t i = (k / 2) % d;
  M2 m = m2_zero(b);
  m[row * 2 + col] = b.algebra.basis_vector(i);
  return m;
}

Vector odd_vector(const CommutativeScalarAlgebra& b, const M2& m) {
  const std::size_t d = b.dim();
  Vector out(7 * d);
  for (std::size_t row = 0; row < 2; ++row)
    for (std::size_t col = 0; col < 2; ++col)
      for (std::size_t i = 0; i < d; ++i) out[3 * d + (col * d + i) * 2 + row] = m[row * 2 + col][i];
  return out;
}

/// Product of basis elements i, j of the Cayley-Dickson type algebra from the defining formulas.
Vector cd_product(const CommutativeScalarAlgebra& b, const Vector& alpha, std::size_t i, std::size_t j) {
  const std::size_t d = b.dim();
  const std::size_t n = 7 * d;
  const bool oi = i >= 3 * d;
  const bool oj = j >= 3 * d;
  if (!oi && !oj) {
    M2 x = even_basis(b, i), y = even_basis(b, j);
    return even_coords(b, m2_sub(m2_mul(b, x, y), m2_mul(b, y, x)), n);
  }
  if (!oi) {
    M2 a = even_basis(b, i), m = odd_basis(b, j);
    return odd_vector(b, m2_sub(m2_mul(b, m2_star(a), m), m2_mul(b, a, m)));
  }
  if (!oj) return -cd_product(b, alpha, j, i);
  M2 x = odd_basis(b, i), y = odd_basis(b, j);
  M2 m = m2_sub(m2_mul(b, y, m2_star(x)), m2_mul(b, x, m2_star(y)));
  for (auto& e : m) e = b.mul(alpha, e);
  return even_coords(b, m, n);
}

std::vector<CommutativeScalarAlgebra> bases() {
  return {rationals(), truncated_polynomials(2), rational_product(2), truncated_polynomials(3)};
}

} // namespace

TEST_CASE("standard scalar algebras are commutative, associative and unital") {
  for (const auto& b : bases()) {
    IdentityReport r = scalar_algebra_report(b.algebra, b.unit);
    CHECK(r.passed);
    auto u = find_unit(b.algebra);
    REQUIRE(u.has_value());
    CHECK(*u == b.unit);
  }
  CHECK(truncated_polynomials(3).algebra.basis_names() == std::vector<std::string>{"1", "t", "t^2"});
  CHECK(rational_product(2).algebra.basis_names() == std::vector<std::string>{"e1", "e2"});
  CHECK(rational_product(2).unit == Vector{1, 1});
}

TEST_CASE("scalar algebra failures name the broken axiom") {
  // a*b = a, everything else zero: not commutative.
  std::vector<Vector> table(4, Vector(2));
  table[1] = {1, 0};
  Algebra nc("nc", {"a", "b"}, table, false);
  CHECK(scalar_algebra_report(nc, {1, 0}).identity == "commutative");
  CHECK_FALSE(find_unit(nc).has_value());

  // Commutative, not associative: a*a = b, a*b = b*a = a.
  std::vector<Vector> t2(4, Vector(2));
  t2[0] = {0, 1};
  t2[1] = {1, 0};
  t2[2] = {1, 0};
  Algebra na("na", {"a", "b"}, t2, false);
  IdentityReport r = scalar_algebra_report(na, {0, 1});
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "associative");

  CHECK(scalar_algebra_report(rationals().algebra, {2}).identity == "unit");
  CHECK_THROWS_AS(verify_scalar_algebra(rationals().algebra, {2}), ScalarAlgebraError);
}

TEST_CASE("free pairings extend the grid bilinearly") {
  std::mt19937 rng(1);
  CommutativeScalarAlgebra b = truncated_polynomials(2);
  std::vector<std::vector<Vector>> grid = {{{0, 0}, {1, 2}}, {{-1, -2}, {0, 0}}};
  PairingForm p = free_pairing(b, 2, grid);
  CHECK(p.v_dim == 4);
  CHECK(p.rank == 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> x = {oracle::random_vector(rng, 2), oracle::random_vector(rng, 2)};
    std::vector<Vector> y = {oracle::random_vector(rng, 2), oracle::random_vector(rng, 2)};
    // <x, y> = sum x_k y_l g_kl
    Vector expect(2);
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) expect = expect + b.mul(b.mul(x[k], y[l]), grid[k][l]);
    CHECK(p.evaluate(free_vector(b, x), free_vector(b, y)) == expect);
    Vector s = oracle::random_vector(rng, 2);
    CHECK(p.act(free_vector(b, x), s) == free_vector(b, {b.mul(x[0], s), b.mul(x[1], s)}));
  }
  CHECK(pairing_report(p).passed);
  CHECK_THROWS_AS(free_pairing(b, 2, {{{0, 0}, {1, 0}}}), DimensionError);
}

TEST_CASE("det pairing is -4 alpha times the determinant") {
  CommutativeScalarAlgebra b = truncated_polynomials(2);
  Vector alpha{2, -1};
  PairingForm p = det_pairing(b, alpha);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Vector a = oracle::random_vector(rng, 2), bb = oracle::random_vector(rng, 2);
    Vector c = oracle::random_vector(rng, 2), dd = oracle::random_vector(rng, 2);
    Vector det = b.mul(a, dd) - b.mul(bb, c);
    CHECK(p.evaluate(free_vector(b, {a, bb}), free_vector(b, {c, dd})) == Rational(-4) * b.mul(alpha, det));
  }
}

TEST_CASE("pairing_report rejects each kind of defect") {
  CommutativeScalarAlgebra q = rationals();
  // Not skew: <e1, e2> = <e2, e1> = 1.
  IdentityReport r = pairing_report(free_pairing(q, 2, {{{0}, {1}}, {{1}, {0}}}));
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "skew");
  CHECK(*r.first_failure == std::vector<std::size_t>{0, 1});

  // Rank three with <e1, e2> = 1: the cyclic relation gives e3 != 0.
  std::vector<std::vector<Vector>> g3(3, std::vector<Vector>(3, Vector{0}));
  g3[0][1] = {1};
  g3[1][0] = {-1};
  r = pairing_report(free_pairing(q, 3, g3));
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "cyclic_relation");
  CHECK(*r.first_failure == std::vector<std::size_t>{0, 1, 2});
  CHECK(*r.failure_value == Vector{0, 0, 1});
  CHECK_THROWS_AS(build_extension(q, free_pairing(q, 3, g3)), PairingError);

  // A zero action is not unital.
  PairingForm bad = free_pairing(q, 1, {{{0}}});
  bad.action[0] = Matrix(1, 1);
  CHECK(pairing_report(bad).identity == "module_unit");

  // An action that is unital but not compatible with the pairing.
  CommutativeScalarAlgebra t = truncated_polynomials(2);
  PairingForm p = free_pairing(t, 2, {{{0, 0}, {1, 0}}, {{-1, 0}, {0, 0}}});
  p.entries[0][2] = {0, 1};
  CHECK(pairing_report(p).identity == "bilinear");
}

TEST_CASE("sl2 and sl2(B) are the trace-free matrices under the commutator") {
  Algebra s = sl2();
  CHECK(s.basis_names() == std::vector<std::string>{"E", "F", "H"});
  CHECK(s.product(0, 2) == Vector{1, 0, 0});
  CHECK(s.product(1, 2) == Vector{0, -1, 0});
  CHECK(s.product(0, 1) == Vector{0, 0, Rational(1, 2)});
  CHECK(check_identity(s, Identity::lie).passed);

  for (const auto& b : bases()) {
    Algebra a = sl2_of(b);
    const std::size_t n = a.dim();
    REQUIRE(n == 3 * b.dim());
    for (std::size_t i = 0; i < n; ++i) {
      M2 x = even_basis(b, i);
      CHECK(sl2_coords(b, Mat2{x}) == a.basis_vector(i));
      CHECK(sl2_matrix(b, a.basis_vector(i)).e == x);
      for (std::size_t j = 0; j < n; ++j) {
        M2 y = even_basis(b, j);
        CHECK(a.product(i, j) == even_coords(b, m2_sub(m2_mul(b, x, y), m2_mul(b, y, x)), n));
      }
    }
    CHECK(check_identity(a, Identity::lie).passed);
  }
  CHECK(sl2_of(truncated_polynomials(2)).basis_names() ==
        std::vector<std::string>{"E*1", "E*t", "F*1", "F*t", "H*1", "H*t"});
}

TEST_CASE("symplectic involution gives the adjugate") {
  CommutativeScalarAlgebra b = truncated_polynomials(2);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Mat2 x;
    for (auto& e : x.e) e = oracle::random_vector(rng, 2);
    Mat2 prod = mat2_mul(b, x, symplectic_star(x));
    Vector det = b.mul(x.at(0, 0), x.at(1, 1)) - b.mul(x.at(0, 1), x.at(1, 0));
    CHECK(prod.at(0, 0) == det);
    CHECK(prod.at(1, 1) == det);
    CHECK(is_zero(prod.at(0, 1)));
    CHECK(is_zero(prod.at(1, 0)));
    CHECK(symplectic_star(symplectic_star(x)).e == x.e);
  }
}

TEST_CASE("M7(B) and M-tilde tables follow the defining formulas") {
  for (const auto& b : bases()) {
    std::vector<Vector> alphas = {b.unit, Vector(b.dim()), Rational(-3) * b.unit};
    if (b.dim() > 1) alphas.push_back(b.algebra.basis_vector(1));
    for (const auto& alpha : alphas) {
      Algebra a = m_tilde(b, alpha);
      REQUIRE(a.dim() == 7 * b.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.product(i, j) == cd_product(b, alpha, i, j));
    }
    CHECK(m7_of(b) == m_tilde(b, b.unit));
    CHECK(odd_coords(b, Mat2{odd_basis(b, 3 * b.dim())}) == unit_vector(7 * b.dim(), 3 * b.dim()));
  }
  CHECK(m7_of(rationals()).basis_names() ==
        std::vector<std::string>{"E", "F", "H", "vE11", "vE21", "vE12", "vE22"});
}

TEST_CASE("extension tables follow the mixed-product rules") {
  CommutativeScalarAlgebra b = truncated_polynomials(2);
  Vector alpha{1, 1};
  PairingForm p = det_pairing(b, alpha);
  Algebra a = build_extension(b, p);
  const std::size_t d = 2, s = 6, n = 14;
  REQUIRE(a.dim() == n);
  CHECK(a.basis_name(s) == "u*1(1)");
  CHECK(a.basis_name(s + 1) == "u*1(2)");
  CHECK(a.basis_name(s + 4) == "v*1(1)");
  // Products of w(1), w(2) with X*beta_i, for w = e_k * beta_j.
  for (std::size_t k = 0; k < 4; ++k) {
    const Vector w = unit_vector(4, k);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector wb = p.act(w, b.algebra.basis_vector(i));
      Vector wb1(n), wb2(n);
      for (std::size_t c = 0; c < 4; ++c) {
        wb1[s + 2 * c] = wb[c];
        wb2[s + 2 * c + 1] = wb[c];
      }
      const std::size_t one = s + 2 * k, two = one + 1;
      CHECK(a.product(one, 0 * d + i) == wb2);
      CHECK(a.product(one, 2 * d + i) == wb1);
      CHECK(is_zero(a.product(one, 1 * d + i)));
      CHECK(is_zero(a.product(two, 0 * d + i)));
      CHECK(a.product(two, 2 * d + i) == -wb2);
      CHECK(a.product(two, 1 * d + i) == -wb1);
      CHECK(a.product(0 * d + i, one) == -wb2);
    }
  }
  // w(1)w'(1) = F<w,w'>, w(1)w'(2) = w(2)w'(1) = H<w,w'>/2, w(2)w'(2) = E<w,w'>.
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t l = 0; l < 4; ++l) {
      const Vector g = p.entries[k][l];
      Vector f(n), h(n), e(n);
      for (std::size_t c = 0; c < d; ++c) {
        e[c] = g[c];
        f[d + c] = g[c];
        h[2 * d + c] = Rational(1, 2) * g[c];
      }
      CHECK(a.product(s + 2 * k, s + 2 * l) == f);
      CHECK(a.product(s + 2 * k, s + 2 * l + 1) == h);
      CHECK(a.product(s + 2 * k + 1, s + 2 * l) == h);
      CHECK(a.product(s + 2 * k + 1, s + 2 * l + 1) == e);
    }
}

TEST_CASE("scalar extensions reproduce the literal tables") {
  CommutativeScalarAlgebra q = rationals();
  CHECK(build_extension(q, free_pairing(q, 1, {{{0}}})) == m5());
  for (const Rational& lambda : {Rational(1), Rational(-2, 3), Rational(0)}) {
    CHECK(build_extension(q, free_pairing(q, 2, {{{0}, {lambda}}, {{-lambda}, {0}}})) == m7_scalar(lambda));
  }
  CHECK(m5().basis_names() == std::vector<std::string>{"E", "F", "H", "u(1)", "u(2)"});
  CHECK(m7_scalar(1).basis_names() == std::vector<std::string>{"E", "F", "H", "u(1)", "u(2)", "v(1)", "v(2)"});
}

TEST_CASE("sparse polynomials multiply like their evaluations") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> var(0, 2);
  auto random_poly = [&]() {
    SparsePoly p(3);
    for (int t = 0; t < 4; ++t) {
      SparsePoly m = SparsePoly::constant(3, coef(rng));
      for (int k = 0; k < 2; ++k) m = m * SparsePoly::variable(3, var(rng));
      p = p + m;
    }
    return p;
  };
  std::uniform_int_distribution<int> pt(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    SparsePoly a = random_poly(), b = random_poly();
    std::vector<Rational> x = {pt(rng), pt(rng), pt(rng)};
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK((a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x));
    CHECK((a - a).is_zero());
    CHECK(a * b == b * a);
  }
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  auto terms = (x * x + x * y + y + SparsePoly::constant(2, 1)).terms();
  REQUIRE(terms.size() == 4);
  // Leading term first: higher total degree, then lexicographically larger.
  CHECK(terms[0].first == SparsePoly::Exponents{2, 0});
  CHECK(terms[1].first == SparsePoly::Exponents{1, 1});
  CHECK(terms[2].first == SparsePoly::Exponents{0, 1});
  CHECK(terms[3].first == SparsePoly::Exponents{0, 0});
}

TEST_CASE("Plucker relations") {
  for (std::size_t n = 2; n <= 4; ++n) {
    IdentityReport r = det_plucker_generators(n);
    CHECK(r.passed);
    CHECK(r.tuples_checked == n * (n + 1) / 2 + n * n * n * n);
  }
  CHECK_THROWS_AS(det_plucker_generators(1), std::invalid_argument);

  // The minors agree with the determinant formula at random integer points.
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pt(-6, 6);
  auto minors = det_minors(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v;
    for (int k = 0; k < 6; ++k) v.emplace_back(pt(rng));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(minors[i][j].evaluate(v) == v[i] * v[3 + j] - v[j] * v[3 + i]);
  }

  CommutativeScalarAlgebra q = rationals();
  std::vector<std::vector<Vector>> grid(4, std::vector<Vector>(4, Vector{0}));
  CHECK(plucker_check(q, grid).passed);
  grid[0][1] = {1};
  grid[1][0] = {-1};
  grid[2][3] = {1};
  grid[3][2] = {-1};
  IdentityReport r = plucker_check(q, grid);
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "plucker");
  grid[1][0] = {1};
  CHECK(plucker_check(q, grid).identity == "plucker_skew");
}
