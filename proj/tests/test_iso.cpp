#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "malcev/identities.hpp"
#include "malcev/iso.hpp"

using namespace malcev;

namespace {

std::vector<Vector> alphas_for(const CommutativeScalarAlgebra& b) {
  std::vector<Vector> out = {b.unit, Vector(b.dim()), Rational(2) * b.unit};
  if (b.dim() > 1) {
    out.push_back(b.algebra.basis_vector(1));
    out.push_back(b.unit + b.algebra.basis_vector(1));
  }
  return out;
}

} // namespace

TEST_CASE("id + phi is an isomorphism from the det extension onto M-tilde") {
  for (const auto& b : {rationals(), truncated_polynomials(2), rational_product(2)}) {
    for (const auto& alpha : alphas_for(b)) {
      Algebra left = build_extension(b, det_pairing(b, alpha));
      Algebra right = m_tilde(b, alpha);
      AlgebraMorphism f = phi_map(b, alpha, left, right);
      IdentityReport r = verify_morphism(f);
      CHECK(r.passed);
      CHECK(r.tuples_checked == left.dim() * left.dim());
    }
  }
}

TEST_CASE("phi sends (a,b)(1) to v(a b; 0 0) and (a,b)(2) to v(0 0; a b)") {
  CommutativeScalarAlgebra b = truncated_polynomials(2);
  Vector alpha = b.unit;
  Algebra left = build_extension(b, det_pairing(b, alpha));
  Algebra right = m_tilde(b, alpha);
  AlgebraMorphism f = phi_map(b, alpha, left, right);
  // (t, 0)(1) is the Q-basis vector e_1 * t, listed second; its (1) copy sits at 6 + 2.
  Vector x = left.basis_vector(6 + 2);
  Vector img = f(x);
  CHECK(img == right.basis_vector(*right.index_of("vE11*t")));
  // (0, 1)(2) is e_2 * 1, the (2) copy.
  img = f(left.basis_vector(6 + 2 * 2 + 1));
  CHECK(img == right.basis_vector(*right.index_of("vE22*1")));
  for (std::size_t i = 0; i < 6; ++i) CHECK(f(left.basis_vector(i)) == right.basis_vector(i));
}

TEST_CASE("morphism failures are reported with witnesses") {
  Algebra a = m5();
  CHECK(verify_morphism(AlgebraMorphism(a, a, Matrix::identity(5))).passed);

  IdentityReport r = verify_morphism(AlgebraMorphism(a, a, Matrix(5, 5)));
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "bijectivity");
  CHECK(*r.first_failure == std::vector<std::size_t>{0});

  // Swapping E and F is not multiplicative: E*H = E but F*H = -F.
  Matrix swap = Matrix::identity(5);
  swap(0, 0) = 0;
  swap(1, 1) = 0;
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  r = verify_morphism(AlgebraMorphism(a, a, swap));
  CHECK_FALSE(r.passed);
  CHECK(r.identity == "homomorphism");
  CHECK(*r.first_failure == std::vector<std::size_t>{0, 1});

  CHECK_THROWS_AS(AlgebraMorphism(a, a, Matrix(5, 4)), DimensionError);
}

TEST_CASE("composition of isomorphisms") {
  CommutativeScalarAlgebra q = rationals();
  Algebra left = build_extension(q, det_pairing(q, q.unit));
  Algebra right = m_tilde(q, q.unit);
  AlgebraMorphism f = phi_map(q, q.unit, left, right);
  AlgebraMorphism id(right, right, Matrix::identity(7));
  AlgebraMorphism g = compose(id, f);
  CHECK(g.map.matrix == f.map.matrix);
  CHECK(verify_morphism(g).passed);
  CHECK_THROWS_AS(compose(f, f), DimensionError);
}

TEST_CASE("M7 criterion on det pairings") {
  CommutativeScalarAlgebra q = rationals();
  for (long long a : {1LL, 2LL, -3LL, 0LL}) {
    M7FormSummary s = m7_form_summary(det_pairing(q, {Rational(a)}));
    CHECK(s.alpha == Vector{Rational(a)});
    CHECK(s.value == Vector{Rational(a)});
    CHECK(s.is_m7 == (a == 1));
  }
  CHECK_THROWS_AS(m7_form_summary(free_pairing(q, 1, {{{0}}})), DimensionError);
}

TEST_CASE("morphism documents round-trip") {
  Algebra a = m5();
  AlgebraMorphism f(a, a, Matrix::identity(5));
  auto doc = morphism_to_json(f);
  AlgebraMorphism g = morphism_from_json(nlohmann::json::parse(doc.dump()), a, a);
  CHECK(g.map.matrix == f.map.matrix);
  auto bad = nlohmann::json::parse(doc.dump());
  bad["domain"] = "other";
  CHECK_THROWS_AS(morphism_from_json(bad, a, a), SchemaError);
  bad = nlohmann::json::parse(doc.dump());
  bad["matrix"][0][0] = "x";
  CHECK_THROWS_AS(morphism_from_json(bad, a, a), SchemaError);
  bad["matrix"].erase(0);
  CHECK_THROWS_AS(morphism_from_json(bad, a, a), SchemaError);
}
