#include "malcev/iso.hpp"

namespace malcev {

AlgebraMorphism::AlgebraMorphism(Algebra dom, Algebra cod, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), map(std::move(m)) {
  if (map.domain_dim != domain.dim() || map.codomain_dim != codomain.dim()) {
    throw DimensionError("morphism matrix is " + std::to_string(map.codomain_dim) + "x" +
                         std::to_string(map.domain_dim) + " but the algebras have dimensions " +
                         std::to_string(domain.dim()) + " and " + std::to_string(codomain.dim()));
  }
}

AlgebraMorphism phi_map(const CommutativeScalarAlgebra& b, const Vector& alpha, const Algebra& left, const Algebra& right) {
  b.algebra.require_element(alpha);
  const std::size_t d = b.dim();
  const std::size_t s = 3 * d;
  if (left.dim() != 7 * d || right.dim() != 7 * d) {
    throw DimensionError("phi_map expects two algebras of dimension 7 * dim B");
  }
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < s; ++i) cols.push_back(unit_vector(7 * d, i));
  // V = B^2 has Q-basis e_k * b_i (k-major); each contributes w(1), w(2).
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (int row = 0; row < 2; ++row) {
        Mat2 m = mat2_zero(b);
        m.at(row, k) = b.algebra.basis_vector(i);
        cols.push_back(odd_coords(b, m));
      }
    }
  }
  return AlgebraMorphism(left, right, Matrix::from_columns(cols, 7 * d));
}

IdentityReport verify_morphism(const AlgebraMorphism& f) {
  const Algebra& a = f.domain;
  const Algebra& c = f.codomain;
  const std::size_t n = a.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.map.matrix.column(i));
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++checked;
      Vector defect = f(a.product(i, j)) - c.multiply(images[i], images[j]);
      if (!is_zero(defect)) {
        return IdentityReport::fail("homomorphism", {i, j}, std::move(defect), c.basis_names(), checked);
      }
    }
  }
  const std::size_t r = rank(f.map.matrix);
  if (r != n || r != c.dim()) {
    IdentityReport rep;
    rep.identity = "bijectivity";
    rep.passed = false;
    rep.first_failure = std::vector<std::size_t>{r};
    rep.tuples_checked = checked;
    rep.detail = "rank " + std::to_string(r) + " for a " + std::to_string(c.dim()) + "x" + std::to_string(n) + " matrix";
    return rep;
  }
  return IdentityReport::pass("homomorphism", checked);
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!(f.codomain == g.domain)) throw DimensionError("morphisms are not composable");
  return AlgebraMorphism(f.domain, g.codomain, g.map.matrix * f.map.matrix);
}

bool is_m7_form(const PairingForm& p, const Vector& u, const Vector& v) {
  return p.evaluate(u, v) == p.scalars.unit;
}

M7FormSummary m7_form_summary(const PairingForm& p) {
  const auto& b = p.scalars;
  if (p.v_dim != 2 * b.dim()) throw DimensionError("the M7 criterion needs V = B^2");
  const Vector zero(b.dim());
  const Vector u = free_vector(b, {b.scalar(Rational(1, 2)), zero});
  const Vector v = free_vector(b, {zero, b.scalar(Rational(-1, 2))});
  const Vector v_pos = free_vector(b, {zero, b.scalar(Rational(1, 2))});
  M7FormSummary s;
  s.value = p.evaluate(u, v);
  s.alpha = -p.evaluate(u, v_pos);
  s.is_m7 = is_m7_form(p, u, v);
  return s;
}

nlohmann::ordered_json morphism_to_json(const AlgebraMorphism& f) {
  nlohmann::ordered_json j;
  j["domain"] = f.domain.name();
  j["codomain"] = f.codomain.name();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : f.map.matrix.row_vectors()) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : r) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

AlgebraMorphism morphism_from_json(const nlohmann::json& doc, const Algebra& domain, const Algebra& codomain) {
  if (!doc.is_object()) throw SchemaError("morphism document must be a JSON object");
  for (const char* key : {"domain", "codomain", "matrix"}) {
    if (!doc.contains(key)) throw SchemaError(std::string("morphism document lacks '") + key + "'");
  }
  if (doc["domain"] != domain.name() || doc["codomain"] != codomain.name()) {
    throw SchemaError("morphism names " + doc["domain"].dump() + " -> " + doc["codomain"].dump() +
                      " do not match the algebras '" + domain.name() + "' and '" + codomain.name() + "'");
  }
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != codomain.dim()) {
    throw SchemaError("morphism matrix must have one row per codomain basis element");
  }
  Matrix m(codomain.dim(), domain.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != domain.dim()) {
      throw SchemaError("morphism matrix row " + std::to_string(r) + " must have one entry per domain basis element");
    }
    for (std::size_t c = 0; c < domain.dim(); ++c) {
      const auto& v = rows[r][c];
      try {
        if (v.is_string()) {
          m(r, c) = Rational::parse(v.get<std::string>());
        } else if (v.is_number_integer()) {
          m(r, c) = Rational(v.get<long long>());
        } else {
          throw SchemaError("entry is not a \"p/q\" string");
        }
      } catch (const std::invalid_argument& e) {
        throw SchemaError("morphism matrix entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what());
      }
    }
  }
  return AlgebraMorphism(domain, codomain, std::move(m));
}

} // namespace malcev
