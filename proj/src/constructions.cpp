#include "malcev/constructions.hpp"

#include <functional>
#include <optional>
#include <tuple>

namespace malcev {

// --- Scalar algebras -------------------------------------------------------

IdentityReport scalar_algebra_report(const Algebra& a, const Vector& unit) {
  a.require_element(unit);
  const std::size_t n = a.dim();
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++checked;
      Vector d = a.product(i, j) - a.product(j, i);
      if (!is_zero(d)) return IdentityReport::fail("commutative", {i, j}, std::move(d), a.basis_names(), checked);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++checked;
        Vector d = a.multiply_basis_right(a.product(i, j), k) - a.multiply_basis_left(i, a.product(j, k));
        if (!is_zero(d)) return IdentityReport::fail("associative", {i, j, k}, std::move(d), a.basis_names(), checked);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++checked;
    Vector d = a.multiply_basis_right(unit, i) - a.basis_vector(i);
    if (is_zero(d)) d = a.multiply_basis_left(i, unit) - a.basis_vector(i);
    if (!is_zero(d)) return IdentityReport::fail("unit", {i}, std::move(d), a.basis_names(), checked);
  }
  return IdentityReport::pass("scalar_algebra", checked);
}

CommutativeScalarAlgebra verify_scalar_algebra(const Algebra& a, const Vector& unit) {
  IdentityReport r = scalar_algebra_report(a, unit);
  if (!r.passed) {
    std::string where;
    for (auto i : *r.first_failure) where += (where.empty() ? "" : ",") + a.basis_name(i);
    throw ScalarAlgebraError("'" + a.name() + "' is not a commutative associative unital algebra: " + r.identity +
                                 " fails at (" + where + ")",
                             std::move(r));
  }
  return {a, unit};
}

std::optional<Vector> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = i * n + c;
      for (std::size_t k = 0; k < n; ++k) {
        m(row, k) = a.product(k, i)[c];
        m(n * n + row, k) = a.product(i, k)[c];
      }
      if (i == c) rhs[row] = rhs[n * n + row] = 1;
    }
  }
  Vector x;
  if (!solve(m, rhs, x)) return std::nullopt;
  return x;
}

namespace {

CommutativeScalarAlgebra make_scalar(std::string name, std::vector<std::string> basis, std::vector<Vector> table,
                                     std::size_t unit_index) {
  Algebra a(std::move(name), std::move(basis), std::move(table), false);
  Vector unit = a.basis_vector(unit_index);
  return verify_scalar_algebra(a, unit);
}

} // namespace

CommutativeScalarAlgebra rationals() { return make_scalar("Q", {"1"}, {Vector{Rational(1)}}, 0); }

CommutativeScalarAlgebra truncated_polynomials(std::size_t k) {
  if (k == 0) throw std::invalid_argument("truncation degree must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<Vector> table(k * k, Vector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) table[i * k + j][i + j] = 1;
  return make_scalar("Q[t]/(t^" + std::to_string(k) + ")", std::move(names), std::move(table), 0);
}

CommutativeScalarAlgebra rational_product(std::size_t k) {
  if (k == 0) throw std::invalid_argument("product needs at least one factor");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<Vector> table(k * k, Vector(k));
  for (std::size_t i = 0; i < k; ++i) table[i * k + i][i] = 1;
  std::string name = "Q";
  for (std::size_t i = 1; i < k; ++i) name += "xQ";
  Algebra a(name, std::move(names), std::move(table), false);
  Vector unit(k, Rational(1));
  return verify_scalar_algebra(a, unit);
}

// --- Pairings --------------------------------------------------------------

Vector PairingForm::evaluate(const Vector& x, const Vector& y) const {
  if (x.size() != v_dim || y.size() != v_dim) throw DimensionError("pairing argument has wrong length");
  Vector out(scalars.dim());
  for (std::size_t i = 0; i < v_dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < v_dim; ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], entries[i][j]);
    }
  }
  return out;
}

Vector PairingForm::act(const Vector& w, const Vector& u) const {
  if (w.size() != v_dim || u.size() != scalars.dim()) throw DimensionError("module action argument has wrong length");
  Vector out(v_dim);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].is_zero()) axpy(out, u[k], action[k].apply(w));
  }
  return out;
}

PairingForm free_pairing(const CommutativeScalarAlgebra& b, std::size_t r, const std::vector<std::vector<Vector>>& grid) {
  const std::size_t d = b.dim();
  if (grid.size() != r) throw DimensionError("pairing grid must have one row per generator");
  for (const auto& row : grid) {
    if (row.size() != r) throw DimensionError("pairing grid must be square");
    for (const auto& v : row) b.algebra.require_element(v);
  }
  PairingForm p;
  p.scalars = b;
  p.v_dim = r * d;
  p.rank = r;
  for (std::size_t m = 0; m < d; ++m) {
    Matrix act(p.v_dim, p.v_dim);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < d; ++c) act(k * d + c, k * d + i) = b.algebra.product(i, m)[c];
    p.action.push_back(std::move(act));
  }
  p.entries.assign(p.v_dim, std::vector<Vector>(p.v_dim, Vector(d)));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < r; ++l)
        for (std::size_t j = 0; j < d; ++j)
          p.entries[k * d + i][l * d + j] = b.mul(b.algebra.product(i, j), grid[k][l]);
  return p;
}

PairingForm det_pairing(const CommutativeScalarAlgebra& b, const Vector& alpha) {
  Vector c = Rational(-4) * alpha;
  Vector z(b.dim());
  return free_pairing(b, 2, {{z, c}, {-c, z}});
}

Vector free_vector(const CommutativeScalarAlgebra& b, const std::vector<Vector>& components) {
  const std::size_t d = b.dim();
  Vector out(components.size() * d);
  for (std::size_t k = 0; k < components.size(); ++k) {
    b.algebra.require_element(components[k]);
    for (std::size_t i = 0; i < d; ++i) out[k * d + i] = components[k][i];
  }
  return out;
}

IdentityReport pairing_report(const PairingForm& p) {
  const auto& u = p.scalars;
  const std::size_t d = u.dim();
  const std::size_t n = p.v_dim;
  if (p.action.size() != d || p.entries.size() != n) throw DimensionError("pairing form has inconsistent shape");
  std::vector<std::string> vnames;
  for (std::size_t i = 0; i < n; ++i) vnames.push_back("w" + std::to_string(i + 1));
  const auto& unames = u.algebra.basis_names();
  std::uint64_t checked = 0;

  // Module axioms: w*unit = w and (w u_m) u_k = w (u_m u_k).
  for (std::size_t w = 0; w < n; ++w) {
    ++checked;
    Vector e = unit_vector(n, w);
    Vector dlt = p.act(e, u.unit) - e;
    if (!is_zero(dlt)) return IdentityReport::fail("module_unit", {w}, std::move(dlt), vnames, checked);
    for (std::size_t m = 0; m < d; ++m) {
      for (std::size_t k = 0; k < d; ++k) {
        ++checked;
        Vector lhs = p.act(p.act(e, u.algebra.basis_vector(m)), u.algebra.basis_vector(k));
        Vector df = lhs - p.act(e, u.algebra.product(m, k));
        if (!is_zero(df)) return IdentityReport::fail("module", {w, m, k}, std::move(df), vnames, checked);
      }
    }
  }
  // Bilinearity: <w_i u_m, w_j> = u_m <w_i, w_j>.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < d; ++m) {
        ++checked;
        Vector lhs = p.evaluate(p.act(unit_vector(n, i), u.algebra.basis_vector(m)), unit_vector(n, j));
        Vector df = lhs - u.algebra.multiply_basis_left(m, p.entries[i][j]);
        if (!is_zero(df)) return IdentityReport::fail("bilinear", {i, j, m}, std::move(df), unames, checked);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++checked;
      Vector df = (i == j) ? p.entries[i][i] : p.entries[i][j] + p.entries[j][i];
      if (!is_zero(df)) return IdentityReport::fail("skew", {i, j}, std::move(df), unames, checked);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        ++checked;
        Vector s = p.act(unit_vector(n, c), p.entries[a][b]);
        s = s + p.act(unit_vector(n, a), p.entries[b][c]);
        s = s + p.act(unit_vector(n, b), p.entries[c][a]);
        if (!is_zero(s)) return IdentityReport::fail("cyclic_relation", {a, b, c}, std::move(s), vnames, checked);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t t = 0; t < n; ++t) {
          ++checked;
          Vector s = u.mul(p.entries[c][t], p.entries[a][b]);
          s = s + u.mul(p.entries[a][t], p.entries[b][c]);
          s = s + u.mul(p.entries[b][t], p.entries[c][a]);
          if (!is_zero(s))
            return IdentityReport::fail("quadratic_relation", {a, b, c, t}, std::move(s), unames, checked);
        }
      }
    }
  }
  return IdentityReport::pass("pairing", checked);
}

// --- sl2 and extensions ----------------------------------------------------

namespace {

constexpr std::size_t kE = 0;
constexpr std::size_t kF = 1;
constexpr std::size_t kH = 2;

Algebra load_with_products(const std::string& name, const std::vector<std::string>& basis,
                           const std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, Rational>>>>& products) {
  nlohmann::json doc;
  doc["name"] = name;
  doc["dim"] = basis.size();
  doc["basis"] = basis;
  doc["anticommutative"] = true;
  doc["products"] = nlohmann::json::array();
  for (const auto& [l, r, result] : products) {
    nlohmann::json res = nlohmann::json::object();
    for (const auto& [k, c] : result) {
      if (!c.is_zero()) res[k] = c.str();
    }
    doc["products"].push_back({{"left", l}, {"right", r}, {"result", res}});
  }
  return load_algebra(doc);
}

std::string suffixed(const std::string& stem, const CommutativeScalarAlgebra& b, std::size_t i) {
  return b.dim() > 1 ? stem + "*" + b.algebra.basis_name(i) : stem;
}

} // namespace

Algebra sl2() {
  const Rational half(1, 2);
  return load_with_products("sl2", {"E", "F", "H"},
                            {{"E", "F", {{"H", half}}}, {"E", "H", {{"E", Rational(1)}}}, {"F", "H", {{"F", Rational(-1)}}}});
}

Algebra sl2_of(const CommutativeScalarAlgebra& b) {
  static const Algebra base = sl2();
  const std::size_t d = b.dim();
  const std::size_t n = 3 * d;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t i = 0; i < d; ++i) names.push_back(suffixed(base.basis_name(x), b, i));
  std::vector<Vector> table(n * n, Vector(n));
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const Vector& bij = b.algebra.product(i, j);
          for (const auto& t : base.terms(x, y))
            for (std::size_t c = 0; c < d; ++c)
              table[(x * d + i) * n + (y * d + j)][t.index * d + c] += t.coeff * bij[c];
        }
  std::string name = d == 1 && b.algebra.name() == "Q" ? "sl2" : "sl2(" + b.algebra.name() + ")";
  return Algebra(std::move(name), std::move(names), std::move(table), true);
}

Mat2 mat2_zero(const CommutativeScalarAlgebra& b) {
  Mat2 m;
  for (auto& e : m.e) e = Vector(b.dim());
  return m;
}

Mat2 mat2_mul(const CommutativeScalarAlgebra& b, const Mat2& x, const Mat2& y) {
  Mat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m.at(r, c) = b.mul(x.at(r, 0), y.at(0, c)) + b.mul(x.at(r, 1), y.at(1, c));
  return m;
}

Mat2 mat2_sub(const Mat2& x, const Mat2& y) {
  Mat2 m;
  for (int k = 0; k < 4; ++k) m.e[k] = x.e[k] - y.e[k];
  return m;
}

Mat2 mat2_scale(const CommutativeScalarAlgebra& b, const Vector& s, const Mat2& x) {
  Mat2 m;
  for (int k = 0; k < 4; ++k) m.e[k] = b.mul(s, x.e[k]);
  return m;
}

Mat2 symplectic_star(const Mat2& x) {
  Mat2 m;
  m.at(0, 0) = x.at(1, 1);
  m.at(0, 1) = -x.at(0, 1);
  m.at(1, 0) = -x.at(1, 0);
  m.at(1, 1) = x.at(0, 0);
  return m;
}

Vector sl2_coords(const CommutativeScalarAlgebra& b, const Mat2& m) {
  const std::size_t d = b.dim();
  if (!is_zero(m.at(0, 0) + m.at(1, 1))) throw AlgebraError("matrix is not trace zero");
  Vector out(3 * d);
  for (std::size_t i = 0; i < d; ++i) {
    out[kE * d + i] = Rational(2) * m.at(1, 0)[i];
    out[kF * d + i] = Rational(-2) * m.at(0, 1)[i];
    out[kH * d + i] = Rational(2) * m.at(0, 0)[i];
  }
  return out;
}

Mat2 sl2_matrix(const CommutativeScalarAlgebra& b, const Vector& coords) {
  const std::size_t d = b.dim();
  if (coords.size() != 3 * d) throw DimensionError("sl2 coordinate vector has wrong length");
  Mat2 m = mat2_zero(b);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < d; ++i) {
    m.at(0, 0)[i] = half * coords[kH * d + i];
    m.at(1, 1)[i] = -m.at(0, 0)[i];
    m.at(0, 1)[i] = -half * coords[kF * d + i];
    m.at(1, 0)[i] = half * coords[kE * d + i];
  }
  return m;
}

Algebra build_extension(const CommutativeScalarAlgebra& b, const PairingForm& pairing, std::string name) {
  if (!(pairing.scalars.algebra == b.algebra)) throw DimensionError("pairing is defined over a different scalar algebra");
  IdentityReport rep = pairing_report(pairing);
  if (!rep.passed) throw PairingError("pairing rejected: " + rep.identity + " fails", std::move(rep));

  const std::size_t d = b.dim();
  const std::size_t s = 3 * d;
  const std::size_t vn = pairing.v_dim;
  const std::size_t n = s + 2 * vn;
  const Algebra lie = sl2_of(b);

  std::vector<std::string> names = lie.basis_names();
  std::vector<std::string> vnames;
  if (pairing.rank > 0 && pairing.rank * d == vn) {
    for (std::size_t k = 0; k < pairing.rank; ++k) {
      std::string stem = pairing.rank == 1 ? "u" : pairing.rank == 2 ? (k == 0 ? "u" : "v") : "e" + std::to_string(k + 1);
      for (std::size_t i = 0; i < d; ++i) vnames.push_back(suffixed(stem, b, i));
    }
  } else {
    for (std::size_t k = 0; k < vn; ++k) vnames.push_back("w" + std::to_string(k + 1));
  }
  for (const auto& v : vnames) {
    names.push_back(v + "(1)");
    names.push_back(v + "(2)");
  }
  auto one = [&](std::size_t k) { return s + 2 * k; };
  auto two = [&](std::size_t k) { return s + 2 * k + 1; };

  std::vector<Vector> table(n * n, Vector(n));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (const auto& t : lie.terms(i, j)) table[i * n + j][t.index] = t.coeff;

  // w(1), w(2) times X*beta, and the mirrored products.
  for (std::size_t k = 0; k < vn; ++k) {
    const Vector w = unit_vector(vn, k);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector wb = pairing.act(w, b.algebra.basis_vector(i));
      for (std::size_t c = 0; c < vn; ++c) {
        if (wb[c].is_zero()) continue;
        table[one(k) * n + (kE * d + i)][two(c)] += wb[c];
        table[one(k) * n + (kH * d + i)][one(c)] += wb[c];
        table[two(k) * n + (kH * d + i)][two(c)] -= wb[c];
        table[two(k) * n + (kF * d + i)][one(c)] -= wb[c];
      }
    }
  }
  for (std::size_t k = 0; k < vn; ++k)
    for (std::size_t x = 0; x < s; ++x) {
      table[x * n + one(k)] = -table[one(k) * n + x];
      table[x * n + two(k)] = -table[two(k) * n + x];
    }

  const Rational half(1, 2);
  for (std::size_t k = 0; k < vn; ++k) {
    for (std::size_t l = 0; l < vn; ++l) {
      const Vector& g = pairing.entries[k][l];
      for (std::size_t c = 0; c < d; ++c) {
        if (g[c].is_zero()) continue;
        table[one(k) * n + one(l)][kF * d + c] = g[c];
        table[one(k) * n + two(l)][kH * d + c] = half * g[c];
        table[two(k) * n + one(l)][kH * d + c] = half * g[c];
        table[two(k) * n + two(l)][kE * d + c] = g[c];
      }
    }
  }
  if (name.empty()) name = "ext(" + b.algebra.name() + ")";
  return Algebra(std::move(name), std::move(names), std::move(table), true);
}

Vector odd_coords(const CommutativeScalarAlgebra& b, const Mat2& m) {
  const std::size_t d = b.dim();
  const std::size_t s = 3 * d;
  Vector out(7 * d);
  for (int col = 0; col < 2; ++col)
    for (std::size_t i = 0; i < d; ++i)
      for (int row = 0; row < 2; ++row) out[s + (col * d + i) * 2 + row] = m.at(row, col)[i];
  return out;
}

namespace {

struct MElement {
  bool odd = false;
  Mat2 m;
};

Algebra cayley_dickson_type(const CommutativeScalarAlgebra& b, const std::optional<Vector>& alpha, std::string name) {
  const std::size_t d = b.dim();
  const std::size_t s = 3 * d;
  const std::size_t n = 7 * d;
  const Algebra lie = sl2_of(b);
  std::vector<std::string> names = lie.basis_names();
  std::vector<MElement> basis;
  for (std::size_t i = 0; i < s; ++i) basis.push_back({false, sl2_matrix(b, unit_vector(s, i))});
  for (int col = 0; col < 2; ++col) {
    for (std::size_t i = 0; i < d; ++i) {
      for (int row = 0; row < 2; ++row) {
        MElement e{true, mat2_zero(b)};
        e.m.at(row, col) = b.algebra.basis_vector(i);
        basis.push_back(std::move(e));
        names.push_back(suffixed("vE" + std::to_string(row + 1) + std::to_string(col + 1), b, i));
      }
    }
  }
  auto even_coords = [&](const Mat2& m) {
    Vector c = sl2_coords(b, m);
    c.resize(n);
    return c;
  };
  // A . vB = v(A*B - AB)
  auto even_odd = [&](const Mat2& a, const Mat2& bm) {
    return odd_coords(b, mat2_sub(mat2_mul(b, symplectic_star(a), bm), mat2_mul(b, a, bm)));
  };

  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = basis[i];
      const auto& y = basis[j];
      Vector r;
      if (!x.odd && !y.odd) {
        r = even_coords(mat2_sub(mat2_mul(b, x.m, y.m), mat2_mul(b, y.m, x.m)));
      } else if (!x.odd) {
        r = even_odd(x.m, y.m);
      } else if (!y.odd) {
        r = -even_odd(y.m, x.m);
      } else {
        Mat2 m = mat2_sub(mat2_mul(b, y.m, symplectic_star(x.m)), mat2_mul(b, x.m, symplectic_star(y.m)));
        if (alpha) m = mat2_scale(b, *alpha, m);
        r = even_coords(m);
      }
      table[i * n + j] = std::move(r);
    }
  }
  return Algebra(std::move(name), std::move(names), std::move(table), true);
}

} // namespace

Algebra m7_of(const CommutativeScalarAlgebra& b) {
  return cayley_dickson_type(b, std::nullopt, "M7(" + b.algebra.name() + ")");
}

Algebra m_tilde(const CommutativeScalarAlgebra& b, const Vector& alpha) {
  b.algebra.require_element(alpha);
  return cayley_dickson_type(b, alpha, "Mtilde(" + b.algebra.name() + ")");
}

Algebra m5() {
  const Rational one(1);
  const Rational half(1, 2);
  return load_with_products("M5", {"E", "F", "H", "u(1)", "u(2)"},
                            {
                                {"E", "F", {{"H", half}}},
                                {"E", "H", {{"E", one}}},
                                {"E", "u(1)", {{"u(2)", -one}}},
                                {"F", "H", {{"F", -one}}},
                                {"F", "u(2)", {{"u(1)", one}}},
                                {"H", "u(1)", {{"u(1)", -one}}},
                                {"H", "u(2)", {{"u(2)", one}}},
                            });
}

Algebra m7_scalar(const Rational& lambda) {
  const Rational one(1);
  const Rational half(1, 2);
  return load_with_products("M7", {"E", "F", "H", "u(1)", "u(2)", "v(1)", "v(2)"},
                            {
                                {"E", "F", {{"H", half}}},
                                {"E", "H", {{"E", one}}},
                                {"E", "u(1)", {{"u(2)", -one}}},
                                {"E", "v(1)", {{"v(2)", -one}}},
                                {"F", "H", {{"F", -one}}},
                                {"F", "u(2)", {{"u(1)", one}}},
                                {"F", "v(2)", {{"v(1)", one}}},
                                {"H", "u(1)", {{"u(1)", -one}}},
                                {"H", "u(2)", {{"u(2)", one}}},
                                {"H", "v(1)", {{"v(1)", -one}}},
                                {"H", "v(2)", {{"v(2)", one}}},
                                {"u(1)", "v(1)", {{"F", lambda}}},
                                {"u(1)", "v(2)", {{"H", half * lambda}}},
                                {"u(2)", "v(1)", {{"H", half * lambda}}},
                                {"u(2)", "v(2)", {{"E", lambda}}},
                            });
}

// --- Plucker ---------------------------------------------------------------

bool SparsePoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = 0;
  unsigned db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

SparsePoly SparsePoly::constant(std::size_t variables, const Rational& c) {
  SparsePoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw std::out_of_range("variable index out of range");
  SparsePoly p(variables);
  Exponents e(variables, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::pair<SparsePoly::Exponents, Rational>> SparsePoly::terms() const {
  return {terms_.begin(), terms_.end()};
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_) throw DimensionError("evaluation point has wrong length");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials in different variable counts");
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly out(a.vars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars_ != b.vars_) throw DimensionError("polynomials in different variable counts");
  SparsePoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SparsePoly::Exponents e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

/// Skewness on pairs, then the three-term relation on all quadruples.
template <class T, class Mul, class Add, class IsZero, class Fail>
IdentityReport plucker_scan(const std::vector<std::vector<T>>& u, Mul mul, Add add, IsZero zero, Fail fail) {
  const std::size_t r = u.size();
  for (const auto& row : u) {
    if (row.size() != r) throw DimensionError("Plucker grid must be square");
  }
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      ++checked;
      T s = i == j ? u[i][i] : add(u[i][j], u[j][i]);
      if (!zero(s)) return fail("plucker_skew", std::vector<std::size_t>{i, j}, s, checked);
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          ++checked;
          T s = add(add(mul(u[i][j], u[k][l]), mul(u[i][k], u[l][j])), mul(u[i][l], u[j][k]));
          if (!zero(s)) return fail("plucker", std::vector<std::size_t>{i, j, k, l}, s, checked);
        }
  return IdentityReport::pass("plucker", checked);
}

} // namespace

IdentityReport plucker_check(const CommutativeScalarAlgebra& b, const std::vector<std::vector<Vector>>& grid) {
  for (const auto& row : grid)
    for (const auto& v : row) b.algebra.require_element(v);
  return plucker_scan(
      grid, [&](const Vector& x, const Vector& y) { return b.mul(x, y); },
      [](const Vector& x, const Vector& y) { return x + y; }, [](const Vector& x) { return is_zero(x); },
      [&](const char* name, std::vector<std::size_t> t, const Vector& v, std::uint64_t c) {
        return IdentityReport::fail(name, std::move(t), v, b.algebra.basis_names(), c);
      });
}

IdentityReport plucker_check(const std::vector<std::vector<SparsePoly>>& grid) {
  return plucker_scan(
      grid, [](const SparsePoly& x, const SparsePoly& y) { return x * y; },
      [](const SparsePoly& x, const SparsePoly& y) { return x + y; }, [](const SparsePoly& x) { return x.is_zero(); },
      [](const char* name, std::vector<std::size_t> t, const SparsePoly&, std::uint64_t c) {
        IdentityReport r;
        r.identity = name;
        r.passed = false;
        r.first_failure = std::move(t);
        r.tuples_checked = c;
        return r;
      });
}

std::vector<std::vector<SparsePoly>> det_minors(std::size_t n) {
  const std::size_t vars = 2 * n;
  std::vector<std::vector<SparsePoly>> grid(n, std::vector<SparsePoly>(n, SparsePoly(vars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grid[i][j] = SparsePoly::variable(vars, i) * SparsePoly::variable(vars, n + j) -
                   SparsePoly::variable(vars, j) * SparsePoly::variable(vars, n + i);
    }
  }
  return grid;
}

IdentityReport det_plucker_generators(std::size_t n) {
  if (n < 2) throw std::invalid_argument("determinant generators need n >= 2");
  return plucker_check(det_minors(n));
}

} // namespace malcev
