#include "malcev/sl2rep.hpp"

namespace malcev {

namespace {

std::string describe(const Algebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v[i].str() + "*" + a.basis_name(i);
  }
  return out.empty() ? "0" : out;
}

/// Matrix with the given columns stacked vertically, one block per map.
Matrix stack(const std::vector<Matrix>& blocks) {
  Matrix out = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) out = out.stacked(blocks[i]);
  return out;
}

template <class Fn>
Matrix map_matrix(const Algebra& a, Fn fn) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(fn(a.basis_vector(i)));
  return Matrix::from_columns(cols, a.dim());
}

Subspace column_space(const Matrix& m) { return Subspace::span(m.transpose().row_vectors(), m.rows()); }

Subspace eigenspace(const Matrix& m, const Rational& lambda) {
  return kernel(m - lambda * Matrix::identity(m.rows()));
}

} // namespace

Sl2Embedding verify_sl2(const Algebra& a, const Vector& e, const Vector& h, const Vector& f) {
  a.require_element(e);
  a.require_element(h);
  a.require_element(f);
  Vector r1 = a.multiply(e, h) - e;
  if (!is_zero(r1)) throw Sl2Error("relation EH = E fails; EH - E = " + describe(a, r1));
  Vector r2 = a.multiply(f, h) + f;
  if (!is_zero(r2)) throw Sl2Error("relation FH = -F fails; FH + F = " + describe(a, r2));
  Vector r3 = a.multiply(e, f) - Rational(1, 2) * h;
  if (!is_zero(r3)) throw Sl2Error("relation EF = H/2 fails; EF - H/2 = " + describe(a, r3));
  if (rank(Matrix::from_rows({e, h, f}, a.dim())) != 3) throw Sl2Error("E, H, F are linearly dependent");
  return {e, h, f};
}

Sl2Embedding sl2_by_names(const Algebra& a, const std::string& e, const std::string& h, const std::string& f) {
  auto get = [&](const std::string& name) {
    auto i = a.index_of(name);
    if (!i) throw Sl2Error("no basis element named '" + name + "'");
    return a.basis_vector(*i);
  };
  return verify_sl2(a, get(e), get(h), get(f));
}

Subspace annihilator(const Algebra& a, const Sl2Embedding& l) {
  return kernel(stack({a.right_multiplication(l.e), a.right_multiplication(l.h), a.right_multiplication(l.f)}));
}

Subspace n_part(const Algebra& a, const Sl2Embedding& l) {
  std::vector<Matrix> blocks;
  for (const auto* x : {&l.e, &l.h, &l.f})
    for (const auto* y : {&l.e, &l.h, &l.f})
      blocks.push_back(map_matrix(a, [&](const Vector& m) { return jacobian(a, m, *x, *y); }));
  return kernel(stack(blocks));
}

Subspace j_part(const Algebra& a, const Sl2Embedding& l) {
  std::vector<Matrix> blocks;
  for (const auto* x : {&l.e, &l.h, &l.f})
    for (const auto* y : {&l.e, &l.h, &l.f})
      blocks.push_back(map_matrix(a, [&](const Vector& m) { return brace(a, m, *x, *y); }));
  return kernel(stack(blocks));
}

Decomposition decompose(const Algebra& a, const Sl2Embedding& l, unsigned workers) {
  IdentityReport h = check_identity(a, Identity::variety_h, workers);
  if (!h.passed) throw DecompositionError("algebra '" + a.name() + "' fails the " + h.identity + " check");

  const std::size_t n = a.dim();
  const Matrix re = a.right_multiplication(l.e);
  const Matrix rh = a.right_multiplication(l.h);
  const Matrix rf = a.right_multiplication(l.f);
  const Subspace ml = column_space(re).sum(column_space(rh)).sum(column_space(rf));

  Decomposition d{l, annihilator(a, l), n_part(a, l).intersection(ml), j_part(a, l).intersection(ml), Subspace(n),
                  Subspace(n)};
  const Subspace total = d.ann.sum(d.n_part).sum(d.j_part);
  if (d.ann.dim() + d.n_part.dim() + d.j_part.dim() != n || total.dim() != n) {
    throw DecompositionError("Ann + N + J is not a direct sum decomposition (dims " + std::to_string(d.ann.dim()) +
                             "/" + std::to_string(d.n_part.dim()) + "/" + std::to_string(d.j_part.dim()) +
                             " in dimension " + std::to_string(n) + ")");
  }

  d.v1 = eigenspace(rh, Rational(1)).intersection(d.j_part);
  d.v2 = eigenspace(rh, Rational(-1)).intersection(d.j_part);
  if (d.v1.dim() + d.v2.dim() != d.j_part.dim()) {
    throw DecompositionError("J is not the sum of the +1 and -1 eigenspaces of right multiplication by H");
  }
  for (const auto& w : d.v1.basis_vectors()) {
    Vector we = re.apply(w);
    if (!d.v2.contains(we)) throw DecompositionError("right multiplication by E does not map V(1) into V(2)");
    if (-rf.apply(we) != w) throw DecompositionError("-R_F is not inverse to R_E on V(1)");
  }
  for (const auto& w : d.v2.basis_vectors()) {
    Vector wf = -rf.apply(w);
    if (!d.v1.contains(wf)) throw DecompositionError("right multiplication by F does not map V(2) into V(1)");
    if (re.apply(wf) != w) throw DecompositionError("R_E is not inverse to -R_F on V(2)");
  }
  return d;
}

CoordAlgebra coordinatize(const Algebra& a, const Decomposition& d) {
  const Sl2Embedding& l = d.sl2;
  const Matrix re = a.right_multiplication(l.e);
  const Matrix rh = a.right_multiplication(l.h);
  const Matrix rf = a.right_multiplication(l.f);
  const Subspace w1 = eigenspace(rh, Rational(1)).intersection(d.n_part);
  const std::size_t k = w1.dim();
  const std::vector<Vector> omega = w1.basis_vectors();

  auto f_rep = [&](const Vector& x) { return Rational(2) * rf.apply(rf.apply(x)); };
  auto h_rep = [&](const Vector& x) { return Rational(2) * rf.apply(x); };

  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(a.basis_name(w1.pivots()[i]));
  std::vector<Vector> table;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Vector prod = Rational(-2) * re.apply(a.multiply(omega[i], f_rep(omega[j])));
      if (!w1.contains(prod)) {
        throw DecompositionError("product of " + names[i] + " and " + names[j] + " leaves the +1 weight space of N");
      }
      table.push_back(w1.coordinates(prod));
    }
  }
  if (!w1.contains(l.e)) throw DecompositionError("E does not lie in the +1 weight space of N");
  Algebra u_alg("U", names, std::move(table), false);
  CoordAlgebra out{verify_scalar_algebra(u_alg, w1.coordinates(l.e)), omega, l.e};

  // sl2(U) -> N: E*u_i -> w_i, F*u_i -> 2 R_F^2 w_i, H*u_i -> 2 R_F w_i.
  const Algebra lie = sl2_of(out.u);
  std::vector<Vector> images(3 * k);
  for (std::size_t i = 0; i < k; ++i) {
    images[0 * k + i] = omega[i];
    images[1 * k + i] = f_rep(omega[i]);
    images[2 * k + i] = h_rep(omega[i]);
  }
  const Matrix phi = Matrix::from_columns(images, a.dim());
  if (rank(phi) != 3 * k || 3 * k != d.n_part.dim()) {
    throw DecompositionError("sl2(U) does not map bijectively onto N");
  }
  for (std::size_t i = 0; i < 3 * k; ++i) {
    if (!d.n_part.contains(images[i])) throw DecompositionError("sl2(U) image leaves N");
    for (std::size_t j = 0; j < 3 * k; ++j) {
      if (phi.apply(lie.product(i, j)) != a.multiply(images[i], images[j])) {
        throw DecompositionError("sl2(U) -> N fails to be multiplicative on " + lie.basis_name(i) + "*" +
                                 lie.basis_name(j));
      }
    }
  }
  return out;
}

PairingForm extract_pairing(const Algebra& a, const Decomposition& d, const CoordAlgebra& u) {
  const Sl2Embedding& l = d.sl2;
  const Matrix re = a.right_multiplication(l.e);
  const Matrix rh = a.right_multiplication(l.h);
  const Matrix rf = a.right_multiplication(l.f);
  const Subspace w1 = Subspace::span(u.rep_basis, a.dim());
  const Subspace wm1 = eigenspace(rh, Rational(-1)).intersection(d.n_part);
  const std::vector<Vector> ws = d.v1.basis_vectors();
  const std::size_t n = ws.size();
  const std::size_t du = u.u.dim();

  auto to_u = [&](const Vector& rep) {
    Vector c;
    if (!solve(Matrix::from_columns(u.rep_basis, a.dim()), rep, c)) {
      throw DecompositionError("pairing value escapes the +1 weight space of N");
    }
    return c;
  };

  PairingForm p;
  p.scalars = u.u;
  p.v_dim = n;
  for (std::size_t m = 0; m < du; ++m) {
    const Vector f_om = Rational(2) * rf.apply(rf.apply(u.rep_basis[m]));
    std::vector<Vector> cols;
    for (const auto& w : ws) {
      Vector img = a.multiply(f_om, re.apply(w));
      if (!d.v1.contains(img)) throw DecompositionError("scalar action leaves V(1)");
      cols.push_back(d.v1.coordinates(img));
    }
    p.action.push_back(Matrix::from_columns(cols, n));
  }
  p.entries.assign(n, std::vector<Vector>(n, Vector(du)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = a.multiply(ws[i], ws[j]);
      if (!wm1.contains(prod)) {
        throw DecompositionError("V(1) product leaves the -1 weight space of N (not of the form F<u,v>)");
      }
      const Vector rep = Rational(2) * re.apply(re.apply(prod));
      if (!w1.contains(rep)) throw DecompositionError("pairing value escapes the +1 weight space of N");
      if (Rational(2) * rf.apply(rf.apply(rep)) != prod) {
        throw DecompositionError("pairing value does not reconstruct the V(1) product");
      }
      p.entries[i][j] = to_u(rep);
    }
  }
  IdentityReport r = pairing_report(p);
  if (!r.passed) throw PairingError("extracted pairing fails " + r.identity, std::move(r));
  return p;
}

ModuleAction lm_module(unsigned m) {
  const std::size_t dim = m + 1;
  Matrix e(dim, dim);
  Matrix f(dim, dim);
  Matrix h(dim, dim);
  const long long mm = m;
  for (std::size_t i = 0; i < dim; ++i) {
    const long long ii = static_cast<long long>(i);
    h(i, i) = Rational(mm - 2 * ii);
    if (i + 1 < dim) f(i + 1, i) = 1;
    if (i > 0) e(i - 1, i) = Rational((ii - 1) * ii - mm * ii);
  }
  // e = E, f = 4F, h = 2H in the E, F, H basis of sl2().
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("v" + std::to_string(i));
  return ModuleAction(3, {e, Rational(1, 4) * f, Rational(1, 2) * h}, names);
}

ModuleAction v2_module() {
  Matrix e(2, 2);
  Matrix f(2, 2);
  Matrix h(2, 2);
  // Columns are images: u = index 0, v = index 1.
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(1, 0) = 1;
  f(0, 1) = -1;
  return ModuleAction(3, {e, f, h}, {"u", "v"});
}

nlohmann::ordered_json decomposition_to_json(const Decomposition& d) {
  auto rows = [](const Subspace& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : s.basis_vectors()) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& x : r) row.push_back(x.str());
      out.push_back(std::move(row));
    }
    return out;
  };
  nlohmann::ordered_json j;
  j["dims"] = {{"ann", d.ann.dim()}, {"n_part", d.n_part.dim()}, {"j_part", d.j_part.dim()}, {"v1", d.v1.dim()},
               {"v2", d.v2.dim()}};
  j["ann"] = rows(d.ann);
  j["n_part"] = rows(d.n_part);
  j["j_part"] = rows(d.j_part);
  j["v1"] = rows(d.v1);
  j["v2"] = rows(d.v2);
  return j;
}

} // namespace malcev
