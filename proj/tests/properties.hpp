#ifndef MALCEV_TESTS_PROPERTIES_HPP
#define MALCEV_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/identities.hpp"
#include "malcev/sl2rep.hpp"

/// Exhaustive property scans shared by the unit tests and the acceptance binary.
namespace props {

using namespace malcev;

struct Outcome {
  bool passed = true;
  std::string what;
  std::uint64_t checked = 0;
};

inline Outcome fail(std::string what, std::uint64_t checked) { return {false, std::move(what), checked}; }

inline std::string tuple_text(std::initializer_list<std::size_t> t) {
  std::string s = "(";
  for (auto it = t.begin(); it != t.end(); ++it) s += (it == t.begin() ? "" : ",") + std::to_string(*it);
  return s + ")";
}

/// J(tx,y,z) = tJ(x,y,z) + J(t,y,z)x - 2J(t,x,yz) on all basis quadruples.
inline Outcome jacobian_expansion(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> jac(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        jac[(x * n + y) * n + z] = jacobian(a, a.basis_vector(x), a.basis_vector(y), a.basis_vector(z));
  // J is trilinear, so J(v, y, z) for arbitrary v is a combination of basis values.
  auto j_first = [&](const Vector& v, std::size_t y, std::size_t z) {
    Vector out(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].is_zero()) axpy(out, v[c], jac[(c * n + y) * n + z]);
    return out;
  };
  auto j_last = [&](std::size_t x, std::size_t y, const Vector& v) {
    Vector out(n);
    for (std::size_t c = 0; c < n; ++c)
      if (!v[c].is_zero()) axpy(out, v[c], jac[(x * n + y) * n + c]);
    return out;
  };
  std::uint64_t checked = 0;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          ++checked;
          Vector lhs = j_first(a.product(t, x), y, z);
          Vector rhs = a.multiply_basis_left(t, jac[(x * n + y) * n + z]);
          rhs = rhs + a.multiply_basis_right(jac[(t * n + y) * n + z], x);
          axpy(rhs, -2, j_last(t, x, a.product(y, z)));
          if (lhs != rhs) return fail("J(tx,y,z) expansion fails at (t,x,y,z) = " + tuple_text({t, x, y, z}), checked);
        }
  return {true, "", checked};
}

/// p(x,y,z,t) for all basis quadruples, index ((x*n+y)*n+z)*n+t.
inline std::vector<Vector> p_table(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> p(n * n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t)
          p[((x * n + y) * n + z) * n + t] =
              p_val(a, a.basis_vector(x), a.basis_vector(y), a.basis_vector(z), a.basis_vector(t));
  return p;
}

/// p(x,y,z,t)u = p(xu,y,z,t) and p(x,y,z,ut) = p(x,u,t,yz) on all basis 5-tuples.
inline Outcome p_identities(const Algebra& a, const std::vector<Vector>& p) {
  const std::size_t n = a.dim();
  auto at = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t t) -> const Vector& {
    return p[((x * n + y) * n + z) * n + t];
  };
  std::uint64_t checked = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t)
          for (std::size_t u = 0; u < n; ++u) {
            ++checked;
            Vector lhs = a.multiply_basis_right(at(x, y, z, t), u);
            Vector rhs(n);
            const Vector& xu = a.product(x, u);
            for (std::size_t c = 0; c < n; ++c)
              if (!xu[c].is_zero()) axpy(rhs, xu[c], at(c, y, z, t));
            if (lhs != rhs) return fail("p(x,y,z,t)u != p(xu,y,z,t) at " + tuple_text({x, y, z, t, u}), checked);

            Vector l2(n), r2(n);
            const Vector& ut = a.product(u, t);
            const Vector& yz = a.product(y, z);
            for (std::size_t c = 0; c < n; ++c) {
              if (!ut[c].is_zero()) axpy(l2, ut[c], at(x, y, z, c));
              if (!yz[c].is_zero()) axpy(r2, yz[c], at(x, u, t, c));
            }
            if (l2 != r2) return fail("p(x,y,z,ut) != p(x,u,t,yz) at " + tuple_text({x, y, z, t, u}), checked);
          }
  return {true, "", checked};
}

/// check_centroid on the map x -> p(x,y,z,t) for every basis triple (y,z,t).
inline Outcome alpha_maps_in_centroid(const Algebra& a, const std::vector<Vector>& p) {
  const std::size_t n = a.dim();
  std::uint64_t checked = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t t = 0; t < n; ++t) {
        ++checked;
        std::vector<Vector> cols;
        for (std::size_t x = 0; x < n; ++x) cols.push_back(p[((x * n + y) * n + z) * n + t]);
        IdentityReport r = check_centroid(a, LinearMap(Matrix::from_columns(cols, n)));
        if (!r.passed) return fail("alpha(y,z,t) not in the centroid at " + tuple_text({y, z, t}), checked);
      }
  return {true, "", checked};
}

/// Products of all basis pairs of `left` and `right` lie in `target`.
inline bool products_in(const Algebra& a, const Subspace& left, const Subspace& right, const Subspace& target) {
  for (const auto& x : left.basis_vectors())
    for (const auto& y : right.basis_vectors())
      if (!target.contains(a.multiply(x, y))) return false;
  return true;
}

/// Containments and weight relations that every decomposition must satisfy.
inline Outcome decomposition_properties(const Algebra& a, const Decomposition& d) {
  const std::size_t n = a.dim();
  const Subspace zero(n);
  const Subspace ann_n = d.ann.sum(d.n_part);
  std::uint64_t checked = 0;
  auto step = [&](bool ok, const char* what) -> std::optional<Outcome> {
    ++checked;
    if (!ok) return fail(what, checked);
    return std::nullopt;
  };
  std::vector<std::pair<bool, const char*>> checks = {
      {d.ann.dim() + d.n_part.dim() + d.j_part.dim() == n && ann_n.sum(d.j_part).dim() == n, "ann + n + j is not a direct sum of the whole algebra"},
      {products_in(a, d.n_part, d.n_part, d.n_part), "n_part is not closed under multiplication"},
      {products_in(a, d.n_part, d.j_part, d.j_part), "n_part * j_part is not inside j_part"},
      {products_in(a, d.ann, d.ann, d.ann), "ann is not a subalgebra"},
      {products_in(a, d.ann, d.n_part, zero), "ann * n_part is not zero"},
      {products_in(a, d.ann, d.j_part, d.j_part), "ann * j_part is not inside j_part"},
      {products_in(a, ann_n, ann_n, ann_n), "ann + n_part is not closed under multiplication"},
      {products_in(a, d.j_part, d.j_part, d.n_part), "j_part * j_part is not inside n_part"},
      {d.v1.sum(d.v2) == d.j_part && d.v1.dim() == d.v2.dim(), "j_part is not v1 + v2 of equal dimensions"},
  };
  for (const auto& [ok, what] : checks)
    if (auto f = step(ok, what)) return *f;

  const Matrix re = a.right_multiplication(d.sl2.e);
  const Matrix rf = a.right_multiplication(d.sl2.f);
  const Matrix rh = a.right_multiplication(d.sl2.h);
  for (const auto& w : d.v1.basis_vectors()) {
    if (auto f = step(rh.apply(w) == w, "R_H is not 1 on v1")) return *f;
    if (auto f = step(d.v2.contains(re.apply(w)), "R_E does not map v1 into v2")) return *f;
    if (auto f = step(-rf.apply(re.apply(w)) == w, "-R_F R_E is not the identity on v1")) return *f;
  }
  for (const auto& w : d.v2.basis_vectors()) {
    if (auto f = step(rh.apply(w) == -w, "R_H is not -1 on v2")) return *f;
    if (auto f = step(re.apply(-rf.apply(w)) == w, "R_E (-R_F) is not the identity on v2")) return *f;
  }
  const auto v1 = d.v1.basis_vectors();
  for (const auto& w : v1) {
    for (const auto& w2 : v1) {
      const Vector ww = a.multiply(w, w2);
      if (auto f = step(is_zero(a.multiply(ww, d.sl2.f)), "(w w')F is not zero on v1")) return *f;
      if (auto f = step(a.multiply(ww, d.sl2.h) == -ww, "(w w')H is not -(w w') on v1")) return *f;
      if (auto f = step(a.multiply(ww, d.sl2.e) == -a.multiply(w, re.apply(w2)), "(w w')E is not -w (w'E) on v1")) return *f;
      // w(1)w'(2) = w(2)w'(1) with w(2) = wE.
      if (auto f = step(a.multiply(w, re.apply(w2)) == a.multiply(re.apply(w), w2), "w (w'E) != (wE) w' on v1")) return *f;
    }
  }
  return {true, "", checked};
}

} // namespace props

#endif
