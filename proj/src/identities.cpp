#include "malcev/identities.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace malcev {

Vector jacobian(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector out = a.multiply(a.multiply(x, y), z);
  out = out + a.multiply(a.multiply(y, z), x);
  return out + a.multiply(a.multiply(z, x), y);
}

Vector brace(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  const Vector yz = a.multiply(y, z);
  Vector out = a.multiply(a.multiply(x, y), z) - a.multiply(a.multiply(x, z), y);
  axpy(out, Rational(2), a.multiply(x, yz));
  Vector alt = jacobian(a, x, y, z);
  axpy(alt, Rational(3), a.multiply(x, yz));
  if (a.anticommutative() && out != alt) {
    throw std::logic_error("brace and Jacobian forms disagree on an anticommutative algebra");
  }
  return out;
}

Vector h_val(const Algebra& a, const Vector& y, const Vector& z, const Vector& t, const Vector& x, const Vector& u) {
  const Vector yz = a.multiply(y, z);
  Vector out = a.multiply(brace(a, yz, t, u), x);
  out = out + a.multiply(brace(a, yz, t, x), u);
  out = out + a.multiply(brace(a, a.multiply(y, x), z, u), t);
  return out + a.multiply(brace(a, a.multiply(y, u), z, x), t);
}

Vector p_val(const Algebra& a, const Vector& x, const Vector& y, const Vector& z, const Vector& t) {
  Vector out = brace(a, a.multiply(x, t), y, z);
  out = out - brace(a, a.multiply(z, t), x, y);
  return out - brace(a, a.multiply(y, t), z, x);
}

LinearMap alpha_map(const Algebra& a, const Vector& y, const Vector& z, const Vector& t) {
  a.require_element(y);
  a.require_element(z);
  a.require_element(t);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a.dim(); ++i) cols.push_back(p_val(a, a.basis_vector(i), y, z, t));
  return LinearMap(Matrix::from_columns(cols, a.dim()));
}

std::string identity_name(Identity which) {
  switch (which) {
  case Identity::malcev:
    return "malcev";
  case Identity::lie:
    return "lie";
  case Identity::variety_h:
    return "variety_h";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view text) {
  if (text == "malcev") return Identity::malcev;
  if (text == "lie") return Identity::lie;
  if (text == "variety_h" || text == "variety-h") return Identity::variety_h;
  return std::nullopt;
}

std::optional<unsigned> workers_from_env() {
  const char* raw = std::getenv("MALCEV_WORKERS");
  if (raw == nullptr) return std::nullopt;
  std::string_view s(raw);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || value == 0) {
    throw std::invalid_argument("MALCEV_WORKERS must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

unsigned default_workers() {
  if (auto env = workers_from_env()) return *env;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------

namespace {

using Sparse = std::vector<Term>;

Sparse to_sparse(const Vector& v) {
  Sparse s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  }
  return s;
}

/// out +/-= x * b_j
void add_right(const Algebra& a, Vector& out, const Sparse& x, std::size_t j, bool negate) {
  for (const auto& xi : x) {
    for (const auto& t : a.terms(xi.index, j)) {
      if (negate) {
        out[t.index] -= xi.coeff * t.coeff;
      } else {
        out[t.index] += xi.coeff * t.coeff;
      }
    }
  }
}

/// out +/-= x * y
void add_product(const Algebra& a, Vector& out, const Sparse& x, const Sparse& y, bool negate) {
  for (const auto& xi : x) {
    for (const auto& yj : y) {
      const auto& ts = a.terms(xi.index, yj.index);
      if (ts.empty()) continue;
      Rational c = xi.coeff * yj.coeff;
      if (negate) c = -c;
      for (const auto& t : ts) out[t.index] += c * t.coeff;
    }
  }
}

void clear(Vector& v) {
  for (auto& x : v) {
    if (!x.is_zero()) x = Rational();
  }
}

struct Failure {
  std::vector<std::size_t> tuple;
  Vector value;
};

/// Runs `block(i)` for every first index i, returning the failure with the
/// least first index. Each block reports its own least failure.
template <class Block>
std::optional<Failure> scan_blocks(std::size_t n, unsigned workers, Block block) {
  std::vector<std::optional<Failure>> found(n);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex mu;
  std::exception_ptr error;

  auto run = [&] {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n || i >= best.load()) return;
        auto r = block(i);
        if (r) {
          std::lock_guard lock(mu);
          found[i] = std::move(r);
          if (i < best.load()) best.store(i);
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  if (workers == 0) workers = default_workers();
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (count <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (auto& f : found) {
    if (f) return std::move(f);
  }
  return std::nullopt;
}

std::uint64_t power(std::size_t n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n;
  return r;
}

std::uint64_t rank_of(const std::vector<std::size_t>& tuple, std::size_t n) {
  std::uint64_t r = 0;
  for (auto t : tuple) r = r * n + t;
  return r + 1;
}

IdentityReport finish(const Algebra& a, const std::string& name, unsigned k, std::optional<Failure> f) {
  const std::size_t n = a.dim();
  if (!f) return IdentityReport::pass(name, power(n, k));
  std::uint64_t checked = rank_of(f->tuple, n);
  return IdentityReport::fail(name, std::move(f->tuple), std::move(f->value), a.basis_names(), checked);
}

/// T3[(i*n + j)*n + k] = (b_i b_j) b_k
std::vector<Sparse> triple_products(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Sparse> t3(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t3[(i * n + j) * n + k] = to_sparse(a.multiply_basis_right(a.product(i, j), k));
  return t3;
}

std::vector<Sparse> pair_products(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Sparse> p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i * n + j] = to_sparse(a.product(i, j));
  return p;
}

std::optional<Failure> scan_lie(const Algebra& a, unsigned workers) {
  const std::size_t n = a.dim();
  const auto t3 = triple_products(a);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Sparse& { return t3[(i * n + j) * n + k]; };
  return scan_blocks(n, workers, [&](std::size_t x) -> std::optional<Failure> {
    Vector out(n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        clear(out);
        for (const auto* s : {&at(x, y, z), &at(y, z, x), &at(z, x, y)})
          for (const auto& term : *s) out[term.index] += term.coeff;
        if (!is_zero(out)) return Failure{{x, y, z}, out};
      }
    }
    return std::nullopt;
  });
}

std::optional<Failure> scan_malcev(const Algebra& a, unsigned workers) {
  const std::size_t n = a.dim();
  const auto t3 = triple_products(a);
  const auto p = pair_products(a);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Sparse& { return t3[(i * n + j) * n + k]; };
  return scan_blocks(n, workers, [&](std::size_t x) -> std::optional<Failure> {
    Vector out(n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t t = 0; t < n; ++t) {
          clear(out);
          add_product(a, out, p[x * n + z], p[y * n + t], false);
          add_right(a, out, at(x, y, z), t, true);
          add_right(a, out, at(y, z, t), x, true);
          add_right(a, out, at(z, t, x), y, true);
          add_right(a, out, at(t, x, y), z, true);
          if (!is_zero(out)) return Failure{{x, y, z, t}, out};
        }
      }
    }
    return std::nullopt;
  });
}

std::optional<Failure> scan_variety_h(const Algebra& a, unsigned workers) {
  const std::size_t n = a.dim();
  // Basis braces {b_k, b_b, b_c}.
  std::vector<Vector> braces(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        braces[(k * n + b) * n + c] = brace(a, a.basis_vector(k), a.basis_vector(b), a.basis_vector(c));
  const auto p = pair_products(a);

  return scan_blocks(n, workers, [&](std::size_t y) -> std::optional<Failure> {
    // g[(i*n + b)*n + c] = {y b_i, b_b, b_c}
    std::vector<Sparse> g(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Sparse& yi = p[y * n + i];
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          Vector acc(n);
          for (const auto& term : yi) axpy(acc, term.coeff, braces[(term.index * n + b) * n + c]);
          g[(i * n + b) * n + c] = to_sparse(acc);
        }
      }
    }
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Sparse& { return g[(i * n + j) * n + k]; };
    Vector out(n);
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t u = 0; u < n; ++u) {
            clear(out);
            add_right(a, out, at(z, t, u), x, false);
            add_right(a, out, at(z, t, x), u, false);
            add_right(a, out, at(x, z, u), t, false);
            add_right(a, out, at(u, z, x), t, false);
            if (!is_zero(out)) return Failure{{y, z, t, x, u}, out};
          }
        }
      }
    }
    return std::nullopt;
  });
}

} // namespace

IdentityReport check_identity(const Algebra& a, Identity which, unsigned workers) {
  IdentityReport anti = check_anticommutative(a);
  if (!anti.passed) {
    anti.detail = identity_name(which) + " check requires an anticommutative algebra";
    return anti;
  }
  switch (which) {
  case Identity::lie:
    return finish(a, "lie", 3, scan_lie(a, workers));
  case Identity::malcev:
    return finish(a, "malcev", 4, scan_malcev(a, workers));
  case Identity::variety_h:
    return finish(a, "variety_h", 5, scan_variety_h(a, workers));
  }
  throw std::invalid_argument("unknown identity");
}

IdentityReport check_centroid(const Algebra& a, const LinearMap& f) {
  const std::size_t n = a.dim();
  if (f.domain_dim != n || f.codomain_dim != n) {
    throw DimensionError("centroid candidate must map the algebra to itself");
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.matrix.column(i));
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++checked;
      const Vector lhs = f(a.product(i, j));
      Vector d1 = lhs - a.multiply_basis_left(i, images[j]);
      if (!is_zero(d1)) return IdentityReport::fail("centroid", {i, j}, std::move(d1), a.basis_names(), checked);
      Vector d2 = lhs - a.multiply_basis_right(images[i], j);
      if (!is_zero(d2)) return IdentityReport::fail("centroid", {i, j}, std::move(d2), a.basis_names(), checked);
    }
  }
  return IdentityReport::pass("centroid", checked);
}

} // namespace malcev
