#include "malcev/algebra.hpp"

#include <map>
#include <set>

namespace malcev {

Algebra::Algebra(std::string name, std::vector<std::string> basis, std::vector<Vector> table, bool anticommutative)
    : name_(std::move(name)), basis_(std::move(basis)), table_(std::move(table)), anticommutative_(anticommutative) {
  const std::size_t n = basis_.size();
  if (table_.size() != n * n) {
    throw AlgebraError("structure tensor has " + std::to_string(table_.size()) + " entries, expected " +
                       std::to_string(n * n));
  }
  std::set<std::string_view> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b).second) throw SchemaError("duplicate basis name '" + b + "'");
  }
  sparse_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (table_[k].size() != n) throw AlgebraError("structure tensor entry has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      if (!table_[k][c].is_zero()) sparse_[k].push_back({c, table_[k][c]});
    }
  }
  if (anticommutative_) {
    IdentityReport r = check_anticommutative(*this);
    if (!r.passed) {
      const auto& t = *r.first_failure;
      throw SchemaError("algebra '" + name_ + "' flagged anticommutative but " + basis_[t[0]] + "*" + basis_[t[1]] +
                        " violates skew symmetry");
    }
  }
}

std::optional<std::size_t> Algebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == name) return i;
  }
  return std::nullopt;
}

void Algebra::require_element(const Vector& x) const {
  if (x.size() != dim()) {
    throw ForeignElementError("element of length " + std::to_string(x.size()) + " used with algebra '" + name_ +
                              "' of dimension " + std::to_string(dim()));
  }
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  require_element(x);
  require_element(y);
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& ts = sparse_[i * n + j];
      if (ts.empty()) continue;
      Rational s = x[i] * y[j];
      for (const auto& t : ts) out[t.index] += s * t.coeff;
    }
  }
  return out;
}

Vector Algebra::multiply_basis_right(const Vector& x, std::size_t j) const {
  require_element(x);
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : sparse_[i * n + j]) out[t.index] += x[i] * t.coeff;
  }
  return out;
}

Vector Algebra::multiply_basis_left(std::size_t i, const Vector& y) const {
  require_element(y);
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& t : sparse_[i * n + j]) out[t.index] += y[j] * t.coeff;
  }
  return out;
}

Matrix Algebra::right_multiplication(const Vector& y) const {
  require_element(y);
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(multiply_basis_left(i, y));
  return Matrix::from_columns(cols, dim());
}

Matrix Algebra::left_multiplication(const Vector& y) const {
  require_element(y);
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(multiply_basis_right(y, i));
  return Matrix::from_columns(cols, dim());
}

Algebra Algebra::renamed(std::string name) const {
  Algebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ModuleAction::ModuleAction(std::size_t algebra_dim_, std::vector<Matrix> action_, std::vector<std::string> names)
    : algebra_dim(algebra_dim_), action(std::move(action_)), module_names(std::move(names)) {
  if (action.size() != algebra_dim) {
    throw DimensionError("module action needs one matrix per basis element of the acting algebra");
  }
  module_dim = action.empty() ? module_names.size() : action.front().rows();
  for (const auto& m : action) {
    if (m.rows() != module_dim || m.cols() != module_dim) throw DimensionError("module action matrices must be square");
  }
  if (module_names.empty()) {
    for (std::size_t i = 0; i < module_dim; ++i) module_names.push_back("m" + std::to_string(i));
  }
  if (module_names.size() != module_dim) throw DimensionError("module basis name count mismatch");
}

// ---------------------------------------------------------------------------

namespace {

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw SchemaError(where + ": coefficient must be a \"p/q\" string");
}

std::size_t lookup(const std::map<std::string, std::size_t, std::less<>>& index, const std::string& name,
                   const std::string& where) {
  auto it = index.find(name);
  if (it == index.end()) throw SchemaError(where + ": unknown basis name '" + name + "'");
  return it->second;
}

const nlohmann::json& require_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

} // namespace

Vector coords_from_json(const nlohmann::json& obj, const std::vector<std::string>& names) {
  if (!obj.is_object()) throw SchemaError("coordinates must be an object mapping basis names to \"p/q\"");
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  Vector v(names.size());
  for (const auto& [key, value] : obj.items()) {
    v[lookup(index, key, "coordinates")] = rational_from_json(value, "coordinate '" + key + "'");
  }
  return v;
}

nlohmann::ordered_json coords_to_json(const Vector& v, const std::vector<std::string>& names) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[names.at(i)] = v[i].str();
  }
  return out;
}

Algebra load_algebra(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("algebra document must be a JSON object");
  const auto& name_field = require_field(doc, "name", "document");
  const auto& dim_field = require_field(doc, "dim", "document");
  const auto& basis_field = require_field(doc, "basis", "document");
  if (!name_field.is_string()) throw SchemaError("'name' must be a string");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 0)
    throw SchemaError("'dim' must be a non-negative integer");
  if (!basis_field.is_array()) throw SchemaError("'basis' must be an array of strings");
  const auto n = static_cast<std::size_t>(dim_field.get<long long>());
  if (basis_field.size() != n) {
    throw SchemaError("'basis' has " + std::to_string(basis_field.size()) + " names but 'dim' is " + std::to_string(n));
  }

  std::vector<std::string> basis;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& b : basis_field) {
    if (!b.is_string()) throw SchemaError("basis names must be strings");
    auto s = b.get<std::string>();
    if (s.empty()) throw SchemaError("basis names must be nonempty");
    if (!index.emplace(s, basis.size()).second) throw SchemaError("duplicate basis name '" + s + "'");
    basis.push_back(std::move(s));
  }

  bool anti = false;
  if (auto it = doc.find("anticommutative"); it != doc.end()) {
    if (!it->is_boolean()) throw SchemaError("'anticommutative' must be a boolean");
    anti = it->get<bool>();
  }

  std::vector<Vector> table(n * n, Vector(n));
  std::vector<bool> given(n * n, false);
  if (auto it = doc.find("products"); it != doc.end()) {
    if (!it->is_array()) throw SchemaError("'products' must be an array");
    for (const auto& entry : *it) {
      if (!entry.is_object()) throw SchemaError("each product entry must be an object");
      const auto& l = require_field(entry, "left", "product entry");
      const auto& r = require_field(entry, "right", "product entry");
      const auto& res = require_field(entry, "result", "product entry");
      if (!l.is_string() || !r.is_string()) throw SchemaError("'left' and 'right' must be basis names");
      const std::string ls = l.get<std::string>();
      const std::string rs = r.get<std::string>();
      const std::size_t i = lookup(index, ls, "product entry");
      const std::size_t j = lookup(index, rs, "product entry");
      const std::string where = "product " + ls + "*" + rs;
      if (!res.is_object()) throw SchemaError(where + ": 'result' must be an object");
      if (given[i * n + j]) throw SchemaError(where + " is given twice");
      given[i * n + j] = true;
      if (anti && i >= j) {
        throw SchemaError(where + " contradicts the anticommutative flag (only left-index < right-index entries "
                                  "are allowed)");
      }
      Vector v(n);
      for (const auto& [key, value] : res.items()) {
        v[lookup(index, key, where)] = rational_from_json(value, where);
      }
      table[i * n + j] = std::move(v);
    }
  }
  if (anti) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) table[j * n + i] = -table[i * n + j];
  }
  return Algebra(name_field.get<std::string>(), std::move(basis), std::move(table), anti);
}

Algebra parse_algebra(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return load_algebra(doc);
}

nlohmann::ordered_json to_document(const Algebra& a) {
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["dim"] = a.dim();
  doc["basis"] = a.basis_names();
  doc["anticommutative"] = a.anticommutative();
  nlohmann::ordered_json products = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = a.anticommutative() ? i + 1 : 0; j < a.dim(); ++j) {
      if (a.terms(i, j).empty()) continue;
      nlohmann::ordered_json e;
      e["left"] = a.basis_name(i);
      e["right"] = a.basis_name(j);
      e["result"] = coords_to_json(a.product(i, j), a.basis_names());
      products.push_back(std::move(e));
    }
  }
  doc["products"] = std::move(products);
  return doc;
}

std::string dump_algebra(const Algebra& a) { return to_document(a).dump(2) + "\n"; }

// ---------------------------------------------------------------------------

IdentityReport check_anticommutative(const Algebra& a) {
  const std::size_t n = a.dim();
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++checked;
      Vector defect = (i == j) ? a.product(i, i) : a.product(i, j) + a.product(j, i);
      if (!is_zero(defect)) {
        return IdentityReport::fail("anticommutative", {i, j}, std::move(defect), a.basis_names(), checked);
      }
    }
  }
  return IdentityReport::pass("anticommutative", checked);
}

Algebra quotient_by_ideal(const Algebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  if (ideal.ambient_dim() != n) throw DimensionError("ideal does not live in the algebra");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < ideal.dim(); ++k) {
      Vector s = ideal.basis_vector(k);
      if (!ideal.contains(a.multiply_basis_left(i, s))) {
        throw IdealError("subspace is not an ideal: " + a.basis_name(i) + " * (ideal basis vector " +
                         std::to_string(k) + ") leaves it");
      }
      if (!ideal.contains(a.multiply_basis_right(s, i))) {
        throw IdealError("subspace is not an ideal: (ideal basis vector " + std::to_string(k) + ") * " +
                         a.basis_name(i) + " leaves it");
      }
    }
  }
  LinearMap proj = quotient_projection(a, ideal);
  const std::size_t q = proj.codomain_dim;
  std::vector<std::size_t> keep;
  {
    std::vector<bool> pivot(n, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!pivot[i]) keep.push_back(i);
  }
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(a.basis_name(i));
  std::vector<Vector> table;
  table.reserve(q * q);
  for (auto i : keep)
    for (auto j : keep) table.push_back(proj(a.product(i, j)));
  Algebra out(a.name() + "/I", std::move(names), std::move(table), false);

  // The projection must be multiplicative on all basis pairs.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = proj(a.product(i, j));
      Vector rhs = out.multiply(proj(a.basis_vector(i)), proj(a.basis_vector(j)));
      if (lhs != rhs) throw IdealError("projection fails to be multiplicative on " + a.basis_name(i) + "*" + a.basis_name(j));
    }
  }
  if (a.anticommutative() && check_anticommutative(out).passed) return Algebra(out.name(), out.basis_names(), [&] {
      std::vector<Vector> t;
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) t.push_back(out.product(i, j));
      return t;
    }(), true);
  return out;
}

LinearMap quotient_projection(const Algebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) keep.push_back(i);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = ideal.reduce(a.basis_vector(i));
    Vector c(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) c[k] = r[keep[k]];
    cols.push_back(std::move(c));
  }
  return LinearMap(Matrix::from_columns(cols, keep.size()));
}

Algebra split_null_extension(const Algebra& lie, const ModuleAction& act, std::string name) {
  if (act.algebra_dim != lie.dim()) throw DimensionError("module action does not match the acting algebra");
  const std::size_t l = lie.dim();
  const std::size_t m = act.module_dim;
  const std::size_t n = l + m;
  std::vector<std::string> names = lie.basis_names();
  for (const auto& s : act.module_names) names.push_back(s);
  std::vector<Vector> table(n * n, Vector(n));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) table[i * n + j][k] = lie.product(i, j)[k];
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < l; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& c = act.action[j](k, a); // (m_a * b_j)_k
        if (c.is_zero()) continue;
        table[(l + a) * n + j][l + k] = c;
        table[j * n + (l + a)][l + k] = -c;
      }
    }
  }
  if (name.empty()) name = lie.name() + "+V";
  bool anti = lie.anticommutative();
  return Algebra(std::move(name), std::move(names), std::move(table), anti);
}

} // namespace malcev
