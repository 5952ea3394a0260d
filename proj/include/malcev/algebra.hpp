#ifndef MALCEV_ALGEBRA_HPP
#define MALCEV_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "malcev/linalg.hpp"
#include "malcev/report.hpp"

namespace malcev {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Interchange document does not match the schema (or is internally contradictory).
class SchemaError : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

/// An element whose coordinate length does not match the algebra it is used with.
class ForeignElementError : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

class IdealError : public AlgebraError {
public:
  using AlgebraError::AlgebraError;
};

/// A nonzero coordinate of a structure-tensor entry.
struct Term {
  std::size_t index;
  Rational coeff;
};

/// Finite-dimensional algebra over Q given by structure constants.
///
/// Products are read row by column: product(i, j) is the coordinate vector
/// of b_i * b_j. Elements are plain coordinate vectors of length dim().
class Algebra {
public:
  Algebra() = default;
  /// `table` holds dim*dim product vectors in row-major (i, j) order. With
  /// `anticommutative` set, the table is verified skew on construction.
  Algebra(std::string name, std::vector<std::string> basis, std::vector<Vector> table, bool anticommutative);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const std::string& basis_name(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool anticommutative() const { return anticommutative_; }

  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return sparse_[i * dim() + j]; }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  Vector zero() const { return zero_vector(dim()); }
  void require_element(const Vector& x) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  /// x * b_j
  Vector multiply_basis_right(const Vector& x, std::size_t j) const;
  /// b_i * y
  Vector multiply_basis_left(std::size_t i, const Vector& y) const;

  /// Matrix of x -> x*y (columns are images of basis vectors).
  Matrix right_multiplication(const Vector& y) const;
  /// Matrix of x -> y*x.
  Matrix left_multiplication(const Vector& y) const;

  Algebra renamed(std::string name) const;

  /// Same basis names and identical structure tensor.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.basis_ == b.basis_ && a.table_ == b.table_;
  }

private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<Vector> table_;
  std::vector<std::vector<Term>> sparse_;
  bool anticommutative_ = false;
};

/// Linear map stored as a codomain_dim x domain_dim matrix acting on columns.
struct LinearMap {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  Matrix matrix;

  LinearMap() = default;
  explicit LinearMap(Matrix m) : domain_dim(m.cols()), codomain_dim(m.rows()), matrix(std::move(m)) {}

  Vector operator()(const Vector& x) const { return matrix.apply(x); }
};

/// Right action m -> m*b_i of an algebra on a module, one matrix per basis element.
struct ModuleAction {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Matrix> action;
  std::vector<std::string> module_names;

  ModuleAction(std::size_t algebra_dim, std::vector<Matrix> action, std::vector<std::string> names = {});
};

// --- Interchange documents -------------------------------------------------

Algebra load_algebra(const nlohmann::json& doc);
Algebra parse_algebra(std::string_view text);
nlohmann::ordered_json to_document(const Algebra& a);
std::string dump_algebra(const Algebra& a);

/// Maps basis names to "p/q" strings for the nonzero coordinates of v.
nlohmann::ordered_json coords_to_json(const Vector& v, const std::vector<std::string>& names);
Vector coords_from_json(const nlohmann::json& obj, const std::vector<std::string>& names);

// --- Operations ------------------------------------------------------------

IdentityReport check_anticommutative(const Algebra& a);

/// Quotient by a two-sided ideal. The quotient basis is the set of standard
/// basis vectors that are not pivot columns of the ideal's RREF basis.
Algebra quotient_by_ideal(const Algebra& a, const Subspace& ideal);
/// Canonical projection onto the basis chosen by quotient_by_ideal.
LinearMap quotient_projection(const Algebra& a, const Subspace& ideal);

/// (x+v)(y+w) = xy + v*y - w*x, with V*V = 0.
Algebra split_null_extension(const Algebra& lie, const ModuleAction& act, std::string name = {});

} // namespace malcev

#endif
