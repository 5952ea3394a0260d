#ifndef MALCEV_LINALG_HPP
#define MALCEV_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

/// Coordinate vector over Q.
using Vector = std::vector<Rational>;

/// Thrown when two objects that must share an ambient dimension do not.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  /// Vertical concatenation; column counts must agree.
  Matrix stacked(const Matrix& below) const;

  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row-echelon form over Q (Gauss-Jordan).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// {x : m x = 0}
Subspace kernel(const Matrix& m);

/// Solves m x = b; returns false when the system is inconsistent.
bool solve(const Matrix& m, const Vector& b, Vector& x);

/// A subspace of Q^n stored by its canonical RREF basis (rows).
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0);
  /// Row span of the given vectors.
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const;
  /// v minus its component along the pivot columns (zero iff v is inside).
  Vector reduce(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  void require_same_ambient(const Subspace& other) const;

  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace malcev

#endif
