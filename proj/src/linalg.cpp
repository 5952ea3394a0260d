#include "malcev/linalg.hpp"

#include <utility>

namespace malcev {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {
void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}
} // namespace

Vector operator+(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!b[i].is_zero()) out[i] += b[i];
  }
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!b[i].is_zero()) out[i] -= b[i];
  }
  return out;
}

Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = s * v[i];
  }
  return out;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  require_same_length(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw DimensionError("cannot stack matrices with different column counts");
  Matrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix/vector shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out(m);
  for (auto& x : out.data_) x *= s;
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(lead, j));
    }
    Rational inv = a(lead, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(lead, j).is_zero()) a(lead, j) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      Rational factor = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(lead, j).is_zero()) a(r, j) -= factor * a(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return RrefResult{std::move(a), lead, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, cols);
}

bool solve(const Matrix& m, const Vector& b, Vector& x) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.form(i, m.cols());
  return true;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient_dim));
  Matrix basis(r.rank, ambient_dim);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(i, c) = r.form(i, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(ambient_dim, i));
  return span(rows, ambient_dim);
}

void Subspace::require_same_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw DimensionError("ambient dimension mismatch: " + std::to_string(ambient_) + " vs " +
                         std::to_string(other.ambient_));
  }
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Rational& b = basis_(i, j);
      if (!b.is_zero()) r[j] -= c * b;
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return malcev::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::domain_error("vector is not in the subspace");
  Vector coords(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) coords[i] = v[pivots_[i]];
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_ambient(other);
  std::vector<Vector> rows = basis_vectors();
  for (auto& v : other.basis_vectors()) rows.push_back(std::move(v));
  return span(rows, ambient_);
}

Subspace Subspace::intersection(const Subspace& other) const {
  require_same_ambient(other);
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  // x A = y B  <=>  [A^T | -B^T] (x, y) = 0
  const std::size_t da = dim();
  const std::size_t db = other.dim();
  Matrix system(ambient_, da + db);
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t i = 0; i < da; ++i) system(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < db; ++i) system(j, da + i) = -other.basis_(i, j);
  }
  Subspace k = kernel(system);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Vector combo(ambient_);
    for (std::size_t i = 0; i < da; ++i) {
      const Rational& c = k.basis_(r, i);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) combo[j] += c * basis_(i, j);
    }
    rows.push_back(std::move(combo));
  }
  return span(rows, ambient_);
}

} // namespace malcev
