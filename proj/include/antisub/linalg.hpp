#ifndef ANTISUB_LINALG_HPP
#define ANTISUB_LINALG_HPP

// Exact rational linear algebra: vectors, dense matrices, bilinear forms and
// subspaces. Everything here is immutable after construction and free of
// rounding; equality is exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antisub/errors.hpp"

namespace antisub {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ScenarioFormatError("empty rational");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Scalar q;
  if (q.set_str(s, 10) != 0) throw ScenarioFormatError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ScenarioFormatError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Scalar rational(long p, long q) {
  if (q == 0) throw InvalidStructure("zero denominator");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

// --- vectors -----------------------------------------------------------------

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

inline Vector plus(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector minus(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scaled(const Scalar& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

/// a += s * b
inline void axpy(Vector& a, const Scalar& s, const Vector& b) {
  require_same_dim(a.size(), b.size(), "axpy");
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) a[i] += s * b[i];
  }
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

inline Vector combination(std::span<const Vector> basis, const Vector& coeffs, std::size_t dim) {
  Vector r = zero_vector(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) axpy(r, coeffs.at(i), basis[i]);
  return r;
}

// --- matrices ----------------------------------------------------------------

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Scalar> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      require_same_dim(rows[r].size(), m.cols_, "matrix row");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose c-th column is cols[c].
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t n) {
    Matrix m(n, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      require_same_dim(cols[c].size(), n, "matrix column");
      for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(const Vector& v) const {
    require_same_dim(v.size(), cols_, "matrix-vector product");
    Vector out = zero_vector(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const auto& a = (*this)(r, c);
        if (sgn(a) != 0) out[r] += a * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_dim(a.cols_, b.rows_, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (sgn(bkj) != 0) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_dim(a.rows_, b.rows_, "matrix sum");
    require_same_dim(a.cols_, b.cols_, "matrix sum");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  friend Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

inline Scalar determinant(Matrix m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vector> nullspace(Matrix m) {
  const std::size_t n = m.cols();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(n, f);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

// --- bilinear forms ----------------------------------------------------------

class BilinearForm {
public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw DimensionMismatch("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InvalidStructure("Gram matrix is not symmetric");
  }

  static BilinearForm diagonal(std::span<const Scalar> d) { return BilinearForm(Matrix::diagonal(d)); }
  static BilinearForm diagonal(std::initializer_list<int> d) {
    Vector v(d.begin(), d.end());
    return diagonal(std::span<const Scalar>(v));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }

  Scalar operator()(const Vector& x, const Vector& y) const {
    require_same_dim(x.size(), dim(), "form argument");
    require_same_dim(y.size(), dim(), "form argument");
    Scalar s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        const auto& g = gram_(i, j);
        if (sgn(g) != 0 && sgn(y[j]) != 0) s += x[i] * g * y[j];
      }
    }
    return s;
  }

  /// G x, i.e. the covector <x, .>.
  Vector lower(const Vector& x) const { return gram_.apply(x); }

  Scalar determinant() const { return antisub::determinant(gram_); }
  bool nondegenerate() const { return sgn(determinant()) != 0; }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.gram_ == b.gram_; }

private:
  Matrix gram_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t radical = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric form by exact symmetric congruence reduction.
inline Signature signature(const BilinearForm& form) {
  Matrix a = form.gram();
  const std::size_t n = a.rows();
  Signature sig;
  std::size_t k = 0;  // rows/cols [0,k) are already diagonalised
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (sgn(a(i, i)) != 0) { piv = i; break; }
    if (piv == n) {
      // Zero diagonal: look for an off-diagonal entry and fold it onto the diagonal.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) { pi = i; pj = j; break; }
      if (pi == n) break;  // remaining block is zero
      // row_i += row_j, col_i += col_j  (a congruence)
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      piv = pi;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, piv), a(r, k));
    }
    const Scalar d = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Scalar f = a(r, k) / d;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t rr = k; rr < n; ++rr) a(rr, r) -= f * a(rr, k);
    }
    if (sgn(d) > 0) ++sig.positive; else ++sig.negative;
    ++k;
  }
  sig.radical = n - sig.positive - sig.negative;
  return sig;
}

// --- subspaces ---------------------------------------------------------------

/// A subspace of Q^n, stored by the generators it was given with.
class Subspace {
public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_) require_same_dim(v.size(), ambient_dim_, "subspace generator");
    if (basis_.size() > ambient_dim_ || (!basis_.empty() && rank(Matrix::from_rows(basis_)) != basis_.size()))
      throw InvalidStructure("subspace generators are linearly dependent");
    if (!basis_.empty()) {
      echelon_ = Matrix::from_rows(basis_);
      rref_in_place(echelon_);
    }
  }

  static Subspace zero(std::size_t n) { return Subspace(n, {}); }
  static Subspace full(std::size_t n) {
    std::vector<Vector> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(n, i));
    return Subspace(n, std::move(b));
  }
  static Subspace coordinate(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vector> b;
    for (auto i : idx) b.push_back(unit_vector(n, i));
    return Subspace(n, std::move(b));
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Exact membership test against the echelonised generators.
  bool contains(const Vector& v) const {
    require_same_dim(v.size(), ambient_dim_, "membership test");
    if (basis_.empty()) return antisub::is_zero(v);
    Vector rest = v;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient_dim_ && r < echelon_.rows(); ++c) {
      if (sgn(echelon_(r, c)) == 0) continue;  // rref: leading 1 of row r sits in column c
      if (sgn(rest[c]) != 0) {
        const Scalar f = rest[c];
        for (std::size_t k = 0; k < ambient_dim_; ++k) rest[k] -= f * echelon_(r, k);
      }
      ++r;
    }
    return antisub::is_zero(rest);
  }

private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  Matrix echelon_;
};

inline bool contains(const Subspace& sub, const Vector& v) { return sub.contains(v); }

/// Gram matrix of `form` in the generators of `sub`.
inline BilinearForm restrict_form(const Subspace& sub, const BilinearForm& form) {
  require_same_dim(sub.ambient_dim(), form.dim(), "restrict_form");
  const auto& b = sub.basis();
  Matrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Vector gi = form.lower(b[i]);
    for (std::size_t j = 0; j < b.size(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < gi.size(); ++k)
        if (sgn(gi[k]) != 0 && sgn(b[j][k]) != 0) s += gi[k] * b[j][k];
      g(i, j) = s;
    }
  }
  return BilinearForm(std::move(g));
}

inline Subspace orth_complement(const Subspace& sub, const BilinearForm& form) {
  require_same_dim(sub.ambient_dim(), form.dim(), "orth_complement");
  if (!restrict_form(sub, form).nondegenerate())
    throw DegenerateRestriction("form restricted to the subspace is degenerate");
  const std::size_t n = sub.ambient_dim();
  if (sub.dim() == 0) return Subspace::full(n);
  std::vector<Vector> covectors;
  for (const auto& v : sub.basis()) covectors.push_back(form.lower(v));
  return Subspace(n, nullspace(Matrix::from_rows(covectors)));
}

}  // namespace antisub

#endif  // ANTISUB_LINALG_HPP
