#ifndef ANTISUB_ALGEBRAS_HPP
#define ANTISUB_ALGEBRAS_HPP

// Unital composition algebras given by signed multiplication tables.

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "antisub/linalg.hpp"

namespace antisub {

enum class AlgebraKind { complex, para_complex, quaternion, para_quaternion, octonion };

inline std::string_view to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::complex: return "complex";
    case AlgebraKind::para_complex: return "para_complex";
    case AlgebraKind::quaternion: return "quaternion";
    case AlgebraKind::para_quaternion: return "para_quaternion";
    case AlgebraKind::octonion: return "octonion";
  }
  return "?";
}

inline AlgebraKind algebra_kind_from_string(std::string_view s) {
  for (auto k : {AlgebraKind::complex, AlgebraKind::para_complex, AlgebraKind::quaternion,
                 AlgebraKind::para_quaternion, AlgebraKind::octonion})
    if (to_string(k) == s) return k;
  throw ScenarioFormatError("unknown algebra kind '" + std::string(s) + "'");
}

/// ±e_index
struct SignedUnit {
  int sign = 1;
  std::size_t index = 0;
  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

class AlgebraTable {
public:
  AlgebraTable(AlgebraKind kind, std::vector<std::vector<SignedUnit>> products, std::vector<int> form_signs)
      : kind_(kind), products_(std::move(products)), form_signs_(std::move(form_signs)) {
    const auto n = products_.size();
    if (n != 2 && n != 4 && n != 8) throw InvalidStructure("algebra dimension must be 2, 4 or 8");
    if (form_signs_.size() != n) throw InvalidStructure("form_signs length differs from dimension");
    for (const auto& row : products_) {
      if (row.size() != n) throw InvalidStructure("multiplication table is not square");
      for (const auto& u : row)
        if ((u.sign != 1 && u.sign != -1) || u.index >= n)
          throw InvalidStructure("table entry is not a signed basis element");
    }
  }

  AlgebraKind kind() const { return kind_; }
  std::size_t dim() const { return products_.size(); }
  const SignedUnit& product(std::size_t a, std::size_t b) const { return products_.at(a).at(b); }
  const std::vector<int>& form_signs() const { return form_signs_; }

  bool is_unital() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!(product(0, i) == SignedUnit{1, i}) || !(product(i, 0) == SignedUnit{1, i})) return false;
    return true;
  }

  /// Associativity on every basis triple.
  bool is_associative() const {
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b)
        for (std::size_t c = 0; c < dim(); ++c) {
          const auto ab = product(a, b);
          const auto left = product(ab.index, c);
          const auto bc = product(b, c);
          const auto right = product(a, bc.index);
          if (ab.sign * left.sign != bc.sign * right.sign || left.index != right.index) return false;
        }
    return true;
  }

  /// Copy with the sign of one entry flipped.
  AlgebraTable with_flipped_sign(std::size_t a, std::size_t b) const {
    auto p = products_;
    p.at(a).at(b).sign = -p.at(a).at(b).sign;
    return AlgebraTable(kind_, std::move(p), form_signs_);
  }

  /// Left multiplication by e_a as a dim x dim matrix (column b = e_a * e_b).
  Matrix left_multiplication(std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      const auto& u = product(a, b);
      m(u.index, b) = u.sign;
    }
    return m;
  }

  /// Diagonal polarisation of N.
  BilinearForm form() const {
    Vector d;
    for (int s : form_signs_) d.emplace_back(s);
    return BilinearForm::diagonal(std::span<const Scalar>(d));
  }

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.kind_ == b.kind_ && a.products_ == b.products_ && a.form_signs_ == b.form_signs_;
  }

private:
  AlgebraKind kind_;
  std::vector<std::vector<SignedUnit>> products_;
  std::vector<int> form_signs_;
};

namespace detail {

// Rows of signed indices; entry k>0 means +e_k, k<0 means -e_{-k}; "-0" is written as kNegUnit.
constexpr int kNegUnit = 100;

inline AlgebraTable table_from_codes(AlgebraKind kind, const std::vector<std::vector<int>>& codes,
                                     std::vector<int> signs) {
  std::vector<std::vector<SignedUnit>> p;
  for (const auto& row : codes) {
    std::vector<SignedUnit> r;
    for (int c : row) {
      if (c == -kNegUnit) r.push_back({-1, 0});
      else if (c < 0) r.push_back({-1, static_cast<std::size_t>(-c)});
      else r.push_back({1, static_cast<std::size_t>(c)});
    }
    p.push_back(std::move(r));
  }
  return AlgebraTable(kind, std::move(p), std::move(signs));
}

}  // namespace detail

/// The built-in tables. Quaternion, para-quaternion and octonion tables are
/// transcribed row by row; row a, column b holds e_a * e_b.
inline AlgebraTable builtin(AlgebraKind kind) {
  constexpr int m0 = -detail::kNegUnit;  // -e0
  switch (kind) {
    case AlgebraKind::complex:
      return detail::table_from_codes(kind, {{0, 1}, {1, m0}}, {1, 1});
    case AlgebraKind::para_complex:
      return detail::table_from_codes(kind, {{0, 1}, {1, 0}}, {1, -1});
    case AlgebraKind::quaternion:
      return detail::table_from_codes(kind,
                                      {{0, 1, 2, 3},
                                       {1, m0, 3, -2},
                                       {2, -3, m0, 1},
                                       {3, 2, -1, m0}},
                                      {1, 1, 1, 1});
    case AlgebraKind::para_quaternion:
      return detail::table_from_codes(kind,
                                      {{0, 1, 2, 3},
                                       {1, m0, 3, -2},
                                       {2, -3, 0, -1},
                                       {3, 2, 1, 0}},
                                      {1, 1, -1, -1});
    case AlgebraKind::octonion:
      return detail::table_from_codes(kind,
                                      {{0, 1, 2, 3, 4, 5, 6, 7},
                                       {1, m0, 3, -2, 5, -4, -7, 6},
                                       {2, -3, m0, 1, 6, 7, -4, -5},
                                       {3, 2, -1, m0, 7, -6, 5, -4},
                                       {4, -5, -6, -7, m0, 1, 2, 3},
                                       {5, 4, -7, 6, -1, m0, -3, 2},
                                       {6, 7, 4, -5, -2, 3, m0, -1},
                                       {7, -6, 5, 4, -3, -2, 1, m0}},
                                      {1, 1, 1, 1, 1, 1, 1, 1});
  }
  throw InvalidStructure("unknown algebra kind");
}

class AlgebraElement {
public:
  AlgebraElement(std::shared_ptr<const AlgebraTable> table, Vector coeffs)
      : table_(std::move(table)), coeffs_(std::move(coeffs)) {
    require_same_dim(coeffs_.size(), table_->dim(), "algebra element");
  }

  static AlgebraElement basis(std::shared_ptr<const AlgebraTable> table, std::size_t i) {
    auto n = table->dim();
    return AlgebraElement(std::move(table), unit_vector(n, i));
  }

  const AlgebraTable& table() const { return *table_; }
  const std::shared_ptr<const AlgebraTable>& table_ptr() const { return table_; }
  const Vector& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return *a.table_ == *b.table_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::shared_ptr<const AlgebraTable> table_;
  Vector coeffs_;
};

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.table() == y.table())) throw TableMismatch("operands use different multiplication tables");
  const auto& t = x.table();
  Vector out = zero_vector(t.dim());
  for (std::size_t a = 0; a < t.dim(); ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::size_t b = 0; b < t.dim(); ++b) {
      if (sgn(y[b]) == 0) continue;
      const auto& u = t.product(a, b);
      if (u.sign > 0) out[u.index] += x[a] * y[b];
      else out[u.index] -= x[a] * y[b];
    }
  }
  return AlgebraElement(x.table_ptr(), std::move(out));
}

inline AlgebraElement conjugate(const AlgebraElement& x) {
  Vector c = scaled(Scalar(-1), x.coeffs());
  c[0] = x[0];
  return AlgebraElement(x.table_ptr(), std::move(c));
}

/// N(x) = sum_i sign_i x_i^2
inline Scalar norm(const AlgebraElement& x) {
  Scalar s = 0;
  const auto& signs = x.table().form_signs();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) s += signs[i] * x[i] * x[i];
  return s;
}

inline bool is_pure_imaginary(const AlgebraElement& x) { return sgn(x[0]) == 0; }

/// Seeded random rational with numerator in [-9,9] and denominator in [1,9].
inline Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Scalar q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Vector random_rational_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// N(x*y) == N(x) N(y) on every basis pair and on `trials` seeded random pairs.
inline bool check_composition(const AlgebraTable& table, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidStructure("check_composition needs at least one trial");
  auto t = std::make_shared<const AlgebraTable>(table);
  for (std::size_t a = 0; a < t->dim(); ++a)
    for (std::size_t b = 0; b < t->dim(); ++b) {
      auto x = AlgebraElement::basis(t, a);
      auto y = AlgebraElement::basis(t, b);
      if (norm(multiply(x, y)) != norm(x) * norm(y)) return false;
    }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    AlgebraElement x(t, random_rational_vector(rng, t->dim()));
    AlgebraElement y(t, random_rational_vector(rng, t->dim()));
    if (norm(multiply(x, y)) != norm(x) * norm(y)) return false;
  }
  return true;
}

/// Generator kind implied by the table: e_a^2 = -e0 is complex, +e0 is para-complex.
inline bool unit_squares_to_minus_one(const AlgebraTable& t, std::size_t a) {
  const auto& u = t.product(a, a);
  return u.index == 0 && u.sign == -1;
}

/// Left multiplication by e_a acting on each block of an identification
/// Q^n ~ A^k. blocks[b][s] is the ambient index carrying slot e_s of block b;
/// indices not covered by any block are mapped to zero.
inline Matrix block_left_multiplication(const AlgebraTable& t, std::size_t a,
                                        const std::vector<std::vector<std::size_t>>& blocks,
                                        std::size_t ambient_dim) {
  Matrix m(ambient_dim, ambient_dim);
  for (const auto& blk : blocks) {
    require_same_dim(blk.size(), t.dim(), "algebra block");
    for (std::size_t s = 0; s < t.dim(); ++s) {
      const auto& u = t.product(a, s);
      m(blk[u.index], blk[s]) = u.sign;
    }
  }
  return m;
}

}  // namespace antisub

#endif  // ANTISUB_ALGEBRAS_HPP
