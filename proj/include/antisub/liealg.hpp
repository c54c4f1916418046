#ifndef ANTISUB_LIEALG_HPP
#define ANTISUB_LIEALG_HPP

// Lie algebras by structure constants.

#include <algorithm>
#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "antisub/linalg.hpp"

namespace antisub {

/// [e_i, e_j] = sum_k c_ij^k e_k, stored densely as ad(e_i) matrices.
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Abelian algebra with the given labels.
  explicit LieAlgebra(std::vector<std::string> labels)
      : labels_(std::move(labels)), ad_(labels_.size(), Matrix(labels_.size(), labels_.size())) {}

  static LieAlgebra abelian(std::size_t n, const std::string& prefix = "e") {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
    return LieAlgebra(std::move(l));
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  LieAlgebra& set_bracket(std::size_t i, std::size_t j, const Vector& v) {
    require_same_dim(v.size(), dim(), "bracket value");
    if (i == j && !is_zero(v)) throw InvalidStructure("[e_i, e_i] must vanish");
    for (std::size_t k = 0; k < dim(); ++k) {
      ad_.at(i)(k, j) = v[k];
      ad_.at(j)(k, i) = -v[k];
    }
    return *this;
  }

  /// Raw write of one structure constant c_ij^k, no antisymmetrisation.
  LieAlgebra& set_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    ad_.at(i)(k, j) = c;
    return *this;
  }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return ad_.at(i)(k, j); }

  /// ad(e_i) as a matrix: column j is [e_i, e_j].
  const Matrix& ad_basis(std::size_t i) const { return ad_.at(i); }

  Vector bracket_basis(std::size_t i, std::size_t j) const { return ad_.at(i).column(j); }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
          if (constant(i, j, k) != -constant(j, i, k)) return false;
    return true;
  }

  bool is_abelian() const {
    for (const auto& m : ad_)
      if (!m.is_zero()) return false;
    return true;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.ad_ == b.ad_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Matrix> ad_;
};

inline Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  require_same_dim(x.size(), alg.dim(), "bracket argument");
  require_same_dim(y.size(), alg.dim(), "bracket argument");
  Vector out = zero_vector(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    axpy(out, x[i], alg.ad_basis(i).apply(y));
  }
  return out;
}

/// ad(x) as a matrix.
inline Matrix ad(const LieAlgebra& alg, const Vector& x) {
  require_same_dim(x.size(), alg.dim(), "ad argument");
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * alg.ad_basis(i);
  return m;
}

using BasisTriple = std::array<std::size_t, 3>;

/// Basis triples i<j<k on which the cyclic Jacobi sum fails.
inline std::vector<BasisTriple> check_jacobi(const LieAlgebra& alg) {
  std::vector<BasisTriple> bad;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector s = bracket(alg, alg.bracket_basis(i, j), ek);
        s = plus(s, bracket(alg, alg.bracket_basis(j, k), ei));
        s = plus(s, bracket(alg, alg.bracket_basis(k, i), ej));
        if (!is_zero(s)) bad.push_back({i, j, k});
      }
  return bad;
}

inline BilinearForm killing_form(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Matrix prod = alg.ad_basis(i) * alg.ad_basis(j);
      Scalar tr = 0;
      for (std::size_t d = 0; d < n; ++d) tr += prod(d, d);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return BilinearForm(std::move(k));
}

/// A Lie algebra with a non-degenerate symmetric form.
class MetricLieAlgebra {
public:
  MetricLieAlgebra(LieAlgebra alg, BilinearForm form) : alg_(std::move(alg)), form_(std::move(form)) {
    require_same_dim(alg_.dim(), form_.dim(), "metric Lie algebra");
    if (!form_.nondegenerate()) throw DegenerateMetric("metric on the Lie algebra is degenerate");
  }

  const LieAlgebra& algebra() const { return alg_; }
  const BilinearForm& form() const { return form_; }
  std::size_t dim() const { return alg_.dim(); }

private:
  LieAlgebra alg_;
  BilinearForm form_;
};

/// <[Z,X],Y> + <X,[Z,Y]> = 0 for Z in `acting` and all basis X, Y.
inline bool is_ad_invariant(const LieAlgebra& alg, const BilinearForm& form, const Subspace& acting) {
  require_same_dim(acting.ambient_dim(), alg.dim(), "acting subspace");
  const Matrix& g = form.gram();
  for (const auto& z : acting.basis()) {
    const Matrix adz = ad(alg, z);
    // (ad z)^T G + G (ad z) must vanish.
    if (!(adz.transpose() * g + g * adz).is_zero()) return false;
  }
  return true;
}

inline bool is_ad_invariant(const MetricLieAlgebra& mla, const Subspace& acting) {
  return is_ad_invariant(mla.algebra(), mla.form(), acting);
}

inline bool is_subalgebra(const LieAlgebra& alg, const Subspace& span) {
  require_same_dim(span.ambient_dim(), alg.dim(), "subalgebra span");
  const auto& b = span.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!span.contains(bracket(alg, b[i], b[j]))) return false;
  return true;
}

/// Block-diagonal sum; factor f's metric is multiplied by signs[f].
inline MetricLieAlgebra direct_sum(const std::vector<MetricLieAlgebra>& parts, const std::vector<int>& signs) {
  require_same_dim(parts.size(), signs.size(), "direct_sum signs");
  std::vector<std::string> labels;
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  // Factor suffixes are added only when labels would collide.
  std::vector<std::string> all;
  for (const auto& p : parts) all.insert(all.end(), p.algebra().labels().begin(), p.algebra().labels().end());
  std::sort(all.begin(), all.end());
  const bool relabel = std::adjacent_find(all.begin(), all.end()) != all.end();
  for (std::size_t f = 0; f < parts.size(); ++f)
    for (const auto& l : parts[f].algebra().labels())
      labels.push_back(relabel ? l + "_" + std::to_string(f + 1) : l);
  LieAlgebra alg(std::move(labels));
  Matrix g(n, n);
  std::size_t off = 0;
  for (std::size_t f = 0; f < parts.size(); ++f) {
    const auto& a = parts[f].algebra();
    const auto& pg = parts[f].form().gram();
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        g(off + i, off + j) = signs[f] * pg(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          const auto& c = a.constant(i, j, k);
          if (sgn(c) != 0) alg.set_constant(off + i, off + j, off + k, c);
        }
      }
    off += d;
  }
  return MetricLieAlgebra(std::move(alg), BilinearForm(std::move(g)));
}

// --- standard algebras -------------------------------------------------------

/// Left-invariant fields on S^3: [e1,e2]=-2e3, [e2,e3]=-2e1, [e3,e1]=-2e2.
/// With `with_center` a central e0 is prepended (the algebra of S^1 x S^3).
inline LieAlgebra s3_algebra(bool with_center = false, const std::string& prefix = "e") {
  const std::size_t off = with_center ? 1 : 0;
  const std::size_t n = 3 + off;
  std::vector<std::string> labels;
  if (with_center) labels.push_back(prefix + "0");
  for (int i = 1; i <= 3; ++i) labels.push_back(prefix + std::to_string(i));
  LieAlgebra a(std::move(labels));
  auto e = [&](std::size_t i) { return unit_vector(n, i - 1 + off); };
  a.set_bracket(0 + off, 1 + off, scaled(-2, e(3)));
  a.set_bracket(1 + off, 2 + off, scaled(-2, e(1)));
  a.set_bracket(2 + off, 0 + off, scaled(-2, e(2)));
  return a;
}

/// sl(2,R) in the basis f1=[[0,1],[-1,0]], f2=[[0,1],[1,0]], f3=[[1,0],[0,-1]]:
/// [f1,f2]=2f3, [f2,f3]=-2f1, [f3,f1]=2f2. With `with_center` a central f0 is prepended.
inline LieAlgebra sl2_algebra(bool with_center = false) {
  const std::size_t off = with_center ? 1 : 0;
  const std::size_t n = 3 + off;
  std::vector<std::string> labels;
  if (with_center) labels.push_back("f0");
  for (int i = 1; i <= 3; ++i) labels.push_back("f" + std::to_string(i));
  LieAlgebra a(std::move(labels));
  auto f = [&](std::size_t i) { return unit_vector(n, i - 1 + off); };
  a.set_bracket(0 + off, 1 + off, scaled(2, f(3)));
  a.set_bracket(1 + off, 2 + off, scaled(-2, f(1)));
  a.set_bracket(2 + off, 0 + off, scaled(2, f(2)));
  return a;
}

}  // namespace antisub

#endif  // ANTISUB_LIEALG_HPP
