#ifndef ANTISUB_GEOMETRY_HPP
#define ANTISUB_GEOMETRY_HPP

// Left-invariant pseudo-Riemannian geometry on a metric Lie algebra.
//
// Conventions:
//   2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   sec(X,Y) = <R(X,Y)Y, X> / (<X,X><Y,Y> - <X,Y>^2)
// so the round unit sphere has sec = +1.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "antisub/liealg.hpp"

namespace antisub {

/// nabla_{e_i} e_j = gamma(i, j)
class ConnectionTable {
public:
  ConnectionTable(std::size_t dim, std::vector<Vector> gamma) : dim_(dim), gamma_(std::move(gamma)) {
    require_same_dim(gamma_.size(), dim_ * dim_, "connection table");
  }

  std::size_t dim() const { return dim_; }
  const Vector& operator()(std::size_t i, std::size_t j) const { return gamma_.at(i * dim_ + j); }

  Vector nabla(const Vector& x, const Vector& y) const {
    require_same_dim(x.size(), dim_, "connection argument");
    require_same_dim(y.size(), dim_, "connection argument");
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], (*this)(i, j));
    }
    return out;
  }

  /// nabla_{e_i} v
  Vector nabla_basis(std::size_t i, const Vector& v) const {
    Vector out = zero_vector(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(v[j]) != 0) axpy(out, v[j], (*this)(i, j));
    return out;
  }

private:
  std::size_t dim_;
  std::vector<Vector> gamma_;
};

inline ConnectionTable levi_civita(const MetricLieAlgebra& mla) {
  const std::size_t n = mla.dim();
  const auto& alg = mla.algebra();
  const auto& g = mla.form().gram();
  const auto ginv = inverse(g);
  if (!ginv) throw DegenerateMetric("metric is degenerate");
  // lowered[i][j][k] = <[e_i, e_j], e_k>
  std::vector<Scalar> lowered(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector low = g.apply(alg.bracket_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) lowered[(i * n + j) * n + k] = low[k];
    }
  auto L = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return lowered[(i * n + j) * n + k]; };
  std::vector<Vector> gamma;
  gamma.reserve(n * n);
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector cov(n);
      for (std::size_t k = 0; k < n; ++k) cov[k] = half * (L(i, j, k) - L(j, k, i) + L(k, i, j));
      gamma.push_back(ginv->apply(cov));
    }
  return ConnectionTable(n, std::move(gamma));
}

/// Gamma_ij - Gamma_ji == [e_i, e_j] on all basis pairs.
inline bool is_torsion_free(const ConnectionTable& conn, const LieAlgebra& alg) {
  for (std::size_t i = 0; i < conn.dim(); ++i)
    for (std::size_t j = 0; j < conn.dim(); ++j)
      if (minus(conn(i, j), conn(j, i)) != alg.bracket_basis(i, j)) return false;
  return true;
}

/// <nabla_i e_j, e_k> + <e_j, nabla_i e_k> == 0 (constant metric coefficients).
inline bool is_metric_compatible(const ConnectionTable& conn, const BilinearForm& form) {
  const std::size_t n = conn.dim();
  const auto& g = form.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lj = g.apply(conn(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lk = g.apply(conn(i, k));
        if (lj[k] + lk[j] != 0) return false;
      }
    }
  return true;
}

/// R(e_i, e_j) e_k expanded in the basis.
class CurvatureTensor {
public:
  CurvatureTensor(std::size_t dim, std::vector<Vector> r) : dim_(dim), r_(std::move(r)) {
    require_same_dim(r_.size(), dim_ * dim_ * dim_, "curvature tensor");
  }

  std::size_t dim() const { return dim_; }
  const Vector& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return r_.at((i * dim_ + j) * dim_ + k);
  }

  Vector apply(const Vector& x, const Vector& y, const Vector& z) const {
    Vector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || sgn(y[j]) == 0) continue;
        const Scalar xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (sgn(z[k]) != 0) axpy(out, xy * z[k], (*this)(i, j, k));
      }
    }
    return out;
  }

private:
  std::size_t dim_;
  std::vector<Vector> r_;
};

inline CurvatureTensor curvature(const LieAlgebra& alg, const ConnectionTable& conn) {
  const std::size_t n = alg.dim();
  std::vector<Vector> r(n * n * n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector br = alg.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = conn.nabla_basis(i, conn(j, k));
        v = minus(v, conn.nabla_basis(j, conn(i, k)));
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(br[m]) != 0) axpy(v, -br[m], conn(m, k));
        r[(j * n + i) * n + k] = scaled(-1, v);
        r[(i * n + j) * n + k] = std::move(v);
      }
    }
  return CurvatureTensor(n, std::move(r));
}

inline CurvatureTensor curvature(const MetricLieAlgebra& mla) {
  return curvature(mla.algebra(), levi_civita(mla));
}

/// <X,X><Y,Y> - <X,Y>^2
inline Scalar plane_norm(const BilinearForm& form, const Vector& x, const Vector& y) {
  const Scalar xy = form(x, y);
  return form(x, x) * form(y, y) - xy * xy;
}

inline Scalar sectional(const BilinearForm& form, const CurvatureTensor& curv, const Vector& x, const Vector& y) {
  const Scalar q = plane_norm(form, x, y);
  if (sgn(q) == 0) throw DegeneratePlane("plane is degenerate (Q = 0)");
  return form(curv.apply(x, y, y), x) / q;
}

inline Scalar sectional(const MetricLieAlgebra& mla, const Vector& x, const Vector& y) {
  return sectional(mla.form(), curvature(mla), x, y);
}

struct CurvatureScan {
  bool constant = false;
  std::optional<Scalar> value;  // set iff constant
  std::size_t evaluated = 0;
  std::size_t skipped_degenerate = 0;
  Scalar min_value = 0;
  Scalar max_value = 0;
};

/// Small-integer random vector in span(basis).
inline Vector random_combination(std::mt19937_64& rng, const std::vector<Vector>& basis, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Vector v = zero_vector(n);
  for (const auto& b : basis) axpy(v, Scalar(coef(rng)), b);
  return v;
}

/// Sectional curvature on all coordinate planes of `basis` plus `random_planes`
/// seeded random planes inside span(basis). `sec` maps (X, Y) to a value and
/// throws DegeneratePlane on null planes, which are skipped.
template <class SectionalFn>
CurvatureScan scan_planes(const std::vector<Vector>& basis, std::size_t n, SectionalFn&& sec,
                          std::uint64_t seed, int random_planes) {
  CurvatureScan out;
  auto record = [&](const Vector& x, const Vector& y) {
    try {
      const Scalar s = sec(x, y);
      if (out.evaluated == 0) {
        out.min_value = s;
        out.max_value = s;
      } else {
        if (s < out.min_value) out.min_value = s;
        if (s > out.max_value) out.max_value = s;
      }
      ++out.evaluated;
    } catch (const DegeneratePlane&) {
      ++out.skipped_degenerate;
    }
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) record(basis[i], basis[j]);
  if (basis.size() >= 2) {
    std::mt19937_64 rng(seed);
    for (int p = 0; p < random_planes; ++p) {
      const Vector x = random_combination(rng, basis, n);
      const Vector y = random_combination(rng, basis, n);
      record(x, y);
    }
  }
  out.constant = out.evaluated > 0 && out.min_value == out.max_value;
  if (out.constant) out.value = out.min_value;
  return out;
}

inline constexpr std::uint64_t kDefaultScanSeed = 20150717;
inline constexpr int kDefaultRandomPlanes = 8;

inline CurvatureScan sectional_scan(const MetricLieAlgebra& mla, const CurvatureTensor& curv,
                                    std::uint64_t seed = kDefaultScanSeed, int random_planes = kDefaultRandomPlanes) {
  return scan_planes(Subspace::full(mla.dim()).basis(), mla.dim(),
                     [&](const Vector& x, const Vector& y) { return sectional(mla.form(), curv, x, y); }, seed,
                     random_planes);
}

inline CurvatureScan sectional_scan(const MetricLieAlgebra& mla) { return sectional_scan(mla, curvature(mla)); }

/// Ric(X,Y) = trace(Z -> R(Z,X)Y). The trace of an endomorphism is the
/// signed metric trace g^{ab} <R(e_a,X)Y, e_b> in any signature.
inline BilinearForm ricci(const CurvatureTensor& curv) {
  const std::size_t n = curv.dim();
  Matrix ric(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar tr = 0;
      for (std::size_t i = 0; i < n; ++i) tr += curv(i, j, k)[i];
      ric(j, k) = tr;
    }
  return BilinearForm(std::move(ric));
}

inline BilinearForm ricci(const MetricLieAlgebra& mla) { return ricci(curvature(mla)); }

struct EinsteinResult {
  bool is_einstein = false;
  std::optional<Scalar> lambda;
};

inline EinsteinResult einstein_check(const BilinearForm& ric, const BilinearForm& metric) {
  const auto& r = ric.gram();
  const auto& g = metric.gram();
  std::optional<Scalar> lambda;
  for (std::size_t i = 0; i < g.rows() && !lambda; ++i)
    for (std::size_t j = 0; j < g.cols() && !lambda; ++j)
      if (sgn(g(i, j)) != 0) lambda = r(i, j) / g(i, j);
  if (!lambda) return {};
  if (!(r == *lambda * g)) return {};
  return {true, lambda};
}

inline EinsteinResult einstein_check(const MetricLieAlgebra& mla) { return einstein_check(ricci(mla), mla.form()); }

// --- curvature identities ----------------------------------------------------

/// R(X,Y) = -R(Y,X) and sum_cyclic R(e_i,e_j)e_k = 0.
inline bool satisfies_first_bianchi(const CurvatureTensor& curv) {
  const std::size_t n = curv.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (plus(curv(i, j, k), curv(j, i, k)) != zero_vector(n)) return false;
        Vector s = plus(curv(i, j, k), curv(j, k, i));
        s = plus(s, curv(k, i, j));
        if (!is_zero(s)) return false;
      }
  return true;
}

/// <R(X,Y)Z,W> = -<R(X,Y)W,Z> and <R(X,Y)Z,W> = <R(Z,W)X,Y> on basis quadruples.
inline bool satisfies_metric_symmetries(const CurvatureTensor& curv, const BilinearForm& form) {
  const std::size_t n = curv.dim();
  std::vector<Vector> low(n * n * n);
  for (std::size_t idx = 0; idx < low.size(); ++idx) {
    const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
    low[idx] = form.lower(curv(i, j, k));
  }
  auto R = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const Scalar& {
    return low[(i * n + j) * n + k][l];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (R(i, j, k, l) != -R(i, j, l, k)) return false;
          if (R(i, j, k, l) != R(k, l, i, j)) return false;
        }
  return true;
}

}  // namespace antisub

#endif  // ANTISUB_GEOMETRY_HPP
