#ifndef ANTISUB_STRUCTURES_HPP
#define ANTISUB_STRUCTURES_HPP

// Endomorphism structures on a metric Lie algebra.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "antisub/algebras.hpp"
#include "antisub/liealg.hpp"

namespace antisub {

enum class StructureKind { complex, para_complex };

inline std::string_view to_string(StructureKind k) {
  return k == StructureKind::complex ? "complex" : "para_complex";
}

inline StructureKind structure_kind_from_string(std::string_view s) {
  if (s == "complex") return StructureKind::complex;
  if (s == "para_complex") return StructureKind::para_complex;
  throw ScenarioFormatError("unknown structure kind '" + std::string(s) + "'");
}

/// J acting on the Lie algebra; column j of the matrix is J e_j.
struct StructureEndo {
  std::string name;
  Matrix matrix;
  StructureKind kind = StructureKind::complex;

  std::size_t dim() const { return matrix.rows(); }

  /// Builds J from images J e_i = images[i] (unlisted basis vectors map to 0).
  static StructureEndo from_images(std::string name, StructureKind kind, std::size_t n,
                                   const std::map<std::size_t, Vector>& images) {
    std::vector<Vector> cols(n, zero_vector(n));
    for (const auto& [i, v] : images) cols.at(i) = v;
    return {std::move(name), Matrix::from_columns(cols, n), kind};
  }

  /// Complex: J^2 = -Id. Para-complex: J^2 = +Id and J != +-Id.
  bool satisfies_kind_law() const {
    if (!matrix.square()) return false;
    const auto id = Matrix::identity(dim());
    const Matrix sq = matrix * matrix;
    if (kind == StructureKind::complex) return sq == -id;
    return sq == id && !(matrix == id) && !(matrix == -id);
  }

  /// J^{-1} = -J (complex) or J (para-complex); nullopt when the kind law fails.
  std::optional<Matrix> inverse_by_law() const {
    if (!satisfies_kind_law()) return std::nullopt;
    return kind == StructureKind::complex ? -matrix : matrix;
  }

  Vector operator()(const Vector& v) const { return matrix.apply(v); }
};

/// J^T G J == G (complex) or == -G (para-complex); false if the kind law fails.
inline bool check_compatibility(const StructureEndo& j, const BilinearForm& form) {
  require_same_dim(j.dim(), form.dim(), "check_compatibility");
  if (!j.satisfies_kind_law()) return false;
  const Matrix pulled = j.matrix.transpose() * form.gram() * j.matrix;
  return j.kind == StructureKind::complex ? pulled == form.gram() : pulled == -form.gram();
}

/// <JX, Y> = -<X, JY> on the basis.
inline bool is_skew(const StructureEndo& j, const BilinearForm& form) {
  const Matrix gj = form.gram() * j.matrix;
  return (gj + gj.transpose()).is_zero();
}

/// Complex: N = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
/// Para-complex: N = [JX,JY] - J[JX,Y] - J[X,JY] + [X,Y].
inline Vector nijenhuis(const LieAlgebra& alg, const StructureEndo& j, const Vector& x, const Vector& y) {
  require_same_dim(j.dim(), alg.dim(), "nijenhuis");
  const Vector jx = j(x), jy = j(y);
  Vector n = bracket(alg, jx, jy);
  n = minus(n, j(bracket(alg, jx, y)));
  n = minus(n, j(bracket(alg, x, jy)));
  const Vector xy = bracket(alg, x, y);
  return j.kind == StructureKind::complex ? minus(n, xy) : plus(n, xy);
}

inline bool is_integrable(const LieAlgebra& alg, const StructureEndo& j) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!is_zero(nijenhuis(alg, j, unit_vector(n, a), unit_vector(n, b)))) return false;
  return true;
}

/// Imaginary units e_1..e_{d-1} of a table acting through generators[a-1].
struct AlgebraAction {
  std::string name;
  AlgebraTable table;
  std::vector<StructureEndo> generators;

  std::size_t dim() const { return generators.empty() ? 0 : generators.front().dim(); }

  /// Matrix of the unit e_a (a = 0 gives the identity).
  Matrix unit_matrix(std::size_t a) const {
    return a == 0 ? Matrix::identity(dim()) : generators.at(a - 1).matrix;
  }
};

inline StructureKind generator_kind(const AlgebraTable& t, std::size_t a) {
  return unit_squares_to_minus_one(t, a) ? StructureKind::complex : StructureKind::para_complex;
}

/// Action of `table` on Q^n by left multiplication on each block; see
/// block_left_multiplication for the layout of `blocks`.
inline AlgebraAction action_from_blocks(std::string name, const AlgebraTable& table,
                                        const std::vector<std::vector<std::size_t>>& blocks, std::size_t n,
                                        const std::vector<std::string>& generator_names = {}) {
  AlgebraAction act{std::move(name), table, {}};
  for (std::size_t a = 1; a < table.dim(); ++a) {
    std::string gname = a - 1 < generator_names.size() ? generator_names[a - 1] : "L(e" + std::to_string(a) + ")";
    act.generators.push_back({gname, block_left_multiplication(table, a, blocks, n), generator_kind(table, a)});
  }
  return act;
}

struct ActionCheck {
  bool ok = true;
  std::string failure;
};

/// Verifies that the generators realise the table. For associative tables
/// every pairwise product M_a M_b must equal the signed unit matrix of
/// e_a e_b; for non-associative tables only the symmetrised relations
/// M_a M_b + M_b M_a = M(e_a e_b + e_b e_a) are required. Every generator must
/// also satisfy its kind law and be compatible with `form`.
inline ActionCheck check_action_detailed(const AlgebraAction& action, const BilinearForm& form) {
  const auto& t = action.table;
  if (action.generators.size() + 1 != t.dim())
    return {false, "expected " + std::to_string(t.dim() - 1) + " generators"};
  for (std::size_t a = 1; a < t.dim(); ++a) {
    const auto& g = action.generators[a - 1];
    if (g.dim() != form.dim()) return {false, g.name + ": dimension mismatch"};
    if (g.kind != generator_kind(t, a)) return {false, g.name + ": kind disagrees with the table"};
    if (!g.satisfies_kind_law()) return {false, g.name + ": kind law fails"};
    if (!check_compatibility(g, form)) return {false, g.name + ": not compatible with the metric"};
  }
  auto signed_unit = [&](const SignedUnit& u) { return Scalar(u.sign) * action.unit_matrix(u.index); };
  const bool assoc = t.is_associative();
  for (std::size_t a = 1; a < t.dim(); ++a)
    for (std::size_t b = 1; b < t.dim(); ++b) {
      const Matrix ab = action.unit_matrix(a) * action.unit_matrix(b);
      if (assoc) {
        if (!(ab == signed_unit(t.product(a, b))))
          return {false, "e" + std::to_string(a) + "*e" + std::to_string(b) + " relation fails"};
      } else if (a <= b) {
        const Matrix ba = action.unit_matrix(b) * action.unit_matrix(a);
        if (!(ab + ba == signed_unit(t.product(a, b)) + signed_unit(t.product(b, a))))
          return {false, "symmetrised e" + std::to_string(a) + "*e" + std::to_string(b) + " relation fails"};
      }
    }
  return {};
}

inline bool check_action(const AlgebraAction& action, const BilinearForm& form) {
  return check_action_detailed(action, form).ok;
}

}  // namespace antisub

#endif  // ANTISUB_STRUCTURES_HPP
