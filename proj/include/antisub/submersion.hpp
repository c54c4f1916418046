#ifndef ANTISUB_SUBMERSION_HPP
#define ANTISUB_SUBMERSION_HPP

// The homogeneous construction G -> G/H on the Lie algebra level: vertical
// space h, horizontal space h^perp, anti-invariance of structures, O'Neill
// tensors, fibre and base geometry, and scenario verification.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antisub/geometry.hpp"
#include "antisub/report.hpp"
#include "antisub/structures.hpp"

namespace antisub {

/// h inside g. Closedness of the corresponding subgroup is declared, not computed.
struct SubalgebraDecl {
  Subspace span;
  bool claimed_closed_group = true;
};

/// g = vertical (+) horizontal with coordinate maps for the splitting.
class SplitFrame {
public:
  SplitFrame(Subspace vertical, Subspace horizontal) : vertical_(std::move(vertical)), horizontal_(std::move(horizontal)) {
    const std::size_t n = vertical_.ambient_dim();
    require_same_dim(horizontal_.ambient_dim(), n, "split frame");
    require_same_dim(vertical_.dim() + horizontal_.dim(), n, "split frame");
    std::vector<Vector> cols = vertical_.basis();
    cols.insert(cols.end(), horizontal_.basis().begin(), horizontal_.basis().end());
    auto inv = inverse(Matrix::from_columns(cols, n));
    if (!inv) throw InvalidStructure("vertical and horizontal spaces do not span g");
    to_coords_ = std::move(*inv);
  }

  const Subspace& vertical() const { return vertical_; }
  const Subspace& horizontal() const { return horizontal_; }
  std::size_t dim() const { return vertical_.ambient_dim(); }

  Vector vertical_part(const Vector& v) const { return part(v, 0, vertical_.dim(), vertical_.basis()); }
  Vector horizontal_part(const Vector& v) const {
    return part(v, vertical_.dim(), dim(), horizontal_.basis());
  }

private:
  Vector part(const Vector& v, std::size_t from, std::size_t to, const std::vector<Vector>& basis) const {
    const Vector c = to_coords_.apply(v);
    Vector out = zero_vector(dim());
    for (std::size_t i = from; i < to; ++i) axpy(out, c[i], basis[i - from]);
    return out;
  }

  Subspace vertical_;
  Subspace horizontal_;
  Matrix to_coords_;
};

/// Checks the hypotheses of the construction and splits g = h (+) h^perp.
inline SplitFrame build(const MetricLieAlgebra& mla, const SubalgebraDecl& h) {
  if (!is_subalgebra(mla.algebra(), h.span)) throw NotSubalgebra("h is not closed under the bracket");
  if (!restrict_form(h.span, mla.form()).nondegenerate())
    throw DegenerateRestriction("metric restricted to h is degenerate");
  if (!is_ad_invariant(mla, h.span)) throw NotAdInvariant("metric is not invariant under ad(h)");
  return SplitFrame(h.span, orth_complement(h.span, mla.form()));
}

inline SplitFrame build(const MetricLieAlgebra& mla, const Subspace& h) { return build(mla, SubalgebraDecl{h, true}); }

/// J maps every vertical basis vector into the horizontal space.
inline bool check_anti_invariant(const SplitFrame& frame, const StructureEndo& j) {
  require_same_dim(j.dim(), frame.dim(), "anti-invariance");
  for (const auto& v : frame.vertical().basis())
    if (!frame.horizontal().contains(j(v))) return false;
  return true;
}

/// Every imaginary generator maps the vertical space into the horizontal one.
inline bool check_anti_invariant(const SplitFrame& frame, const AlgebraAction& action) {
  for (const auto& g : action.generators)
    if (!check_anti_invariant(frame, g)) return false;
  return true;
}

/// Anti-invariant with J(V) = H, i.e. 2 dim V = dim g.
template <class Structure>
bool is_lagrangian(const SplitFrame& frame, const Structure& s) {
  return check_anti_invariant(frame, s) && 2 * frame.vertical().dim() == frame.dim();
}

/// Components of an O'Neill tensor over pairs of basis vectors of one distribution.
struct PairTensor {
  std::size_t count = 0;  // basis size of the distribution
  std::vector<Vector> values;

  const Vector& operator()(std::size_t a, std::size_t b) const { return values.at(a * count + b); }
  bool is_zero() const {
    for (const auto& v : values)
      if (!antisub::is_zero(v)) return false;
    return true;
  }
};

/// T_U V = horizontal part of nabla_U V for vertical basis vectors U, V.
inline PairTensor oneill_T(const SplitFrame& frame, const ConnectionTable& conn) {
  const auto& b = frame.vertical().basis();
  PairTensor t{b.size(), {}};
  for (const auto& u : b)
    for (const auto& v : b) t.values.push_back(frame.horizontal_part(conn.nabla(u, v)));
  return t;
}

/// A_X Y = vertical part of nabla_X Y for horizontal basis vectors X, Y.
inline PairTensor oneill_A(const SplitFrame& frame, const ConnectionTable& conn) {
  const auto& b = frame.horizontal().basis();
  PairTensor a{b.size(), {}};
  for (const auto& x : b)
    for (const auto& y : b) a.values.push_back(frame.vertical_part(conn.nabla(x, y)));
  return a;
}

/// Closed form 1/2 [X,Y]^V, valid when the metric is ad(h)-invariant.
inline PairTensor oneill_A_from_brackets(const SplitFrame& frame, const LieAlgebra& alg) {
  const auto& b = frame.horizontal().basis();
  PairTensor a{b.size(), {}};
  for (const auto& x : b)
    for (const auto& y : b) a.values.push_back(scaled(Scalar(1, 2), frame.vertical_part(bracket(alg, x, y))));
  return a;
}

struct FibersReport {
  bool totally_geodesic = false;
  bool minimal = false;
  Vector mean_curvature;  // sum_ab (G_V^{-1})_ab T(e_a, e_b)
};

inline FibersReport fibers_report(const SplitFrame& frame, const ConnectionTable& conn, const BilinearForm& form) {
  const PairTensor t = oneill_T(frame, conn);
  FibersReport out;
  out.totally_geodesic = t.is_zero();
  out.mean_curvature = zero_vector(frame.dim());
  if (t.count > 0) {
    const auto ginv = inverse(restrict_form(frame.vertical(), form).gram());
    if (!ginv) throw DegenerateRestriction("metric restricted to the fibre is degenerate");
    for (std::size_t a = 0; a < t.count; ++a)
      for (std::size_t b = 0; b < t.count; ++b) axpy(out.mean_curvature, (*ginv)(a, b), t(a, b));
  }
  out.minimal = is_zero(out.mean_curvature);
  return out;
}

/// [X,Y] horizontal for all horizontal basis pairs.
inline bool horizontal_integrable(const SplitFrame& frame, const LieAlgebra& alg) {
  const auto& b = frame.horizontal().basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!frame.horizontal().contains(bracket(alg, b[i], b[j]))) return false;
  return true;
}

/// O'Neill's horizontal-plane formula sec_B = sec_M + 3 <A_X Y, A_X Y> / Q(X,Y).
inline Scalar base_sectional(const SplitFrame& frame, const BilinearForm& form, const ConnectionTable& conn,
                             const CurvatureTensor& curv, const Vector& x, const Vector& y) {
  if (!frame.horizontal().contains(x) || !frame.horizontal().contains(y))
    throw InvalidStructure("base_sectional needs horizontal vectors");
  const Scalar q = plane_norm(form, x, y);
  if (sgn(q) == 0) throw DegeneratePlane("horizontal plane is degenerate (Q = 0)");
  const Vector axy = frame.vertical_part(conn.nabla(x, y));
  return form(curv.apply(x, y, y), x) / q + 3 * form(axy, axy) / q;
}

inline Scalar base_sectional(const SplitFrame& frame, const MetricLieAlgebra& mla, const Vector& x, const Vector& y) {
  const auto conn = levi_civita(mla);
  return base_sectional(frame, mla.form(), conn, curvature(mla.algebra(), conn), x, y);
}

inline CurvatureScan base_scan(const SplitFrame& frame, const BilinearForm& form, const ConnectionTable& conn,
                               const CurvatureTensor& curv, std::uint64_t seed = kDefaultScanSeed,
                               int random_planes = kDefaultRandomPlanes) {
  return scan_planes(frame.horizontal().basis(), frame.dim(),
                     [&](const Vector& x, const Vector& y) { return base_sectional(frame, form, conn, curv, x, y); },
                     seed, random_planes);
}

// --- scenarios ---------------------------------------------------------------

struct SubmersionScenario {
  std::string id;
  std::string title;
  MetricLieAlgebra mla;
  SubalgebraDecl h;
  std::vector<StructureEndo> structures;
  std::vector<AlgebraAction> actions;
  std::vector<Claim> claims;
  std::vector<std::string> notes;
};

/// Convention notes attached to every Lie-theoretic report.
inline std::vector<std::string> lie_conventions() {
  return {
      "curvature: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z; sec(X,Y) = <R(X,Y)Y,X>/Q(X,Y)",
      "ricci: Ric(X,Y) = trace(Z -> R(Z,X)Y) (signed metric trace)",
      "nijenhuis: complex N = [JX,JY]-J[JX,Y]-J[X,JY]-[X,Y]; para-complex N = [JX,JY]-J[JX,Y]-J[X,JY]+[X,Y]",
      "base curvature: O'Neill horizontal-plane formula sec_B = sec_M + 3<A_X Y,A_X Y>/Q on coordinate and 8 "
      "seeded random horizontal planes; degenerate planes skipped",
      "non-associative actions: only symmetrised relations M_a M_b + M_b M_a = M(e_a e_b + e_b e_a) are required",
  };
}

namespace detail {
inline std::pair<ClaimValue, std::string> yes_no(bool b, std::string detail = {}) { return {ClaimValue(b), std::move(detail)}; }
}  // namespace detail

/// Runs every applicable check; never throws for per-check failures.
inline VerificationReport verify_scenario(const SubmersionScenario& sc) {
  using detail::yes_no;
  const auto started = std::chrono::steady_clock::now();
  ReportBuilder rb(sc.id, sc.claims);
  for (const auto& d : lie_conventions()) rb.decision(d);
  for (const auto& n : sc.notes) rb.decision(n);

  const auto& alg = sc.mla.algebra();
  const auto& form = sc.mla.form();
  const auto& h = sc.h.span;
  const std::size_t n = sc.mla.dim();

  rb.run("jacobi", [&] {
    const auto bad = check_jacobi(alg);
    return yes_no(bad.empty(), bad.empty() ? "" : std::to_string(bad.size()) + " violating basis triples");
  });
  rb.run("subalgebra", [&] { return yes_no(is_subalgebra(alg, h)); });
  rb.run("restriction_nondegenerate", [&] { return yes_no(restrict_form(h, form).nondegenerate()); });
  rb.run("ad_invariant", [&] { return yes_no(is_ad_invariant(sc.mla, h)); });
  rb.run("bi_invariant", [&] { return yes_no(is_ad_invariant(sc.mla, Subspace::full(n))); });
  rb.run("killing_invariant", [&] { return yes_no(is_ad_invariant(alg, killing_form(alg), Subspace::full(n))); });

  std::optional<SplitFrame> frame;
  std::string frame_error;
  try {
    frame.emplace(build(sc.mla, sc.h));
  } catch (const Error& e) {
    frame_error = std::string(e.kind()) + ": " + e.what();
  }

  for (const auto& j : sc.structures) {
    const std::string tag = "[" + j.name + "]";
    rb.run("kind_law" + tag, [&] { return yes_no(j.satisfies_kind_law(), std::string(to_string(j.kind))); });
    rb.run("compatible" + tag, [&] { return yes_no(check_compatibility(j, form)); });
    rb.run("integrable" + tag, [&] {
      if (!j.satisfies_kind_law()) throw InvalidStructure(j.name + " fails its kind law");
      return yes_no(is_integrable(alg, j), "convention: " + std::string(to_string(j.kind)));
    });
    if (frame) {
      rb.run("anti_invariant" + tag, [&] { return yes_no(check_anti_invariant(*frame, j)); });
      rb.run("lagrangian" + tag, [&] { return yes_no(is_lagrangian(*frame, j)); });
    } else {
      rb.record_error("anti_invariant" + tag, frame_error);
      rb.record_error("lagrangian" + tag, frame_error);
    }
  }
  for (const auto& a : sc.actions) {
    const std::string tag = "[" + a.name + "]";
    rb.run("action_relations" + tag, [&] {
      const auto r = check_action_detailed(a, form);
      return yes_no(r.ok, std::string(to_string(a.table.kind())) + (r.ok ? "" : ": " + r.failure));
    });
    if (frame) rb.run("anti_invariant" + tag, [&] { return yes_no(check_anti_invariant(*frame, a)); });
    else rb.record_error("anti_invariant" + tag, frame_error);
  }

  // Geometry of the total space.
  std::optional<ConnectionTable> conn;
  std::optional<CurvatureTensor> curv;
  try {
    conn.emplace(levi_civita(sc.mla));
    curv.emplace(curvature(alg, *conn));
  } catch (const Error& e) {
    rb.record_error("curvature_identities", e.what());
  }
  if (curv) {
    rb.run("curvature_identities", [&] {
      const bool ok = is_torsion_free(*conn, alg) && is_metric_compatible(*conn, form) &&
                      satisfies_first_bianchi(*curv) && satisfies_metric_symmetries(*curv, form);
      return yes_no(ok, "torsion-free, metric, first Bianchi, pair symmetry");
    });
    const auto ein = einstein_check(ricci(*curv), form);
    rb.record("einstein", ClaimValue(ein.is_einstein));
    if (ein.lambda) rb.record("einstein_lambda", ClaimValue(*ein.lambda));
    else rb.record("einstein_lambda", std::nullopt, "Ric is not a multiple of g");
    const auto scan = sectional_scan(sc.mla, *curv);
    rb.record("total_constant_curvature", ClaimValue(scan.constant),
              std::to_string(scan.evaluated) + " planes, " + std::to_string(scan.skipped_degenerate) + " degenerate skipped");
    if (scan.value) rb.record("total_curvature_value", ClaimValue(*scan.value));
    else rb.record("total_curvature_value", std::nullopt, "not constant");
  }

  // Submersion geometry.
  const char* sub_checks[] = {"fibers_totally_geodesic", "fibers_minimal",     "horizontal_integrable",
                              "oneill_A_agrees",         "oneill_symmetries", "base_constant_curvature",
                              "base_curvature_value"};
  if (!frame || !conn) {
    for (const char* c : sub_checks) rb.record_error(c, frame ? "connection unavailable" : frame_error);
  } else {
    const auto fib = fibers_report(*frame, *conn, form);
    rb.record("fibers_totally_geodesic", ClaimValue(fib.totally_geodesic));
    rb.record("fibers_minimal", ClaimValue(fib.minimal));
    const bool integrable = horizontal_integrable(*frame, alg);
    rb.record("horizontal_integrable", ClaimValue(integrable));
    const PairTensor a = oneill_A(*frame, *conn);
    rb.run("oneill_A_agrees", [&] {
      const PairTensor closed = oneill_A_from_brackets(*frame, alg);
      return yes_no(a.values == closed.values && a.is_zero() == integrable,
                    "A = 1/2 [X,Y]^V and (A == 0) <=> horizontal integrable");
    });
    rb.run("oneill_symmetries", [&] {
      const PairTensor t = oneill_T(*frame, *conn);
      bool ok = true;
      for (std::size_t i = 0; i < a.count; ++i)
        for (std::size_t j = 0; j < a.count; ++j) ok = ok && a(i, j) == scaled(-1, a(j, i));
      for (std::size_t i = 0; i < t.count; ++i)
        for (std::size_t j = 0; j < t.count; ++j) ok = ok && t(i, j) == t(j, i);
      return yes_no(ok, "A antisymmetric, T symmetric");
    });
    const auto bs = base_scan(*frame, form, *conn, *curv);
    std::string scan_detail = std::to_string(bs.evaluated) + " horizontal planes, " +
                              std::to_string(bs.skipped_degenerate) + " degenerate skipped";
    if (!bs.constant && bs.evaluated > 0)
      scan_detail += ", range [" + to_string(bs.min_value) + ", " + to_string(bs.max_value) + "]";
    rb.record("base_constant_curvature", ClaimValue(bs.constant), scan_detail);
    if (bs.value) rb.record("base_curvature_value", ClaimValue(*bs.value));
    else rb.record("base_curvature_value", std::nullopt, "not constant");
  }

  auto report = std::move(rb).finish();
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace antisub

#endif  // ANTISUB_SUBMERSION_HPP
