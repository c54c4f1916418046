#ifndef ANTISUB_EMBEDDED_HPP
#define ANTISUB_EMBEDDED_HPP

// Total spaces S^1 x N with N a sphere or pseudo-sphere in R^m. These are not
// Lie groups and the points are irrational, so everything here is binary64
// with an explicit tolerance.
//
// Tangent vectors of S^1 x N are represented through the trivialisation
// Xi(theta, Theta): d/dtheta -> Theta and TN -> Theta^perp. The S^1 direction
// carries weight +1 in the product metric in every signature.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "antisub/algebras.hpp"
#include "antisub/report.hpp"

namespace antisub {

using RealVector = std::vector<double>;

/// <x,y> = sum_i signs[i] x_i y_i on R^m.
struct AmbientForm {
  std::vector<int> signs;

  static AmbientForm euclidean(std::size_t m) { return {std::vector<int>(m, 1)}; }
  /// First `timelike` coordinates negative.
  static AmbientForm pseudo(std::size_t m, std::size_t timelike) {
    AmbientForm f{std::vector<int>(m, 1)};
    std::fill_n(f.signs.begin(), std::min(timelike, m), -1);
    return f;
  }

  std::size_t dim() const { return signs.size(); }
  std::size_t timelike() const { return static_cast<std::size_t>(std::count(signs.begin(), signs.end(), -1)); }

  double operator()(const RealVector& x, const RealVector& y) const {
    double s = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) s += signs[i] * x[i] * y[i];
    return s;
  }
};

enum class EmbeddedFamily { circle_action, torus_action };  // E4.1 / Ex4.3

/// Which factor(s) of S^1 x N the group H acts on.
enum class EmbeddedAction { on_circle, on_sphere, on_both };

struct EmbeddedScenario {
  std::string id;
  std::string title;
  EmbeddedFamily family = EmbeddedFamily::circle_action;
  int case_no = 1;
  std::size_t ell = 3;
  AmbientForm ambient;
  int sphere_level = 1;
  EmbeddedAction action = EmbeddedAction::on_circle;
  AlgebraKind algebra = AlgebraKind::complex;  // R^m ~ A^ell
  std::vector<std::size_t> units;              // imaginary units used as structures
  std::vector<std::size_t> control_units;      // units expected to fail
  std::vector<Claim> claims;
  std::vector<std::string> notes;
};

/// S^1 x N with the circle action of H (cases 1-4, ell >= 3).
inline EmbeddedScenario make_circle_action_scenario(int case_no, std::size_t ell) {
  if (case_no < 1 || case_no > 4) throw InvalidStructure("circle-action cases are numbered 1..4");
  if (ell < 3) throw InvalidStructure("circle-action family needs ell >= 3");
  EmbeddedScenario sc;
  sc.family = EmbeddedFamily::circle_action;
  sc.case_no = case_no;
  sc.ell = ell;
  const std::size_t m = 2 * ell;
  const bool pseudo = case_no >= 3;
  sc.ambient = pseudo ? AmbientForm::pseudo(m, 2) : AmbientForm::euclidean(m);
  sc.sphere_level = pseudo ? -1 : 1;
  sc.action = (case_no % 2 == 1) ? EmbeddedAction::on_circle : EmbeddedAction::on_sphere;
  sc.algebra = AlgebraKind::complex;
  sc.units = {1};
  return sc;
}

/// S^1 x N with the product action of S^1 x S^1 (cases 1-2, ell >= 2).
inline EmbeddedScenario make_torus_action_scenario(int case_no, std::size_t ell) {
  if (case_no < 1 || case_no > 2) throw InvalidStructure("torus-action cases are numbered 1..2");
  if (ell < 2) throw InvalidStructure("torus-action family needs ell >= 2");
  EmbeddedScenario sc;
  sc.family = EmbeddedFamily::torus_action;
  sc.case_no = case_no;
  sc.ell = ell;
  const std::size_t m = 4 * ell;
  sc.ambient = case_no == 2 ? AmbientForm::pseudo(m, 4) : AmbientForm::euclidean(m);
  sc.sphere_level = case_no == 2 ? -1 : 1;
  sc.action = EmbeddedAction::on_both;
  sc.algebra = AlgebraKind::quaternion;
  sc.units = {2, 3};
  sc.control_units = {1};
  return sc;
}

struct PointFrame {
  double theta = 0;
  RealVector point;                  // Theta, with <Theta,Theta> = sphere_level
  std::vector<RealVector> vertical;  // in the Xi representation
};

inline constexpr int kMaxSamplingDraws = 256;

/// Deterministic point of S^1 x N for (seed, index).
inline PointFrame sample_point(const EmbeddedScenario& sc, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const std::size_t m = sc.ambient.dim();
  PointFrame pf;
  pf.theta = angle(rng);
  pf.point.assign(m, 0.0);
  for (int draw = 0; draw < kMaxSamplingDraws; ++draw) {
    for (auto& x : pf.point) x = unit(rng);
    if (sc.sphere_level > 0 && sc.ambient.timelike() == 0) {
      double nrm = 0;
      for (double x : pf.point) nrm += x * x;
      if (nrm < 1e-6) continue;
      nrm = std::sqrt(nrm);
      for (auto& x : pf.point) x /= nrm;
      return pf;
    }
    // Solve the first coordinate so that <Theta,Theta> = sphere_level.
    double rest = 0;
    for (std::size_t i = 1; i < m; ++i) rest += sc.ambient.signs[i] * pf.point[i] * pf.point[i];
    const double x0_sq = (sc.sphere_level - rest) / sc.ambient.signs[0];
    if (x0_sq < 0) continue;
    pf.point[0] = (pf.point[0] < 0 ? -1.0 : 1.0) * std::sqrt(x0_sq);
    return pf;
  }
  throw SamplingFailure("no point of the pseudo-sphere found in " + std::to_string(kMaxSamplingDraws) + " draws");
}

/// u * v with R^m ~ A^ell acting coordinatewise (left multiplication per block).
inline RealVector act(const AlgebraTable& t, std::size_t unit, const RealVector& v) {
  RealVector out(v.size(), 0.0);
  const std::size_t d = t.dim();
  for (std::size_t blk = 0; blk + d <= v.size(); blk += d)
    for (std::size_t s = 0; s < d; ++s) {
      const auto& p = t.product(unit, s);
      out[blk + p.index] += p.sign * v[blk + s];
    }
  return out;
}

/// Inner product on T(S^1 x N) in the Xi representation.
inline double product_metric(const EmbeddedScenario& sc, const RealVector& theta_pt, const RealVector& v,
                             const RealVector& w) {
  const double level = sc.ambient(theta_pt, theta_pt);
  const double av = sc.ambient(v, theta_pt) / level;
  const double aw = sc.ambient(w, theta_pt) / level;
  RealVector v_t = v, w_t = w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v_t[i] -= av * theta_pt[i];
    w_t[i] -= aw * theta_pt[i];
  }
  return av * aw * 1.0 + sc.ambient(v_t, w_t);
}

/// Vertical space at a point: Theta for the circle factor, i*Theta for the sphere factor.
inline std::vector<RealVector> vertical_space(const EmbeddedScenario& sc, const PointFrame& pf) {
  const AlgebraTable t = builtin(sc.algebra);
  std::vector<RealVector> v;
  if (sc.action == EmbeddedAction::on_circle || sc.action == EmbeddedAction::on_both) v.push_back(pf.point);
  if (sc.action == EmbeddedAction::on_sphere || sc.action == EmbeddedAction::on_both) v.push_back(act(t, 1, pf.point));
  return v;
}

struct PointwiseReport {
  std::size_t samples = 0;
  double max_violation = 0;        // max |<u.v, v'>| over samples, units and vertical pairs
  double max_constraint_error = 0; // max |<Theta,Theta> - level|
  double max_tangency_error = 0;   // max |<Theta, i.Theta>| (ambient form)
  double max_rank_defect = 0;      // 1 - |cos| between vertical generators (0 = independent)
  bool pass = false;
};

/// Anti-invariance u.V perp V at `n_samples` seeded points for every unit in `units`.
inline PointwiseReport check_anti_invariance_pointwise(const EmbeddedScenario& sc, std::size_t n_samples, double tol,
                                                       std::uint64_t seed, const std::vector<std::size_t>& units) {
  if (n_samples < 1) throw InvalidStructure("need at least one sample");
  if (!(tol > 0)) throw InvalidStructure("tolerance must be positive");
  const AlgebraTable t = builtin(sc.algebra);
  PointwiseReport rep;
  for (std::size_t s = 0; s < n_samples; ++s) {
    PointFrame pf = sample_point(sc, seed, s);
    pf.vertical = vertical_space(sc, pf);
    rep.max_constraint_error =
        std::max(rep.max_constraint_error, std::abs(sc.ambient(pf.point, pf.point) - sc.sphere_level));
    rep.max_tangency_error = std::max(rep.max_tangency_error, std::abs(sc.ambient(pf.point, act(t, 1, pf.point))));
    if (pf.vertical.size() == 2) {
      const double a = product_metric(sc, pf.point, pf.vertical[0], pf.vertical[0]);
      const double b = product_metric(sc, pf.point, pf.vertical[1], pf.vertical[1]);
      const double c = product_metric(sc, pf.point, pf.vertical[0], pf.vertical[1]);
      rep.max_rank_defect = std::max(rep.max_rank_defect, 1.0 - std::sqrt(std::abs(a * b - c * c) / std::abs(a * b)));
    }
    for (auto u : units)
      for (const auto& v : pf.vertical) {
        const RealVector uv = act(t, u, v);
        for (const auto& w : pf.vertical)
          rep.max_violation = std::max(rep.max_violation, std::abs(product_metric(sc, pf.point, uv, w)));
      }
    ++rep.samples;
  }
  rep.pass = rep.max_violation <= tol;
  return rep;
}

struct EmbeddedOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 256;
  double tol = 1e-9;
};

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline VerificationReport verify_embedded(const EmbeddedScenario& sc, const EmbeddedOptions& opt = {}) {
  const auto started = std::chrono::steady_clock::now();
  ReportBuilder rb(sc.id, sc.claims);
  rb.decision("embedded: binary64 arithmetic, tol " + format_double(opt.tol) + ", " + std::to_string(opt.samples) +
              " samples, seed " + std::to_string(opt.seed));
  rb.decision("embedded: tangent vectors via Theta (+) Theta^perp; the S^1 factor carries weight +1 in every signature");
  for (const auto& n : sc.notes) rb.decision(n);
  rb.run("anti_invariant", [&] {
    const auto r = check_anti_invariance_pointwise(sc, opt.samples, opt.tol, opt.seed, sc.units);
    return std::pair<ClaimValue, std::string>(r.pass, "max violation " + format_double(r.max_violation));
  });
  rb.run("on_pseudo_sphere", [&] {
    const auto r = check_anti_invariance_pointwise(sc, opt.samples, opt.tol, opt.seed, {});
    return std::pair<ClaimValue, std::string>(r.max_constraint_error <= opt.tol && r.max_tangency_error <= opt.tol,
                                              "constraint " + format_double(r.max_constraint_error) + ", tangency " +
                                                  format_double(r.max_tangency_error));
  });
  if (!sc.control_units.empty()) {
    rb.run("anti_invariant_control", [&] {
      const auto r = check_anti_invariance_pointwise(sc, opt.samples, opt.tol, opt.seed, sc.control_units);
      return std::pair<ClaimValue, std::string>(r.pass, "max violation " + format_double(r.max_violation));
    });
  }
  auto report = std::move(rb).finish();
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace antisub

#endif  // ANTISUB_EMBEDDED_HPP
