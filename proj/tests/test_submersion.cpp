#include <gtest/gtest.h>

#include "antisub/catalog.hpp"
#include "antisub/submersion.hpp"
#include "support.hpp"

using namespace antisub;
using namespace antisub::catalog::build_helpers;
using testing_support::vec;

namespace {

const SubmersionScenario& entry(const char* id) { return std::get<SubmersionScenario>(catalog::get(id).scenario); }

std::vector<const SubmersionScenario*> lie_scenarios() {
  std::vector<const SubmersionScenario*> out;
  for (const auto& id : catalog::list())
    if (const auto* sc = std::get_if<SubmersionScenario>(&catalog::get(id).scenario)) out.push_back(sc);
  return out;
}

}  // namespace

TEST(Build, HopfHorizontal) {
  const auto f = build(hitchin(1), Subspace::coordinate(4, {0, 1}));
  EXPECT_EQ(f.horizontal().dim(), 2u);
  EXPECT_TRUE(f.horizontal().contains(e(4, 2)));
  EXPECT_TRUE(f.horizontal().contains(e(4, 3)));
}

TEST(Build, ZeroSubalgebra) {
  const auto f = build(hitchin(2), Subspace::zero(4));
  EXPECT_EQ(f.horizontal().dim(), 4u);
}

TEST(Build, NegativeExampleFour) {
  const auto f = build(r_sl2(), Subspace::coordinate(4, {0, 2}));
  EXPECT_TRUE(f.horizontal().contains(e(4, 1)));
  EXPECT_TRUE(f.horizontal().contains(e(4, 3)));
}

TEST(Build, Errors) {
  EXPECT_THROW(build(hitchin(1), Subspace::coordinate(4, {2, 3})), NotSubalgebra);
  EXPECT_THROW(build(hitchin(2), Subspace::coordinate(4, {2})), NotAdInvariant);
  const MetricLieAlgebra flat(LieAlgebra::abelian(4), BilinearForm::diagonal({1, -1, 1, -1}));
  EXPECT_THROW(build(flat, Subspace(4, {vec({1, 1, 0, 0})})), DegenerateRestriction);
}

TEST(Build, ProjectorsIdempotentAndOrthogonal) {
  std::mt19937_64 rng(29);
  for (const auto* sc : lie_scenarios()) {
    const auto f = build(sc->mla, sc->h);
    const std::size_t n = f.dim();
    for (int t = 0; t < 3; ++t) {
      const Vector v = testing_support::random_vector(rng, n);
      const Vector pv = f.vertical_part(v), ph = f.horizontal_part(v);
      EXPECT_EQ(plus(pv, ph), v) << sc->id;
      EXPECT_EQ(f.vertical_part(pv), pv) << sc->id;
      EXPECT_EQ(f.horizontal_part(ph), ph) << sc->id;
      EXPECT_TRUE(is_zero(f.vertical_part(ph))) << sc->id;
      EXPECT_EQ(sc->mla.form()(pv, ph), Scalar(0)) << sc->id;
    }
  }
}

TEST(AntiInvariant, Examples) {
  const auto& flat = entry("3.1.1a");
  const auto ff = build(flat.mla, flat.h);
  EXPECT_TRUE(check_anti_invariant(ff, flat.structures.front()));
  EXPECT_TRUE(is_lagrangian(ff, flat.structures.front()));

  const auto hf = build(hitchin(1), Subspace::coordinate(4, {0, 1}));
  EXPECT_TRUE(check_anti_invariant(hf, hitchin_Jcheck()));
  EXPECT_FALSE(check_anti_invariant(hf, hitchin_J()));

  const auto one = build(hitchin(2), Subspace::coordinate(4, {0}));
  EXPECT_TRUE(check_anti_invariant(one, hitchin_J()));
  EXPECT_FALSE(is_lagrangian(one, hitchin_J()));

  EXPECT_FALSE(is_lagrangian(build(hitchin(2), Subspace::zero(4)), hitchin_J()));
}

TEST(ONeill, HopfTensors) {
  const auto m = hitchin(1);
  const auto f = build(m, Subspace::coordinate(4, {0, 1}));
  const auto conn = levi_civita(m);
  EXPECT_EQ(f.vertical_part(conn.nabla(e(4, 2), e(4, 3))), scaled(-1, e(4, 1)));
  EXPECT_TRUE(oneill_T(f, conn).is_zero());
  EXPECT_FALSE(oneill_A(f, conn).is_zero());
  EXPECT_FALSE(horizontal_integrable(f, m.algebra()));
  const auto fr = fibers_report(f, conn, m.form());
  EXPECT_TRUE(fr.totally_geodesic);
  EXPECT_TRUE(fr.minimal);
}

TEST(ONeill, HopfBaseCurvatureFromParts) {
  // sec_B(e2,e3) = sec_M(e2,e3) + 3 <A,A>/Q = 1 + 3 |-e1|^2 = 4.
  const auto m = hitchin(1);
  const auto f = build(m, Subspace::coordinate(4, {0, 1}));
  EXPECT_EQ(sectional(m, e(4, 2), e(4, 3)), Scalar(1));
  EXPECT_EQ(base_sectional(f, m, e(4, 2), e(4, 3)), Scalar(4));
  const auto conn = levi_civita(m);
  const auto scan = base_scan(f, m.form(), conn, curvature(m.algebra(), conn));
  EXPECT_TRUE(scan.constant);
  EXPECT_EQ(*scan.value, Scalar(4));
}

TEST(ONeill, FlatAbelian) {
  const auto& sc = entry("3.1.1b");
  const auto f = build(sc.mla, sc.h);
  const auto conn = levi_civita(sc.mla);
  EXPECT_TRUE(oneill_T(f, conn).is_zero());
  EXPECT_TRUE(oneill_A(f, conn).is_zero());
  EXPECT_TRUE(horizontal_integrable(f, sc.mla.algebra()));
  const auto fr = fibers_report(f, conn, sc.mla.form());
  EXPECT_TRUE(fr.totally_geodesic && fr.minimal);
  EXPECT_EQ(base_sectional(f, sc.mla, f.horizontal().basis()[0], f.horizontal().basis()[1]), Scalar(0));
}

TEST(ONeill, EinsteinSwapFibersTotallyGeodesic) {
  const auto& sc = entry("3.4.1a.ii");
  const auto f = build(sc.mla, sc.h);
  const auto fr = fibers_report(f, levi_civita(sc.mla), sc.mla.form());
  EXPECT_TRUE(fr.totally_geodesic);
  EXPECT_TRUE(fr.minimal);
}

TEST(ONeill, S3xS3WithE2F2NotIntegrable) {
  const auto& sc = entry("3.4.1a.i");
  EXPECT_FALSE(horizontal_integrable(build(sc.mla, sc.h), sc.mla.algebra()));
}

TEST(ONeill, SymmetriesAndAgreementOnCatalog) {
  for (const auto* sc : lie_scenarios()) {
    const auto f = build(sc->mla, sc->h);
    const auto conn = levi_civita(sc->mla);
    const auto a = oneill_A(f, conn), t = oneill_T(f, conn);
    for (std::size_t i = 0; i < a.count; ++i)
      for (std::size_t j = 0; j < a.count; ++j) EXPECT_EQ(a(i, j), scaled(-1, a(j, i))) << sc->id;
    for (std::size_t i = 0; i < t.count; ++i)
      for (std::size_t j = 0; j < t.count; ++j) EXPECT_EQ(t(i, j), t(j, i)) << sc->id;
    const auto ab = oneill_A_from_brackets(f, sc->mla.algebra());
    EXPECT_EQ(a.values, ab.values) << sc->id;
    EXPECT_EQ(horizontal_integrable(f, sc->mla.algebra()), a.is_zero()) << sc->id;
  }
}

TEST(ONeill, BiInvariantSubalgebraFibersAreTotallyGeodesic) {
  int seen = 0;
  for (const auto* sc : lie_scenarios()) {
    if (!is_ad_invariant(sc->mla, Subspace::full(sc->mla.dim()))) continue;
    const auto f = build(sc->mla, sc->h);
    EXPECT_TRUE(oneill_T(f, levi_civita(sc->mla)).is_zero()) << sc->id;
    ++seen;
  }
  EXPECT_GT(seen, 20);
}

TEST(VerifyScenario, QuaternionFlatAllConfirmed) {
  const auto r = verify_scenario(entry("3.1.1b"));
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.find("anti_invariant[Q]")->status, Status::confirmed);
  EXPECT_EQ(r.find("action_relations[Q]")->status, Status::confirmed);
}

TEST(VerifyScenario, HopfQuaternionAntiInvariant) {
  const auto r = verify_scenario(entry("3.3.2b.S3"));
  EXPECT_EQ(r.find("anti_invariant[Q]")->status, Status::confirmed);
}

TEST(VerifyScenario, WrongClaimIsRefuted) {
  auto sc = entry("3.1.1a");
  sc.claims.push_back({"horizontal_integrable", ClaimValue(false), {}});
  const auto r = verify_scenario(sc);
  EXPECT_EQ(r.find("horizontal_integrable")->status, Status::refuted);
  EXPECT_FALSE(r.clean());
}

TEST(VerifyScenario, UnknownCheckIsError) {
  auto sc = entry("3.1.1a");
  sc.claims.push_back({"no_such_check", ClaimValue(true), {}});
  const auto r = verify_scenario(sc);
  EXPECT_EQ(r.find("no_such_check")->status, Status::error);
}

TEST(VerifyScenario, NotSubalgebraBecomesErrorNotCrash) {
  auto sc = entry("3.3.1a");
  sc.h.span = Subspace::coordinate(4, {2, 3});
  const auto r = verify_scenario(sc);
  EXPECT_EQ(r.find("subalgebra")->computed, std::optional<ClaimValue>(false));
  EXPECT_EQ(r.find("anti_invariant[Jcheck]")->status, Status::error);
  EXPECT_FALSE(r.clean());
}

TEST(VerifyScenario, ConventionsRecorded) {
  const auto r = verify_scenario(entry("3.3.1b"));
  bool para = false;
  for (const auto& d : r.decisions) para = para || d.find("para-complex N") != std::string::npos;
  EXPECT_TRUE(para);
}
