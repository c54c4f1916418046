#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "antisub/catalog.hpp"

using namespace antisub;

namespace {

const std::vector<std::string> kChecklist = {
    "3.1.1a",       "3.1.1b",       "3.1.1c",       "3.1.2",        "3.1.3",        "3.2",
    "3.3.1a",       "3.3.1b",       "3.3.2a.S3",    "3.3.2a.S1xS3", "3.3.2b.S3",    "3.3.2b.S1xS3",
    "3.3.2c.S3",    "3.3.2c.S1xS3", "3.3.2d.S3",    "3.3.2d.S1xS3", "3.4.1a.i",     "3.4.1a.ii",
    "3.4.1b.i",     "3.4.1b.ii",    "3.4.2a",       "3.4.2b",       "3.4.3",        "E3.6.1",
    "E3.6.2",       "E3.6.3",       "E3.6.4",       "E4.1.1",       "E4.1.2",       "E4.1.3",
    "E4.1.4",       "Ex4.3.1",      "Ex4.3.2",
};

bool same_reports(const VerificationReport& a, const VerificationReport& b) {
  if (a.id != b.id || a.checks.size() != b.checks.size() || a.decisions != b.decisions) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const auto &x = a.checks[i], &y = b.checks[i];
    if (x.name != y.name || x.claimed != y.claimed || x.computed != y.computed || x.status != y.status ||
        x.detail != y.detail)
      return false;
  }
  return true;
}

}  // namespace

TEST(Catalog, CoversEveryExample) {
  const auto ids = catalog::list();
  for (const auto& want : kChecklist) EXPECT_NE(std::find(ids.begin(), ids.end(), want), ids.end()) << want;
  EXPECT_GE(ids.size(), 25u);
}

TEST(Catalog, IdsUnique) {
  const auto ids = catalog::list();
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(Catalog, GetExamples) {
  const auto& e = catalog::get("E3.6.2");
  const auto& sc = std::get<SubmersionScenario>(e.scenario);
  ASSERT_EQ(sc.h.span.dim(), 1u);
  EXPECT_EQ(sc.h.span.basis()[0], unit_vector(4, 1));
  EXPECT_EQ(sc.mla.algebra().labels()[1], "f1");
  EXPECT_THROW(catalog::get("nope"), UnknownId);
}

TEST(Catalog, EveryClaimNamesARealCheck) {
  for (const auto& r : catalog::verify_all())
    for (const auto& c : r.checks) EXPECT_NE(c.detail, "no such check for this scenario") << r.id << " " << c.name;
}

TEST(Catalog, EveryEntryHasClaims) {
  for (const auto& id : catalog::list()) EXPECT_FALSE(catalog::get(id).claims().empty()) << id;
}

TEST(Verify, FlatComplexLagrangian) {
  const auto r = catalog::verify("3.1.1a");
  EXPECT_EQ(r.find("anti_invariant[J]")->status, Status::confirmed);
  EXPECT_EQ(r.find("lagrangian[J]")->status, Status::confirmed);
  EXPECT_TRUE(r.clean());
}

TEST(Verify, S3xS3IntegrableEinstein) {
  const auto r = catalog::verify("3.4.1a.i");
  EXPECT_EQ(r.find("integrable[J]")->status, Status::confirmed);
  EXPECT_EQ(r.find("einstein")->status, Status::confirmed);
  EXPECT_EQ(r.find("einstein_lambda")->computed, std::optional<ClaimValue>(Scalar(2)));
}

TEST(Verify, NeutralProductNotEinstein) {
  for (const char* id : {"3.4.1b.i", "3.4.1b.ii"}) {
    const auto r = catalog::verify(id);
    const auto* e = r.find("einstein");
    EXPECT_EQ(e->computed, std::optional<ClaimValue>(false)) << id;
    EXPECT_TRUE(e->status == Status::refuted || e->status == Status::unclaimed) << id;
  }
}

TEST(Verify, KnownRefutations) {
  // The only refuted checks in the catalog: normalisation of the base constants
  // and the "not totally geodesic" assertion for the Hopf example.
  std::set<std::string> refuted;
  for (const auto& r : catalog::verify_all())
    for (const auto& c : r.checks) {
      EXPECT_NE(c.status, Status::error) << r.id << " " << c.name << ": " << c.detail;
      if (c.status == Status::refuted) refuted.insert(r.id + ":" + c.name);
    }
  const std::set<std::string> expected = {
      "3.3.1a:fibers_totally_geodesic", "3.3.1a:base_curvature_value", "E3.6.4:base_curvature_value",
      "SL2.H1:base_curvature_value",    "SL2.H2:base_curvature_value", "SL2.H3:base_curvature_value"};
  EXPECT_EQ(refuted, expected);
}

TEST(Verify, BaseConstantsAsComputed) {
  auto value = [](const char* id) { return catalog::verify(id).find("base_curvature_value")->computed; };
  EXPECT_EQ(value("3.3.1a"), std::optional<ClaimValue>(Scalar(4)));
  EXPECT_EQ(value("E3.6.4"), std::optional<ClaimValue>(Scalar(-4)));
  EXPECT_EQ(value("SL2.H2"), std::optional<ClaimValue>(Scalar(-4)));
  EXPECT_EQ(value("E3.6.1"), std::optional<ClaimValue>(Scalar(-1)));
  EXPECT_EQ(catalog::verify("E3.6.2").find("base_constant_curvature")->computed, std::optional<ClaimValue>(false));
}

TEST(VerifyAll, SortedDeterministicAndThreadIndependent) {
  const auto a = catalog::verify_many({}, {}, 1);
  const auto b = catalog::verify_many({}, {}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(same_reports(a[i], b[i])) << a[i].id;
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
}

TEST(VerifyAll, PermutationInvariant) {
  auto ids = catalog::list();
  std::reverse(ids.begin(), ids.end());
  const auto a = catalog::verify_many(ids);
  const auto b = catalog::verify_many(catalog::list());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(same_reports(a[i], b[i]));
}

TEST(VerifyAll, UnknownIdDoesNotAbortBatch) {
  const auto r = catalog::verify_many({"3.1.1a", "bogus"});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[1].id, "bogus");
  EXPECT_EQ(r[1].checks.front().status, Status::error);
  EXPECT_TRUE(r[0].clean());
}
