#include <gtest/gtest.h>

#include "antisub/scenario_io.hpp"

using namespace antisub;

namespace {

std::string report_json(const VerificationReport& r) { return io::to_json(r).dump(2); }

}  // namespace

TEST(RoundTrip, EveryCatalogEntry) {
  for (const auto& id : catalog::list()) {
    const auto& e = catalog::get(id);
    const std::string text = io::to_json(e.scenario).dump(2);
    const auto back = io::parse_scenario(text);
    EXPECT_EQ(io::to_json(back).dump(2), text) << id;
    EXPECT_EQ(report_json(catalog::verify(back)), report_json(catalog::verify(e.scenario))) << id;
  }
}

TEST(RoundTrip, LieDataPreserved) {
  const auto& sc = std::get<SubmersionScenario>(catalog::get("3.4.2b").scenario);
  const auto back = std::get<SubmersionScenario>(io::parse_scenario(io::to_json(catalog::get("3.4.2b").scenario).dump()));
  EXPECT_EQ(back.mla.algebra(), sc.mla.algebra());
  EXPECT_EQ(back.mla.form().gram(), sc.mla.form().gram());
  ASSERT_EQ(back.actions.size(), 1u);
  EXPECT_EQ(back.actions[0].table, sc.actions[0].table);
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(back.actions[0].generators[g].matrix, sc.actions[0].generators[g].matrix);
}

TEST(Parse, MinimalHandWrittenFile) {
  const char* text = R"({
    "basis": ["e0", "e1", "e2", "e3"],
    "brackets": [[1, 2, {"e3": "-2"}], [2, 3, {"1": -2}], [3, 1, {"2": "-2"}]],
    "metric": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]],
    "subalgebra": [["1","0","0","0"], ["0","1","0","0"]],
    "structures": [{"name": "Jcheck", "kind": "complex",
                    "matrix": [["0","0","-1","0"],["0","0","0","1"],["1","0","0","0"],["0","-1","0","0"]]}],
    "claims": [{"check": "anti_invariant[Jcheck]", "expected": true},
               {"check": "base_curvature_value", "expected": "4"}]
  })";
  const auto sc = std::get<SubmersionScenario>(io::parse_scenario(text));
  EXPECT_EQ(sc.id, "file");
  const auto r = verify_scenario(sc);
  EXPECT_EQ(r.find("anti_invariant[Jcheck]")->status, Status::confirmed);
  EXPECT_EQ(r.find("base_curvature_value")->status, Status::confirmed);
  EXPECT_TRUE(r.clean());
}

TEST(Parse, Errors) {
  EXPECT_THROW(io::parse_scenario("{not json"), ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario("[]"), ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"basis": ["a"], "metric": [[0.5]], "subalgebra": []})"), ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"basis": ["a"], "metric": [["1"]]})"), ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"basis": ["a","b"], "metric": [["1","0"]], "subalgebra": []})"),
               ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"basis": ["a"], "brackets": [[0, 5, {}]], "metric": [["1"]], "subalgebra": []})"),
               ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"kind": "embedded", "family": "moebius", "case": 1, "ell": 3})"),
               ScenarioFormatError);
  EXPECT_THROW(io::parse_scenario(R"({"kind": "what"})"), ScenarioFormatError);
  EXPECT_THROW(io::load_scenario("/nonexistent/file.json"), ScenarioFormatError);
}

TEST(Parse, DegenerateMetricRejected) {
  EXPECT_THROW(io::parse_scenario(R"({"basis": ["a","b"], "metric": [["1","0"],["0","0"]], "subalgebra": []})"),
               DegenerateMetric);
}

TEST(Report, StableKeyOrderAndNulls) {
  const auto r = catalog::verify("3.1.1a");
  const auto j = io::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "checks", "decisions"}));
  std::vector<std::string> ckeys;
  for (const auto& [k, v] : j["checks"][0].items()) ckeys.push_back(k);
  EXPECT_EQ(ckeys, (std::vector<std::string>{"name", "claimed", "computed", "status", "detail"}));
  EXPECT_TRUE(j["checks"][0]["claimed"].is_null());
}

TEST(Report, RationalsAsStrings) {
  const auto j = io::to_json(catalog::verify("3.3.1a"));
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "base_curvature_value") {
      EXPECT_EQ(c["claimed"], "1/4");
      EXPECT_EQ(c["computed"], "4");
      EXPECT_EQ(c["status"], "refuted");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Report, TimingOnlyOnRequest) {
  const auto r = catalog::verify("3.1.1a");
  EXPECT_FALSE(io::to_json(r).contains("timing_ms"));
  EXPECT_TRUE(io::to_json(r, true).contains("timing_ms"));
}
