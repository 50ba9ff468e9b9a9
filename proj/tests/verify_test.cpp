#include "mtv/errors.hpp"
#include "mtv/verify.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>

namespace verify = mtv::verify;

namespace {

void expect_pass(const verify::VerifyReport& r) {
    EXPECT_TRUE(r.passed()) << r.to_json();
    EXPECT_FALSE(r.cases.empty()) << r.suite;
    EXPECT_FALSE(r.counterexample().has_value());
}

}  // namespace

TEST(Verify, ExactRelations) {
    for (unsigned m : {2u, 4u}) {
        expect_pass(verify::verify_lemma1(m, 8));
        expect_pass(verify::verify_theorem(m, 8));
        expect_pass(verify::verify_corollary(m, 8));
    }
}

TEST(Verify, NumericRelationsOddM) {
    for (const auto& r : {verify::verify_lemma1(3, 4), verify::verify_theorem(3, 4), verify::verify_corollary(3, 4)}) {
        expect_pass(r);
        for (const auto& c : r.cases) EXPECT_EQ(c.status, verify::Status::NumericPass);
    }
}

TEST(Verify, OtherSuites) {
    expect_pass(verify::verify_euler_identity(10));
    for (unsigned n = 1; n <= 6; ++n) expect_pass(verify::verify_par(2, n));
    expect_pass(verify::verify_par(3, 2));
    for (unsigned two_m : {4u, 6u, 8u, 10u, 12u}) expect_pass(verify::verify_props(two_m, 3));
    expect_pass(verify::verify_zhao(10));
    expect_pass(verify::verify_weight4(3));
}

TEST(Verify, RunSuiteCoversEverySuite) {
    const auto all = verify::run_suite("all");
    for (const auto& name : verify::suite_names()) {
        EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const auto& r) { return r.suite == name; })) << name;
    }
    for (const auto& r : all) EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_THROW(verify::run_suite("nope"), mtv::DomainError);
    const auto narrowed = verify::run_suite("lemma1", 4u, 3u);
    ASSERT_EQ(narrowed.size(), 1u);
    EXPECT_EQ(narrowed.front().grid, (verify::Params{{"m", 4}, {"nmax", 3}}));
}

TEST(Verify, JsonShape) {
    const auto r = verify::verify_zhao(2);
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j.at("suite"), "zhao");
    EXPECT_EQ(j.at("grid").at("nmax"), 2);
    ASSERT_EQ(j.at("cases").size(), r.cases.size());
    for (const auto& c : j.at("cases")) {
        EXPECT_TRUE(c.contains("params"));
        EXPECT_EQ(c.at("status"), "pass");
        EXPECT_TRUE(c.contains("detail"));
    }
    EXPECT_FALSE(j.contains("counterexample"));
}

TEST(Verify, FailingReportCarriesCounterexample) {
    verify::VerifyReport r{"synthetic", {{"n", 1}}, {}};
    r.cases.push_back({{{"n", 1}}, "ok", verify::Status::Pass, "", "1", "1"});
    r.cases.push_back({{{"n", 2}}, "broken", verify::Status::Fail, "lhs != rhs", "1/2", "1/3"});
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.counterexample().has_value());
    EXPECT_EQ(r.counterexample()->check, "broken");
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j.at("status"), "fail");
    EXPECT_EQ(j.at("counterexample").at("lhs"), "1/2");
}

TEST(Verify, Deterministic) {
    EXPECT_EQ(verify::verify_theorem(3, 2).to_json(), verify::verify_theorem(3, 2).to_json());
    EXPECT_EQ(verify::verify_props(6, 2).to_json(), verify::verify_props(6, 2).to_json());
}
