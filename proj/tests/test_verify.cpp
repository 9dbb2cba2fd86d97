#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

using namespace partpack;

namespace {

std::string joined(const ClaimReport& r) {
    std::string out;
    for (const auto& line : r.computed) out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("claim status names") {
    CHECK(std::string(claim_status_name(ClaimStatus::confirmed)) == "confirmed");
    CHECK(std::string(claim_status_name(ClaimStatus::deviation)) == "deviation");
    CHECK(std::string(claim_status_name(ClaimStatus::trend_consistent)) ==
          "trend-consistent");
    CHECK(std::string(claim_status_name(ClaimStatus::informational)) == "informational");
    CHECK(std::string(claim_status_name(ClaimStatus::skipped_cap)) == "skipped: cap");
}

TEST_CASE("report format parsing") {
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK(parse_report_format("text") == ReportFormat::text);
    CHECK_THROWS_AS(parse_report_format("yaml"), std::invalid_argument);
}

TEST_CASE("all claims run in id order under tight caps") {
    const VerifyOptions o{3, 2, 1};
    const auto reports = run_claims(o);
    REQUIRE(reports.size() == 16);
    const char* ids[] = {"C1", "C2a", "C2b", "C2c", "C3",  "C4",  "C5",  "C6",
                         "C7", "C8",  "C9",  "C10", "C11", "C12", "C13", "C14"};
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(reports[i].id == ids[i]);
        CHECK(!reports[i].statement.empty());
        CHECK(!reports[i].parameters.empty());
        CHECK(!reports[i].expected.empty());
        CHECK(!reports[i].computed.empty());
        CHECK(reports[i].status != ClaimStatus::deviation);
    }
    CHECK(report_exit_code(reports) == 0);
    std::size_t skipped = 0;
    for (const auto& r : reports)
        if (r.status == ClaimStatus::skipped_cap) ++skipped;
    CHECK(skipped >= 3);
    CHECK(reports[0].status == ClaimStatus::confirmed);  // C1 fits inside n_cap=3
    CHECK(reports[1].status == ClaimStatus::skipped_cap); // C2a needs n=4
    CHECK(reports[14].status == ClaimStatus::informational);
    CHECK(reports[15].status == ClaimStatus::informational);
}

TEST_CASE("a wrong transposition predictor is caught as a deviation") {
    const VerifyOptions o{6, 4, 1};
    const ClaimReport real = check_swap_identity(o);
    CHECK(real.status == ClaimStatus::confirmed);
    CHECK(joined(real).find("mismatches 0") != std::string::npos);

    const ClaimReport broken = check_swap_identity(
        o, [](const CanonicalWord&, std::int32_t) -> std::int64_t { return 999; });
    CHECK(broken.status == ClaimStatus::deviation);
    CHECK(joined(broken).find("counterexample") != std::string::npos);
    CHECK(report_exit_code({broken}) == 1);
    CHECK(report_exit_code({real}) == 0);
}

TEST_CASE("alternating-count claim tabulates the even overshoot") {
    const ClaimReport r = check_alternating_formula(VerifyOptions{6, 4, 1});
    CHECK(r.status == ClaimStatus::informational);
    const std::string text = joined(r);
    CHECK(text.find("odd n: formula equals the exact count at all 3 values") !=
          std::string::npos);
    CHECK(text.find("n=4: formula 5/2, exact 2") != std::string::npos);
    CHECK(text.find("n=6: formula 35/4, exact 8") != std::string::npos);
}

TEST_CASE("alpha discrepancy is reported verbatim, never as a failure") {
    const ClaimReport r = check_alpha_discrepancy(VerifyOptions{8, 4, 1});
    CHECK(r.status == ClaimStatus::informational);
    const std::string text = joined(r);
    CHECK(text.find("alpha agrees with (3-sqrt(3))/4 within 1e-12") != std::string::npos);
    CHECK(text.find("0.4330127019") != std::string::npos);
    CHECK(text.find("0.4641016151") != std::string::npos);
    CHECK(text.find("exhaustive restricted delta(112,8,8)") != std::string::npos);
    CHECK(report_exit_code({r}) == 0);
}

TEST_CASE("k-block displays are compared point by point") {
    const ClaimReport r = check_kblock_expansion(VerifyOptions{8, 4, 1});
    CHECK(r.status == ClaimStatus::informational);
    const std::string text = joined(r);
    CHECK(text.find("k=3 display n^3/27 - n/12 equals C(3,2)*g(2n/3) at n=3,6,9,12") !=
          std::string::npos);
    CHECK(text.find("at 0 of 20 sampled points") != std::string::npos);
    CHECK(text.find("first difference: k=2, n=2: direct 1/4, display 0") !=
          std::string::npos);
    CHECK(text.find("low by a factor of 4") != std::string::npos);
    CHECK(text.find("k >= 3: yes") != std::string::npos);
}

TEST_CASE("diagonal trend claim scores plateaus as lag-2 falls") {
    const ClaimReport r = check_two_block_density_trend(VerifyOptions{14, 4, 1});
    CHECK(r.status == ClaimStatus::trend_consistent);
    const std::string text = joined(r);
    CHECK(text.find("equal consecutive pairs start at n = 4, 6, 8, 10, 12; "
                    "the fall is strict at lag 2") != std::string::npos);
    CHECK(text.find("last term delta(14) = 4/13") != std::string::npos);
}

TEST_CASE("report rendering keeps a fixed field order") {
    const auto reports = run_claims(VerifyOptions{3, 2, 1});

    const std::string with_runtime = report_render(reports, ReportFormat::json, true);
    auto doc = nlohmann::ordered_json::parse(with_runtime);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 16);
    std::vector<std::string> keys;
    for (const auto& item : doc[0].items()) keys.push_back(item.key());
    const std::vector<std::string> expected_keys = {
        "id", "statement", "parameters", "expected", "computed", "status", "runtime_ms"};
    CHECK(keys == expected_keys);

    const std::string without = report_render(reports, ReportFormat::json, false);
    auto doc2 = nlohmann::ordered_json::parse(without);
    for (const auto& obj : doc2) CHECK(!obj.contains("runtime_ms"));

    const std::string text = report_render(reports, ReportFormat::text, false);
    CHECK(text.find("16 claims, 0 deviation(s)") != std::string::npos);
    CHECK(text.find("C1  confirmed") != std::string::npos);
    CHECK(text.find(" ms]") == std::string::npos);
    const std::string text_rt = report_render(reports, ReportFormat::text, true);
    CHECK(text_rt.find(" ms]") != std::string::npos);
}

TEST_CASE("thread count leaves the no-runtime render unchanged") {
    const auto one = run_claims(VerifyOptions{4, 3, 1});
    const auto two = run_claims(VerifyOptions{4, 3, 2});
    CHECK(report_render(one, ReportFormat::json, false) ==
          report_render(two, ReportFormat::json, false));
    CHECK(report_render(one, ReportFormat::text, false) ==
          report_render(two, ReportFormat::text, false));
}
