#include <doctest.h>

#include <json.hpp>

#include "zigzag/checks.hpp"

using namespace zigzag;

namespace {

const CheckResult& find_check(const VerifyReport& report, const std::string& name) {
    for (const auto& c : report.checks)
        if (c.name == name) return c;
    REQUIRE(false);
    static CheckResult dummy;
    return dummy;
}

}  // namespace

TEST_CASE("the battery passes everywhere it applies for small n") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        VerifyReport report = verify_structure(n, Depth::full);
        CHECK(report.all_passed());
        for (const auto& c : report.checks) {
            INFO("n=", n, " check=", c.name, " witness=", c.witness);
            CHECK(c.status != CheckStatus::fail);
        }
    }
}

TEST_CASE("guards skip the expensive checks instead of failing them") {
    VerifyReport fast7 = verify_structure(7, Depth::fast);
    CHECK(fast7.all_passed());
    CHECK(find_check(fast7, "hstar_routes_agree").status == CheckStatus::pass);
    CHECK(find_check(fast7, "hstar_shelling_route").status == CheckStatus::skipped);
    CHECK(find_check(fast7, "inversion_orders_shell").status == CheckStatus::skipped);

    VerifyReport full7 = verify_structure(7, Depth::full);
    CHECK(find_check(full7, "hstar_shelling_route").status == CheckStatus::pass);
    CHECK(find_check(full7, "inversion_orders_shell").status == CheckStatus::pass);
}

TEST_CASE("the segment skips the dilate check but passes the rest") {
    VerifyReport report = verify_structure(1, Depth::full);
    CHECK(report.all_passed());
    CHECK(find_check(report, "gorenstein_third_dilate").status == CheckStatus::skipped);
    CHECK(find_check(report, "swap_number_structure").status == CheckStatus::pass);
}

TEST_CASE("swap numbers expose the histogram") {
    SwapNumberTable table = swap_numbers(6);
    REQUIRE(table.counts.size() == 6);
    CHECK(table.counts[0] == 1);
    CHECK(table.counts[1] == 14);
    CHECK(table.counts[2] == 31);
    CHECK(table.counts[5] == 0);
}

TEST_CASE("reports serialize deterministically with the expected shape") {
    VerifyReport report = verify_structure(4, Depth::fast);
    std::string a = report_to_json(report);
    std::string b = report_to_json(verify_structure(4, Depth::fast));
    CHECK(a == b);

    auto doc = nlohmann::json::parse(a);
    CHECK(doc["n"] == 4);
    CHECK(doc["depth"] == "fast");
    CHECK(doc["versions"]["library"] == kLibraryVersion);
    CHECK(doc["versions"]["schema"] == kReportSchemaVersion);
    REQUIRE(doc["checks"].is_array());
    CHECK(doc["checks"].size() == report.checks.size());
    for (const auto& entry : doc["checks"]) {
        CHECK(entry.contains("name"));
        CHECK(entry.contains("status"));
        // witness appears only for failures
        if (entry["status"] == "pass" || entry["status"] == "skipped")
            CHECK_FALSE(entry.contains("witness"));
    }
}
