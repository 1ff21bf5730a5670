#include <doctest.h>

#include <algorithm>

#include "zigzag/shelling.hpp"

using namespace zigzag;

namespace {

std::vector<std::string> order_words(const ShellingOrder& order) {
    std::vector<std::string> out;
    for (const auto& p : order.perms) out.push_back(format_perm(p));
    return out;
}

ShellingOrder explicit_order(int n, std::initializer_list<const char*> words) {
    ShellingOrder order{n, {}};
    for (const char* w : words) order.perms.push_back(parse_altperm(w));
    return order;
}

}  // namespace

TEST_CASE("the canonical n=4 order, its attachments, and its polynomial") {
    ShellingOrder order = inversion_shelling_order(4);
    CHECK(order_words(order) == std::vector<std::string>{"3412", "2413", "2314", "1423", "1324"});

    ShellingReport report = verify_shelling(order);
    CHECK(report.valid);
    CHECK(report.attachment_counts == std::vector<int>{0, 1, 1, 1, 2});
    CHECK(hstar_from_shelling(order).pretty() == "1 + 3t + t^2");
}

TEST_CASE("tie-break variants stay valid and differ only inside blocks") {
    ShellingOrder forward = inversion_shelling_order(4, TieBreak::reverse_lex);
    CHECK(order_words(forward) == std::vector<std::string>{"3412", "2413", "1423", "2314", "1324"});
    for (int n = 1; n <= 6; ++n) {
        CHECK(verify_shelling(inversion_shelling_order(n, TieBreak::reverse_lex)).valid);
        for (std::uint64_t seed : {7ull, 99ull, 123456789ull}) {
            ShellingOrder shuffled = inversion_shelling_order(n, TieBreak::seeded, seed);
            CHECK(verify_shelling(shuffled).valid);
            // inversion counts still weakly decrease
            for (size_t r = 1; r < shuffled.perms.size(); ++r)
                CHECK(inversion_count(shuffled.perms[r - 1]) >= inversion_count(shuffled.perms[r]));
        }
    }
    // the same seed reproduces the same order
    CHECK(order_words(inversion_shelling_order(6, TieBreak::seeded, 42)) ==
          order_words(inversion_shelling_order(6, TieBreak::seeded, 42)));
}

TEST_CASE("a non-monotone order is rejected with the first bad prefix") {
    ShellingOrder bad = explicit_order(4, {"3412", "1324", "2314", "2413", "1423"});
    ShellingReport report = verify_shelling(bad);
    CHECK_FALSE(report.valid);
    REQUIRE(report.failure.has_value());
    CHECK(report.failure->r == 2);
    // 3412 and 1324 meet only in the two vertices every simplex shares
    CHECK(report.failure->face == std::vector<Mask>{parse_vertex("1111"), parse_vertex("0000")});
    CHECK_THROWS_WITH_AS(hstar_from_shelling(bad),
                         "hstar_from_shelling: not a shelling, witness r=2 face=1111;0000",
                         std::invalid_argument);
}

TEST_CASE("orders must list the whole triangulation exactly once") {
    CHECK_THROWS_AS(verify_shelling(explicit_order(4, {"3412", "2413"})), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(explicit_order(4, {"3412", "2413", "2314", "1423", "1423"})),
                    std::invalid_argument);
}

TEST_CASE("attachment counts reproduce the swap statistic") {
    for (int n = 1; n <= 7; ++n) {
        ShellingOrder order = inversion_shelling_order(n);
        ShellingReport report = verify_shelling(order);
        REQUIRE(report.valid);
        for (size_t r = 0; r < order.perms.size(); ++r)
            CHECK(report.attachment_counts[r] == static_cast<int>(swap_set(order.perms[r]).size()));
        CHECK(hstar_from_shelling(order) == hstar_from_swaps(n));
    }
}

TEST_CASE("swap histograms for small n") {
    auto coeffs = [](int n) {
        std::vector<long> out;
        for (const auto& c : hstar_from_swaps(n).coeffs) out.push_back(c.get_si());
        return out;
    };
    CHECK(coeffs(1) == std::vector<long>{1});
    CHECK(coeffs(2) == std::vector<long>{1});
    CHECK(coeffs(3) == std::vector<long>{1, 1});
    CHECK(coeffs(4) == std::vector<long>{1, 3, 1});
    CHECK(coeffs(5) == std::vector<long>{1, 7, 7, 1});
    CHECK(coeffs(6) == std::vector<long>{1, 14, 31, 14, 1});
    CHECK(coeffs(7) == std::vector<long>{1, 26, 109, 109, 26, 1});
    CHECK(coeffs(8) == std::vector<long>{1, 46, 334, 623, 334, 46, 1});
}

TEST_CASE("threaded verification matches single-threaded") {
    ShellingOrder order = inversion_shelling_order(6);
    ShellingReport one = verify_shelling(order, 1);
    ShellingReport four = verify_shelling(order, 4);
    CHECK(one.valid == four.valid);
    CHECK(one.attachment_counts == four.attachment_counts);

    ShellingOrder bad = explicit_order(4, {"3412", "1324", "2314", "2413", "1423"});
    CHECK(verify_shelling(bad, 4).failure->r == verify_shelling(bad, 1).failure->r);
}
