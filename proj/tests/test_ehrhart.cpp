#include <doctest.h>

#include "zigzag/altperm.hpp"
#include "zigzag/ehrhart.hpp"
#include "zigzag/poset.hpp"

using namespace zigzag;

TEST_CASE("lattice-point tables for small n") {
    auto table = [](int n, long max_m) {
        std::vector<long> out;
        for (const auto& v : ehrhart_table(n, max_m).values) out.push_back(v.get_si());
        return out;
    };
    CHECK(table(1, 4) == std::vector<long>{1, 2, 3, 4, 5});
    CHECK(table(2, 4) == std::vector<long>{1, 3, 6, 10, 15});
    CHECK(table(3, 4) == std::vector<long>{1, 5, 14, 30, 55});
    CHECK(table(4, 6) == std::vector<long>{1, 8, 31, 85, 190, 371, 658});
    CHECK(table(5, 5) == std::vector<long>{1, 13, 70, 246, 671, 1547});
}

TEST_CASE("sweep DP equals the box scan wherever the scan is feasible") {
    for (int n = 1; n <= 4; ++n)
        for (long m = 0; m <= 6; ++m)
            CHECK(count_lattice_points(n, m) == count_lattice_points_naive(n, m));
    for (long m = 0; m <= 4; ++m)
        CHECK(count_lattice_points(5, m) == count_lattice_points_naive(5, m));
    CHECK(count_lattice_points(6, 3) == count_lattice_points_naive(6, 3));
    CHECK_THROWS_AS(count_lattice_points_naive(10, 1000), std::invalid_argument);
    CHECK_THROWS_AS(count_lattice_points(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_lattice_points(3, -1), std::invalid_argument);
}

TEST_CASE("multichain route: small values and the shift identity") {
    CHECK(order_polynomial_value(4, 1) == 1);
    CHECK(order_polynomial_value(4, 2) == 8);   // one ideal per map into a 2-chain
    CHECK(order_polynomial_value(4, 3) == 31);
    CHECK(order_polynomial_value(3, 2) == BigInt(order_ideals(3).size()));
    for (int n = 1; n <= 8; ++n)
        for (long m = 0; m <= 6; ++m)
            CHECK(count_lattice_points(n, m) == order_polynomial_value(n, m + 1));
    CHECK_THROWS_AS(order_polynomial_value(4, 0), std::invalid_argument);
}

TEST_CASE("numerator polynomials from the counting route") {
    CHECK(hstar_from_ehrhart(1).pretty() == "1");
    CHECK(hstar_from_ehrhart(2).pretty() == "1");
    CHECK(hstar_from_ehrhart(3).pretty() == "1 + t");
    CHECK(hstar_from_ehrhart(4).pretty() == "1 + 3t + t^2");
    CHECK(hstar_from_ehrhart(5).pretty() == "1 + 7t + 7t^2 + t^3");
    CHECK(hstar_from_ehrhart(6).pretty() == "1 + 14t + 31t^2 + 14t^3 + t^4");
}

TEST_CASE("interpolated polynomials are exact") {
    auto rational = [](long num, long den) { return BigRat(num, den); };
    CHECK(ehrhart_polynomial(1) == std::vector<BigRat>{rational(1, 1), rational(1, 1)});
    CHECK(ehrhart_polynomial(2) == std::vector<BigRat>{rational(1, 1), rational(3, 2), rational(1, 2)});
    CHECK(ehrhart_polynomial(3) ==
          std::vector<BigRat>{rational(1, 1), rational(13, 6), rational(3, 2), rational(1, 3)});
    CHECK(ehrhart_polynomial(4) == std::vector<BigRat>{rational(1, 1), rational(11, 4), rational(67, 24),
                                                       rational(5, 4), rational(5, 24)});
    CHECK(ehrhart_polynomial(5) == std::vector<BigRat>{rational(1, 1), rational(101, 30), rational(9, 2),
                                                       rational(3, 1), rational(1, 1), rational(2, 15)});

    // leading coefficient is the normalized volume; the polynomial keeps
    // matching the DP beyond the interpolation window
    for (int n = 1; n <= 8; ++n) {
        auto poly = ehrhart_polynomial(n);
        REQUIRE(poly.size() == static_cast<size_t>(n) + 1);
        BigRat lead = poly.back();
        BigInt fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(lead == BigRat(euler_zigzag(n).back()) / BigRat(fact));
        for (long m = n + 1; m <= n + 2; ++m) {
            BigRat value = 0;
            BigRat power = 1;
            for (const auto& c : poly) {
                value += c * power;
                power *= m;
            }
            CHECK(value == BigRat(count_lattice_points(n, m)));
        }
    }
}
