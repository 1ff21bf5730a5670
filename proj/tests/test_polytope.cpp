#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "zigzag/polytope.hpp"

using namespace zigzag;

namespace {

std::vector<Mask> verts_of(const char* perm) { return simplex_of(parse_altperm(perm)).verts; }

std::vector<Mask> masks(std::initializer_list<const char*> bits) {
    std::vector<Mask> out;
    for (const char* b : bits) out.push_back(parse_vertex(b));
    return out;
}

}  // namespace

TEST_CASE("facet inequalities for n=4 and n=1") {
    auto facets = facet_inequalities(4);
    REQUIRE(facets.size() == 7);
    CHECK(facets[0] == Inequality{{-1, 0, 0, 0}, 0});
    CHECK(facets[1] == Inequality{{0, 0, -1, 0}, 0});
    CHECK(facets[2] == Inequality{{0, 1, 0, 0}, 1});
    CHECK(facets[3] == Inequality{{0, 0, 0, 1}, 1});
    CHECK(facets[4] == Inequality{{1, -1, 0, 0}, 0});
    CHECK(facets[5] == Inequality{{0, 0, 1, -1}, 0});
    CHECK(facets[6] == Inequality{{0, -1, 1, 0}, 0});

    auto line = facet_inequalities(1);
    REQUIRE(line.size() == 2);
    CHECK(line[0] == Inequality{{-1}, 0});
    CHECK(line[1] == Inequality{{1}, 1});

    // facet count: n bounds plus n-1 comparators
    for (int n = 2; n <= 10; ++n)
        CHECK(facet_inequalities(n).size() == static_cast<size_t>(2 * n - 1));
}

TEST_CASE("vertices are exactly the 0/1 points satisfying the facets") {
    for (int n = 1; n <= 10; ++n) {
        auto vertices = polytope_vertices(n);
        CHECK(std::is_sorted(vertices.begin(), vertices.end()));
        auto facets = facet_inequalities(n);
        std::vector<Mask> satisfying;
        for (Mask m = 0; m <= full_mask(n); ++m) {
            std::vector<long long> point(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) point[static_cast<size_t>(i)] = (m >> i) & 1;
            bool ok = std::all_of(facets.begin(), facets.end(),
                                  [&](const Inequality& f) { return evaluate(f, point) <= f.bound; });
            if (ok) satisfying.push_back(m);
        }
        CHECK(vertices == satisfying);
        CHECK(vertices.size() == order_ideals(n).size());
    }
}

TEST_CASE("simplices of the n=4 triangulation") {
    CHECK(verts_of("1423") == masks({"1111", "0111", "0101", "0100", "0000"}));
    CHECK(verts_of("2314") == masks({"1111", "1101", "0101", "0001", "0000"}));
    CHECK(verts_of("2413") == masks({"1111", "1101", "0101", "0100", "0000"}));
    CHECK(verts_of("3412") == masks({"1111", "1101", "1100", "0100", "0000"}));
    CHECK(verts_of("1324") == masks({"1111", "0111", "0101", "0001", "0000"}));

    for (int n = 1; n <= 7; ++n)
        for (const auto& sigma : enumerate_alternating(n)) {
            Simplex s = simplex_of(sigma);
            REQUIRE(s.verts.size() == static_cast<size_t>(n) + 1);
            auto vertices = polytope_vertices(n);
            for (int k = 0; k <= n; ++k) {
                CHECK(std::popcount(s.verts[static_cast<size_t>(k)]) == n - k);
                CHECK(std::binary_search(vertices.begin(), vertices.end(), s.verts[static_cast<size_t>(k)]));
            }
        }
}

TEST_CASE("facet sharing at n=4 matches the swap moves") {
    auto adjacent = [](const char* a, const char* b) {
        return share_facet(parse_altperm(a), parse_altperm(b));
    };
    CHECK(adjacent("1324", "2314"));
    CHECK(adjacent("1324", "1423"));
    CHECK(adjacent("1423", "2413"));
    CHECK(adjacent("2314", "2413"));
    CHECK(adjacent("2413", "3412"));
    CHECK_FALSE(adjacent("1324", "2413"));
    CHECK_FALSE(adjacent("1324", "3412"));
    CHECK_FALSE(adjacent("1423", "2314"));
    CHECK_FALSE(adjacent("1423", "3412"));
    CHECK_FALSE(adjacent("2314", "3412"));
    CHECK_THROWS_AS(adjacent("1324", "1324"), std::invalid_argument);
    CHECK_THROWS_AS(share_facet(parse_altperm("132"), parse_altperm("1324")), std::invalid_argument);
}

TEST_CASE("exclusion sets pick the swap levels") {
    CHECK(exclusion_set(parse_altperm("1324")) == masks({"0111", "0001"}));
    CHECK(exclusion_set(parse_altperm("3412")).empty());
    CHECK(exclusion_set(parse_altperm("2413")) == masks({"0101"}));
}

TEST_CASE("every simplex is unimodular") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& sigma : enumerate_alternating(n)) {
            long long det = simplex_lattice_determinant(simplex_of(sigma));
            CHECK(std::abs(det) == 1);
        }
}

TEST_CASE("the simplices tile the polytope") {
    // deterministic rational samples x = num/97; membership decided in
    // integers so there is no rounding anywhere
    const long long den = 97;
    std::mt19937 rng(20240817);
    for (int n = 2; n <= 5; ++n) {
        auto facets = facet_inequalities(n);
        auto perms = enumerate_alternating(n);
        std::vector<std::vector<int>> inverses;
        for (const auto& sigma : perms) inverses.push_back(sigma.inverse());
        std::uniform_int_distribution<long long> pick(0, den);
        int covered_samples = 0;
        for (int trial = 0; trial < 4000; ++trial) {
            std::vector<long long> num(static_cast<size_t>(n));
            for (auto& v : num) v = pick(rng);
            bool inside = std::all_of(facets.begin(), facets.end(), [&](const Inequality& f) {
                return evaluate(f, num) <= f.bound * den;
            });
            if (!inside) continue;
            ++covered_samples;
            int weak = 0, strict = 0;
            for (const auto& inv : inverses) {
                // x lies in the simplex of sigma iff the coordinates are
                // sorted along sigma's value order
                bool weak_ok = true, strict_ok = num[static_cast<size_t>(inv[0] - 1)] > 0;
                for (int k = 1; k < n && weak_ok; ++k) {
                    long long lo = num[static_cast<size_t>(inv[static_cast<size_t>(k - 1)] - 1)];
                    long long hi = num[static_cast<size_t>(inv[static_cast<size_t>(k)] - 1)];
                    if (lo > hi) weak_ok = false;
                    if (lo >= hi) strict_ok = false;
                }
                if (weak_ok) {
                    ++weak;
                    if (strict_ok && num[static_cast<size_t>(inv[static_cast<size_t>(n - 1)] - 1)] < den)
                        ++strict;
                }
            }
            CHECK(weak >= 1);       // the simplices cover the polytope
            CHECK(strict <= 1);     // and their interiors do not overlap
            bool generic = true;
            std::vector<long long> sorted = num;
            std::sort(sorted.begin(), sorted.end());
            for (int k = 1; k < n; ++k)
                if (sorted[static_cast<size_t>(k - 1)] == sorted[static_cast<size_t>(k)]) generic = false;
            if (generic && sorted.front() > 0 && sorted.back() < den) CHECK(strict == 1);
        }
        CHECK(covered_samples > 100);  // the sampler actually exercised the polytope
    }
}

TEST_CASE("third dilate has a unique well-centered interior point") {
    for (int n = 2; n <= 10; ++n) {
        GorensteinReport report = gorenstein_check(n);
        CHECK(report.ok);
        CHECK(report.index == 3);
        REQUIRE(report.interior_point.size() == static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i)
            CHECK(report.interior_point[static_cast<size_t>(i - 1)] == (i % 2 ? 1 : 2));
        for (long long d : report.facet_distances) CHECK(d == 1);
    }
    // the segment is the lone exception: its third dilate has two interior points
    GorensteinReport line = gorenstein_check(1);
    CHECK_FALSE(line.ok);
    CHECK(line.failure == "interior lattice point of the third dilate is not unique");
}

TEST_CASE("vertex text form") {
    CHECK(format_vertex(parse_vertex("0101"), 4) == "0101");
    CHECK(parse_vertex("0101") == 0b1010u);  // coordinate 1 is the leftmost character
    CHECK(format_simplex(simplex_of(parse_altperm("1423"))) == "1111;0111;0101;0100;0000");
    CHECK_THROWS_AS(parse_vertex("01x1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex(""), std::invalid_argument);
}
