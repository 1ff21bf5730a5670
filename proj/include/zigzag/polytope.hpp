#pragma once

// The order polytope of Z_n inside [0,1]^n: facet inequalities, 0/1
// vertices, and the unimodular triangulation with one simplex per
// alternating permutation.

#include <span>
#include <string>
#include <vector>

#include "zigzag/altperm.hpp"
#include "zigzag/poset.hpp"

namespace zigzag {

// coeffs . x <= bound with integer data throughout.
struct Inequality {
    std::vector<int> coeffs;
    int bound = 0;

    bool operator==(const Inequality&) const = default;
};

long long evaluate(const Inequality& ineq, std::span<const long long> point);

// The irredundant facet list: lower bounds on odd coordinates, upper bounds
// on even ones, then the comparator facets x_i <= x_{i+1} (i odd) and
// x_i >= x_{i+1} (i even).  n = 1 degenerates to 0 <= x_1 <= 1.
std::vector<Inequality> facet_inequalities(int n);

// Vertices as bitmasks of 1-coordinates (bit i-1 = x_i), ascending order.
// These are exactly the complements of the order ideals.
std::vector<Mask> polytope_vertices(int n);

// verts[k] has coordinate sum n-k: start at all-ones and clear the
// coordinate holding value k at step k.
struct Simplex {
    AltPerm source;
    std::vector<Mask> verts;
};

Simplex simplex_of(const AltPerm& sigma);

// The vertices {verts[k] : k in swap_set(source)}.
std::vector<Mask> exclusion_set(const AltPerm& sigma);

// Whether the two simplices meet in a common facet, decided purely from
// their vertex sets (they agree on all levels but one).
bool share_facet(const AltPerm& sigma, const AltPerm& tau);

// Determinant of the edge matrix (verts[k] - verts[0], k = 1..n); +-1 for
// every simplex of the triangulation.
long long simplex_lattice_determinant(const Simplex& simplex);

struct GorensteinReport {
    bool ok = false;
    int index = 0;                         // dilation factor with a unique interior point
    std::vector<int> interior_point;       // that point, when ok
    std::vector<long long> facet_distances;  // 3*bound - coeffs.point per facet
    std::string failure;                   // empty when ok
};

// Checks that the third dilate has a unique interior lattice point sitting
// at lattice distance 1 from every facet.  Scans candidate interior points
// exhaustively, so it is an independent certificate, not a formula echo.
GorensteinReport gorenstein_check(int n);

// "0101" with coordinate 1 leftmost; simplices join their vertices with ";".
std::string format_vertex(Mask v, int n);
Mask parse_vertex(std::string_view text);
std::string format_simplex(const Simplex& simplex);

}  // namespace zigzag
