#pragma once

// Lattice-point counting for dilates of the order polytope, the order
// polynomial of Z_n, and the h*-polynomial recovered from the counting
// function.  Everything here is independent of the permutation machinery,
// which is what makes the cross-route comparisons meaningful.

#include <vector>

#include "zigzag/exact.hpp"
#include "zigzag/polynomial.hpp"

namespace zigzag {

// Points of the m-th dilate: integer tuples 0 <= y_i <= m with
// y_1 <= y_2 >= y_3 <= ...  Sweep DP with prefix/suffix sums, O(n m).
BigInt count_lattice_points(int n, long m);

// Plain box scan over {0..m}^n against the facet inequalities; guarded to
// about 1e7 evaluations.  Exists only to check the DP.
BigInt count_lattice_points_naive(int n, long m);

// Number of order-preserving maps Z_n -> {1 < ... < m}.  Computed as
// multichains of m-1 order ideals via repeated zeta transforms over the
// ideal lattice -- a different structure from the coordinate sweep, so
// count_lattice_points(n, m) == order_polynomial_value(n, m+1) is a real
// consistency test.
BigInt order_polynomial_value(int n, long m);

// values[m] = count_lattice_points(n, m) for m = 0..max_m.
struct EhrhartTable {
    int n = 0;
    std::vector<BigInt> values;
};

EhrhartTable ehrhart_table(int n, long max_m);

// Alternating binomial transform of i(0..n):
// h*_j = sum_k (-1)^k C(n+1, k) i(j-k).  The same sums at j = n+1 and
// n+2 must vanish; a nonzero residue or a negative coefficient raises
// internal_inconsistency.
IntPolynomial hstar_from_ehrhart(int n);

// Exact rational coefficients, constant term first, via Newton forward
// differences on i(0..n).
std::vector<BigRat> ehrhart_polynomial(int n);

}  // namespace zigzag
