#pragma once

// Rank-selected chain counts over the ideal lattice of Z_n and the
// constructive bijection between chains with prescribed sizes and
// alternating permutations with prescribed swap sets.

#include <span>
#include <vector>

#include "zigzag/altperm.hpp"
#include "zigzag/polynomial.hpp"
#include "zigzag/poset.hpp"
#include "zigzag/polytope.hpp"

namespace zigzag {

// alpha(S) = chains of ideals with size set S (endpoints 0, n contribute
// nothing and may be included or not).
BigInt alpha(int n, std::span<const int> sizes);

// beta(S) = sum over T subseteq S of (-1)^{|S - T|} alpha(T), computed by
// literal inclusion-exclusion -- deliberately not by counting swap sets, so
// the equality with those counts stays an independently tested fact.
BigInt beta(int n, std::span<const int> sizes);

// Both statistics for every S subseteq {1..n-1} at once, indexed by the
// bitmask with bit i-1 for size i.  The alpha table comes from one shared
// chain DP over the size-selection tree, beta from a subset Mobius
// transform of it; much cheaper than 2^{n-1} separate calls.
struct FlagTables {
    int n = 0;
    std::vector<BigInt> alpha;
    std::vector<BigInt> beta;
};

FlagTables flag_tables(int n);

// sum over S subseteq {1..n-1} of beta(S) t^{|S|}.  Throws
// property_violation if any beta comes out negative.
IntPolynomial hstar_from_beta(int n);

// A family of triangulation vertices required to be 0/1 points whose
// zero-coordinate sets form a chain of ideals; all-ones and all-zeros are
// filled in automatically and the list is kept sorted by descending
// coordinate sum.
struct VertexConstraints {
    int n = 0;
    std::vector<Mask> vertices;
};

VertexConstraints make_constraints(int n, std::vector<Mask> vertices);
VertexConstraints chain_to_constraints(const IdealChain& chain);

// The inversion-maximizing alternating permutation whose simplex contains
// all the given vertices, built directly: between consecutive constraints
// the freed coordinates take the available values in reverse, then forced
// ascents at odd positions are repaired by exchanging the two values.
AltPerm unique_max_altperm(const VertexConstraints& constraints);

// Argmax by scanning every alternating permutation; throws
// std::invalid_argument when no simplex fits and property_violation when
// the maximum is not unique.  Guarded to n <= 10.
AltPerm brute_force_max_altperm(const VertexConstraints& constraints);

// Chain with size set S -> alternating permutation with swap set inside S.
AltPerm chain_to_altperm(const IdealChain& chain);

// Inverse direction: the ideals of sigma's saturated chain at the sizes in
// S.  Requires swap_set(sigma) subseteq S.
IdealChain altperm_to_chain(std::span<const int> sizes, const AltPerm& sigma);

}  // namespace zigzag
