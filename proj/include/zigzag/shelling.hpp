#pragma once

// Shelling orders for the canonical triangulation and the h*-polynomial
// routes that do not touch lattice-point counting: attachment counts of a
// verified shelling, and the swap-statistic histogram.

#include <cstdint>
#include <optional>
#include <vector>

#include "zigzag/altperm.hpp"
#include "zigzag/polynomial.hpp"
#include "zigzag/polytope.hpp"

namespace zigzag {

enum class TieBreak {
    lex,          // within an inversion block: descending one-line word
    reverse_lex,  // ascending one-line word
    seeded,       // deterministic shuffle of each block
};

struct ShellingOrder {
    int n = 0;
    std::vector<AltPerm> perms;
};

// All simplices sorted by weakly decreasing inversion count.  Any such
// order is a shelling; the tie-break only picks a representative.  The
// default reproduces the order 3412, 2413, 2314, 1423, 1324 at n = 4.
ShellingOrder inversion_shelling_order(int n, TieBreak tie_break = TieBreak::lex,
                                       std::uint64_t seed = 0);

struct ShellingFailure {
    int r = 0;                // 1-indexed position whose attachment is bad
    std::vector<Mask> face;   // an intersection face not inside any shared facet
};

struct ShellingReport {
    bool valid = false;
    std::vector<int> attachment_counts;  // one entry per simplex; first is 0
    std::optional<ShellingFailure> failure;
};

// Checks the shelling condition for every prefix: each earlier intersection
// Delta_k cap Delta_r must lie inside some facet Delta_i cap Delta_r.  Runs
// in O(s^2 n) with the simplices' level structure; `threads` splits the
// outer loop.  Throws std::invalid_argument if the order is not a
// permutation of the full triangulation.
ShellingReport verify_shelling(const ShellingOrder& order, int threads = 1);

// t^{a_1} + ... + t^{a_s} from the attachment counts; refuses orders that
// fail verification.
IntPolynomial hstar_from_shelling(const ShellingOrder& order, int threads = 1);

// Histogram of the swap statistic over all alternating permutations.
IntPolynomial hstar_from_swaps(int n);

}  // namespace zigzag
