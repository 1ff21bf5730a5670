#pragma once

// Alternating (up-down) permutations: sigma(1) < sigma(2) > sigma(3) < ...
// in one-line notation, together with the swap statistic on them.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/exact.hpp"

namespace zigzag {

struct AltPerm {
    std::vector<int> entries;  // entries[p-1] = sigma(p), values 1..n

    int size() const { return static_cast<int>(entries.size()); }
    int operator()(int pos) const { return entries[pos - 1]; }  // 1-indexed

    // inverse()[v-1] = the position holding value v (1-indexed)
    std::vector<int> inverse() const;

    // Validates that `entries` is an alternating permutation of 1..n.
    static AltPerm checked(std::vector<int> entries);

    bool operator==(const AltPerm&) const = default;
    auto operator<=>(const AltPerm&) const = default;
};

bool is_permutation(std::span<const int> entries);

// True iff the up-down inequalities hold.  Throws std::invalid_argument if
// `entries` is not a permutation of 1..n at all.
bool is_alternating(std::span<const int> entries);

// Visits every alternating permutation of 1..n in ascending lexicographic
// order as a span over a reused buffer.  Backtracking with the alternation
// constraint pruned at every position, so the work is proportional to the
// number of viable prefixes, not to n!.
template <typename Visit>
void for_each_alternating(int n, Visit&& visit) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("for_each_alternating: n must be in [1,64]");
    std::vector<int> buf(static_cast<size_t>(n));
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    auto rec = [&](auto&& self, int pos, std::uint64_t used) -> void {
        if (pos == n) {
            visit(std::span<const int>(buf));
            return;
        }
        std::uint64_t avail = ~used & all;
        if (pos > 0) {
            int prev = buf[pos - 1];
            if (pos % 2 == 1)  // next 1-indexed position is even: needs a rise
                avail &= ~((1ull << prev) - 1);
            else  // odd position: needs a fall
                avail &= (1ull << (prev - 1)) - 1;
        }
        while (avail) {
            int v = std::countr_zero(avail) + 1;
            std::uint64_t bit = avail & (~avail + 1);
            buf[pos] = v;
            self(self, pos + 1, used | bit);
            avail &= avail - 1;
        }
    };
    rec(rec, 0, 0);
}

std::vector<AltPerm> enumerate_alternating(int n);

// Counts by running the same backtracking search; deliberately does not use
// the euler_zigzag recurrence, so the two can cross-check each other.
std::uint64_t count_alternating(int n);

// E_0..E_n_max via 2*E_{m+1} = sum_k C(m,k) E_k E_{m-k}, E_0 = E_1 = 1.
std::vector<BigInt> euler_zigzag(int n_max);

// swap_set(sigma) = { i : position of i is left of position of i+1 by at
// least 2 }.  Returned strictly increasing.
std::vector<int> swap_set(const AltPerm& sigma);

// Exchanges the values i and i+1; requires i in swap_set(sigma).  The result
// is again alternating and has exactly one more inversion.
AltPerm swap_to(const AltPerm& sigma, int i);

int inversion_count(std::span<const int> entries);
int inversion_count(const AltPerm& sigma);

// Positions p with word[p-1] > word[p], 1-indexed, strictly increasing.
std::vector<int> descent_set(std::span<const int> word);

// The unique alternating permutation with the most inversions:
// n-1, n, n-3, n-2, ..., trailing 1 when n is odd.
AltPerm max_inversion_altperm(int n);

// The unique alternating permutation with empty swap set (same word as
// max_inversion_altperm; each is validated against its own defining
// property in the tests).
AltPerm zero_swap_altperm(int n);

// Text form: digit string for n <= 9 ("3412"), comma-separated otherwise
// ("10,11,1,...").  The parser accepts either form when n <= 9.
std::string format_perm(std::span<const int> entries);
std::string format_perm(const AltPerm& sigma);
std::vector<int> parse_perm_word(std::string_view text);
AltPerm parse_altperm(std::string_view text);

}  // namespace zigzag
