#pragma once

// The zig-zag poset Z_n on elements z_1..z_n with covers
// z_1 < z_2 > z_3 < z_4 > ... (odd elements minimal, even elements maximal),
// its lattice of order ideals, chains of ideals, and natural labelings.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/altperm.hpp"
#include "zigzag/exact.hpp"

namespace zigzag {

// Subsets of the ground set as bitmasks: bit i-1 stands for z_i.
using Mask = std::uint64_t;

Mask full_mask(int n);

// Down-closed test straight from the cover relations; throws if `subset`
// uses bits outside 1..n.
bool is_order_ideal(int n, Mask subset);

// All order ideals in ascending mask order; |result| = Fibonacci(n+2).
// Built incrementally element by element, so it is an independent route
// from the is_order_ideal predicate.
std::vector<Mask> order_ideals(int n);

// result[s] = ideals of size s, each list in ascending mask order.
std::vector<std::vector<Mask>> ideals_by_size(int n);

// Strictly nested ideals, smallest first.
struct IdealChain {
    int n = 0;
    std::vector<Mask> ideals;

    std::vector<int> sizes() const;
    bool operator==(const IdealChain&) const = default;
};

// Throws std::invalid_argument unless every member is an ideal of Z_n and
// the nesting is strict.
void validate_chain(const IdealChain& chain);

// Chains hitting exactly the given sizes (sorted, distinct, within [0,n]).
BigInt count_chains_with_sizes(int n, std::span<const int> sizes);
std::vector<IdealChain> chains_with_sizes(int n, std::span<const int> sizes);

// Value-prefix ideals of an alternating permutation, including the empty
// and full ideal: I_k = positions of values 1..k.
IdealChain perm_to_saturated_chain(const AltPerm& sigma);

// label[i-1] = the label of z_i; order-preserving bijection onto 1..n.
struct NaturalLabeling {
    int n = 0;
    std::vector<int> label;
};

// Odd elements get 1..ceil(n/2) left to right, even elements the rest.
NaturalLabeling default_natural_labeling(int n);

bool is_natural_labeling(const NaturalLabeling& omega);

// For each linear extension (= alternating permutation, in ascending lex
// order) the word omega(z_{sigma^{-1}(1)}), ..., omega(z_{sigma^{-1}(n)}).
std::vector<std::vector<int>> jordan_holder_words(int n, const NaturalLabeling& omega);

// "{1,3,7}" / "{}"; chain entries joined with " < ".
std::string format_ideal(Mask ideal);
Mask parse_ideal(std::string_view text, int n);
std::string format_chain(const IdealChain& chain);
IdealChain parse_chain(std::string_view text, int n);

}  // namespace zigzag
