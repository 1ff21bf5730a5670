#include "zigzag/rank_selection.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace zigzag {

BigInt alpha(int n, std::span<const int> sizes) { return count_chains_with_sizes(n, sizes); }

static void check_inner_sizes(int n, std::span<const int> sizes) {
    for (size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 1 || sizes[k] > n - 1)
            throw std::invalid_argument("size set entry out of [1,n-1]");
        if (k > 0 && sizes[k] <= sizes[k - 1])
            throw std::invalid_argument("size set must be strictly increasing");
    }
}

BigInt beta(int n, std::span<const int> sizes) {
    check_inner_sizes(n, sizes);
    const size_t k = sizes.size();
    BigInt total = 0;
    for (std::uint64_t sub = 0; sub < (1ull << k); ++sub) {
        std::vector<int> chosen;
        for (size_t i = 0; i < k; ++i)
            if (sub & (1ull << i)) chosen.push_back(sizes[i]);
        BigInt a = count_chains_with_sizes(n, chosen);
        bool even = ((k - chosen.size()) % 2 == 0);
        total += even ? a : -a;
    }
    return total;
}

FlagTables flag_tables(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("flag_tables: n must be in [1,20]");
    const int k = n - 1;
    auto by_size = ideals_by_size(n);
    FlagTables tables{n, std::vector<BigInt>(1ull << k), {}};
    // Walk the include/exclude tree over the sizes 1..n-1, carrying the
    // chain-count state of the latest included level; the work for a common
    // prefix of sizes is shared by all its extensions.
    auto rec = [&](auto&& self, int s, std::uint64_t chosen, const std::vector<Mask>& level,
                   const std::vector<BigInt>& ways) -> void {
        if (s > k) {
            BigInt total = 0;
            for (const auto& w : ways) total += w;
            tables.alpha[chosen] = total;
            return;
        }
        self(self, s + 1, chosen, level, ways);
        const auto& next_level = by_size[static_cast<size_t>(s)];
        std::vector<BigInt> next(next_level.size(), BigInt(0));
        for (size_t j = 0; j < next_level.size(); ++j)
            for (size_t i = 0; i < level.size(); ++i)
                if (!(level[i] & ~next_level[j])) next[j] += ways[i];
        self(self, s + 1, chosen | (1ull << (s - 1)), next_level, next);
    };
    std::vector<Mask> root_level{0};
    std::vector<BigInt> root_ways{BigInt(1)};
    rec(rec, 1, 0, root_level, root_ways);

    tables.beta = tables.alpha;
    for (int bit = 0; bit < k; ++bit)
        for (std::uint64_t b = 0; b < (1ull << k); ++b)
            if (b & (1ull << bit)) tables.beta[b] -= tables.beta[b ^ (1ull << bit)];
    return tables;
}

IntPolynomial hstar_from_beta(int n) {
    FlagTables tables = flag_tables(n);
    std::vector<BigInt> coeffs(static_cast<size_t>(n), BigInt(0));
    for (std::uint64_t b = 0; b < tables.beta.size(); ++b) {
        if (tables.beta[b] < 0)
            throw property_violation("hstar_from_beta: negative beta at mask " + std::to_string(b));
        coeffs[static_cast<size_t>(std::popcount(b))] += tables.beta[b];
    }
    return IntPolynomial(std::move(coeffs));
}

VertexConstraints make_constraints(int n, std::vector<Mask> vertices) {
    if (n < 1 || n > 62) throw std::invalid_argument("make_constraints: n must be in [1,62]");
    const Mask full = full_mask(n);
    vertices.push_back(full);
    vertices.push_back(0);
    // sort by descending coordinate sum = ascending zero-set
    std::sort(vertices.begin(), vertices.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] & ~full)
            throw std::invalid_argument("make_constraints: vertex has coordinates beyond n");
        Mask zero_set = full & ~vertices[k];
        if (!is_order_ideal(n, zero_set))
            throw std::invalid_argument("make_constraints: " + format_vertex(vertices[k], n) +
                                        " is not a vertex of the polytope");
        if (k > 0) {
            Mask prev_zero = full & ~vertices[k - 1];
            if (prev_zero == zero_set || (prev_zero & ~zero_set))
                throw std::invalid_argument("make_constraints: zero sets do not form a chain");
        }
    }
    return VertexConstraints{n, std::move(vertices)};
}

VertexConstraints chain_to_constraints(const IdealChain& chain) {
    validate_chain(chain);
    std::vector<Mask> vertices;
    for (Mask ideal : chain.ideals) vertices.push_back(full_mask(chain.n) & ~ideal);
    return make_constraints(chain.n, std::move(vertices));
}

AltPerm unique_max_altperm(const VertexConstraints& constraints) {
    VertexConstraints cs = make_constraints(constraints.n, constraints.vertices);
    const int n = cs.n;
    const Mask full = full_mask(n);
    std::vector<int> word(static_cast<size_t>(n), 0), group(static_cast<size_t>(n), -1);
    int placed = 0;
    for (size_t k = 1; k < cs.vertices.size(); ++k) {
        // coordinates that drop to zero at this step of the chain
        Mask freed = (full & ~cs.vertices[k]) & cs.vertices[k - 1];
        int top = placed + std::popcount(freed);
        int v = top;
        for (int p = 1; p <= n; ++p)
            if (freed & (1ull << (p - 1))) {
                word[static_cast<size_t>(p - 1)] = v--;
                group[static_cast<size_t>(p - 1)] = static_cast<int>(k);
            }
        placed = top;
    }
    // Descending placement breaks the rise required at each odd position
    // whenever both spots fall in the same step; exchanging the two values
    // repairs it without touching the prefix sets.
    for (int p = 1; p + 1 <= n; p += 2) {
        if (word[static_cast<size_t>(p - 1)] < word[static_cast<size_t>(p)]) continue;
        if (group[static_cast<size_t>(p - 1)] != group[static_cast<size_t>(p)])
            throw internal_inconsistency("unique_max_altperm: forced rise across steps");
        std::swap(word[static_cast<size_t>(p - 1)], word[static_cast<size_t>(p)]);
    }
    if (!is_alternating(word))
        throw internal_inconsistency("unique_max_altperm: repaired word is not alternating");
    return AltPerm{std::move(word)};
}

AltPerm brute_force_max_altperm(const VertexConstraints& constraints) {
    VertexConstraints cs = make_constraints(constraints.n, constraints.vertices);
    const int n = cs.n;
    if (n > 10) throw std::invalid_argument("brute_force_max_altperm: guarded to n <= 10");
    std::vector<std::pair<int, Mask>> want;  // (level, required vertex)
    for (Mask v : cs.vertices) want.emplace_back(n - std::popcount(v), v);
    std::vector<int> best;
    int best_inv = -1, best_count = 0;
    std::vector<Mask> verts(static_cast<size_t>(n) + 1);
    std::vector<int> inv(static_cast<size_t>(n));
    for_each_alternating(n, [&](std::span<const int> w) {
        for (int p = 1; p <= n; ++p) inv[static_cast<size_t>(w[static_cast<size_t>(p - 1)] - 1)] = p;
        verts[0] = full_mask(n);
        for (int k = 1; k <= n; ++k)
            verts[static_cast<size_t>(k)] = verts[static_cast<size_t>(k - 1)] & ~(1ull << (inv[static_cast<size_t>(k - 1)] - 1));
        for (auto [lvl, v] : want)
            if (verts[static_cast<size_t>(lvl)] != v) return;
        int ic = inversion_count(w);
        if (ic > best_inv) {
            best_inv = ic;
            best.assign(w.begin(), w.end());
            best_count = 1;
        } else if (ic == best_inv) {
            ++best_count;
        }
    });
    if (best_inv < 0) throw std::invalid_argument("brute_force_max_altperm: infeasible constraints");
    if (best_count != 1) throw property_violation("brute_force_max_altperm: maximum is not unique");
    return AltPerm{std::move(best)};
}

AltPerm chain_to_altperm(const IdealChain& chain) {
    AltPerm sigma = unique_max_altperm(chain_to_constraints(chain));
    auto sizes = chain.sizes();
    for (int i : swap_set(sigma))
        if (!std::binary_search(sizes.begin(), sizes.end(), i))
            throw property_violation("chain_to_altperm: swap set escapes the size set");
    return sigma;
}

IdealChain altperm_to_chain(std::span<const int> sizes, const AltPerm& sigma) {
    const int n = sigma.size();
    for (size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 0 || sizes[k] > n)
            throw std::invalid_argument("altperm_to_chain: size out of [0,n]");
        if (k > 0 && sizes[k] <= sizes[k - 1])
            throw std::invalid_argument("altperm_to_chain: sizes must be strictly increasing");
    }
    auto swaps = swap_set(sigma);
    for (int i : swaps)
        if (std::find(sizes.begin(), sizes.end(), i) == sizes.end())
            throw std::invalid_argument("altperm_to_chain: swap set of " + format_perm(sigma) +
                                        " is not inside the size set");
    IdealChain saturated = perm_to_saturated_chain(sigma);
    IdealChain out{n, {}};
    for (int s : sizes) out.ideals.push_back(saturated.ideals[static_cast<size_t>(s)]);
    return out;
}

}  // namespace zigzag
