#include "zigzag/shelling.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <thread>

namespace zigzag {

ShellingOrder inversion_shelling_order(int n, TieBreak tie_break, std::uint64_t seed) {
    ShellingOrder order{n, enumerate_alternating(n)};
    std::stable_sort(order.perms.begin(), order.perms.end(), [](const AltPerm& a, const AltPerm& b) {
        return inversion_count(a) > inversion_count(b);
    });
    // refine each constant-inversion block
    auto block_begin = order.perms.begin();
    std::mt19937_64 rng(seed);
    while (block_begin != order.perms.end()) {
        auto block_end = block_begin;
        int inv = inversion_count(*block_begin);
        while (block_end != order.perms.end() && inversion_count(*block_end) == inv) ++block_end;
        switch (tie_break) {
            case TieBreak::lex:
                std::sort(block_begin, block_end, [](const AltPerm& a, const AltPerm& b) { return b < a; });
                break;
            case TieBreak::reverse_lex:
                std::sort(block_begin, block_end);
                break;
            case TieBreak::seeded:
                std::sort(block_begin, block_end);
                std::shuffle(block_begin, block_end, rng);
                break;
        }
        block_begin = block_end;
    }
    return order;
}

namespace {

// Levels where the two simplices carry the same vertex, as an (n+1)-bit
// mask; the common vertices of two simplices are exactly these levels.
std::uint64_t agreement_levels(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    std::uint64_t m = 0;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] == b[k]) m |= 1ull << k;
    return m;
}

struct PrefixCheck {
    int attachment = 0;
    std::optional<ShellingFailure> failure;
};

PrefixCheck check_prefix(const std::vector<std::vector<Mask>>& simplices, size_t r, int n) {
    const std::uint64_t all_levels = (1ull << (n + 1)) - 1;
    std::vector<std::uint64_t> agree(r);
    std::uint64_t shared_facets = 0;  // levels j with some earlier simplex equal off level j only
    for (size_t k = 0; k < r; ++k) {
        agree[k] = agreement_levels(simplices[k], simplices[r]);
        if (std::popcount(agree[k]) == n)
            shared_facets |= all_levels & ~agree[k];
    }
    PrefixCheck out;
    out.attachment = std::popcount(shared_facets);
    std::uint64_t unions = 0;
    for (size_t k = 0; k < r; ++k) {
        unions |= agree[k];
        // contained in the facet missing level j  <=>  j not in agree[k]
        if ((shared_facets & ~agree[k]) == 0) {
            ShellingFailure fail;
            fail.r = static_cast<int>(r) + 1;
            for (int lvl = 0; lvl <= n; ++lvl)
                if (agree[k] & (1ull << lvl)) fail.face.push_back(simplices[r][static_cast<size_t>(lvl)]);
            out.failure = std::move(fail);
            return out;
        }
    }
    // cross-check: on success the union of all intersections must equal the
    // union of the shared facets exactly
    std::uint64_t facet_union = 0;
    for (int j = 0; j <= n; ++j)
        if (shared_facets & (1ull << j)) facet_union |= all_levels & ~(1ull << j);
    if (unions != facet_union)
        throw internal_inconsistency("verify_shelling: facet-union form disagrees with the witness form");
    return out;
}

}  // namespace

ShellingReport verify_shelling(const ShellingOrder& order, int threads) {
    const int n = order.n;
    {
        auto sorted = order.perms;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != enumerate_alternating(n))
            throw std::invalid_argument("verify_shelling: order is not a permutation of the triangulation");
    }
    const size_t s = order.perms.size();
    std::vector<std::vector<Mask>> simplices(s);
    for (size_t k = 0; k < s; ++k) simplices[k] = simplex_of(order.perms[k]).verts;

    ShellingReport report;
    report.attachment_counts.assign(s, 0);
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(s));
    std::vector<std::optional<ShellingFailure>> failures(static_cast<size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t]() {
            try {
                for (size_t r = static_cast<size_t>(t); r < s; r += static_cast<size_t>(threads)) {
                    PrefixCheck check = check_prefix(simplices, r, n);
                    report.attachment_counts[r] = check.attachment;
                    if (check.failure) {
                        auto& slot = failures[static_cast<size_t>(t)];
                        if (!slot || check.failure->r < slot->r) slot = check.failure;
                    }
                }
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& f : failures)
        if (f && (!report.failure || f->r < report.failure->r)) report.failure = f;
    report.valid = !report.failure.has_value();
    return report;
}

IntPolynomial hstar_from_shelling(const ShellingOrder& order, int threads) {
    ShellingReport report = verify_shelling(order, threads);
    if (!report.valid) {
        std::string face;
        for (size_t k = 0; k < report.failure->face.size(); ++k) {
            if (k) face += ";";
            face += format_vertex(report.failure->face[k], order.n);
        }
        throw std::invalid_argument("hstar_from_shelling: not a shelling, witness r=" +
                                    std::to_string(report.failure->r) + " face=" + face);
    }
    std::vector<BigInt> coeffs;
    for (int a : report.attachment_counts) {
        if (a >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(a) + 1, BigInt(0));
        coeffs[static_cast<size_t>(a)] += 1;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial hstar_from_swaps(int n) {
    std::vector<BigInt> coeffs(static_cast<size_t>(n), BigInt(0));
    for_each_alternating(n, [&](std::span<const int> w) {
        std::vector<int> inv(static_cast<size_t>(n));
        for (int p = 1; p <= n; ++p) inv[static_cast<size_t>(w[static_cast<size_t>(p - 1)] - 1)] = p;
        int swaps = 0;
        for (int i = 1; i < n; ++i)
            if (inv[static_cast<size_t>(i - 1)] < inv[static_cast<size_t>(i)] - 1) ++swaps;
        coeffs[static_cast<size_t>(swaps)] += 1;
    });
    return IntPolynomial(std::move(coeffs));
}

}  // namespace zigzag
