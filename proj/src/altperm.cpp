#include "zigzag/altperm.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>

namespace zigzag {

std::vector<int> AltPerm::inverse() const {
    std::vector<int> inv(entries.size());
    for (int p = 1; p <= size(); ++p) inv[static_cast<size_t>(entries[p - 1] - 1)] = p;
    return inv;
}

AltPerm AltPerm::checked(std::vector<int> entries) {
    if (!is_alternating(entries))
        throw std::invalid_argument("not alternating: " + format_perm(entries));
    return AltPerm{std::move(entries)};
}

bool is_permutation(std::span<const int> entries) {
    const int n = static_cast<int>(entries.size());
    if (n > 64) return false;
    std::uint64_t seen = 0;
    for (int v : entries) {
        if (v < 1 || v > n) return false;
        std::uint64_t bit = 1ull << (v - 1);
        if (seen & bit) return false;
        seen |= bit;
    }
    return true;
}

bool is_alternating(std::span<const int> entries) {
    if (!is_permutation(entries))
        throw std::invalid_argument("is_alternating: input is not a permutation of 1..n");
    for (size_t p = 1; p < entries.size(); ++p) {
        bool rise = entries[p - 1] < entries[p];
        bool want_rise = (p % 2 == 1);  // positions 1<2, 2>3, 3<4, ...
        if (rise != want_rise) return false;
    }
    return true;
}

std::vector<AltPerm> enumerate_alternating(int n) {
    std::vector<AltPerm> out;
    for_each_alternating(n, [&](std::span<const int> w) {
        out.push_back(AltPerm{{w.begin(), w.end()}});
    });
    return out;
}

std::uint64_t count_alternating(int n) {
    std::uint64_t count = 0;
    for_each_alternating(n, [&](std::span<const int>) { ++count; });
    return count;
}

std::vector<BigInt> euler_zigzag(int n_max) {
    if (n_max < 0) throw std::invalid_argument("euler_zigzag: n_max must be >= 0");
    std::vector<BigInt> e;
    e.reserve(static_cast<size_t>(n_max) + 1);
    e.emplace_back(1);
    if (n_max >= 1) e.emplace_back(1);
    for (int m = 1; m + 1 <= n_max; ++m) {
        BigInt acc = 0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)) * e[static_cast<size_t>(k)] *
                   e[static_cast<size_t>(m - k)];
        if (acc % 2 != 0)
            throw internal_inconsistency("euler_zigzag: odd convolution sum at m=" + std::to_string(m));
        e.push_back(acc / 2);
    }
    return e;
}

std::vector<int> swap_set(const AltPerm& sigma) {
    auto inv = sigma.inverse();
    std::vector<int> out;
    for (int i = 1; i < sigma.size(); ++i)
        if (inv[static_cast<size_t>(i - 1)] < inv[static_cast<size_t>(i)] - 1) out.push_back(i);
    return out;
}

AltPerm swap_to(const AltPerm& sigma, int i) {
    if (i < 1 || i >= sigma.size())
        throw std::invalid_argument("swap_to: value index out of range");
    auto inv = sigma.inverse();
    int pi = inv[static_cast<size_t>(i - 1)], pj = inv[static_cast<size_t>(i)];
    if (!(pi < pj - 1))
        throw std::invalid_argument("swap_to: " + std::to_string(i) + " is not in the swap set of " +
                                    format_perm(sigma));
    AltPerm tau = sigma;
    std::swap(tau.entries[static_cast<size_t>(pi - 1)], tau.entries[static_cast<size_t>(pj - 1)]);
    assert(is_alternating(tau.entries));
    return tau;
}

int inversion_count(std::span<const int> entries) {
    int inv = 0;
    for (size_t a = 0; a < entries.size(); ++a)
        for (size_t b = a + 1; b < entries.size(); ++b)
            if (entries[a] > entries[b]) ++inv;
    return inv;
}

int inversion_count(const AltPerm& sigma) { return inversion_count(std::span<const int>(sigma.entries)); }

std::vector<int> descent_set(std::span<const int> word) {
    std::vector<int> out;
    for (size_t p = 1; p < word.size(); ++p)
        if (word[p - 1] > word[p]) out.push_back(static_cast<int>(p));
    return out;
}

// n-1, n, n-3, n-2, ..., with a final 1 when n is odd
static std::vector<int> descending_pairs_word(int n) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(n));
    for (int v = n; v >= 2; v -= 2) {
        w.push_back(v - 1);
        w.push_back(v);
    }
    if (n % 2 == 1) w.push_back(1);
    return w;
}

AltPerm max_inversion_altperm(int n) {
    if (n < 1) throw std::invalid_argument("max_inversion_altperm: n must be >= 1");
    return AltPerm::checked(descending_pairs_word(n));
}

AltPerm zero_swap_altperm(int n) {
    if (n < 1) throw std::invalid_argument("zero_swap_altperm: n must be >= 1");
    AltPerm sigma = AltPerm::checked(descending_pairs_word(n));
    assert(swap_set(sigma).empty());
    return sigma;
}

std::string format_perm(std::span<const int> entries) {
    std::string out;
    bool commas = entries.size() > 9;
    for (size_t p = 0; p < entries.size(); ++p) {
        if (commas && p > 0) out += ',';
        out += std::to_string(entries[p]);
    }
    return out;
}

std::string format_perm(const AltPerm& sigma) { return format_perm(std::span<const int>(sigma.entries)); }

std::vector<int> parse_perm_word(std::string_view text) {
    std::vector<int> entries;
    if (text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            std::string_view field = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            int v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc{} || ptr != field.data() + field.size())
                throw std::invalid_argument("parse_perm_word: bad entry '" + std::string(field) + "'");
            entries.push_back(v);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("parse_perm_word: bad digit '" + std::string(1, c) + "'");
            entries.push_back(c - '0');
        }
    }
    if (entries.empty() || !is_permutation(entries))
        throw std::invalid_argument("parse_perm_word: not a permutation of 1..n: " + std::string(text));
    return entries;
}

AltPerm parse_altperm(std::string_view text) { return AltPerm::checked(parse_perm_word(text)); }

}  // namespace zigzag
