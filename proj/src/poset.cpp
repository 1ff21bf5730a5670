#include "zigzag/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace zigzag {

Mask full_mask(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("full_mask: n must be in [0,64]");
    return (n == 64) ? ~0ull : ((1ull << n) - 1);
}

bool is_order_ideal(int n, Mask subset) {
    if (n < 1 || n > 64) throw std::invalid_argument("is_order_ideal: n must be in [1,64]");
    if (subset & ~full_mask(n)) throw std::invalid_argument("is_order_ideal: subset has elements beyond z_n");
    // even z_e lies above z_{e-1} and (when present) z_{e+1}
    for (int e = 2; e <= n; e += 2) {
        if (!(subset & (1ull << (e - 1)))) continue;
        if (!(subset & (1ull << (e - 2)))) return false;
        if (e + 1 <= n && !(subset & (1ull << e))) return false;
    }
    return true;
}

std::vector<Mask> order_ideals(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("order_ideals: n must be in [1,62]");
    std::vector<Mask> ideals{0};
    for (int e = 1; e <= n; ++e) {
        Mask bit = 1ull << (e - 1);
        Mask prev_bit = (e >= 2) ? (1ull << (e - 2)) : 0;
        std::vector<Mask> next;
        next.reserve(2 * ideals.size());
        if (e % 2 == 1) {
            // z_e is below z_{e-1}: keeping z_{e-1} now forces z_e in
            for (Mask i : ideals)
                if (!(i & prev_bit)) next.push_back(i);
            for (Mask i : ideals) next.push_back(i | bit);
        } else {
            // z_e is above z_{e-1}: adding z_e needs z_{e-1} already in
            for (Mask i : ideals) next.push_back(i);
            for (Mask i : ideals)
                if (i & prev_bit) next.push_back(i | bit);
        }
        ideals = std::move(next);
    }
    assert(std::is_sorted(ideals.begin(), ideals.end()));
    return ideals;
}

std::vector<std::vector<Mask>> ideals_by_size(int n) {
    std::vector<std::vector<Mask>> by_size(static_cast<size_t>(n) + 1);
    for (Mask i : order_ideals(n)) by_size[static_cast<size_t>(std::popcount(i))].push_back(i);
    return by_size;
}

std::vector<int> IdealChain::sizes() const {
    std::vector<int> out;
    out.reserve(ideals.size());
    for (Mask i : ideals) out.push_back(std::popcount(i));
    return out;
}

void validate_chain(const IdealChain& chain) {
    for (Mask i : chain.ideals)
        if (!is_order_ideal(chain.n, i))
            throw std::invalid_argument("validate_chain: " + format_ideal(i) + " is not an order ideal");
    for (size_t k = 1; k < chain.ideals.size(); ++k) {
        Mask a = chain.ideals[k - 1], b = chain.ideals[k];
        if (a == b || (a & ~b))
            throw std::invalid_argument("validate_chain: not strictly nested at position " + std::to_string(k));
    }
}

static void check_size_set(int n, std::span<const int> sizes) {
    for (size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 0 || sizes[k] > n)
            throw std::invalid_argument("size set entry out of [0,n]");
        if (k > 0 && sizes[k] <= sizes[k - 1])
            throw std::invalid_argument("size set must be strictly increasing");
    }
}

BigInt count_chains_with_sizes(int n, std::span<const int> sizes) {
    check_size_set(n, sizes);
    if (sizes.empty()) return 1;
    auto by_size = ideals_by_size(n);
    // ways[j] = chains through the levels seen so far ending at ideal #j
    std::vector<BigInt> ways(by_size[static_cast<size_t>(sizes[0])].size(), BigInt(1));
    for (size_t lvl = 1; lvl < sizes.size(); ++lvl) {
        const auto& lo = by_size[static_cast<size_t>(sizes[lvl - 1])];
        const auto& hi = by_size[static_cast<size_t>(sizes[lvl])];
        std::vector<BigInt> next(hi.size(), BigInt(0));
        for (size_t j = 0; j < hi.size(); ++j)
            for (size_t i = 0; i < lo.size(); ++i)
                if (!(lo[i] & ~hi[j])) next[j] += ways[i];
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

std::vector<IdealChain> chains_with_sizes(int n, std::span<const int> sizes) {
    check_size_set(n, sizes);
    std::vector<IdealChain> out;
    if (sizes.empty()) {
        out.push_back(IdealChain{n, {}});
        return out;
    }
    auto by_size = ideals_by_size(n);
    std::vector<Mask> stack;
    auto rec = [&](auto&& self, size_t lvl) -> void {
        if (lvl == sizes.size()) {
            out.push_back(IdealChain{n, stack});
            return;
        }
        for (Mask cand : by_size[static_cast<size_t>(sizes[lvl])]) {
            if (!stack.empty() && (stack.back() & ~cand)) continue;
            stack.push_back(cand);
            self(self, lvl + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

IdealChain perm_to_saturated_chain(const AltPerm& sigma) {
    if (!is_alternating(sigma.entries))
        throw std::invalid_argument("perm_to_saturated_chain: not alternating");
    const int n = sigma.size();
    auto inv = sigma.inverse();
    IdealChain chain{n, {0}};
    Mask cur = 0;
    for (int v = 1; v <= n; ++v) {
        cur |= 1ull << (inv[static_cast<size_t>(v - 1)] - 1);
        if (!is_order_ideal(n, cur))
            throw internal_inconsistency("perm_to_saturated_chain: prefix is not an ideal");
        chain.ideals.push_back(cur);
    }
    return chain;
}

NaturalLabeling default_natural_labeling(int n) {
    if (n < 1) throw std::invalid_argument("default_natural_labeling: n must be >= 1");
    NaturalLabeling omega{n, std::vector<int>(static_cast<size_t>(n))};
    int half = (n + 1) / 2;
    for (int i = 1; i <= n; ++i)
        omega.label[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? (i + 1) / 2 : half + i / 2;
    assert(is_natural_labeling(omega));
    return omega;
}

bool is_natural_labeling(const NaturalLabeling& omega) {
    if (omega.n < 1 || static_cast<int>(omega.label.size()) != omega.n) return false;
    if (!is_permutation(omega.label)) return false;
    // order-preserving on the covers == the label word itself is up-down
    return is_alternating(omega.label);
}

std::vector<std::vector<int>> jordan_holder_words(int n, const NaturalLabeling& omega) {
    if (!is_natural_labeling(omega) || omega.n != n)
        throw std::invalid_argument("jordan_holder_words: not a natural labeling of Z_n");
    std::vector<std::vector<int>> words;
    for_each_alternating(n, [&](std::span<const int> w) {
        std::vector<int> inv(static_cast<size_t>(n));
        for (int p = 1; p <= n; ++p) inv[static_cast<size_t>(w[static_cast<size_t>(p - 1)] - 1)] = p;
        std::vector<int> word(static_cast<size_t>(n));
        for (int r = 1; r <= n; ++r)
            word[static_cast<size_t>(r - 1)] = omega.label[static_cast<size_t>(inv[static_cast<size_t>(r - 1)] - 1)];
        words.push_back(std::move(word));
    });
    return words;
}

std::string format_ideal(Mask ideal) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i) {
        if (!(ideal & (1ull << i))) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

Mask parse_ideal(std::string_view text, int n) {
    size_t open = text.find('{'), close = text.rfind('}');
    if (open == std::string_view::npos || close == std::string_view::npos || open >= close)
        throw std::invalid_argument("parse_ideal: expected {..}");
    std::string_view body = text.substr(open + 1, close - open - 1);
    Mask out = 0;
    size_t start = 0;
    while (start < body.size()) {
        size_t comma = body.find(',', start);
        size_t end = (comma == std::string_view::npos) ? body.size() : comma;
        int v = 0;
        bool any = false;
        for (size_t p = start; p < end; ++p) {
            char c = body[p];
            if (c == ' ') continue;
            if (c < '0' || c > '9') throw std::invalid_argument("parse_ideal: bad character");
            v = v * 10 + (c - '0');
            any = true;
        }
        if (!any) throw std::invalid_argument("parse_ideal: empty entry");
        if (v < 1 || v > n) throw std::invalid_argument("parse_ideal: element out of 1..n");
        out |= 1ull << (v - 1);
        start = end + 1;
        if (comma != std::string_view::npos && start >= body.size())
            throw std::invalid_argument("parse_ideal: trailing comma");
    }
    return out;
}

std::string format_chain(const IdealChain& chain) {
    std::string out;
    for (size_t k = 0; k < chain.ideals.size(); ++k) {
        if (k > 0) out += " < ";
        out += format_ideal(chain.ideals[k]);
    }
    return out;
}

IdealChain parse_chain(std::string_view text, int n) {
    IdealChain chain{n, {}};
    size_t start = 0;
    while (start < text.size()) {
        size_t sep = text.find('<', start);
        size_t end = (sep == std::string_view::npos) ? text.size() : sep;
        chain.ideals.push_back(parse_ideal(text.substr(start, end - start), n));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    validate_chain(chain);
    return chain;
}

}  // namespace zigzag
