#include "zigzag/checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <optional>
#include <span>
#include <string_view>

#include <json.hpp>

#include "zigzag/altperm.hpp"
#include "zigzag/ehrhart.hpp"
#include "zigzag/polytope.hpp"
#include "zigzag/poset.hpp"
#include "zigzag/rank_selection.hpp"
#include "zigzag/shelling.hpp"

namespace zigzag {

SwapNumberTable swap_numbers(int n) {
    SwapNumberTable table{n, std::vector<BigInt>(static_cast<size_t>(n), BigInt(0))};
    for_each_alternating(n, [&](std::span<const int> w) {
        std::vector<int> inv(static_cast<size_t>(n));
        for (int p = 1; p <= n; ++p) inv[static_cast<size_t>(w[static_cast<size_t>(p - 1)] - 1)] = p;
        int swaps = 0;
        for (int i = 1; i < n; ++i)
            if (inv[static_cast<size_t>(i - 1)] < inv[static_cast<size_t>(i)] - 1) ++swaps;
        table.counts[static_cast<size_t>(swaps)] += 1;
    });
    return table;
}

namespace {

using Witness = std::optional<std::string>;

std::string poly_pair(const IntPolynomial& a, const IntPolynomial& b) {
    return a.pretty() + " vs " + b.pretty();
}

Witness check_enumeration_matches_recurrence(int n) {
    BigInt counted = BigInt(count_alternating(n));
    BigInt recurred = euler_zigzag(n).back();
    if (counted != recurred)
        return "count " + counted.get_str() + " vs recurrence " + recurred.get_str();
    return std::nullopt;
}

Witness check_hstar_routes_agree(int n) {
    IntPolynomial swaps = hstar_from_swaps(n);
    IntPolynomial betas = hstar_from_beta(n);
    IntPolynomial ehr = hstar_from_ehrhart(n);
    if (swaps != betas) return "swap/beta: " + poly_pair(swaps, betas);
    if (swaps != ehr) return "swap/ehrhart: " + poly_pair(swaps, ehr);
    return std::nullopt;
}

Witness check_hstar_shelling_route(int n) {
    IntPolynomial shelled = hstar_from_shelling(inversion_shelling_order(n));
    IntPolynomial swaps = hstar_from_swaps(n);
    if (shelled != swaps) return "shelling/swap: " + poly_pair(shelled, swaps);
    return std::nullopt;
}

bool reachable_by_one_swap(const AltPerm& a, const AltPerm& b) {
    for (int i : swap_set(a))
        if (swap_to(a, i) == b) return true;
    return false;
}

Witness check_facet_adjacency_is_swap(int n) {
    auto perms = enumerate_alternating(n);
    for (size_t x = 0; x < perms.size(); ++x)
        for (size_t y = x + 1; y < perms.size(); ++y) {
            bool adjacent = share_facet(perms[x], perms[y]);
            bool swapped = reachable_by_one_swap(perms[x], perms[y]) ||
                           reachable_by_one_swap(perms[y], perms[x]);
            if (adjacent != swapped)
                return format_perm(perms[x]) + "/" + format_perm(perms[y]) +
                       (adjacent ? " share a facet without a swap" : " swap without sharing a facet");
        }
    return std::nullopt;
}

Witness check_swap_characterizations_agree(int n) {
    Witness out;
    for_each_alternating(n, [&](std::span<const int> w) {
        if (out) return;
        AltPerm sigma{{w.begin(), w.end()}};
        auto inv = sigma.inverse();
        auto swaps = swap_set(sigma);
        for (int i = 1; i < n; ++i) {
            bool by_definition = std::find(swaps.begin(), swaps.end(), i) != swaps.end();
            // alternative clause: the exchange stays alternating and i sits
            // left of i+1
            std::vector<int> exchanged(w.begin(), w.end());
            std::swap(exchanged[static_cast<size_t>(inv[static_cast<size_t>(i - 1)] - 1)],
                      exchanged[static_cast<size_t>(inv[static_cast<size_t>(i)] - 1)]);
            bool by_exchange =
                is_alternating(exchanged) && inv[static_cast<size_t>(i - 1)] < inv[static_cast<size_t>(i)];
            if (by_definition != by_exchange) {
                out = format_perm(sigma) + " value " + std::to_string(i) + ": definition says " +
                      (by_definition ? "yes" : "no");
                return;
            }
            if (by_definition) {
                if (inversion_count(exchanged) != inversion_count(sigma.entries) + 1) {
                    out = format_perm(sigma) + " value " + std::to_string(i) +
                          ": exchange does not add exactly one inversion";
                    return;
                }
            }
        }
    });
    return out;
}

Witness check_inversion_orders_shell(int n, int seed_count) {
    auto run = [&](TieBreak tb, std::uint64_t seed, const char* label) -> Witness {
        ShellingReport report = verify_shelling(inversion_shelling_order(n, tb, seed));
        if (!report.valid)
            return std::string(label) + " order fails at r=" + std::to_string(report.failure->r);
        return std::nullopt;
    };
    if (auto w = run(TieBreak::lex, 0, "lex")) return w;
    if (auto w = run(TieBreak::reverse_lex, 0, "reverse_lex")) return w;
    for (int s = 1; s <= seed_count; ++s)
        if (auto w = run(TieBreak::seeded, 1000 + static_cast<std::uint64_t>(s), "seeded")) return w;
    return std::nullopt;
}

Witness check_attachments_equal_swaps(int n) {
    ShellingOrder order = inversion_shelling_order(n);
    ShellingReport report = verify_shelling(order);
    if (!report.valid) return std::string("canonical order is not a shelling");
    for (size_t r = 0; r < order.perms.size(); ++r) {
        int swaps = static_cast<int>(swap_set(order.perms[r]).size());
        if (report.attachment_counts[r] != swaps)
            return format_perm(order.perms[r]) + ": attachment " +
                   std::to_string(report.attachment_counts[r]) + " vs swap count " + std::to_string(swaps);
    }
    return std::nullopt;
}

// every subset of {1..n-1} as a sorted size vector
std::vector<std::vector<int>> inner_size_sets(int n) {
    std::vector<std::vector<int>> out;
    const int k = n - 1;
    for (std::uint64_t b = 0; b < (1ull << k); ++b) {
        std::vector<int> sizes;
        for (int i = 1; i <= k; ++i)
            if (b & (1ull << (i - 1))) sizes.push_back(i);
        out.push_back(std::move(sizes));
    }
    return out;
}

Witness check_constructive_max_is_argmax(int n) {
    for (const auto& sizes : inner_size_sets(n))
        for (const auto& chain : chains_with_sizes(n, sizes)) {
            AltPerm direct = chain_to_altperm(chain);
            AltPerm brute = brute_force_max_altperm(chain_to_constraints(chain));
            if (direct != brute)
                return format_chain(chain) + ": " + format_perm(direct) + " vs " + format_perm(brute);
        }
    return std::nullopt;
}

Witness check_exclusion_set_determines_argmax(int n) {
    for (const auto& sigma : enumerate_alternating(n)) {
        VertexConstraints cs = make_constraints(n, exclusion_set(sigma));
        AltPerm direct = unique_max_altperm(cs);
        AltPerm brute = brute_force_max_altperm(cs);
        if (direct != sigma || brute != sigma)
            return format_perm(sigma) + " is not recovered from its exclusion set";
    }
    return std::nullopt;
}

Witness check_beta_counts_swap_classes(int n) {
    FlagTables tables = flag_tables(n);
    std::vector<BigInt> swap_class(tables.beta.size(), BigInt(0));
    for_each_alternating(n, [&](std::span<const int> w) {
        std::vector<int> inv(static_cast<size_t>(n));
        for (int p = 1; p <= n; ++p) inv[static_cast<size_t>(w[static_cast<size_t>(p - 1)] - 1)] = p;
        std::uint64_t mask = 0;
        for (int i = 1; i < n; ++i)
            if (inv[static_cast<size_t>(i - 1)] < inv[static_cast<size_t>(i)] - 1) mask |= 1ull << (i - 1);
        swap_class[mask] += 1;
    });
    for (std::uint64_t b = 0; b < tables.beta.size(); ++b)
        if (tables.beta[b] != swap_class[b])
            return "S=" + format_ideal(b) + ": beta " + tables.beta[b].get_str() +
                   " vs swap classes " + swap_class[b].get_str();
    // spot-check the literal inclusion-exclusion against the table route
    for (const auto& sizes : inner_size_sets(n)) {
        std::uint64_t b = 0;
        for (int s : sizes) b |= 1ull << (s - 1);
        if (beta(n, sizes) != tables.beta[b])
            return "literal beta disagrees with the table at " + format_ideal(b);
    }
    return std::nullopt;
}

Witness check_chain_bijection_round_trips(int n) {
    for (const auto& sizes : inner_size_sets(n)) {
        for (const auto& chain : chains_with_sizes(n, sizes)) {
            AltPerm sigma = chain_to_altperm(chain);
            IdealChain back = altperm_to_chain(sizes, sigma);
            if (back != chain)
                return "chain " + format_chain(chain) + " does not round-trip";
        }
    }
    for (const auto& sigma : enumerate_alternating(n)) {
        auto swaps = swap_set(sigma);
        std::uint64_t swap_mask = 0;
        for (int i : swaps) swap_mask |= 1ull << (i - 1);
        for (const auto& sizes : inner_size_sets(n)) {
            std::uint64_t b = 0;
            for (int s : sizes) b |= 1ull << (s - 1);
            if ((swap_mask & ~b) != 0) continue;
            AltPerm back = chain_to_altperm(altperm_to_chain(sizes, sigma));
            if (back != sigma)
                return format_perm(sigma) + " with sizes " + format_ideal(b) + " does not round-trip";
        }
    }
    return std::nullopt;
}

Witness check_descents_equidistribute(int n) {
    // natural labelings are exactly the up-down words, so sample a few
    auto perms = enumerate_alternating(n);
    std::vector<std::vector<int>> labelings{default_natural_labeling(n).label};
    for (size_t idx : {size_t(0), perms.size() / 2, perms.size() - 1}) {
        const auto& cand = perms[idx].entries;
        if (std::find(labelings.begin(), labelings.end(), cand) == labelings.end())
            labelings.push_back(cand);
    }
    SwapNumberTable swaps = swap_numbers(n);
    for (const auto& label : labelings) {
        auto words = jordan_holder_words(n, NaturalLabeling{n, label});
        std::vector<BigInt> descents(static_cast<size_t>(n), BigInt(0));
        for (const auto& word : words) descents[descent_set(word).size()] += 1;
        if (descents != swaps.counts)
            return "labeling " + format_perm(label) + " has a different descent histogram";
    }
    return std::nullopt;
}

Witness check_gorenstein_third_dilate(int n) {
    GorensteinReport report = gorenstein_check(n);
    if (!report.ok) return report.failure;
    return std::nullopt;
}

Witness check_swap_number_structure(int n) {
    SwapNumberTable table = swap_numbers(n);
    const auto& s = table.counts;
    if (s[0] != 1) return std::string("s(0) != 1");
    BigInt total = 0;
    for (const auto& c : s) total += c;
    if (total != euler_zigzag(n).back()) return std::string("total is not the zig-zag number");
    if (n >= 2) {
        if (s[static_cast<size_t>(n - 1)] != 0) return std::string("s(n-1) != 0");
        if (s[static_cast<size_t>(n - 2)] != 1) return std::string("s(n-2) != 1");
        for (int k = 0; k <= n - 2; ++k)
            if (s[static_cast<size_t>(k)] != s[static_cast<size_t>(n - 2 - k)])
                return "not symmetric at k=" + std::to_string(k);
        for (int k = 1; k <= (n - 2) / 2; ++k)
            if (s[static_cast<size_t>(k - 1)] > s[static_cast<size_t>(k)])
                return "not unimodal at k=" + std::to_string(k);
    }
    return std::nullopt;
}

struct CheckCase {
    const char* name;
    int fast_guard;
    int full_guard;
    std::function<Witness(int)> run;
};

}  // namespace

VerifyReport verify_structure(int n, Depth depth) {
    if (n < 1) throw std::invalid_argument("verify_structure: n must be >= 1");
    const int seeds = (depth == Depth::full) ? 20 : 5;
    const std::vector<CheckCase> cases{
        {"enumeration_matches_recurrence", 10, 12, check_enumeration_matches_recurrence},
        {"hstar_routes_agree", 12, 12, check_hstar_routes_agree},
        {"hstar_shelling_route", 5, 9, check_hstar_shelling_route},
        {"facet_adjacency_is_swap", 6, 8, check_facet_adjacency_is_swap},
        {"swap_characterizations_agree", 8, 10, check_swap_characterizations_agree},
        {"inversion_orders_shell", 5, 7, [seeds](int m) { return check_inversion_orders_shell(m, seeds); }},
        {"attachments_equal_swaps", 5, 7, check_attachments_equal_swaps},
        {"constructive_max_is_argmax", 5, 7, check_constructive_max_is_argmax},
        {"exclusion_set_determines_argmax", 5, 7, check_exclusion_set_determines_argmax},
        {"beta_counts_swap_classes", 6, 8, check_beta_counts_swap_classes},
        {"chain_bijection_round_trips", 5, 7, check_chain_bijection_round_trips},
        {"descents_equidistribute", 5, 7, check_descents_equidistribute},
        {"gorenstein_third_dilate", 12, 16, check_gorenstein_third_dilate},
        {"swap_number_structure", 12, 12, check_swap_number_structure},
    };
    // the checks are independent, so they run concurrently; the report keeps
    // the fixed order above regardless of which finishes first
    std::vector<std::future<CheckResult>> running;
    for (const auto& item : cases) {
        int guard = (depth == Depth::full) ? item.full_guard : item.fast_guard;
        bool inapplicable = (std::string_view(item.name) == "gorenstein_third_dilate" && n < 2);
        if (n > guard || inapplicable) {
            std::promise<CheckResult> skipped;
            skipped.set_value({item.name, CheckStatus::skipped, {}});
            running.push_back(skipped.get_future());
            continue;
        }
        running.push_back(std::async(std::launch::async, [&item, n]() -> CheckResult {
            CheckResult result{item.name, CheckStatus::pass, {}};
            try {
                if (Witness witness = item.run(n)) {
                    result.status = CheckStatus::fail;
                    result.witness = *witness;
                }
            } catch (const property_violation& e) {
                result.status = CheckStatus::fail;
                result.witness = e.what();
            } catch (const internal_inconsistency& e) {
                result.status = CheckStatus::fail;
                result.witness = e.what();
            }
            return result;
        }));
    }
    VerifyReport report{n, depth, {}};
    for (auto& future : running) report.checks.push_back(future.get());
    return report;
}

bool VerifyReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

const char* to_string(Depth depth) { return depth == Depth::full ? "full" : "fast"; }

std::string report_to_json(const VerifyReport& report, int indent) {
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["depth"] = to_string(report.depth);
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = check.name;
        entry["status"] = to_string(check.status);
        if (check.status == CheckStatus::fail) entry["witness"] = check.witness;
        doc["checks"].push_back(std::move(entry));
    }
    doc["versions"] = {{"library", kLibraryVersion}, {"schema", kReportSchemaVersion}};
    return doc.dump(indent);
}

}  // namespace zigzag
