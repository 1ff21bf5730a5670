// zzh: command-line front end for the zig-zag h*-polynomial library.
//
// Subcommands compute the polynomial by independent routes, dump the
// objects behind it (alternating permutations, shelling orders, flag
// tables, Ehrhart counts), and run the verification battery.
//
// Exit codes: 0 success, 1 usage or bad input, 2 a verification failed,
// 3 a size guard was exceeded without --force.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zigzag/altperm.hpp"
#include "zigzag/checks.hpp"
#include "zigzag/ehrhart.hpp"
#include "zigzag/polynomial.hpp"
#include "zigzag/polytope.hpp"
#include "zigzag/poset.hpp"
#include "zigzag/rank_selection.hpp"
#include "zigzag/shelling.hpp"

using json = nlohmann::ordered_json;
using namespace zigzag;

namespace {

struct guard_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct verification_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "table";
    bool force = false;
    int threads = 0;

    int thread_count() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
    }
};

// ZZH_MAX_N replaces every default cap; --force disables checking.
void check_guard(const Options& opt, const char* what, long value, long default_cap) {
    if (opt.force) return;
    long cap = default_cap;
    if (const char* env = std::getenv("ZZH_MAX_N")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed > 0) cap = parsed;
    }
    if (value > cap)
        throw guard_exceeded(std::string(what) + "=" + std::to_string(value) + " exceeds the guard " +
                             std::to_string(cap) + " (raise with --force or ZZH_MAX_N)");
}

// JSON numbers only while they are exact in an int64; larger values become
// decimal strings so nothing is ever rounded.
json json_int(const BigInt& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json json_coeffs(const IntPolynomial& poly) {
    json arr = json::array();
    for (const auto& c : poly.coeffs) arr.push_back(json_int(c));
    return arr;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_ideal_like(const std::vector<int>& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

std::vector<int> parse_size_set(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw std::invalid_argument("size set: unbalanced braces");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> sizes;
    std::stringstream stream(body);
    std::string field;
    while (std::getline(stream, field, ',')) {
        if (field.empty()) throw std::invalid_argument("size set: empty entry");
        sizes.push_back(std::stoi(field));
    }
    return sizes;
}

int run_hstar(const Options& opt, int n, const std::string& method) {
    std::vector<std::pair<std::string, IntPolynomial>> results;
    auto compute = [&](const std::string& name) {
        if (name == "swap") {
            check_guard(opt, "n", n, 14);
            results.emplace_back(name, hstar_from_swaps(n));
        } else if (name == "beta") {
            check_guard(opt, "n", n, 16);
            results.emplace_back(name, hstar_from_beta(n));
        } else if (name == "ehrhart") {
            check_guard(opt, "n", n, 100);
            results.emplace_back(name, hstar_from_ehrhart(n));
        } else if (name == "shelling") {
            check_guard(opt, "n", n, 9);
            results.emplace_back(name, hstar_from_shelling(inversion_shelling_order(n), opt.thread_count()));
        }
    };
    if (method == "all")
        for (const char* name : {"swap", "shelling", "ehrhart", "beta"}) compute(name);
    else
        compute(method);

    bool agree = true;
    for (const auto& [name, poly] : results) agree = agree && (poly == results.front().second);

    if (opt.format == "json") {
        json doc;
        doc["n"] = n;
        doc["results"] = json::array();
        for (const auto& [name, poly] : results)
            doc["results"].push_back({{"method", name},
                                      {"coefficients", json_coeffs(poly)},
                                      {"pretty", poly.pretty()}});
        doc["agree"] = agree;
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "method,k,coefficient\n";
        for (const auto& [name, poly] : results)
            for (size_t k = 0; k < poly.coeffs.size(); ++k)
                std::cout << name << "," << k << "," << poly.coeffs[k].get_str() << "\n";
    } else {
        for (const auto& [name, poly] : results)
            std::cout << name << ": h*(t) = " << poly.pretty() << "\n";
        if (results.size() > 1)
            std::cout << (agree ? "all routes agree" : "ROUTES DISAGREE") << "\n";
    }
    if (!agree) throw verification_failed("h* routes disagree");
    return 0;
}

int run_enumerate(const Options& opt, int n, bool stats) {
    check_guard(opt, "n", n, 14);
    if (opt.format == "json") {
        json doc;
        doc["n"] = n;
        json arr = json::array();
        std::uint64_t count = 0;
        for_each_alternating(n, [&](std::span<const int> w) {
            ++count;
            if (!stats) {
                arr.push_back(format_perm(w));
                return;
            }
            AltPerm sigma{{w.begin(), w.end()}};
            arr.push_back({{"perm", format_perm(w)},
                           {"swap_set", swap_set(sigma)},
                           {"inversions", inversion_count(w)},
                           {"descent_set", descent_set(w)}});
        });
        doc["count"] = count;
        doc["perms"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    if (opt.format == "csv")
        std::cout << (stats ? "perm,swaps,inversions,descents\n" : "perm\n");
    for_each_alternating(n, [&](std::span<const int> w) {
        if (opt.format == "csv") {
            std::cout << csv_quote(format_perm(w));
            if (stats) {
                AltPerm sigma{{w.begin(), w.end()}};
                std::cout << "," << swap_set(sigma).size() << "," << inversion_count(w) << ","
                          << descent_set(w).size();
            }
            std::cout << "\n";
            return;
        }
        std::cout << format_perm(w);
        if (stats) {
            AltPerm sigma{{w.begin(), w.end()}};
            std::cout << "  swap=" << format_ideal_like(swap_set(sigma)) << " inv=" << inversion_count(w)
                      << " des=" << format_ideal_like(descent_set(w));
        }
        std::cout << "\n";
    });
    return 0;
}

int run_euler(const Options& opt, int max_n) {
    check_guard(opt, "max", max_n, 1000);
    auto values = euler_zigzag(max_n);
    if (opt.format == "json") {
        json doc;
        doc["max"] = max_n;
        json arr = json::array();
        for (const auto& v : values) arr.push_back(json_int(v));
        doc["values"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,euler\n";
        for (size_t m = 0; m < values.size(); ++m) std::cout << m << "," << values[m].get_str() << "\n";
    } else {
        for (size_t m = 0; m < values.size(); ++m)
            std::cout << "E_" << m << " = " << values[m].get_str() << "\n";
    }
    return 0;
}

int run_ehrhart(const Options& opt, int n, long max_m) {
    check_guard(opt, "n", n, 100);
    check_guard(opt, "max-m", max_m, 100000);
    EhrhartTable table = ehrhart_table(n, max_m);
    if (opt.format == "json") {
        json doc;
        doc["n"] = n;
        json arr = json::array();
        for (const auto& v : table.values) arr.push_back(json_int(v));
        doc["points"] = std::move(arr);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,m,points\n";
        for (size_t m = 0; m < table.values.size(); ++m)
            std::cout << n << "," << m << "," << table.values[m].get_str() << "\n";
    } else {
        for (size_t m = 0; m < table.values.size(); ++m)
            std::cout << "i(" << m << ") = " << table.values[m].get_str() << "\n";
    }
    return 0;
}

json failure_to_json(const ShellingReport& report, int n) {
    if (!report.failure) return nullptr;
    json face = json::array();
    for (Mask v : report.failure->face) face.push_back(format_vertex(v, n));
    return json{{"r", report.failure->r}, {"face", std::move(face)}};
}

int run_shelling(const Options& opt, int n, const std::string& tie_break, std::uint64_t seed,
                 bool verify, const std::string& order_file) {
    check_guard(opt, "n", n, verify ? 9 : 10);
    ShellingOrder order;
    if (!order_file.empty()) {
        std::ifstream in(order_file);
        if (!in) throw std::invalid_argument("cannot open order file: " + order_file);
        order.n = n;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            AltPerm sigma = parse_altperm(line);
            if (sigma.size() != n)
                throw std::invalid_argument("order file entry has wrong size: " + line);
            order.perms.push_back(std::move(sigma));
        }
    } else {
        TieBreak tb = TieBreak::lex;
        if (tie_break == "reverse_lex") tb = TieBreak::reverse_lex;
        else if (tie_break == "seeded") tb = TieBreak::seeded;
        else if (tie_break != "lex") throw std::invalid_argument("unknown tie-break: " + tie_break);
        order = inversion_shelling_order(n, tb, seed);
    }

    std::optional<ShellingReport> report;
    if (verify) report = verify_shelling(order, opt.thread_count());

    if (opt.format == "json") {
        json doc;
        doc["n"] = n;
        if (order_file.empty()) {
            doc["tie_break"] = tie_break;
            if (tie_break == "seeded") doc["seed"] = seed;
        }
        json arr = json::array();
        for (const auto& p : order.perms) arr.push_back(format_perm(p));
        doc["order"] = std::move(arr);
        if (report) {
            doc["report"] = {{"valid", report->valid},
                             {"attachment_counts", report->attachment_counts},
                             {"failure_witness", failure_to_json(*report, n)}};
        }
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << (report ? "position,perm,inversions,attachment\n" : "position,perm,inversions\n");
        for (size_t r = 0; r < order.perms.size(); ++r) {
            std::cout << (r + 1) << "," << csv_quote(format_perm(order.perms[r])) << ","
                      << inversion_count(order.perms[r]);
            if (report) std::cout << "," << report->attachment_counts[r];
            std::cout << "\n";
        }
    } else {
        for (size_t r = 0; r < order.perms.size(); ++r) {
            std::cout << format_perm(order.perms[r]) << "  inv=" << inversion_count(order.perms[r]);
            if (report) std::cout << " a=" << report->attachment_counts[r];
            std::cout << "\n";
        }
        if (report) {
            if (report->valid) {
                std::cout << "valid shelling\n";
            } else {
                std::cout << "NOT a shelling: witness r=" << report->failure->r << " face=";
                for (size_t k = 0; k < report->failure->face.size(); ++k) {
                    if (k) std::cout << ";";
                    std::cout << format_vertex(report->failure->face[k], n);
                }
                std::cout << "\n";
            }
        }
    }
    if (report && !report->valid) throw verification_failed("order is not a shelling");
    return 0;
}

int run_flags(const Options& opt, int n, const std::string& set_text) {
    check_guard(opt, "n", n, 16);
    if (!set_text.empty()) {
        auto sizes = parse_size_set(set_text);
        BigInt a = alpha(n, sizes);
        BigInt b = beta(n, sizes);
        std::string key = format_ideal_like(sizes);
        if (opt.format == "json") {
            json doc{{"n", n}, {"set", key}, {"alpha", json_int(a)}, {"beta", json_int(b)}};
            std::cout << doc.dump(2) << "\n";
        } else if (opt.format == "csv") {
            std::cout << "set,alpha,beta\n"
                      << csv_quote(key) << "," << a.get_str() << "," << b.get_str() << "\n";
        } else {
            std::cout << key << "  alpha=" << a.get_str() << " beta=" << b.get_str() << "\n";
        }
        return 0;
    }
    FlagTables tables = flag_tables(n);
    auto set_name = [&](std::uint64_t b) {
        std::vector<int> sizes;
        for (int i = 1; i < n; ++i)
            if (b & (1ull << (i - 1))) sizes.push_back(i);
        return format_ideal_like(sizes);
    };
    if (opt.format == "json") {
        json doc;
        doc["n"] = n;
        json alpha_map, beta_map;
        for (std::uint64_t b = 0; b < tables.alpha.size(); ++b) {
            alpha_map[set_name(b)] = json_int(tables.alpha[b]);
            beta_map[set_name(b)] = json_int(tables.beta[b]);
        }
        doc["alpha"] = std::move(alpha_map);
        doc["beta"] = std::move(beta_map);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "set,alpha,beta\n";
        for (std::uint64_t b = 0; b < tables.alpha.size(); ++b)
            std::cout << csv_quote(set_name(b)) << "," << tables.alpha[b].get_str() << ","
                      << tables.beta[b].get_str() << "\n";
    } else {
        for (std::uint64_t b = 0; b < tables.alpha.size(); ++b)
            std::cout << set_name(b) << "  alpha=" << tables.alpha[b].get_str()
                      << " beta=" << tables.beta[b].get_str() << "\n";
    }
    return 0;
}

int run_chain_map(const Options& opt, int n, const std::string& chain_text, const std::string& perm_text,
                  const std::string& sizes_text) {
    check_guard(opt, "n", n, 62);
    if (!chain_text.empty()) {
        IdealChain chain = parse_chain(chain_text, n);
        AltPerm sigma = chain_to_altperm(chain);
        if (opt.format == "json") {
            json doc{{"n", n},
                     {"direction", "chain_to_perm"},
                     {"chain", format_chain(chain)},
                     {"perm", format_perm(sigma)}};
            std::cout << doc.dump(2) << "\n";
        } else if (opt.format == "csv") {
            std::cout << "perm\n" << csv_quote(format_perm(sigma)) << "\n";
        } else {
            std::cout << format_perm(sigma) << "\n";
        }
        return 0;
    }
    if (perm_text.empty() || sizes_text.empty())
        throw std::invalid_argument("chain-map needs either --chain or both --perm and --sizes");
    AltPerm sigma = parse_altperm(perm_text);
    if (sigma.size() != n) throw std::invalid_argument("--perm does not have n entries");
    auto sizes = parse_size_set(sizes_text);
    IdealChain chain = altperm_to_chain(sizes, sigma);
    if (opt.format == "json") {
        json chain_arr = json::array();
        for (Mask ideal : chain.ideals) chain_arr.push_back(format_ideal(ideal));
        json doc{{"n", n},
                 {"direction", "perm_to_chain"},
                 {"perm", format_perm(sigma)},
                 {"chain", std::move(chain_arr)}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "chain\n" << csv_quote(format_chain(chain)) << "\n";
    } else {
        std::cout << format_chain(chain) << "\n";
    }
    return 0;
}

int run_verify(const Options& opt, int n, const std::string& depth_text) {
    check_guard(opt, "n", n, 12);
    Depth depth = (depth_text == "full") ? Depth::full : Depth::fast;
    if (depth_text != "full" && depth_text != "fast")
        throw std::invalid_argument("unknown depth: " + depth_text);
    VerifyReport report = verify_structure(n, depth);
    if (opt.format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "name,status,witness\n";
        for (const auto& c : report.checks)
            std::cout << c.name << "," << to_string(c.status) << "," << csv_quote(c.witness) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << c.name << ": " << to_string(c.status);
            if (!c.witness.empty()) std::cout << " [" << c.witness << "]";
            std::cout << "\n";
        }
        std::cout << (report.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    if (!report.all_passed()) throw verification_failed("verification reported failures");
    return 0;
}

int run_swap_table(const Options& opt, int max_n) {
    check_guard(opt, "max", max_n, 14);
    std::vector<SwapNumberTable> tables;
    for (int n = 1; n <= max_n; ++n) tables.push_back(swap_numbers(n));
    if (opt.format == "json") {
        json doc;
        doc["max"] = max_n;
        json rows = json::array();
        for (const auto& t : tables) {
            json row = json::array();
            for (const auto& c : t.counts) row.push_back(json_int(c));
            rows.push_back(std::move(row));
        }
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "n,k,count\n";
        for (const auto& t : tables)
            for (size_t k = 0; k < t.counts.size(); ++k)
                std::cout << t.n << "," << k << "," << t.counts[k].get_str() << "\n";
    } else {
        for (const auto& t : tables) {
            std::cout << "n=" << t.n << ":";
            for (const auto& c : t.counts) std::cout << " " << c.get_str();
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"h*-polynomial of the order polytope of the zig-zag poset"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_flag("--force", opt.force, "ignore size guards");
    app.add_option("--threads", opt.threads, "worker threads for shelling verification");

    int n = 0;
    long max_m = 0;
    int max_n = 0;
    std::string method = "swap", tie_break = "lex", depth = "fast";
    std::string set_text, chain_text, perm_text, sizes_text, order_file;
    std::uint64_t seed = 0;
    bool stats = false, verify = false;

    auto* cmd_hstar = app.add_subcommand("hstar", "compute the h*-polynomial");
    cmd_hstar->add_option("--n", n, "poset size")->required();
    cmd_hstar->add_option("--method", method, "route: swap | shelling | ehrhart | beta | all")
        ->check(CLI::IsMember({"swap", "shelling", "ehrhart", "beta", "all"}));

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list the alternating permutations");
    cmd_enumerate->add_option("--n", n, "word length")->required();
    cmd_enumerate->add_flag("--stats", stats, "include swap/inversion/descent data");

    auto* cmd_euler = app.add_subcommand("euler", "zig-zag numbers E_0..E_max");
    cmd_euler->add_option("--max", max_n, "largest index")->required();

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "lattice-point counts of the dilates");
    cmd_ehrhart->add_option("--n", n, "poset size")->required();
    cmd_ehrhart->add_option("--max-m", max_m, "largest dilation factor")->required();

    auto* cmd_shelling = app.add_subcommand("shelling", "inversion-sorted simplex orders");
    cmd_shelling->add_option("--n", n, "poset size")->required();
    cmd_shelling->add_option("--tie-break", tie_break, "lex | reverse_lex | seeded");
    cmd_shelling->add_option("--seed", seed, "seed for --tie-break seeded");
    cmd_shelling->add_flag("--verify", verify, "check the shelling condition");
    cmd_shelling->add_option("--order-file", order_file, "verify an explicit order, one perm per line");

    auto* cmd_flags = app.add_subcommand("flags", "alpha/beta tables over size sets");
    cmd_flags->add_option("--n", n, "poset size")->required();
    cmd_flags->add_option("--set", set_text, "single size set, e.g. '{1,3}'");

    auto* cmd_chain_map = app.add_subcommand("chain-map", "chains of ideals <-> alternating perms");
    cmd_chain_map->add_option("--n", n, "poset size")->required();
    cmd_chain_map->add_option("--chain", chain_text, "chain like '{1,3} < {1,3,4}'");
    cmd_chain_map->add_option("--perm", perm_text, "alternating permutation");
    cmd_chain_map->add_option("--sizes", sizes_text, "target size set for the chain");

    auto* cmd_verify = app.add_subcommand("verify", "run the verification battery");
    cmd_verify->add_option("--n", n, "poset size")->required();
    cmd_verify->add_option("--depth", depth, "fast | full");

    auto* cmd_swap_table = app.add_subcommand("swap-table", "swap-statistic histograms for n=1..max");
    cmd_swap_table->add_option("--max", max_n, "largest poset size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_hstar->parsed()) return run_hstar(opt, n, method);
        if (cmd_enumerate->parsed()) return run_enumerate(opt, n, stats);
        if (cmd_euler->parsed()) return run_euler(opt, max_n);
        if (cmd_ehrhart->parsed()) return run_ehrhart(opt, n, max_m);
        if (cmd_shelling->parsed()) return run_shelling(opt, n, tie_break, seed, verify, order_file);
        if (cmd_flags->parsed()) return run_flags(opt, n, set_text);
        if (cmd_chain_map->parsed()) return run_chain_map(opt, n, chain_text, perm_text, sizes_text);
        if (cmd_verify->parsed()) return run_verify(opt, n, depth);
        if (cmd_swap_table->parsed()) return run_swap_table(opt, max_n);
    } catch (const guard_exceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const verification_failed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    } catch (const property_violation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 2;
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
