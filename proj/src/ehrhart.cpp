#include "zigzag/ehrhart.hpp"

#include <cmath>

#include "zigzag/polytope.hpp"
#include "zigzag/poset.hpp"

namespace zigzag {

BigInt count_lattice_points(int n, long m) {
    if (n < 1) throw std::invalid_argument("count_lattice_points: n must be >= 1");
    if (m < 0) throw std::invalid_argument("count_lattice_points: m must be >= 0");
    const size_t width = static_cast<size_t>(m) + 1;
    std::vector<BigInt> f(width, BigInt(1));  // one state per value of the current coordinate
    for (int i = 1; i < n; ++i) {
        std::vector<BigInt> g(width);
        if (i % 2 == 1) {
            // y_i <= y_{i+1}: prefix sums
            BigInt run = 0;
            for (size_t v = 0; v < width; ++v) {
                run += f[v];
                g[v] = run;
            }
        } else {
            // y_i >= y_{i+1}: suffix sums
            BigInt run = 0;
            for (size_t v = width; v-- > 0;) {
                run += f[v];
                g[v] = run;
            }
        }
        f = std::move(g);
    }
    BigInt total = 0;
    for (const auto& x : f) total += x;
    return total;
}

BigInt count_lattice_points_naive(int n, long m) {
    if (n < 1) throw std::invalid_argument("count_lattice_points_naive: n must be >= 1");
    if (m < 0) throw std::invalid_argument("count_lattice_points_naive: m must be >= 0");
    double cost = static_cast<double>(n) * std::pow(static_cast<double>(m) + 1.0, n);
    if (cost > 1e7)
        throw std::invalid_argument("count_lattice_points_naive: box too large, use count_lattice_points");
    auto facets = facet_inequalities(n);
    std::vector<long long> y(static_cast<size_t>(n), 0);
    BigInt total = 0;
    for (;;) {
        bool inside = true;
        for (const auto& f : facets)
            if (evaluate(f, y) > static_cast<long long>(m) * f.bound) {
                inside = false;
                break;
            }
        if (inside) ++total;
        int p = 0;
        while (p < n && y[static_cast<size_t>(p)] == m) y[static_cast<size_t>(p++)] = 0;
        if (p == n) break;
        ++y[static_cast<size_t>(p)];
    }
    return total;
}

BigInt order_polynomial_value(int n, long m) {
    if (n < 1) throw std::invalid_argument("order_polynomial_value: n must be >= 1");
    if (m < 1) throw std::invalid_argument("order_polynomial_value: m must be >= 1");
    if (m == 1) return 1;  // the empty multichain
    auto ideals = order_ideals(n);
    const size_t count = ideals.size();
    // u[j] = multichains of the current length ending at ideals[j]
    std::vector<BigInt> u(count, BigInt(1));
    for (long step = 0; step < m - 2; ++step) {
        std::vector<BigInt> next(count, BigInt(0));
        for (size_t j = 0; j < count; ++j)
            for (size_t i = 0; i < count; ++i)
                if (!(ideals[i] & ~ideals[j])) next[j] += u[i];
        u = std::move(next);
    }
    BigInt total = 0;
    for (const auto& x : u) total += x;
    return total;
}

EhrhartTable ehrhart_table(int n, long max_m) {
    if (max_m < 0) throw std::invalid_argument("ehrhart_table: max_m must be >= 0");
    EhrhartTable table{n, {}};
    table.values.reserve(static_cast<size_t>(max_m) + 1);
    for (long m = 0; m <= max_m; ++m) table.values.push_back(count_lattice_points(n, m));
    return table;
}

IntPolynomial hstar_from_ehrhart(int n) {
    EhrhartTable table = ehrhart_table(n, n + 2);
    auto coefficient = [&](int j) {
        BigInt h = 0;
        for (int k = 0; k <= j; ++k) {
            if (j - k > n + 2) continue;
            BigInt term = binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)) *
                          table.values[static_cast<size_t>(j - k)];
            h += (k % 2 == 0) ? term : -term;
        }
        return h;
    };
    std::vector<BigInt> coeffs;
    for (int j = 0; j <= n; ++j) coeffs.push_back(coefficient(j));
    for (int j = n + 1; j <= n + 2; ++j)
        if (coefficient(j) != 0)
            throw internal_inconsistency("hstar_from_ehrhart: numerator does not terminate at degree n");
    for (const auto& c : coeffs)
        if (c < 0) throw internal_inconsistency("hstar_from_ehrhart: negative coefficient");
    return IntPolynomial(std::move(coeffs));
}

std::vector<BigRat> ehrhart_polynomial(int n) {
    EhrhartTable table = ehrhart_table(n, n);
    // forward differences at 0
    std::vector<BigInt> diff(table.values.begin(), table.values.end());
    std::vector<BigInt> lead;
    for (int j = 0; j <= n; ++j) {
        lead.push_back(diff[0]);
        for (size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
        diff.pop_back();
    }
    // i(m) = sum_j lead[j] * C(m, j); expand the falling factorials
    std::vector<BigRat> coeffs(static_cast<size_t>(n) + 1, BigRat(0));
    std::vector<BigInt> falling{1};  // coefficients of m(m-1)...(m-j+1), constant first
    BigInt factorial = 1;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) {
            factorial *= j;
            // multiply by (m - (j-1))
            std::vector<BigInt> next(falling.size() + 1, BigInt(0));
            for (size_t k = 0; k < falling.size(); ++k) {
                next[k + 1] += falling[k];
                next[k] -= falling[k] * (j - 1);
            }
            falling = std::move(next);
        }
        for (size_t k = 0; k < falling.size(); ++k) {
            BigRat term(lead[static_cast<size_t>(j)] * falling[k]);
            term /= BigRat(factorial);
            coeffs[k] += term;
        }
    }
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

}  // namespace zigzag
