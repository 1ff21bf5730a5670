#include "zigzag/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace zigzag {

long long evaluate(const Inequality& ineq, std::span<const long long> point) {
    if (point.size() != ineq.coeffs.size())
        throw std::invalid_argument("evaluate: dimension mismatch");
    long long acc = 0;
    for (size_t i = 0; i < point.size(); ++i) acc += ineq.coeffs[i] * point[i];
    return acc;
}

std::vector<Inequality> facet_inequalities(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("facet_inequalities: n must be in [1,62]");
    std::vector<Inequality> out;
    auto unit = [n](int i, int sign) {
        std::vector<int> c(static_cast<size_t>(n), 0);
        c[static_cast<size_t>(i - 1)] = sign;
        return c;
    };
    if (n == 1) {
        out.push_back(Inequality{unit(1, -1), 0});
        out.push_back(Inequality{unit(1, 1), 1});
        return out;
    }
    for (int i = 1; i <= n; i += 2) out.push_back(Inequality{unit(i, -1), 0});   // 0 <= x_i
    for (int i = 2; i <= n; i += 2) out.push_back(Inequality{unit(i, 1), 1});    // x_i <= 1
    for (int i = 1; i + 1 <= n; i += 2) {                                        // x_i <= x_{i+1}
        auto c = unit(i, 1);
        c[static_cast<size_t>(i)] = -1;
        out.push_back(Inequality{std::move(c), 0});
    }
    for (int i = 2; i + 1 <= n; i += 2) {                                        // x_i >= x_{i+1}
        auto c = unit(i, -1);
        c[static_cast<size_t>(i)] = 1;
        out.push_back(Inequality{std::move(c), 0});
    }
    return out;
}

std::vector<Mask> polytope_vertices(int n) {
    std::vector<Mask> verts;
    for (Mask ideal : order_ideals(n)) verts.push_back(full_mask(n) & ~ideal);
    std::sort(verts.begin(), verts.end());
    return verts;
}

Simplex simplex_of(const AltPerm& sigma) {
    const int n = sigma.size();
    auto inv = sigma.inverse();
    Simplex s{sigma, {full_mask(n)}};
    Mask cur = full_mask(n);
    for (int k = 1; k <= n; ++k) {
        cur &= ~(1ull << (inv[static_cast<size_t>(k - 1)] - 1));
        s.verts.push_back(cur);
    }
    return s;
}

std::vector<Mask> exclusion_set(const AltPerm& sigma) {
    Simplex s = simplex_of(sigma);
    std::vector<Mask> out;
    for (int k : swap_set(sigma)) out.push_back(s.verts[static_cast<size_t>(k)]);
    return out;
}

bool share_facet(const AltPerm& sigma, const AltPerm& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("share_facet: sizes differ");
    if (sigma == tau)
        throw std::invalid_argument("share_facet: the two simplices must be distinct");
    Simplex a = simplex_of(sigma), b = simplex_of(tau);
    int agree = 0;
    for (size_t k = 0; k < a.verts.size(); ++k)
        if (a.verts[k] == b.verts[k]) ++agree;
    // each simplex has one vertex per coordinate-sum level, so the common
    // vertices are exactly the levels where the two agree
    return agree == sigma.size();
}

long long simplex_lattice_determinant(const Simplex& simplex) {
    const int n = simplex.source.size();
    if (n > 18) throw std::invalid_argument("simplex_lattice_determinant: n too large");
    // Bareiss fraction-free elimination on the integer edge matrix.
    std::vector<std::vector<long long>> m(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n)));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            long long hi = (simplex.verts[static_cast<size_t>(r)] >> (c - 1)) & 1;
            long long base = (simplex.verts[0] >> (c - 1)) & 1;
            m[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = hi - base;
        }
    long long sign = 1, prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                long long num = m[static_cast<size_t>(r)][static_cast<size_t>(c)] * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                                m[static_cast<size_t>(r)][static_cast<size_t>(k)] * m[static_cast<size_t>(k)][static_cast<size_t>(c)];
                assert(num % prev == 0);
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] = num / prev;
            }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

GorensteinReport gorenstein_check(int n) {
    if (n < 1 || n > 24) throw std::invalid_argument("gorenstein_check: n must be in [1,24]");
    GorensteinReport report;
    report.index = 3;
    auto facets = facet_inequalities(n);

    // interior lattice points of the third dilate: coeffs.y < 3*bound strictly
    auto strictly_interior = [&](std::span<const long long> y) {
        for (const auto& f : facets)
            if (evaluate(f, y) >= 3ll * f.bound) return false;
        return true;
    };

    // The lower/upper bound facets already force every interior candidate
    // into {1,2}^n, so that box scan is exhaustive.
    std::vector<std::vector<long long>> interior;
    std::vector<long long> y(static_cast<size_t>(n), 1);
    for (;;) {
        if (strictly_interior(y)) {
            interior.push_back(y);
            if (interior.size() > 1) break;
        }
        int p = 0;
        while (p < n && y[static_cast<size_t>(p)] == 2) y[static_cast<size_t>(p++)] = 1;
        if (p == n) break;
        ++y[static_cast<size_t>(p)];
    }

    if (interior.size() != 1) {
        report.ok = false;
        report.failure = interior.empty() ? "no interior lattice point in the third dilate"
                                          : "interior lattice point of the third dilate is not unique";
        return report;
    }
    const auto& point = interior.front();
    report.interior_point.assign(point.begin(), point.end());
    for (const auto& f : facets) report.facet_distances.push_back(3ll * f.bound - evaluate(f, point));
    report.ok = std::all_of(report.facet_distances.begin(), report.facet_distances.end(),
                            [](long long d) { return d == 1; });
    if (!report.ok) report.failure = "interior point is not at lattice distance 1 from every facet";
    return report;
}

std::string format_vertex(Mask v, int n) {
    std::string out;
    for (int i = 1; i <= n; ++i) out += ((v >> (i - 1)) & 1) ? '1' : '0';
    return out;
}

Mask parse_vertex(std::string_view text) {
    if (text.empty() || text.size() > 62) throw std::invalid_argument("parse_vertex: bad length");
    Mask v = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            v |= 1ull << i;
        else if (text[i] != '0')
            throw std::invalid_argument("parse_vertex: expected only 0/1");
    }
    return v;
}

std::string format_simplex(const Simplex& simplex) {
    std::string out;
    for (size_t k = 0; k < simplex.verts.size(); ++k) {
        if (k > 0) out += ";";
        out += format_vertex(simplex.verts[k], simplex.source.size());
    }
    return out;
}

}  // namespace zigzag
