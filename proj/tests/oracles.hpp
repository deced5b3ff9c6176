#pragma once

// Test-only independent oracles. These deliberately avoid the library's own
// algebraic machinery so the checks stay two-sided.

#include <random>
#include <vector>

#include "gkt/symfunc.hpp"
#include "gkt/zgb.hpp"

namespace gkt_oracles {

// Reduction with randomized choices of reducible term and reducer; for a
// strong basis the fully reduced result must match the deterministic normal
// form whatever the path.
inline gkt::PolyZ shuffled_nf(const gkt::PolyZ& f, const gkt::StrongGB<gkt::Int>& G,
                              std::mt19937_64& rng) {
    using namespace gkt;
    auto terms = gbdetail::to_gpoly(f, G.order);
    for (;;) {
        std::vector<std::pair<int, int>> options;
        for (int ti = 0; ti < static_cast<int>(terms.t.size()); ++ti)
            for (int bi = 0; bi < static_cast<int>(G.gp.size()); ++bi) {
                if (!terms.t[ti].first.divisible_by(G.gp[bi].lm())) continue;
                Int q, r;
                int_fdiv_qr(terms.t[ti].second, G.gp[bi].lc(), q, r);
                if (q != 0) options.push_back({ti, bi});
            }
        if (options.empty()) break;
        auto [ti, bi] = options[rng() % options.size()];
        Int q, r;
        int_fdiv_qr(terms.t[ti].second, G.gp[bi].lc(), q, r);
        Monomial u = *terms.t[ti].first.divide(G.gp[bi].lm());
        gbdetail::axpy(terms, Int(-q), u, G.gp[bi], G.order);
    }
    return gbdetail::to_poly(terms);
}

// Random small ideal in the given variables; generators have up to three
// terms of per-variable degree at most two.
inline std::vector<gkt::PolyZ> random_ideal(std::mt19937_64& rng,
                                            const std::vector<gkt::VarId>& vars, int ngens) {
    using namespace gkt;
    std::uniform_int_distribution<int> coef(-6, 6), expd(0, 2), nt(1, 3);
    std::vector<PolyZ> gens;
    for (int g = 0; g < ngens; ++g) {
        PolyZ p;
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            int c = coef(rng);
            if (c == 0) c = 1;
            Monomial m;
            for (VarId v : vars) m = m * Monomial::var(v, expd(rng));
            p += PolyZ::term(m, Int(c));
        }
        if (!p.is_zero()) gens.push_back(p);
    }
    return gens;
}

// Count semistandard Young tableaux of the given shape with entries in 1..n
// by brute-force filling: weakly increasing rows, strictly increasing columns.
inline long count_ssyt(const gkt::Partition& lambda, int n) {
    std::vector<std::vector<int>> fill(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) fill[i].assign(lambda.parts[i], 0);
    long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == lambda.length()) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.parts[r]) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < lambda.parts[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[r][c] = v;
            self(self, nr, nc);
        }
        fill[r][c] = 0;
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace gkt_oracles
