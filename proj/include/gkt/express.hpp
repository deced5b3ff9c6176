#pragma once

#include <map>
#include <set>
#include <vector>

#include "gkt/intmatrix.hpp"
#include "gkt/polynomial.hpp"

namespace gkt {

enum class ExpressStatus { Found, NotExpressibleProven, NotExpressibleWithinCap };

// target = sum over multi-indices alpha of c_alpha * prod gens^alpha.
template <class C>
struct ExpressResult {
    ExpressStatus status = ExpressStatus::NotExpressibleWithinCap;
    std::map<std::vector<int>, C> combination;
};

namespace exprdetail {

template <class C>
bool homogeneous(const Polynomial<C>& p, long& deg) {
    if (p.is_zero()) { deg = 0; return true; }
    deg = p.t.front().first.degree();
    for (auto& [m, c] : p.t)
        if (m.degree() != deg) return false;
    return true;
}

inline std::optional<std::vector<Rat>> solve_left_rat(const std::vector<std::vector<Rat>>& rows,
                                                      const std::vector<Rat>& b) {
    // Find x with sum_i x_i * rows[i] = b by Gaussian elimination on the
    // transposed augmented system.
    size_t n = rows.size();
    if (n == 0) {
        for (auto& v : b)
            if (v != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    size_t m = rows[0].size();
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1));
    for (size_t j = 0; j < m; ++j) {
        for (size_t i = 0; i < n; ++i) aug[j][i] = rows[i][j];
        aug[j][n] = b[j];
    }
    std::vector<int> pivot_col(m, -1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t p = r;
        while (p < m && aug[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[r]);
        Rat inv = Rat(1) / aug[r][c];
        for (size_t j = c; j <= n; ++j) aug[r][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (aug[i][n] != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (size_t i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[i])] = aug[i][n];
    return x;
}

}  // namespace exprdetail

// Exact linear solve for the coefficients of `target` as a polynomial in the
// given generators, using monomials of generator-degree at most `cap`. When
// generators and target are homogeneous of positive degree the degree-matched
// system is complete, so inconsistency there proves impossibility; otherwise
// failure is only "not expressible within the cap".
template <class C>
ExpressResult<C> express_in_subring(const Polynomial<C>& target,
                                    const std::vector<Polynomial<C>>& gens, int cap) {
    ExpressResult<C> out;
    if (gens.empty()) {
        if (target.is_zero()) { out.status = ExpressStatus::Found; }
        else if (target.is_constant()) {
            out.status = ExpressStatus::Found;
            out.combination[std::vector<int>{}] = target.constant_coeff();
        }
        return out;
    }

    bool graded = true;
    std::vector<long> gdeg(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!exprdetail::homogeneous(gens[i], gdeg[i]) || gdeg[i] <= 0 || gens[i].is_zero())
            graded = false;
    }
    long tdeg = 0;
    if (!exprdetail::homogeneous(target, tdeg)) graded = false;

    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(gens.size(), 0);
    auto rec = [&](auto&& self, size_t i, int used, long wdeg) -> void {
        if (i == gens.size()) {
            if (!graded || wdeg == tdeg) alphas.push_back(cur);
            return;
        }
        int limit = graded ? static_cast<int>((tdeg - wdeg) / gdeg[i]) : (cap - used);
        if (!graded && limit > cap - used) limit = cap - used;
        for (int a = 0; a <= limit; ++a) {
            cur[i] = a;
            self(self, i + 1, used + a, wdeg + a * gdeg[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0, 0);

    std::vector<Polynomial<C>> expansions;
    expansions.reserve(alphas.size());
    for (auto& alpha : alphas) {
        Polynomial<C> p = Polynomial<C>::constant(C(1), target.laurent);
        for (size_t i = 0; i < gens.size(); ++i)
            if (alpha[i] > 0) p *= gens[i].pow(alpha[i]);
        expansions.push_back(std::move(p));
    }

    std::set<Monomial> support;
    for (auto& p : expansions)
        for (auto& [m, c] : p.t) support.insert(m);
    for (auto& [m, c] : target.t) support.insert(m);
    std::map<Monomial, int> col;
    int nc = 0;
    for (auto& m : support) col.emplace(m, nc++);

    auto fail = [&]() {
        out.status = graded ? ExpressStatus::NotExpressibleProven
                            : ExpressStatus::NotExpressibleWithinCap;
        return out;
    };

    if constexpr (std::is_same_v<C, Int>) {
        IntMatrix rows(0, nc);
        for (auto& p : expansions) {
            std::vector<Int> row(nc);
            for (auto& [m, c] : p.t) row[col.at(m)] = c;
            rows.append_row(row);
        }
        std::vector<Int> b(nc);
        for (auto& [m, c] : target.t) b[col.at(m)] = c;
        auto sol = solve_left(rows, b);
        if (!sol) return fail();
        out.status = ExpressStatus::Found;
        for (size_t i = 0; i < alphas.size(); ++i)
            if ((*sol)[i] != 0) out.combination[alphas[i]] = (*sol)[i];
    } else {
        std::vector<std::vector<Rat>> rows;
        for (auto& p : expansions) {
            std::vector<Rat> row(nc);
            for (auto& [m, c] : p.t) row[col.at(m)] = c;
            rows.push_back(std::move(row));
        }
        std::vector<Rat> b(nc);
        for (auto& [m, c] : target.t) b[col.at(m)] = c;
        auto sol = exprdetail::solve_left_rat(rows, b);
        if (!sol) return fail();
        out.status = ExpressStatus::Found;
        for (size_t i = 0; i < alphas.size(); ++i)
            if ((*sol)[i] != 0) out.combination[alphas[i]] = (*sol)[i];
    }
    return out;
}

template <class C>
Polynomial<C> reexpand(const ExpressResult<C>& r, const std::vector<Polynomial<C>>& gens) {
    Polynomial<C> sum;
    for (auto& [alpha, c] : r.combination) {
        Polynomial<C> p = Polynomial<C>::constant(c);
        for (size_t i = 0; i < gens.size(); ++i)
            if (i < alpha.size() && alpha[i] > 0) p *= gens[i].pow(alpha[i]);
        sum += p;
    }
    return sum;
}

}  // namespace gkt
