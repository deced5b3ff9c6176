#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gkt/polynomial.hpp"

namespace gkt {

// Weakly decreasing list of positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    bool fits_in_box(int max_parts, int max_part) const {
        if (length() > max_parts) return false;
        for (int p : parts)
            if (p > max_part) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int i = 1; parts.size() && i <= parts[0]; ++i) {
            int cnt = 0;
            for (int p : parts)
                if (p >= i) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All partitions fitting in a (max_parts x max_part) box, empty one included.
inline std::vector<Partition> partitions_in_box(int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining_rows, int cap) -> void {
        out.push_back(Partition(std::vector<int>(cur)));
        if (remaining_rows == 0) return;
        for (int p = cap; p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining_rows - 1, p);
            cur.pop_back();
        }
    };
    rec(rec, max_parts, max_part);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// j-th elementary symmetric polynomial of the given arguments (which may be
// arbitrary polynomials, e.g. u^2 + u^-2). e_0 = 1.
template <class C>
Polynomial<C> elementary_symmetric(const std::vector<Polynomial<C>>& args, int j) {
    if (j < 0 || j > static_cast<int>(args.size()))
        throw std::invalid_argument("elementary_symmetric: index out of range");
    bool laurent = false;
    for (auto& a : args) laurent = laurent || a.laurent;
    std::vector<Polynomial<C>> e(j + 1, Polynomial<C>::zero(laurent));
    e[0] = Polynomial<C>::constant(C(1), laurent);
    int seen = 0;
    for (auto& a : args) {
        ++seen;
        for (int i = std::min(j, seen); i >= 1; --i) e[i] += e[i - 1] * a;
    }
    return e[j];
}

// j-th complete homogeneous symmetric polynomial of the arguments. h_0 = 1.
template <class C>
Polynomial<C> complete_homogeneous(const std::vector<Polynomial<C>>& args, int j) {
    if (j < 0) throw std::invalid_argument("complete_homogeneous: negative index");
    bool laurent = false;
    for (auto& a : args) laurent = laurent || a.laurent;
    std::vector<Polynomial<C>> h(j + 1, Polynomial<C>::zero(laurent));
    h[0] = Polynomial<C>::constant(C(1), laurent);
    for (auto& a : args)
        for (int i = 1; i <= j; ++i) h[i] += h[i - 1] * a;
    return h[j];
}

template <class C>
Polynomial<C> det_poly(const std::vector<std::vector<Polynomial<C>>>& m) {
    size_t n = m.size();
    if (n == 0) return Polynomial<C>::constant(C(1));
    // cofactor expansion along the first row; fine at the sizes used here
    if (n == 1) return m[0][0];
    Polynomial<C> acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial<C>>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial<C>> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial<C> cof = m[0][j] * det_poly(sub);
        if (j % 2 == 0) acc += cof;
        else acc -= cof;
    }
    return acc;
}

enum class SchurRoute { JacobiTrudi, Bialternant };

// Schur polynomial s_lambda(vars). Zero when the partition has more rows than
// variables. Jacobi-Trudi: det(h_{lambda_i - i + j}); bialternant: the ratio
// of alternants, computed by exact division.
template <class C>
Polynomial<C> schur_polynomial(const Partition& lambda, const std::vector<VarId>& vars,
                               SchurRoute route = SchurRoute::JacobiTrudi) {
    int n = static_cast<int>(vars.size());
    std::vector<Polynomial<C>> xs;
    for (VarId v : vars) xs.push_back(Polynomial<C>::variable(v));
    if (lambda.length() == 0) return Polynomial<C>::constant(C(1));
    if (route == SchurRoute::JacobiTrudi) {
        int l = lambda.length();
        int maxh = lambda.parts[0] + l;
        std::vector<Polynomial<C>> h(maxh + 1);
        for (int d = 0; d <= maxh; ++d) h[d] = complete_homogeneous(xs, d);
        std::vector<std::vector<Polynomial<C>>> m(l, std::vector<Polynomial<C>>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                int d = lambda.parts[i] - (i + 1) + (j + 1);
                m[i][j] = d < 0 ? Polynomial<C>::zero() : h[d];
            }
        return det_poly(m);
    }
    // bialternant needs as many variables as there are rows
    if (lambda.length() > n) return Polynomial<C>::zero();
    auto alternant = [&](const std::vector<int>& expo) {
        std::vector<std::vector<Polynomial<C>>> m(n, std::vector<Polynomial<C>>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = xs[i].pow(expo[j]);
        return det_poly(m);
    };
    std::vector<int> top(n), bottom(n);
    for (int j = 0; j < n; ++j) {
        int lam = j < lambda.length() ? lambda.parts[j] : 0;
        top[j] = lam + n - 1 - j;
        bottom[j] = n - 1 - j;
    }
    Polynomial<C> num = alternant(top), den = alternant(bottom);
    if (num.is_zero()) return num;
    return divide_exact(num, den);
}

// Newton's identities between elementary symmetric values and power sums,
// exact over the rationals. Input shorter than `count` is padded with zeros
// (elementary symmetric functions vanish above the variable count).
enum class NewtonDirection { ElementaryToPower, PowerToElementary };

inline std::vector<Rat> newton_convert(NewtonDirection dir, const std::vector<Rat>& input,
                                       int count) {
    if (count < 0) throw std::invalid_argument("newton_convert: negative count");
    auto get = [&](const std::vector<Rat>& v, int idx) {  // 1-based
        return idx >= 1 && idx <= static_cast<int>(v.size()) ? v[idx - 1] : Rat(0);
    };
    std::vector<Rat> out(count);
    if (dir == NewtonDirection::ElementaryToPower) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        for (int k = 1; k <= count; ++k) {
            Rat pk(0);
            for (int i = 1; i < k; ++i) {
                Rat term = get(input, i) * out[k - i - 1];
                pk += (i % 2 == 1) ? term : Rat(-term);
            }
            Rat last = Rat(k) * get(input, k);
            pk += (k % 2 == 1) ? last : Rat(-last);
            out[k - 1] = pk;
        }
    } else {
        // e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        for (int k = 1; k <= count; ++k) {
            Rat ek(0);
            for (int i = 1; i <= k; ++i) {
                Rat prev = (k - i >= 1) ? out[k - i - 1] : (k - i == 0 ? Rat(1) : Rat(0));
                Rat term = prev * get(input, i);
                ek += (i % 2 == 1) ? term : Rat(-term);
            }
            out[k - 1] = ek / Rat(k);
        }
    }
    return out;
}

}  // namespace gkt
