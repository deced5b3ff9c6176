#pragma once

#include <chrono>
#include <deque>
#include <unordered_map>
#include <vector>

#include "gkt/intmatrix.hpp"
#include "gkt/polynomial.hpp"

namespace gkt {

enum class OrderKind { Grevlex, Lex };

// A monomial order on a fixed, ordered variable list (earlier = more
// significant; grevlex breaks degree ties from the last variable backwards).
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<VarId> vars;
    std::unordered_map<VarId, int> pos;

    MonomialOrder() = default;
    MonomialOrder(OrderKind k, std::vector<VarId> vs) : kind(k), vars(std::move(vs)) {
        for (size_t i = 0; i < vars.size(); ++i) pos.emplace(vars[i], static_cast<int>(i));
    }

    std::vector<int> expvec(const Monomial& m) const {
        std::vector<int> e(vars.size(), 0);
        for (auto& [v, x] : m.e) {
            auto it = pos.find(v);
            if (it == pos.end())
                throw std::invalid_argument("monomial uses variable outside the order: " + var_name(v));
            e[it->second] = x;
        }
        return e;
    }

    int cmp(const Monomial& a, const Monomial& b) const {
        std::vector<int> ea = expvec(a), eb = expvec(b);
        if (kind == OrderKind::Lex) {
            for (size_t i = 0; i < ea.size(); ++i)
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
            return 0;
        }
        long da = 0, db = 0;
        for (int x : ea) da += x;
        for (int x : eb) db += x;
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = ea.size(); i-- > 0;)
            if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct NotFinitelyGenerated : std::runtime_error {
    explicit NotFinitelyGenerated(const std::string& what) : std::runtime_error(what) {}
};

// Resource guard for the completion loop; exceeding it is an operational
// failure, reported distinctly from any mathematical error.
struct Budget {
    long max_steps = 5'000'000;
    long max_millis = 0;          // 0 = unlimited
    long max_coeff_bits = 1 << 20;  // deterministic guard against coefficient swell
    mutable long steps = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void tick(long n = 1) const {
        steps += n;
        if (max_steps > 0 && steps > max_steps)
            throw BudgetExceeded("groebner budget exceeded: step cap");
        if (max_millis > 0 && (steps & 0x3ff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            if (ms > max_millis) throw BudgetExceeded("groebner budget exceeded: time cap");
        }
    }

    void check_size(const Int& c) const {
        if (max_coeff_bits > 0 &&
            static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)) > max_coeff_bits)
            throw BudgetExceeded("groebner budget exceeded: coefficient growth cap");
    }
    void check_size(const Rat& c) const {
        if (max_coeff_bits > 0 &&
            static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                              mpz_sizeinbase(c.get_den().get_mpz_t(), 2)) > max_coeff_bits)
            throw BudgetExceeded("groebner budget exceeded: coefficient growth cap");
    }
};

template <class C>
struct IdealPresentation {
    std::vector<VarId> vars;
    std::vector<Polynomial<C>> gens;
    MonomialOrder order;

    IdealPresentation() = default;
    IdealPresentation(std::vector<VarId> vs, std::vector<Polynomial<C>> gs,
                      OrderKind kind = OrderKind::Grevlex)
        : vars(vs), gens(std::move(gs)), order(kind, std::move(vs)) {
        for (auto& g : gens) {
            for (auto& [m, c] : g.t)
                if (m.has_negative())
                    throw std::invalid_argument("ideal generators must not be Laurent");
            g.laurent = false;
        }
    }
};

namespace gbdetail {

// Working representation: terms sorted descending under the active order.
template <class C>
struct GPoly {
    std::vector<std::pair<Monomial, C>> t;

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const C& lc() const { return t.front().second; }
};

template <class C>
GPoly<C> to_gpoly(const Polynomial<C>& p, const MonomialOrder& ord) {
    GPoly<C> g;
    g.t = p.t;
    std::sort(g.t.begin(), g.t.end(),
              [&](const auto& a, const auto& b) { return ord.cmp(a.first, b.first) > 0; });
    return g;
}

template <class C>
Polynomial<C> to_poly(const GPoly<C>& g) {
    Polynomial<C> p;
    std::map<Monomial, C, GrlexNameLess> acc;
    for (auto& [m, c] : g.t) acc[m] += c;
    return Polynomial<C>::from_map(std::move(acc), false);
}

// r += c * u * g, keeping r sorted descending.
template <class C>
void axpy(GPoly<C>& r, const C& c, const Monomial& u, const GPoly<C>& g,
          const MonomialOrder& ord) {
    if (c == 0) return;
    std::vector<std::pair<Monomial, C>> out;
    out.reserve(r.t.size() + g.t.size());
    size_t i = 0, j = 0;
    while (i < r.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.push_back(r.t[i++]);
            continue;
        }
        Monomial gm = u * g.t[j].first;
        if (i == r.t.size()) {
            C cc = c * g.t[j].second;
            if (cc != 0) out.push_back({std::move(gm), std::move(cc)});
            ++j;
            continue;
        }
        int cv = ord.cmp(r.t[i].first, gm);
        if (cv > 0) {
            out.push_back(r.t[i++]);
        } else if (cv < 0) {
            C cc = c * g.t[j].second;
            if (cc != 0) out.push_back({std::move(gm), std::move(cc)});
            ++j;
        } else {
            C cc = r.t[i].second + c * g.t[j].second;
            if (cc != 0) out.push_back({r.t[i].first, std::move(cc)});
            ++i;
            ++j;
        }
    }
    r.t = std::move(out);
}

template <class C>
struct ReducerChoice {
    int index = -1;
    C quotient;
};

// Choose a reducer for the term (m, a). Over Z: Euclidean reduction against
// the applicable basis element of smallest |leading coefficient|; quotient 0
// means the term is already fully reduced. Over Q: any applicable element.
inline ReducerChoice<Int> choose_reducer(const Monomial& m, const Int& a,
                                         const std::vector<GPoly<Int>>& basis) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        if (basis[i].zero() || !m.divisible_by(basis[i].lm())) continue;
        if (best < 0 || int_cmpabs(basis[i].lc(), basis[best].lc()) < 0) best = i;
    }
    ReducerChoice<Int> r;
    if (best < 0) return r;
    Int q, rem;
    int_fdiv_qr(a, basis[best].lc(), q, rem);
    if (q == 0) return r;  // coefficient already canonical for this monomial
    r.index = best;
    r.quotient = q;
    return r;
}

inline ReducerChoice<Rat> choose_reducer(const Monomial& m, const Rat& a,
                                         const std::vector<GPoly<Rat>>& basis) {
    ReducerChoice<Rat> r;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        if (basis[i].zero() || !m.divisible_by(basis[i].lm())) continue;
        r.index = i;
        r.quotient = a / basis[i].lc();
        return r;
    }
    return r;
}

// Full normal form: every term canonically reduced. Deterministic.
template <class C>
GPoly<C> reduce_full(GPoly<C> f, const std::vector<GPoly<C>>& basis, const MonomialOrder& ord,
                     const Budget& budget) {
    GPoly<C> done;
    while (!f.zero()) {
        budget.tick();
        budget.check_size(f.t.front().second);
        auto [m, a] = f.t.front();
        auto choice = choose_reducer(m, a, basis);
        if (choice.index < 0) {
            done.t.push_back({m, a});
            f.t.erase(f.t.begin());
            continue;
        }
        Monomial u = *m.divide(basis[choice.index].lm());
        axpy(f, C(-choice.quotient), u, basis[choice.index], ord);
    }
    return done;
}

template <class C>
void normalize_lead(GPoly<C>& g) {
    if (g.zero()) return;
    if constexpr (std::is_same_v<C, Int>) {
        if (g.lc() < 0)
            for (auto& [m, c] : g.t) c = -c;
    } else {
        Rat inv = Rat(1) / g.lc();
        for (auto& [m, c] : g.t) c = c * inv;
    }
}

}  // namespace gbdetail

// A strong Groebner basis over Z (every ideal element's leading term is
// divisible, coefficient included, by some basis leading term), or an
// ordinary reduced Groebner basis over Q. Basis is minimal, tail-reduced,
// sorted, with positive (resp. unit) leading coefficients.
template <class C>
struct StrongGB {
    MonomialOrder order;
    std::vector<Polynomial<C>> basis;
    std::vector<gbdetail::GPoly<C>> gp;  // same elements, order-sorted

    const Polynomial<C>& operator[](size_t i) const { return basis[i]; }
    size_t size() const { return basis.size(); }
};

template <class C>
StrongGB<C> strong_groebner(const IdealPresentation<C>& ideal, const Budget& budget = Budget{}) {
    using gbdetail::GPoly;
    const MonomialOrder& ord = ideal.order;
    std::vector<GPoly<C>> basis;
    for (auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        GPoly<C> gp = gbdetail::to_gpoly(g, ord);
        gbdetail::normalize_lead(gp);
        basis.push_back(std::move(gp));
    }

    std::deque<std::pair<int, int>> pairs;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) pairs.push_back({i, k});
    };
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) push_pairs(k);

    auto consider = [&](GPoly<C> cand) {
        cand = gbdetail::reduce_full(std::move(cand), basis, ord, budget);
        if (cand.zero()) return;
        gbdetail::normalize_lead(cand);
        basis.push_back(std::move(cand));
        push_pairs(static_cast<int>(basis.size()) - 1);
    };

    while (!pairs.empty()) {
        budget.tick();
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // copies: consider() may reallocate the basis
        GPoly<C> f = basis[i];
        GPoly<C> g = basis[j];
        if (f.zero() || g.zero()) continue;
        Monomial L = Monomial::lcm(f.lm(), g.lm());
        Monomial uf = *L.divide(f.lm());
        Monomial ug = *L.divide(g.lm());

        if constexpr (std::is_same_v<C, Int>) {
            Int cl = int_lcm(f.lc(), g.lc());
            GPoly<C> s;
            gbdetail::axpy(s, Int(cl / f.lc()), uf, f, ord);
            gbdetail::axpy(s, Int(-cl / g.lc()), ug, g, ord);
            consider(std::move(s));
            Int d = int_gcd(f.lc(), g.lc());
            if (int_cmpabs(d, f.lc()) != 0 && int_cmpabs(d, g.lc()) != 0) {
                Int x, y;
                int_gcdext(f.lc(), g.lc(), x, y);
                GPoly<C> gp;
                gbdetail::axpy(gp, x, uf, f, ord);
                gbdetail::axpy(gp, y, ug, g, ord);
                consider(std::move(gp));
            }
        } else {
            // product criterion: coprime leading monomials over a field
            bool coprime = true;
            for (auto& [v, x] : f.lm().e)
                if (g.lm().exp(v) != 0) coprime = false;
            if (coprime) continue;
            GPoly<C> s;
            gbdetail::axpy(s, Rat(Rat(1) / f.lc()), uf, f, ord);
            gbdetail::axpy(s, Rat(Rat(-1) / g.lc()), ug, g, ord);
            consider(std::move(s));
        }
    }

    // minimalize: drop elements whose leading term is divisible (coefficient
    // included over Z) by another's; exact leading-term ties keep the first
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].zero()) { keep[i] = false; continue; }
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].zero()) continue;
            if (!basis[i].lm().divisible_by(basis[j].lm())) continue;
            if constexpr (std::is_same_v<C, Int>) {
                if (basis[i].lc() % basis[j].lc() != 0) continue;
            }
            bool same_lt = basis[j].lm() == basis[i].lm();
            if constexpr (std::is_same_v<C, Int>) same_lt = same_lt && basis[j].lc() == basis[i].lc();
            if (same_lt && j > i) continue;
            keep[i] = false;
            break;
        }
    }
    std::vector<gbdetail::GPoly<C>> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // tail-reduce each element against the others
    for (size_t i = 0; i < minimal.size(); ++i) {
        gbdetail::GPoly<C> head;
        head.t.push_back(minimal[i].t.front());
        gbdetail::GPoly<C> tail = minimal[i];
        tail.t.erase(tail.t.begin());
        std::vector<gbdetail::GPoly<C>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        tail = gbdetail::reduce_full(std::move(tail), others, ord, budget);
        for (auto& term : tail.t) head.t.push_back(term);
        minimal[i] = std::move(head);
    }

    std::sort(minimal.begin(), minimal.end(),
              [&](const auto& a, const auto& b) { return ord.cmp(a.lm(), b.lm()) < 0; });

    StrongGB<C> out;
    out.order = ord;
    for (auto& g : minimal) {
        out.basis.push_back(gbdetail::to_poly(g));
        out.gp.push_back(std::move(g));
    }
    return out;
}

// Fully reduced canonical normal form; zero iff f lies in the ideal.
template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const StrongGB<C>& G,
                          const Budget& budget = Budget{}) {
    auto g = gbdetail::reduce_full(gbdetail::to_gpoly(f, G.order), G.gp, G.order, budget);
    return gbdetail::to_poly(g);
}

// The quotient ring as a finitely generated abelian group: monomial
// generators are the monomials not divisible by any unit-leading-coefficient
// leading monomial; relations are reduced images of c*m for non-unit leading
// terms.
struct FgQuotientGroup {
    std::vector<Monomial> monomial_generators;  // ascending in the GB order
    IntMatrix relations;
    FinAbGroup group;
    std::map<Monomial, int> index;

    int index_of(const Monomial& m) const {
        auto it = index.find(m);
        return it == index.end() ? -1 : it->second;
    }
};

inline FgQuotientGroup quotient_group_structure(const StrongGB<Int>& G,
                                                const Budget& budget = Budget{}) {
    // finiteness: every variable needs a pure-power unit leading monomial
    std::vector<int> bound(G.order.vars.size(), -1);
    std::vector<Monomial> unit_lms;
    for (auto& g : G.gp) {
        if (g.zero()) continue;
        Int ac = abs(g.lc());
        if (ac != 1) continue;
        unit_lms.push_back(g.lm());
        const Monomial& m = g.lm();
        if (m.e.size() == 1) {
            int vi = G.order.pos.at(m.e[0].first);
            if (bound[vi] < 0 || m.e[0].second < bound[vi]) bound[vi] = m.e[0].second;
        }
        if (m.is_one()) {  // ideal contains a unit: zero ring
            FgQuotientGroup q;
            q.relations = IntMatrix(0, 0);
            return q;
        }
    }
    for (size_t i = 0; i < bound.size(); ++i)
        if (bound[i] < 0)
            throw NotFinitelyGenerated(
                "quotient not finitely generated as detected: no unit pure power of " +
                var_name(G.order.vars[i]));

    std::vector<Monomial> mon;
    std::vector<int> cur(bound.size(), 0);
    auto enumerate = [&](auto&& self, size_t i) -> void {
        if (i == bound.size()) {
            Monomial m;
            for (size_t j = 0; j < bound.size(); ++j)
                m = m * Monomial::var(G.order.vars[j], cur[j]);
            for (auto& u : unit_lms)
                if (m.divisible_by(u)) return;
            mon.push_back(m);
            return;
        }
        for (cur[i] = 0; cur[i] < bound[i]; ++cur[i]) self(self, i + 1);
        cur[i] = 0;
    };
    enumerate(enumerate, 0);
    std::sort(mon.begin(), mon.end(),
              [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });

    FgQuotientGroup q;
    q.monomial_generators = mon;
    for (int i = 0; i < static_cast<int>(mon.size()); ++i) q.index.emplace(mon[i], i);

    q.relations = IntMatrix(0, static_cast<int>(mon.size()));
    for (auto& g : G.gp) {
        if (g.zero() || abs(g.lc()) == 1) continue;
        for (auto& m : mon) {
            if (!m.divisible_by(g.lm())) continue;
            Monomial u = *m.divide(g.lm());
            // row for u*g: leading term stays, tail is canonically reduced
            gbdetail::GPoly<Int> tail;
            gbdetail::axpy(tail, Int(1), u, g, G.order);
            tail.t.erase(tail.t.begin());
            tail = gbdetail::reduce_full(std::move(tail), G.gp, G.order, budget);
            std::vector<Int> row(mon.size());
            row[q.index_of(m)] += g.lc();
            for (auto& [mm, cc] : tail.t) {
                int idx = q.index_of(mm);
                if (idx < 0) throw std::logic_error("reduced tail escaped the standard monomials");
                row[idx] += cc;
            }
            q.relations.append_row(row);
        }
    }
    q.group = cokernel_group(q.relations, static_cast<int>(mon.size()));
    return q;
}

// Coordinates of the canonical normal form of f over the monomial generators.
inline std::vector<Int> nf_vector(const PolyZ& f, const StrongGB<Int>& G,
                                  const FgQuotientGroup& q, const Budget& budget = Budget{}) {
    PolyZ nf = normal_form(f, G, budget);
    std::vector<Int> v(q.monomial_generators.size());
    for (auto& [m, c] : nf.t) {
        int idx = q.index_of(m);
        if (idx < 0) throw std::logic_error("normal form escaped the standard monomials");
        v[idx] = c;
    }
    return v;
}

// Standard monomials (not divisible by any leading monomial) of a Q-basis,
// sorted ascending in the order; throws when infinite.
inline std::vector<Monomial> standard_monomials(const StrongGB<Rat>& G) {
    std::vector<int> bound(G.order.vars.size(), -1);
    std::vector<Monomial> lms;
    for (auto& g : G.gp) {
        lms.push_back(g.lm());
        if (g.lm().is_one()) return {};
        if (g.lm().e.size() == 1) {
            int vi = G.order.pos.at(g.lm().e[0].first);
            if (bound[vi] < 0 || g.lm().e[0].second < bound[vi]) bound[vi] = g.lm().e[0].second;
        }
    }
    for (size_t i = 0; i < bound.size(); ++i)
        if (bound[i] < 0)
            throw NotFinitelyGenerated("infinite-dimensional quotient: variable " +
                                       var_name(G.order.vars[i]));
    std::vector<Monomial> mons;
    std::vector<int> cur(bound.size(), 0);
    auto enumerate = [&](auto&& self, size_t i) -> void {
        if (i == bound.size()) {
            Monomial m;
            for (size_t j = 0; j < bound.size(); ++j)
                m = m * Monomial::var(G.order.vars[j], cur[j]);
            for (auto& u : lms)
                if (m.divisible_by(u)) return;
            mons.push_back(m);
            return;
        }
        for (cur[i] = 0; cur[i] < bound[i]; ++cur[i]) self(self, i + 1);
        cur[i] = 0;
    };
    enumerate(enumerate, 0);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });
    return mons;
}

// Number of standard monomials of a Q-ideal (the Q-dimension of the quotient).
inline long q_dimension(const IdealPresentation<Rat>& ideal, const Budget& budget = Budget{}) {
    StrongGB<Rat> G = strong_groebner(ideal, budget);
    bool zero_ring = false;
    for (auto& g : G.gp)
        if (g.lm().is_one()) zero_ring = true;
    if (zero_ring) return 0;
    return static_cast<long>(standard_monomials(G).size());
}

}  // namespace gkt
