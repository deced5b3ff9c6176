#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gkt/charring.hpp"
#include "gkt/symfunc.hpp"
#include "gkt/zgb.hpp"

namespace gkt {

struct GrassmannParams {
    int n = 0, k = 0, s = 0, t = 0, m = 0;
    int n_mod_8 = 0;
    int epsilon = 0;  // theta exponent in the restricted half-spin class
    int l = 0, j = 0;  // n = 4l + j with 0 <= j <= 3
    bool exact = false;  // true when n = 0 mod 4 and k odd (full pipeline)

    static GrassmannParams of(int n, int k) {
        if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
        GrassmannParams p;
        p.n = n;
        p.k = k;
        p.s = k / 2;
        p.t = (n - k) / 2;
        p.l = n / 4;
        p.j = n % 4;
        p.n_mod_8 = n % 8;
        p.exact = (n % 4 == 0) && (k % 2 == 1);
        if (p.exact) {
            p.s = (k - 1) / 2;
            p.t = (n - k - 1) / 2;
            p.m = n / 2;
            p.epsilon = (p.n_mod_8 == 0) ? 0 : 1;
        }
        return p;
    }

    static GrassmannParams exact_of(int n, int k) {
        GrassmannParams p = of(n, k);
        if (!p.exact)
            throw std::invalid_argument(
                "exact K-groups require n = 0 mod 4 and odd k; use hopf-order for bounds");
        return p;
    }
};

inline VarId lam_var(int p) { return intern_var("l" + std::to_string(p)); }
inline VarId mu_var(int q) { return intern_var("m" + std::to_string(q)); }

// S = Z[l1..ls, m1..mt, theta] with the two ideals of the K-group
// presentation: relations f_j - C(n,j) theta^j (with index reflection), plus
// theta^2 - 1, and for the full ideal additionally 2^{m-1}(theta - 1).
struct KPresentation {
    GrassmannParams p;
    std::vector<VarId> vars;          // l's, m's, theta (theta last)
    std::vector<PolyZ> f_relations;   // j = 1..m-1
    std::vector<PolyZ> ideal_I;
    std::vector<PolyZ> ideal_Itilde;
};

namespace ktdetail {

// lambda_p with the reflection lambda_{k-p} = lambda_p; zero outside [0,k]
inline PolyZ lambda_poly(int p, int k, int s) {
    if (p < 0 || p > k) return PolyZ::zero();
    int q = std::min(p, k - p);
    if (q == 0) return PolyZ::constant(Int(1));
    if (q <= s) return PolyZ::variable(lam_var(q));
    throw std::logic_error("reflected lambda index out of range");
}

inline PolyZ mu_poly(int q, int nk, int t) {
    if (q < 0 || q > nk) return PolyZ::zero();
    int r = std::min(q, nk - q);
    if (r == 0) return PolyZ::constant(Int(1));
    if (r <= t) return PolyZ::variable(mu_var(r));
    throw std::logic_error("reflected mu index out of range");
}

inline PolyZ f_poly(int j, const GrassmannParams& p) {
    PolyZ sum;
    for (int a = 0; a <= j; ++a)
        sum += lambda_poly(a, p.k, p.s) * mu_poly(j - a, p.n - p.k, p.t);
    return sum;
}

}  // namespace ktdetail

// Substituting theta = 1, lambda_p = C(k,p), mu_q = C(n-k,q) must annihilate
// every relation (the augmentation, i.e. dimension count).
inline void check_augmentation(const KPresentation& pres) {
    std::map<VarId, Int> vals;
    const auto& p = pres.p;
    for (int i = 1; i <= p.s; ++i) vals[lam_var(i)] = binomial(p.k, i);
    for (int i = 1; i <= p.t; ++i) vals[mu_var(i)] = binomial(p.n - p.k, i);
    vals[theta_var()] = 1;
    for (auto& rel : pres.ideal_I)
        if (evaluate(rel, vals) != 0) throw std::logic_error("augmentation check failed");
}

inline KPresentation build_presentation(int n, int k) {
    GrassmannParams p = GrassmannParams::exact_of(n, k);
    KPresentation pres;
    pres.p = p;
    for (int i = 1; i <= p.s; ++i) pres.vars.push_back(lam_var(i));
    for (int i = 1; i <= p.t; ++i) pres.vars.push_back(mu_var(i));
    pres.vars.push_back(theta_var());

    PolyZ theta = PolyZ::variable(theta_var());
    for (int j = 1; j <= p.m - 1; ++j) {
        PolyZ rel = ktdetail::f_poly(j, p) - PolyZ::constant(binomial(p.n, j)) * theta.pow(j);
        pres.f_relations.push_back(rel);
    }
    PolyZ theta_sq = theta.pow(2) - PolyZ::constant(Int(1));
    PolyZ two_pow = PolyZ::constant(int_pow2(p.m - 1)) * (theta - PolyZ::constant(Int(1)));

    pres.ideal_Itilde.push_back(theta_sq);
    for (auto& r : pres.f_relations) pres.ideal_Itilde.push_back(r);
    pres.ideal_I.push_back(theta_sq);
    pres.ideal_I.push_back(two_pow);
    for (auto& r : pres.f_relations) pres.ideal_I.push_back(r);

    check_augmentation(pres);
    return pres;
}

// Triangular elimination of the mu variables: relation j solves mu_j for
// j = 1..t (its coefficient is 1), leaving m-1-t = s residual relations in
// theta and the lambdas.
struct ReducedPresentation {
    GrassmannParams p;
    std::vector<VarId> vars;           // l's then theta (theta last in the order)
    std::map<VarId, PolyZ> mu_images;  // fully substituted, theta-folded
    std::vector<PolyZ> residual;       // j = t+1 .. m-1
    std::vector<PolyZ> ideal_I;
    std::vector<PolyZ> ideal_Itilde;
};

inline ReducedPresentation eliminate_mu(const KPresentation& pres) {
    ReducedPresentation red;
    red.p = pres.p;
    const auto& p = pres.p;
    for (int i = 1; i <= p.s; ++i) red.vars.push_back(lam_var(i));
    red.vars.push_back(theta_var());

    std::map<VarId, PolyZ> images;
    for (int j = 1; j <= p.t; ++j) {
        PolyZ rel = fold_theta(substitute(pres.f_relations[j - 1], images));
        // rel = mu_j + rest with unit coefficient
        PolyZ mu_j = PolyZ::variable(mu_var(j));
        if (rel.coeff(Monomial::var(mu_var(j))) != 1)
            throw std::logic_error("mu elimination: unexpected leading coefficient");
        images[mu_var(j)] = mu_j - rel;
    }
    red.mu_images = images;
    for (int j = p.t + 1; j <= p.m - 1; ++j)
        red.residual.push_back(fold_theta(substitute(pres.f_relations[j - 1], images)));

    PolyZ theta = PolyZ::variable(theta_var());
    PolyZ theta_sq = theta.pow(2) - PolyZ::constant(Int(1));
    PolyZ two_pow = PolyZ::constant(int_pow2(p.m - 1)) * (theta - PolyZ::constant(Int(1)));
    red.ideal_Itilde.push_back(theta_sq);
    for (auto& r : red.residual) red.ideal_Itilde.push_back(r);
    red.ideal_I.push_back(theta_sq);
    red.ideal_I.push_back(two_pow);
    for (auto& r : red.residual) red.ideal_I.push_back(r);
    return red;
}

// Substitute the eliminated mu's into an arbitrary S-polynomial.
inline PolyZ reduce_to_lambda_theta(const PolyZ& f, const ReducedPresentation& red) {
    return fold_theta(substitute(f, red.mu_images));
}

// --------------------------------------------------------------------------
// Groebner engine

struct GBEngine {
    ReducedPresentation red;
    StrongGB<Int> gb_full;    // ideal I
    StrongGB<Int> gb_tilde;   // ideal I~
    FgQuotientGroup q_full;   // S/I as an abelian group
    FgQuotientGroup q_tilde;  // S/I~ (free, by the structure theory)
};

inline GBEngine gb_engine(const ReducedPresentation& red, const Budget& budget = Budget{}) {
    GBEngine e;
    e.red = red;
    IdealPresentation<Int> full(red.vars, red.ideal_I, OrderKind::Grevlex);
    IdealPresentation<Int> tilde(red.vars, red.ideal_Itilde, OrderKind::Grevlex);
    e.gb_full = strong_groebner(full, budget);
    e.gb_tilde = strong_groebner(tilde, budget);
    e.q_full = quotient_group_structure(e.gb_full, budget);
    e.q_tilde = quotient_group_structure(e.gb_tilde, budget);
    // elimination consistency, cheap direction: original generators die in the
    // reduced quotient
    KPresentation orig = build_presentation(red.p.n, red.p.k);
    for (auto& g : orig.ideal_I)
        if (!normal_form(reduce_to_lambda_theta(g, red), e.gb_full, budget).is_zero())
            throw std::logic_error("eliminated presentation does not kill the original ideal");
    return e;
}

// --------------------------------------------------------------------------
// Structured (Leray-Hirsch basis) engine, independent of the Z-Groebner path.
//
// Model: after mu-elimination the quotient is filtered by the weight
// w(l_p) = p. The weight-graded leading parts of the residual relations
// present the integral cohomology of the complex Grassmannian of s-planes in
// (s+t)-space, which vanishes above weight s*t; every higher monomial gets an
// exact rewriting rule by linear algebra in its weight component. Spanning
// monomials are the l-monomials of weight <= s*t times {1, theta}.

struct SchurEngine {
    GrassmannParams p;
    std::vector<Monomial> vmons;       // lambda-monomials of weight <= s*t
    int basis_size = 0;                // |B0_bar| = C(m-1, s)
    FinAbGroup K0;
    FinAbGroup q_tilde_group;          // must be free of rank 2*C(m-1,s)
    std::vector<std::string> basis_labels;  // Schur basis as polynomial text
};

namespace ktdetail {

struct SchurWork {
    GrassmannParams p;
    ReducedPresentation red;
    int cap = 0;  // s*t
    std::vector<Monomial> vmons;
    std::map<Monomial, int> vindex;
    std::vector<PolyZ> residual;        // filtered relations g_j, j = t+1..m-1
    std::vector<PolyZ> residual_top;    // weight-graded leading parts (theta-free)
    std::vector<int> residual_weight;   // j
    std::map<Monomial, PolyZ> rules;    // lambda^a -> lower-weight replacement

    long weight(const Monomial& mono) const {
        long w = 0;
        for (auto& [v, x] : mono.e) {
            if (v == theta_var()) continue;
            for (int i = 1; i <= p.s; ++i)
                if (v == lam_var(i)) w += static_cast<long>(i) * x;
        }
        return w;
    }

    // all lambda-monomials of exact weight d
    std::vector<Monomial> monomials_of_weight(long d) const {
        std::vector<Monomial> out;
        std::vector<int> cur(p.s, 0);
        auto rec = [&](auto&& self, int i, long left) -> void {
            if (i == p.s) {
                if (left == 0) {
                    Monomial m;
                    for (int a = 0; a < p.s; ++a) m = m * Monomial::var(lam_var(a + 1), cur[a]);
                    out.push_back(m);
                }
                return;
            }
            for (int c = 0; c * (i + 1) <= left; ++c) {
                cur[i] = c;
                self(self, i + 1, left - c * (i + 1));
            }
            cur[i] = 0;
        };
        rec(rec, 0, d);
        std::sort(out.begin(), out.end());
        return out;
    }

    // rewriting rule for a lambda-monomial of weight d > cap, built by an
    // exact solve in the weight-d component of the graded relation module
    const PolyZ& rule_for(const Monomial& mono) {
        auto it = rules.find(mono);
        if (it != rules.end()) return it->second;
        long d = weight(mono);
        auto cols = monomials_of_weight(d);
        std::map<Monomial, int> colix;
        for (int i = 0; i < static_cast<int>(cols.size()); ++i) colix.emplace(cols[i], i);

        std::vector<std::pair<int, Monomial>> gens;  // (residual index, multiplier)
        IntMatrix rows(0, static_cast<int>(cols.size()));
        for (size_t gi = 0; gi < residual.size(); ++gi) {
            long gw = residual_weight[gi];
            if (gw > d) continue;
            for (auto& b : monomials_of_weight(d - gw)) {
                std::vector<Int> row(cols.size());
                for (auto& [mm, cc] : residual_top[gi].t) row[colix.at(b * mm)] += cc;
                rows.append_row(row);
                gens.push_back({static_cast<int>(gi), b});
            }
        }
        std::vector<Int> target(cols.size());
        target[colix.at(mono)] = 1;
        auto sol = solve_left(rows, target);
        if (!sol)
            throw std::logic_error("structured engine: weight component not full at weight " +
                                   std::to_string(d));
        // lift: mono = sum c * b * ghat  =>  mono - sum c * b * g  has lower weight
        PolyZ repl = PolyZ::term(mono, Int(1));
        for (size_t i = 0; i < gens.size(); ++i) {
            if ((*sol)[i] == 0) continue;
            repl -= PolyZ::constant((*sol)[i]) * PolyZ::term(gens[i].second, Int(1)) *
                    residual[gens[i].first];
        }
        repl = fold_theta(repl);
        for (auto& [mm, cc] : repl.t)
            if (weight(mm) >= d) throw std::logic_error("structured engine: rule did not reduce");
        return rules.emplace(mono, std::move(repl)).first->second;
    }

    // canonical reduction into the spanning set vmons x {1, theta}
    PolyZ reduce(PolyZ f) {
        f = fold_theta(f);
        for (;;) {
            const Monomial* worst = nullptr;
            long wmax = cap;
            Monomial stripped;
            for (auto& [mm, cc] : f.t) {
                Monomial lam;
                for (auto& [v, x] : mm.e)
                    if (v != theta_var()) lam = lam * Monomial::var(v, x);
                long w = weight(lam);
                if (w > wmax) {
                    wmax = w;
                    stripped = lam;
                    worst = &mm;
                }
            }
            if (!worst) return f;
            // substitute the rule at both theta levels
            PolyZ repl = rule_for(stripped);
            PolyZ theta1 = theta_poly();
            PolyZ next;
            for (auto& [mm, cc] : f.t) {
                Monomial lam;
                int te = 0;
                for (auto& [v, x] : mm.e) {
                    if (v == theta_var()) te = x;
                    else lam = lam * Monomial::var(v, x);
                }
                if (lam == stripped) {
                    PolyZ rep = repl;
                    if (te % 2 == 1) rep = fold_theta(rep * theta1);
                    next += PolyZ::constant(cc) * rep;
                } else {
                    next += PolyZ::term(mm, cc, true);
                }
            }
            f = fold_theta(next);
        }
    }

    std::vector<Int> to_vec(const PolyZ& f) const {
        std::vector<Int> v(2 * vmons.size());
        for (auto& [mm, cc] : f.t) {
            Monomial lam;
            int te = 0;
            for (auto& [v2, x] : mm.e) {
                if (v2 == theta_var()) te = x;
                else lam = lam * Monomial::var(v2, x);
            }
            auto it = vindex.find(lam);
            if (it == vindex.end()) throw std::logic_error("structured engine: escape from span");
            v[2 * it->second + (te % 2)] += cc;
        }
        return v;
    }
};

}  // namespace ktdetail

inline SchurEngine schur_fast_path(const ReducedPresentation& red) {
    ktdetail::SchurWork w;
    w.p = red.p;
    w.red = red;
    w.cap = red.p.s * red.p.t;
    w.residual = red.residual;
    for (size_t i = 0; i < w.residual.size(); ++i) {
        int j = red.p.t + 1 + static_cast<int>(i);
        w.residual_weight.push_back(j);
        PolyZ top;
        for (auto& [mm, cc] : w.residual[i].t) {
            if (w.weight(mm) == j) {
                if (mm.exp(theta_var()) != 0)
                    throw std::logic_error("structured engine: theta in graded leading part");
                top += PolyZ::term(mm, cc);
            }
        }
        if (top.is_zero()) throw std::logic_error("structured engine: zero graded leading part");
        w.residual_top.push_back(top);
    }
    for (long d = 0; d <= w.cap; ++d)
        for (auto& m : w.monomials_of_weight(d)) w.vmons.push_back(m);
    for (int i = 0; i < static_cast<int>(w.vmons.size()); ++i) w.vindex.emplace(w.vmons[i], i);

    const int N = static_cast<int>(binomial(red.p.m - 1, red.p.s).get_si());
    const int dimV = 2 * static_cast<int>(w.vmons.size());

    // relation lattice of the torsion-free quotient: generator multiples that
    // stay inside the spanning weight window, at both theta levels
    IntMatrix lattice(0, dimV);
    auto add_relation_rows = [&](int slack) {
        for (size_t gi = 0; gi < w.residual.size(); ++gi) {
            long gw = w.residual_weight[gi];
            for (long bw = 0; bw + gw <= w.cap + slack; ++bw) {
                if (slack > 0 && bw + gw <= w.cap) continue;  // already added
                for (auto& b : w.monomials_of_weight(bw)) {
                    PolyZ base = PolyZ::term(b, Int(1)) * w.residual[gi];
                    for (int e = 0; e <= 1; ++e) {
                        PolyZ f = e ? fold_theta(base * theta_poly()) : base;
                        lattice.append_row(w.to_vec(w.reduce(f)));
                    }
                }
            }
        }
    };
    add_relation_rows(0);
    FinAbGroup qt = cokernel_group(lattice, dimV);
    for (int slack = 1; slack <= 3 && !(qt.rank == 2 * N && qt.torsion.empty()); ++slack) {
        add_relation_rows(slack);
        qt = cokernel_group(lattice, dimV);
    }
    if (!(qt.rank == 2 * N && qt.torsion.empty()))
        throw std::logic_error("structured engine: quotient is not free of rank 2*C(m-1,s)");

    // Schur basis of the weight-graded model lifts to a basis
    std::vector<VarId> lvars;
    for (int i = 1; i <= red.p.s; ++i) lvars.push_back(lam_var(i));
    auto lam_of = [&](int idx) {  // graded model: l_p = 0 outside 1..s
        if (idx == 0) return PolyZ::constant(Int(1));
        if (idx < 0 || idx > red.p.s) return PolyZ::zero();
        return PolyZ::variable(lam_var(idx));
    };
    std::vector<PolyZ> schur_basis;
    std::vector<std::string> labels;
    for (auto& part : partitions_in_box(red.p.s, red.p.t)) {
        Partition conj = part.conjugate();
        int L = conj.length();
        PolyZ s_pi;
        if (L == 0) {
            s_pi = PolyZ::constant(Int(1));
        } else {
            std::vector<std::vector<PolyZ>> mat(L, std::vector<PolyZ>(L));
            for (int i = 0; i < L; ++i)
                for (int jj = 0; jj < L; ++jj) mat[i][jj] = lam_of(conj.parts[i] - (i + 1) + (jj + 1));
            s_pi = det_poly(mat);
        }
        schur_basis.push_back(s_pi);
        labels.push_back(to_text(s_pi));
    }
    if (static_cast<int>(schur_basis.size()) != N)
        throw std::logic_error("structured engine: Schur basis cardinality mismatch");

    IntMatrix basis_rows(0, dimV);
    for (int e = 0; e <= 1; ++e)
        for (auto& b : schur_basis) {
            PolyZ f = e ? fold_theta(b * theta_poly()) : b;
            basis_rows.append_row(w.to_vec(w.reduce(f)));
        }
    // spanning check: basis rows + lattice must generate the whole of Z^V
    {
        IntMatrix stack = basis_rows;
        for (int i = 0; i < lattice.rows; ++i) stack.append_row(lattice.row(i));
        FinAbGroup span = cokernel_group(stack, dimV);
        if (!(span.rank == 0 && span.torsion.empty()))
            throw std::logic_error("structured engine: Schur classes do not span the quotient");
    }

    // present K0 on B0_bar and (theta-1) B0_bar: coordinates of the torsion
    // relations 2^{m-1}(theta-1) * S_pi in the Schur basis
    IntMatrix all_rows = basis_rows;
    for (int i = 0; i < lattice.rows; ++i) all_rows.append_row(lattice.row(i));
    IntMatrix rel(0, 2 * N);
    PolyZ tm1 = theta_poly() - PolyZ::constant(Int(1), true);
    PolyZ scale = PolyZ::constant(int_pow2(red.p.m - 1), true);
    for (auto& b : schur_basis) {
        PolyZ f = fold_theta(scale * tm1 * b);
        auto sol = solve_left(all_rows, w.to_vec(w.reduce(f)));
        if (!sol) throw std::logic_error("structured engine: torsion relation outside the span");
        std::vector<Int> coords(sol->begin(), sol->begin() + 2 * N);
        // change of basis (S_pi, theta S_pi) -> (S_pi, (theta-1) S_pi)
        std::vector<Int> changed(2 * N);
        for (int i = 0; i < N; ++i) {
            changed[i] = coords[i] + coords[N + i];
            changed[N + i] = coords[N + i];
        }
        rel.append_row(changed);
    }
    SchurEngine out;
    out.p = red.p;
    out.vmons = w.vmons;
    out.basis_size = N;
    out.q_tilde_group = qt;
    out.K0 = cokernel_group(rel, 2 * N);
    out.basis_labels = labels;
    return out;
}

// --------------------------------------------------------------------------
// Pipeline results

enum class Engine { GB, Schur, Both };

inline const char* engine_name(Engine e) {
    switch (e) {
        case Engine::GB: return "gb";
        case Engine::Schur: return "schur";
        default: return "both";
    }
}

struct KZeroResult {
    FinAbGroup group;
    bool engines_agree = true;
    std::vector<std::string> generators;  // gb monomial generators (text)
    std::map<std::string, std::string> structure_constants;
    std::string engine;
};

// Structure constants of the K0 ring over its monomial generators.
inline std::map<std::string, std::string> structure_table(const GBEngine& e,
                                                          const Budget& budget = Budget{}) {
    std::map<std::string, std::string> table;
    const auto& mons = e.q_full.monomial_generators;
    for (size_t i = 0; i < mons.size(); ++i)
        for (size_t j = i; j < mons.size(); ++j) {
            PolyZ nf = normal_form(PolyZ::term(mons[i] * mons[j], Int(1)), e.gb_full, budget);
            std::string key = to_text(PolyZ::term(mons[i], Int(1), true)) + " * " +
                              to_text(PolyZ::term(mons[j], Int(1), true));
            table[key] = to_text(nf);
        }
    return table;
}

inline KZeroResult compute_K0(const GrassmannParams& p, Engine engine,
                              const Budget& budget = Budget{}, bool with_structure = false) {
    GrassmannParams q = GrassmannParams::exact_of(p.n, p.k);
    ReducedPresentation red = eliminate_mu(build_presentation(q.n, q.k));
    KZeroResult out;
    out.engine = engine_name(engine);
    std::optional<FinAbGroup> g_gb, g_schur;
    if (engine == Engine::GB || engine == Engine::Both) {
        GBEngine e = gb_engine(red, budget);
        g_gb = e.q_full.group;
        for (auto& m : e.q_full.monomial_generators)
            out.generators.push_back(to_text(PolyZ::term(m, Int(1), true)));
        if (with_structure) out.structure_constants = structure_table(e, budget);
    }
    if (engine == Engine::Schur || engine == Engine::Both) {
        g_schur = schur_fast_path(red).K0;
    }
    if (engine == Engine::Both) {
        out.engines_agree = (*g_gb == *g_schur);
        if (!out.engines_agree)
            throw std::logic_error("engine cross-check mismatch: gb " + g_gb->to_string() +
                                   " vs schur " + g_schur->to_string());
    }
    out.group = g_gb ? *g_gb : *g_schur;
    return out;
}

// K1 as the ideal generated by theta + 1 inside S/I~: the image lattice of
// multiplication by (theta + 1) with the induced relations.
inline FinAbGroup compute_K1(const GrassmannParams& p, const Budget& budget = Budget{}) {
    ReducedPresentation red = eliminate_mu(build_presentation(p.n, p.k));
    GBEngine e = gb_engine(red, budget);
    PolyZ tp1 = PolyZ::variable(theta_var()) + PolyZ::constant(Int(1));
    IntMatrix image(0, static_cast<int>(e.q_tilde.monomial_generators.size()));
    for (auto& m : e.q_tilde.monomial_generators)
        image.append_row(nf_vector(tp1 * PolyZ::term(m, Int(1)), e.gb_tilde, e.q_tilde, budget));
    return subgroup_structure(image, e.q_tilde.relations);
}

// Exact order of [theta] - 1 in S/I, as the exponent r of 2^r.
inline int hopf_class_order(const GrassmannParams& p, const Budget& budget = Budget{}) {
    GrassmannParams q = GrassmannParams::exact_of(p.n, p.k);
    ReducedPresentation red = eliminate_mu(build_presentation(q.n, q.k));
    GBEngine e = gb_engine(red, budget);
    PolyZ tm1 = PolyZ::variable(theta_var()) - PolyZ::constant(Int(1));
    auto ord = element_order(nf_vector(tm1, e.gb_full, e.q_full, budget), e.q_full.relations);
    if (!ord) throw std::logic_error("theta class has infinite order");
    long r = log2_exact(*ord);
    if (r < 0) throw std::logic_error("theta class order is not a power of two");
    // sanity: the squeeze from the structure theory
    if (r > q.m - 1 || r < 2 * q.l - 1)
        throw std::logic_error("hopf order escaped its proven bounds");
    PolyZ direct = PolyZ::constant(int_pow2(r)) * tm1;
    if (!normal_form(direct, e.gb_full, budget).is_zero())
        throw std::logic_error("hopf order direct check failed");
    return static_cast<int>(r);
}

struct HopfBounds {
    int lower = 0, upper = 0;
};

// 2l-1 <= r <= 2l+1 for n = 4l + j with 1 <= j <= 3.
inline HopfBounds hopf_order_bounds(int n, int k) {
    if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
    if (n % 4 == 0)
        throw std::invalid_argument("n = 0 mod 4: use the exact order computation");
    int l = n / 4;
    return HopfBounds{2 * l - 1, 2 * l + 1};
}

// The quotient-ring relations of the torsion analysis: (a) 2^{m-1}(theta-1)=0
// and the restricted spin class equals 2^{m-1}; (b) the f_j relations; (c)
// the spin-square relation f_{s,t} = 2^{2m-2}; plus the binomial consequence
// (1+theta)^n = 2^{2m}.
struct BarBReport {
    bool a = false, b = false, c = false, remark = false;
    bool all() const { return a && b && c && remark; }
};

inline BarBReport verify_barB(const GrassmannParams& p, const Budget& budget = Budget{}) {
    GrassmannParams q = GrassmannParams::exact_of(p.n, p.k);
    KPresentation pres = build_presentation(q.n, q.k);
    ReducedPresentation red = eliminate_mu(pres);
    GBEngine e = gb_engine(red, budget);
    PolyZ theta = PolyZ::variable(theta_var());
    Int big = int_pow2(q.m - 1);

    BarBReport rep;
    PolyZ rel_a1 = PolyZ::constant(big) * (theta - PolyZ::constant(Int(1)));
    PolyZ rel_a2 = PolyZ::constant(big) * theta.pow(q.epsilon) - PolyZ::constant(big);
    rep.a = normal_form(reduce_to_lambda_theta(rel_a1, red), e.gb_full, budget).is_zero() &&
            normal_form(reduce_to_lambda_theta(rel_a2, red), e.gb_full, budget).is_zero();

    rep.b = true;
    for (int j = 1; j <= q.m - 1; ++j) {
        PolyZ rel = ktdetail::f_poly(j, q) - PolyZ::constant(binomial(q.n, j)) * theta.pow(j);
        if (!normal_form(reduce_to_lambda_theta(rel, red), e.gb_full, budget).is_zero())
            rep.b = false;
    }

    PolyZ sl, sm;
    for (int a = 0; a <= q.s; ++a) sl += ktdetail::lambda_poly(a, q.k, q.s);
    for (int b2 = 0; b2 <= q.t; ++b2) sm += ktdetail::mu_poly(b2, q.n - q.k, q.t);
    PolyZ rel_c = sl * sm - PolyZ::constant(int_pow2(2 * q.m - 2));
    rep.c = normal_form(reduce_to_lambda_theta(rel_c, red), e.gb_full, budget).is_zero();

    PolyZ rel_r = (PolyZ::constant(Int(1)) + theta).pow(q.n) - PolyZ::constant(int_pow2(2 * q.m));
    rep.remark = normal_form(reduce_to_lambda_theta(rel_r, red), e.gb_full, budget).is_zero();
    return rep;
}

}  // namespace gkt
