#pragma once

#include <map>
#include <string>
#include <vector>

#include "gkt/ktheory.hpp"

namespace gkt {

inline VarId pvar(int j) { return intern_var("p" + std::to_string(j)); }
inline VarId qvar(int j) { return intern_var("q" + std::to_string(j)); }

// Rational even cohomology of the Grassmannian: Q[p_1..p_s, q_1..q_t] modulo
// the Whitney-sum relations sum_{i+j=r} p_i q_j = 0 for r = 1..s+t, with
// cohomological degrees |p_j| = |q_j| = 4j.
struct PontryaginRing {
    int n = 0, k = 0, s = 0, t = 0;
    std::vector<VarId> vars;
    StrongGB<Rat> gb;
    std::vector<Monomial> basis;  // standard monomials
    long dimension = 0;

    PolyQ nf(const PolyQ& f) const { return normal_form(f, gb); }

    long degree_of(const Monomial& m) const {
        long d = 0;
        for (auto& [v, x] : m.e) {
            for (int j = 1; j <= s; ++j)
                if (v == pvar(j)) d += 4l * j * x;
            for (int j = 1; j <= t; ++j)
                if (v == qvar(j)) d += 4l * j * x;
        }
        return d;
    }

    std::vector<Rat> coords(const PolyQ& reduced) const {
        std::vector<Rat> out(basis.size(), Rat(0));
        std::map<Monomial, int> ix;
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) ix.emplace(basis[i], i);
        for (auto& [m, c] : reduced.t) {
            auto it = ix.find(m);
            if (it == ix.end()) throw std::logic_error("coordinates: monomial outside the basis");
            out[it->second] = c;
        }
        return out;
    }
};

inline PontryaginRing build_P(int n, int k) {
    if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
    PontryaginRing P;
    P.n = n;
    P.k = k;
    P.s = k / 2;
    P.t = (n - k) / 2;
    for (int j = 1; j <= P.s; ++j) P.vars.push_back(pvar(j));
    for (int j = 1; j <= P.t; ++j) P.vars.push_back(qvar(j));
    auto pq = [&](int i, bool isp) {
        int lim = isp ? P.s : P.t;
        if (i == 0) return PolyQ::constant(Rat(1));
        if (i < 0 || i > lim) return PolyQ::zero();
        return PolyQ::variable(isp ? pvar(i) : qvar(i));
    };
    std::vector<PolyQ> gens;
    for (int r = 1; r <= P.s + P.t; ++r) {
        PolyQ rel;
        for (int i = 0; i <= r; ++i) rel += pq(i, true) * pq(r - i, false);
        gens.push_back(rel);
    }
    IdealPresentation<Rat> ideal(P.vars, gens, OrderKind::Grevlex);
    P.gb = strong_groebner(ideal);
    P.basis = standard_monomials(P.gb);
    P.dimension = static_cast<long>(P.basis.size());
    return P;
}

// A cohomology class split into homogeneous components indexed by degree,
// each component kept in normal form; degrees above the cap are dropped.
struct CohClass {
    long cap = 0;
    std::map<long, PolyQ> comp;

    static CohClass zero(long cap) { return CohClass{cap, {}}; }
    static CohClass constant(const Rat& c, long cap) {
        CohClass r{cap, {}};
        if (c != 0) r.comp[0] = PolyQ::constant(c);
        return r;
    }

    void add_component(const PontryaginRing& P, long deg, const PolyQ& piece) {
        if (deg > cap) return;
        PolyQ v = P.nf(piece);
        if (v.is_zero()) return;
        auto it = comp.find(deg);
        if (it == comp.end()) comp.emplace(deg, v);
        else {
            it->second += v;
            if (it->second.is_zero()) comp.erase(it);
        }
    }

    PolyQ total() const {
        PolyQ sum;
        for (auto& [d, c] : comp) sum += c;
        return sum;
    }

    Rat degree_zero() const {
        auto it = comp.find(0);
        return it == comp.end() ? Rat(0) : it->second.constant_coeff();
    }

    bool is_zero() const { return comp.empty(); }
    bool operator==(const CohClass& o) const { return comp == o.comp; }
};

inline CohClass coh_add(const CohClass& a, const CohClass& b, const PontryaginRing& P) {
    CohClass r = CohClass::zero(std::max(a.cap, b.cap));
    for (auto& [d, c] : a.comp) r.add_component(P, d, c);
    for (auto& [d, c] : b.comp) r.add_component(P, d, c);
    return r;
}

inline CohClass coh_sub(const CohClass& a, const CohClass& b, const PontryaginRing& P) {
    CohClass r = CohClass::zero(std::max(a.cap, b.cap));
    for (auto& [d, c] : a.comp) r.add_component(P, d, c);
    for (auto& [d, c] : b.comp) r.add_component(P, d, PolyQ() - c);
    return r;
}

inline CohClass coh_mul(const CohClass& a, const CohClass& b, const PontryaginRing& P) {
    CohClass r = CohClass::zero(std::max(a.cap, b.cap));
    for (auto& [da, ca] : a.comp)
        for (auto& [db, cb] : b.comp) {
            if (da + db > r.cap) continue;
            r.add_component(P, da + db, ca * cb);
        }
    return r;
}

inline CohClass coh_scale(const Rat& c, const CohClass& a, const PontryaginRing& P) {
    CohClass r = CohClass::zero(a.cap);
    for (auto& [d, x] : a.comp) r.add_component(P, d, c * x);
    return r;
}

// Power sums of the squared Chern roots in terms of the Pontryagin classes:
// e_j = (-1)^j p_j (zero beyond s), Newton recurrence over Q[p].
inline std::vector<PolyQ> squared_root_power_sums(const PontryaginRing& P, int count,
                                                  bool of_gamma = true) {
    int lim = of_gamma ? P.s : P.t;
    auto e = [&](int i) {
        if (i == 0) return PolyQ::constant(Rat(1));
        if (i < 0 || i > lim) return PolyQ::zero();
        PolyQ v = PolyQ::variable(of_gamma ? pvar(i) : qvar(i));
        return (i % 2 == 1) ? PolyQ() - v : v;  // e_i = (-1)^i p_i
    };
    std::vector<PolyQ> ps(count + 1);
    for (int m = 1; m <= count; ++m) {
        PolyQ acc;
        for (int i = 1; i < m; ++i) {
            PolyQ term = e(i) * ps[m - i];
            acc += (i % 2 == 1) ? term : PolyQ() - term;
        }
        PolyQ last = Rat(m) * e(m);
        acc += (m % 2 == 1) ? last : PolyQ() - last;
        ps[m] = P.nf(acc);
    }
    return ps;
}

inline Rat factorial_rat(long n) {
    Rat r(1);
    for (long i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

inline long default_cap(int n, int k) { return 2l * k * (n - k); }

// Power-sum (Adams-ready) form: c0 + sum_m coeff[m-1] * ps_m.
struct PowerSumForm {
    Rat constant;
    std::vector<Rat> coeff;
};

inline PowerSumForm adams_psi(long r, PowerSumForm c) {
    for (size_t m = 1; m <= c.coeff.size(); ++m) c.coeff[m - 1] *= int_pow(Int(r), 2 * m);
    return c;
}

inline CohClass realize(const PontryaginRing& P, const PowerSumForm& f, long cap,
                        bool of_gamma = true) {
    CohClass c = CohClass::zero(cap);
    if (f.constant != 0) c.add_component(P, 0, PolyQ::constant(f.constant));
    auto ps = squared_root_power_sums(P, static_cast<int>(f.coeff.size()), of_gamma);
    for (size_t m = 1; m <= f.coeff.size(); ++m)
        if (f.coeff[m - 1] != 0) c.add_component(P, 4l * m, f.coeff[m - 1] * ps[m]);
    return c;
}

// ch(gamma^C) = k + 2 sum ps_m / (2m)!.
inline PowerSumForm ch_gamma_form(int k, long cap) {
    PowerSumForm f;
    f.constant = Rat(k);
    for (long m = 1; 4 * m <= cap; ++m)
        f.coeff.push_back(Rat(2) / factorial_rat(2 * m));
    return f;
}

inline CohClass ch_gamma(const PontryaginRing& P, long cap) {
    return realize(P, ch_gamma_form(P.k, cap), cap, true);
}

// ch(Lambda^j of gamma^C or beta^C) by Newton from the Adams power sums
// pow_r = rank + 2 sum_m r^{2m} ps_m/(2m)!.
inline std::vector<CohClass> ch_lambda_powers_all(const PontryaginRing& P, bool of_gamma,
                                                  long cap) {
    int rank = of_gamma ? P.k : P.n - P.k;
    std::vector<CohClass> pows(rank + 1, CohClass::zero(cap));  // pows[r], r >= 1
    for (int r = 1; r <= rank; ++r) {
        PowerSumForm f = ch_gamma_form(rank, cap);
        f = adams_psi(r, f);
        pows[r] = realize(P, f, cap, of_gamma);
    }
    std::vector<CohClass> e(rank + 1, CohClass::zero(cap));
    e[0] = CohClass::constant(Rat(1), cap);
    for (int kk = 1; kk <= rank; ++kk) {
        CohClass acc = CohClass::zero(cap);
        for (int i = 1; i <= kk; ++i) {
            CohClass term = coh_mul(e[kk - i], pows[i], P);
            acc = (i % 2 == 1) ? coh_add(acc, term, P) : coh_sub(acc, term, P);
        }
        e[kk] = coh_scale(Rat(1, kk), acc, P);
    }
    return e;
}

inline CohClass ch_lambda_power(const PontryaginRing& P, int j, long cap) {
    if (j < 0 || j > P.k) throw std::invalid_argument("ch_lambda_power: 0 <= j <= k required");
    return ch_lambda_powers_all(P, true, cap)[j];
}

// --------------------------------------------------------------------------
// Vandermonde system of the Adams-operation solve: M[i][j] = j^{2i}.

inline IntMatrix adams_matrix(int d) {
    IntMatrix M(d, d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) M.at(i - 1, j - 1) = int_pow(Int(j), 2ul * i);
    return M;
}

struct VandermondeResult {
    std::vector<CohClass> u;
    Int det_m;
};

// Solve 2 u M = v exactly; the certificate det(M) != 0 is attached.
inline VandermondeResult vandermonde_solve(const PontryaginRing& P, int d,
                                           const std::vector<CohClass>& v) {
    if (static_cast<int>(v.size()) != d) throw std::invalid_argument("vandermonde: size mismatch");
    IntMatrix M = adams_matrix(d);
    VandermondeResult out;
    out.det_m = det(M);
    if (out.det_m == 0) throw std::logic_error("vandermonde: singular Adams matrix");
    // invert exactly over Q
    std::vector<std::vector<Rat>> aug(d, std::vector<Rat>(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = Rat(M.at(i, j));
        aug[i][d + i] = Rat(1);
    }
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        Rat inv = Rat(1) / aug[c][c];
        for (int j = 0; j < 2 * d; ++j) aug[c][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (int j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    long cap = v.empty() ? 0 : v[0].cap;
    out.u.assign(d, CohClass::zero(cap));
    // u = (1/2) v M^{-1}
    for (int i = 0; i < d; ++i) {
        CohClass acc = CohClass::zero(cap);
        for (int j = 0; j < d; ++j)
            acc = coh_add(acc, coh_scale(Rat(aug[j][d + i]) / Rat(2), v[j], P), P);
        out.u[i] = acc;
    }
    return out;
}

// --------------------------------------------------------------------------
// Chern-character surjectivity: the Q-subalgebra generated by the exterior
// powers of gamma^C must be all of P_{n,k}.

struct SurjectivityReport {
    bool pass = false;
    long image_dimension = 0;
    long p_dimension = 0;
};

inline SurjectivityReport verify_ch_surjectivity(int n, int k) {
    PontryaginRing P = build_P(n, k);
    long cap = default_cap(n, k);
    auto lam = ch_lambda_powers_all(P, true, cap);

    std::vector<PolyQ> seeds;
    for (int j = 1; j <= k; ++j) seeds.push_back(P.nf(lam[j].total()));
    // rational span with iterated products to the fixpoint
    std::vector<std::vector<Rat>> echelon;  // reduced rows
    std::vector<int> pivots;
    std::vector<PolyQ> members;
    auto insert = [&](const PolyQ& f) {
        std::vector<Rat> v = P.coords(P.nf(f));
        for (size_t r = 0; r < echelon.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f2 = v[pivots[r]];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f2 * echelon[r][j];
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) { piv = static_cast<int>(j); break; }
        if (piv < 0) return false;
        Rat inv = Rat(1) / v[piv];
        for (auto& x : v) x *= inv;
        echelon.push_back(v);
        pivots.push_back(piv);
        members.push_back(P.nf(f));
        return true;
    };
    insert(PolyQ::constant(Rat(1)));
    for (auto& s : seeds) insert(s);
    bool grew = true;
    while (grew && static_cast<long>(echelon.size()) < P.dimension) {
        grew = false;
        size_t snapshot = members.size();
        for (size_t i = 0; i < snapshot; ++i)
            for (auto& s : seeds)
                if (insert(members[i] * s)) grew = true;
    }
    SurjectivityReport rep;
    rep.image_dimension = static_cast<long>(echelon.size());
    rep.p_dimension = P.dimension;
    rep.pass = rep.image_dimension == rep.p_dimension;
    return rep;
}

// Whitney check: sum_{p+q=r} ch Lambda^p(gamma) ch Lambda^q(beta) = C(n,r).
inline bool verify_eq20(int n, int k, long cap = -1) {
    PontryaginRing P = build_P(n, k);
    if (cap < 0) cap = default_cap(n, k);
    auto lg = ch_lambda_powers_all(P, true, cap);
    auto lb = ch_lambda_powers_all(P, false, cap);
    for (int r = 1; r <= n; ++r) {
        CohClass sum = CohClass::zero(cap);
        for (int p = 0; p <= r; ++p) {
            int q = r - p;
            if (p > k || q > n - k) continue;
            sum = coh_add(sum, coh_mul(lg[p], lb[q], P), P);
        }
        CohClass want = CohClass::constant(Rat(binomial(n, r)), cap);
        if (!(sum == want)) return false;
    }
    return true;
}

// Duality: ch Lambda^p(gamma^C) = ch(xi^C) ch Lambda^{k-p}(gamma^C).
inline bool verify_eq21(int n, int k, long cap = -1) {
    PontryaginRing P = build_P(n, k);
    if (cap < 0) cap = default_cap(n, k);
    auto lg = ch_lambda_powers_all(P, true, cap);
    const CohClass& xi = lg[k];
    for (int p = 0; p <= k; ++p) {
        if (!(lg[p] == coh_mul(xi, lg[k - p], P))) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// The lambda-ring presentation K_{n,k} over A = Z[theta]/(theta^2-1,
// 2^nu(1-theta)) and its theta = 1 reduction.

namespace knkdetail {

inline VarId full_lambda(int j) { return intern_var("fl" + std::to_string(j)); }
inline VarId full_mu(int j) { return intern_var("fm" + std::to_string(j)); }

// theta-twisted index reflection: lambda_j for j > ceil(k/2) rewrites to
// theta * lambda_{k-j}; mirrored for mu. theta == nullptr means theta = 1.
inline PolyZ reduced_lambda(int j, int k, bool with_theta) {
    int s = k / 2;
    if (j < 0 || j > k) return PolyZ::zero();
    int r = std::min(j, k - j);
    PolyZ base = (r == 0) ? PolyZ::constant(Int(1)) : PolyZ::variable(lam_var(r));
    if (j <= s || !(with_theta)) return base;
    return PolyZ::variable(theta_var()) * base;
}

inline PolyZ reduced_mu(int j, int nk, bool with_theta) {
    int t = nk / 2;
    if (j < 0 || j > nk) return PolyZ::zero();
    int r = std::min(j, nk - j);
    PolyZ base = (r == 0) ? PolyZ::constant(Int(1)) : PolyZ::variable(mu_var(r));
    if (j <= t || !(with_theta)) return base;
    return PolyZ::variable(theta_var()) * base;
}

}  // namespace knkdetail

// Reduced model of K_{n,k} (or its theta = 1 quotient Kbar): variables
// l_1..l_s (and theta), mu's eliminated triangularly from the Whitney
// relations Q_r = C(n,r).
struct KnkModel {
    int n = 0, k = 0, s = 0, t = 0, nu = 0;
    bool with_theta = false;
    std::vector<VarId> vars;
    std::map<VarId, PolyZ> mu_images;
    std::vector<PolyZ> ideal;  // residual relations (+ theta relations when present)
    StrongGB<Int> gb;

    PolyZ reduce_full_indices(const PolyZ& f) const {
        // substitute full-index symbols fl_j / fm_q, then eliminated mu's
        std::map<VarId, PolyZ> images;
        for (int j = 0; j <= k; ++j)
            images[knkdetail::full_lambda(j)] = knkdetail::reduced_lambda(j, k, with_theta);
        for (int q = 0; q <= n - k; ++q)
            images[knkdetail::full_mu(q)] = knkdetail::reduced_mu(q, n - k, with_theta);
        PolyZ g = f;
        for (VarId v : f.variables())
            if (!images.count(v)) images.emplace(v, PolyZ::variable(v));
        g = apply_hom(g, images);
        g = substitute(g, mu_images);
        return with_theta ? fold_theta(g) : g;
    }

    PolyZ nf(const PolyZ& f) const { return normal_form(reduce_full_indices(f), gb); }
};

// Whitney relation Q_r in full-index symbols.
inline PolyZ knk_whitney_full(int n, int k, int r) {
    PolyZ sum;
    for (int a = 0; a <= r; ++a) {
        int b = r - a;
        if (a > k || b > n - k) continue;
        sum += PolyZ::variable(knkdetail::full_lambda(a)) * PolyZ::variable(knkdetail::full_mu(b));
    }
    return sum - PolyZ::constant(binomial(n, r));
}

inline KnkModel build_knk_model(int n, int k, int nu, bool with_theta,
                                const Budget& budget = Budget{}) {
    // the formal ring is defined for any complementary split; geometric use
    // normalizes to k <= n/2 but the chain isomorphisms need k > n/2 too
    if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
    if (with_theta && nu < 1) throw std::invalid_argument("nu >= 1 required");
    KnkModel M;
    M.n = n;
    M.k = k;
    M.s = k / 2;
    M.t = (n - k) / 2;
    M.nu = nu;
    M.with_theta = with_theta;
    for (int i = 1; i <= M.s; ++i) M.vars.push_back(lam_var(i));
    if (with_theta) M.vars.push_back(theta_var());

    auto lam_of = [&](int j) { return knkdetail::reduced_lambda(j, k, with_theta); };
    auto mu_of = [&](int j) { return knkdetail::reduced_mu(j, n - k, with_theta); };
    auto fold = [&](PolyZ f) { return with_theta ? fold_theta(f) : f; };

    // triangular elimination of m_1..m_t from Q_1..Q_t
    std::map<VarId, PolyZ> images;
    for (int r = 1; r <= M.t; ++r) {
        PolyZ rel;
        for (int a = 0; a <= r; ++a) {
            int b = r - a;
            if (a > k || b > n - k) continue;
            rel += lam_of(a) * mu_of(b);
        }
        rel = fold(substitute(rel - PolyZ::constant(binomial(n, r)), images));
        if (rel.coeff(Monomial::var(mu_var(r))) != 1)
            throw std::logic_error("knk elimination: unexpected mu coefficient");
        images[mu_var(r)] = PolyZ::variable(mu_var(r)) - rel;
    }
    M.mu_images = images;

    std::vector<PolyZ> gens;
    if (with_theta) {
        PolyZ theta = PolyZ::variable(theta_var());
        gens.push_back(theta.pow(2) - PolyZ::constant(Int(1)));
        gens.push_back(PolyZ::constant(int_pow2(nu)) *
                       (PolyZ::constant(Int(1)) - theta));
        if (k % 2 == 0)  // middle reflection lambda_s = theta lambda_s
            gens.push_back(fold((PolyZ::constant(Int(1)) - theta) * PolyZ::variable(lam_var(M.s))));
        if ((n - k) % 2 == 0 && M.t >= 1)
            gens.push_back(fold(substitute(
                (PolyZ::constant(Int(1)) - theta) * PolyZ::variable(mu_var(M.t)), images)));
    }
    for (int r = M.t + 1; r <= n; ++r) {
        PolyZ rel;
        for (int a = 0; a <= r; ++a) {
            int b = r - a;
            if (a > k || b > n - k) continue;
            rel += lam_of(a) * mu_of(b);
        }
        gens.push_back(fold(substitute(rel - PolyZ::constant(binomial(n, r)), images)));
    }
    M.ideal = gens;
    IdealPresentation<Int> ideal(M.vars, gens, OrderKind::Grevlex);
    M.gb = strong_groebner(ideal, budget);
    return M;
}

struct KnkResult {
    KnkModel model;        // with theta
    KnkModel kbar;         // theta = 1
    FinAbGroup k_group;
    FinAbGroup kbar_group;
    int nu = 0;
};

inline int default_nu(int n, int k, const Budget& budget = Budget{}) {
    GrassmannParams p = GrassmannParams::of(n, k);
    if (p.exact) return hopf_class_order(p, budget);
    return 2 * (n / 4) + 1;  // the order-bound exponent for n = 4l + j
}

inline KnkResult build_Knk(int n, int k, int nu = -1, const Budget& budget = Budget{}) {
    KnkResult r;
    r.nu = nu > 0 ? nu : default_nu(n, k, budget);
    r.model = build_knk_model(n, k, r.nu, true, budget);
    r.kbar = build_knk_model(n, k, r.nu, false, budget);
    r.k_group = quotient_group_structure(r.model.gb, budget).group;
    r.kbar_group = quotient_group_structure(r.kbar.gb, budget).group;
    return r;
}

// --------------------------------------------------------------------------
// The restriction/stabilization ring isomorphisms between the theta = 1
// models: alpha_0 adds a trivial summand to the complement, alpha_1 to the
// tautological bundle; beta_0/beta_1 are the inverse alternating sums.

struct Eq22Report {
    int s = 0, t = 0;
    bool well_defined = true;
    bool mutually_inverse = true;
    bool ranks_ok = true;
    long rank = 0;
};

namespace knkdetail {

struct FullHom {
    // images of the full-index generator symbols inside a reduced model
    std::function<PolyZ(int)> lam;
    std::function<PolyZ(int)> mu;
};

inline PolyZ map_full(const PolyZ& f, const FullHom& h, int k_src, int nk_src) {
    std::map<VarId, PolyZ> images;
    for (int j = 0; j <= k_src; ++j) images[full_lambda(j)] = h.lam(j);
    for (int q = 0; q <= nk_src; ++q) images[full_mu(q)] = h.mu(q);
    for (VarId v : f.variables())
        if (!images.count(v)) images.emplace(v, PolyZ::variable(v));
    return apply_hom(f, images);
}

// map a polynomial written in the reduced variables l_p / m_q through a hom
// given on full indices
inline PolyZ map_full_on_reduced(const PolyZ& f, const FullHom& h, int max_index = 32) {
    std::map<VarId, PolyZ> images;
    for (VarId v : f.variables()) {
        bool mapped = false;
        for (int i = 1; i <= max_index && !mapped; ++i) {
            if (v == lam_var(i)) { images[v] = h.lam(i); mapped = true; }
            else if (v == mu_var(i)) { images[v] = h.mu(i); mapped = true; }
        }
        if (!mapped) images.emplace(v, PolyZ::variable(v));
    }
    return apply_hom(f, images);
}

// all full-index defining generators of Kbar_{n,k}
inline std::vector<PolyZ> kbar_full_generators(int n, int k) {
    std::vector<PolyZ> gens;
    for (int p = 1; p <= k; ++p)
        gens.push_back(PolyZ::variable(full_lambda(k - p)) - PolyZ::variable(full_lambda(p)));
    for (int q = 1; q <= n - k; ++q)
        gens.push_back(PolyZ::variable(full_mu(n - k - q)) - PolyZ::variable(full_mu(q)));
    for (int r = 1; r <= n; ++r) gens.push_back(knk_whitney_full(n, k, r));
    return gens;
}

}  // namespace knkdetail

inline Eq22Report verify_eq22_chain(int s, int t, const Budget& budget = Budget{}) {
    Eq22Report rep;
    rep.s = s;
    rep.t = t;
    const int n0 = 2 * s + 2 * t + 2, k0 = 2 * s + 1;
    const int n1 = 2 * s + 2 * t + 1, k1 = 2 * s + 1;
    const int n2 = 2 * s + 2 * t, k2 = 2 * s;
    KnkModel R0 = build_knk_model(n0, k0, 1, false, budget);
    KnkModel R1 = build_knk_model(n1, k1, 1, false, budget);
    KnkModel R2 = build_knk_model(n2, k2, 1, false, budget);

    auto lam_reduced = [&](const KnkModel& R, int j) {
        return substitute(knkdetail::reduced_lambda(j, R.k, false), R.mu_images);
    };
    auto mu_reduced = [&](const KnkModel& R, int j) {
        return substitute(knkdetail::reduced_mu(j, R.n - R.k, false), R.mu_images);
    };

    // alpha_0: lambda_p -> lambda_p, mu_q -> mu_q + mu_{q-1} (target R1)
    knkdetail::FullHom alpha0{
        [&](int j) { return lam_reduced(R1, j); },
        [&](int q) { return mu_reduced(R1, q) + mu_reduced(R1, q - 1); }};
    // beta_0: lambda_p -> lambda_p, mu_q -> sum_{0<=i<=q} (-1)^{q-i} mu_i (target R0)
    knkdetail::FullHom beta0{
        [&](int j) { return lam_reduced(R0, j); },
        [&](int q) {
            PolyZ sum;
            for (int i = 0; i <= q; ++i) {
                PolyZ term = mu_reduced(R0, i);
                sum += ((q - i) % 2 == 0) ? term : PolyZ() - term;
            }
            return sum;
        }};
    // alpha_1: lambda_p -> lambda_p + lambda_{p-1}, mu_q -> mu_q (target R2)
    knkdetail::FullHom alpha1{
        [&](int j) { return lam_reduced(R2, j) + lam_reduced(R2, j - 1); },
        [&](int q) { return mu_reduced(R2, q); }};
    // beta_1: lambda_p -> alternating sum, mu_q -> mu_q (target R1)
    knkdetail::FullHom beta1{
        [&](int j) {
            PolyZ sum;
            for (int i = 0; i <= j; ++i) {
                PolyZ term = lam_reduced(R1, i);
                sum += ((j - i) % 2 == 0) ? term : PolyZ() - term;
            }
            return sum;
        },
        [&](int q) { return mu_reduced(R1, q); }};

    auto well_defined = [&](const KnkModel& src, const KnkModel& tgt, const knkdetail::FullHom& h) {
        for (auto& g : knkdetail::kbar_full_generators(src.n, src.k)) {
            PolyZ img = knkdetail::map_full(g, h, src.k, src.n - src.k);
            img = substitute(img, tgt.mu_images);
            if (!normal_form(img, tgt.gb, budget).is_zero()) return false;
        }
        return true;
    };
    rep.well_defined = well_defined(R0, R1, alpha0) && well_defined(R1, R0, beta0) &&
                       well_defined(R1, R2, alpha1) && well_defined(R2, R1, beta1);

    // mutual inverses on the reduced generators
    auto composite_fixes = [&](const KnkModel& src, const knkdetail::FullHom& first,
                               const knkdetail::FullHom& second) {
        for (int p = 1; p <= src.s; ++p) {
            PolyZ one_step = first.lam(p);
            PolyZ back = knkdetail::map_full_on_reduced(one_step, second);
            back = substitute(back, src.mu_images);
            PolyZ diff = back - substitute(lam_reduced(src, p), src.mu_images);
            if (!normal_form(diff, src.gb, budget).is_zero()) return false;
        }
        for (int q = 1; q <= src.t; ++q) {
            PolyZ one_step = first.mu(q);
            PolyZ back = knkdetail::map_full_on_reduced(one_step, second);
            back = substitute(back, src.mu_images);
            PolyZ diff = back - substitute(mu_reduced(src, q), src.mu_images);
            if (!normal_form(diff, src.gb, budget).is_zero()) return false;
        }
        return true;
    };
    rep.mutually_inverse = composite_fixes(R0, alpha0, beta0) && composite_fixes(R1, beta0, alpha0) &&
                           composite_fixes(R1, alpha1, beta1) && composite_fixes(R2, beta1, alpha1);

    Int want = binomial(s + t, s);
    auto free_of_rank = [&](const KnkModel& R) {
        FinAbGroup g = quotient_group_structure(R.gb, budget).group;
        rep.rank = g.rank;
        return g.torsion.empty() && Int(g.rank) == want;
    };
    rep.ranks_ok = free_of_rank(R0) && free_of_rank(R1) && free_of_rank(R2);
    return rep;
}

// --------------------------------------------------------------------------
// Comparison of K_{n,k} with the exact K-group presentation: the ring map
// sends the twisted exterior classes to theta-powers of the reflection-free
// generators. Well-definedness, surjectivity and rank equality (hence finite
// kernel) are all checked computationally.

struct CompareReport {
    int n = 0, k = 0, nu = 0;
    bool well_defined = true;
    bool surjective = true;
    bool ranks_equal = true;
    long rank_knk = 0, rank_k0 = 0;
};

inline CompareReport compare_Knk_K0(int n, int k, const Budget& budget = Budget{}) {
    GrassmannParams p = GrassmannParams::exact_of(n, k);
    CompareReport rep;
    rep.n = n;
    rep.k = k;
    rep.nu = hopf_class_order(p, budget);

    ReducedPresentation red = eliminate_mu(build_presentation(n, k));
    GBEngine e = gb_engine(red, budget);
    KnkResult knk = build_Knk(n, k, rep.nu, budget);

    PolyZ theta = PolyZ::variable(theta_var());
    auto phi_lambda = [&](int j) {  // fl_j -> theta^j lambda-with-untwisted-reflection
        PolyZ base = ktdetail::lambda_poly(j < 0 || j > k ? -1 : j, p.k, p.s);
        return fold_theta(theta.pow(((j % 2) + 2) % 2) * base);
    };
    auto phi_mu = [&](int q) {
        PolyZ base = ktdetail::mu_poly(q < 0 || q > n - k ? -1 : q, p.n - p.k, p.t);
        return fold_theta(theta.pow(((q % 2) + 2) % 2) * base);
    };

    auto check_zero = [&](const PolyZ& f) {
        return normal_form(reduce_to_lambda_theta(f, red), e.gb_full, budget).is_zero();
    };

    // well-definedness on the full generator list of K_{n,k}
    std::map<VarId, PolyZ> images;
    for (int j = 0; j <= k; ++j) images[knkdetail::full_lambda(j)] = phi_lambda(j);
    for (int q = 0; q <= n - k; ++q) images[knkdetail::full_mu(q)] = phi_mu(q);
    images[theta_var()] = theta;
    auto map_and_check = [&](const PolyZ& g) {
        std::map<VarId, PolyZ> im = images;
        for (VarId v : g.variables())
            if (!im.count(v)) im.emplace(v, PolyZ::variable(v));
        return check_zero(fold_theta(apply_hom(g, im)));
    };
    // (i) twisted reflections
    for (int j = 1; j <= k; ++j) {
        PolyZ g = PolyZ::variable(knkdetail::full_lambda(k - j)) -
                  theta * PolyZ::variable(knkdetail::full_lambda(j));
        if (!map_and_check(g)) rep.well_defined = false;
    }
    for (int q = 1; q <= n - k; ++q) {
        PolyZ g = PolyZ::variable(knkdetail::full_mu(n - k - q)) -
                  theta * PolyZ::variable(knkdetail::full_mu(q));
        if (!map_and_check(g)) rep.well_defined = false;
    }
    // (ii) Whitney relations and the A-relations
    for (int r = 1; r <= n; ++r)
        if (!map_and_check(knk_whitney_full(n, k, r))) rep.well_defined = false;
    if (!check_zero(theta.pow(2) - PolyZ::constant(Int(1)))) rep.well_defined = false;
    if (!check_zero(PolyZ::constant(int_pow2(rep.nu)) * (PolyZ::constant(Int(1)) - theta)))
        rep.well_defined = false;

    // surjectivity: every monomial generator of the K0 group is the image of
    // an explicit monomial in the twisted generators
    for (auto& mon : e.q_full.monomial_generators) {
        long twist = 0;
        PolyZ preimage = PolyZ::constant(Int(1));
        int texp = 0;
        for (auto& [v, x] : mon.e) {
            if (v == theta_var()) { texp = x; continue; }
            for (int i = 1; i <= p.s; ++i)
                if (v == lam_var(i)) {
                    twist += static_cast<long>(i) * x;
                    preimage *= PolyZ::variable(knkdetail::full_lambda(i)).pow(x);
                }
        }
        long c = ((texp - twist) % 2 + 2) % 2;
        PolyZ img = fold_theta(apply_hom(preimage * theta.pow(c), images));
        if (!check_zero(img - PolyZ::term(mon, Int(1)))) rep.surjective = false;
    }

    rep.rank_knk = knk.k_group.rank;
    rep.rank_k0 = e.q_full.group.rank;
    rep.ranks_equal = rep.rank_knk == rep.rank_k0;
    return rep;
}

}  // namespace gkt
