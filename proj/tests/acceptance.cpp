// Acceptance suite: runs every release criterion at its stated tolerance
// (everything here is exact arithmetic, so tolerance means equality) and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "gkt/chern.hpp"
#include "oracles.hpp"

using namespace gkt;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

long ms_since(clk::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clk::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!pass) ++failures;
}

// 1. character identity suite, all parameter sets with m <= 6, s,t <= 3,
//    under 60 seconds
void criterion1() {
    auto t0 = clk::now();
    auto results = run_charring_suite(6, 3, 3);
    bool ok = !results.empty();
    std::string first_fail;
    for (auto& r : results)
        if (!r.pass && first_fail.empty()) {
            ok = false;
            first_fail = r.name;
        }
    long ms = ms_since(t0);
    ok = ok && ms < 60000;
    std::ostringstream os;
    os << "character identities (" << results.size() << " cases, " << ms << " ms)";
    if (!first_fail.empty()) os << " first failure: " << first_fail;
    report(1, ok, os.str());
}

// 2. central-element evaluations of u_1...u_m
void criterion2() {
    auto full = [](int m) {
        Monomial mm;
        for (int j = 1; j <= m; ++j) mm = mm * Monomial::var(uvar(j), 1);
        return PolyZ::term(mm, Int(1), true);
    };
    bool ok = evaluate_at_z0(full(4)) == GaussianInt{1, 0} &&
              evaluate_at_z0(full(8)) == GaussianInt{1, 0} &&
              evaluate_at_z0(full(6)) == GaussianInt{-1, 0};
    report(2, ok, "evaluations at the quarter-turn central element (n = 8, 16, 12)");
}

struct KCase {
    int n, k, rank, hopf;
    FinAbGroup k0, k1;
    bool engines_agree = false;
    long gb_ms = 0, schur_ms = 0;
};

std::vector<KCase> kcases;

// 3+4. K-group ranks, torsion bound, runtime caps, cross-engine agreement
void criterion34() {
    struct Want { int n, k, rank; };
    bool ok3 = true, ok4 = true;
    std::ostringstream os3, os4;
    for (auto w : {Want{8, 3, 3}, Want{12, 3, 5}, Want{12, 5, 10}}) {
        KCase c;
        c.n = w.n;
        c.k = w.k;
        c.rank = w.rank;
        GrassmannParams p = GrassmannParams::exact_of(w.n, w.k);
        ReducedPresentation red = eliminate_mu(build_presentation(w.n, w.k));

        auto t0 = clk::now();
        GBEngine gb = gb_engine(red);
        c.k0 = gb.q_full.group;
        c.gb_ms = ms_since(t0);

        t0 = clk::now();
        SchurEngine se = schur_fast_path(red);
        c.schur_ms = ms_since(t0);

        c.k1 = compute_K1(p);
        c.hopf = hopf_class_order(p);
        c.engines_agree = (c.k0 == se.K0);

        bool rank_ok = c.k0.rank == w.rank && c.k1.rank == c.k0.rank;
        Int bound = int_pow2(p.m - 1);
        bool torsion_ok = true;
        for (auto& d : c.k0.torsion) torsion_ok = torsion_ok && (bound % d == 0);
        long cap_ms = (w.n == 12 && w.k == 5) ? 15 * 60000 : 5 * 60000;
        bool time_ok = c.gb_ms < cap_ms && c.schur_ms < 60000;
        if (!(rank_ok && torsion_ok && time_ok)) ok3 = false;
        if (!c.engines_agree) ok4 = false;
        os3 << " (" << w.n << "," << w.k << "): " << c.k0.to_string() << " K1 rank " << c.k1.rank
            << " [gb " << c.gb_ms << " ms, schur " << c.schur_ms << " ms]";
        kcases.push_back(c);
    }
    report(3, ok3, "K-group ranks 3/5/10, rank K1 = rank K0, torsion | 2^{m-1}, in time:" +
                       os3.str());
    report(4, ok4, "cross-engine agreement of invariant factors for all three cases");
}

// 5. hopf orders 3/5/5 and bounds [3,5] for (10,3), (11,4), (9,2)
void criterion5() {
    bool ok = true;
    for (auto& c : kcases) {
        int want = (c.n == 8) ? 3 : 5;
        if (c.hopf != want) ok = false;
    }
    for (auto [n, k] : std::vector<std::pair<int, int>>{{10, 3}, {11, 4}, {9, 2}}) {
        auto b = hopf_order_bounds(n, k);
        if (!(b.lower == 3 && b.upper == 5)) ok = false;
    }
    report(5, ok, "hopf order exponents 3/5/5 exact, bounds [3,5] for (10,3), (11,4), (9,2)");
}

// 6. barB relations (a), (b) for all j, (c), and the binomial consequence
void criterion6() {
    bool ok = true;
    for (auto& c : kcases) {
        auto rep = verify_barB(GrassmannParams::exact_of(c.n, c.k));
        if (!rep.all()) ok = false;
    }
    report(6, ok, "quotient relations (a), (b), (c) and (1+theta)^n = 2^{2m} in all three cases");
}

// 7. chern character surjectivity with image dimension C(s+t, s), < 2 min each
void criterion7() {
    bool ok = true;
    std::ostringstream os;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}}) {
        auto t0 = clk::now();
        auto rep = verify_ch_surjectivity(n, k);
        long ms = ms_since(t0);
        int s = k / 2, t = (n - k) / 2;
        Int want = binomial(s + t, s);
        bool case_ok = rep.pass && Int(rep.image_dimension) == want && ms < 120000;
        if (!case_ok) ok = false;
        os << " (" << n << "," << k << "):" << rep.image_dimension;
    }
    report(7, ok, "chern character surjectivity with image dimension (s+t choose s):" + os.str());
}

// 8. Whitney coefficient identities for all r <= n and det(M) != 0 for d <= 12
void criterion8() {
    bool ok = true;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}})
        if (!verify_eq20(n, k)) ok = false;
    for (int d = 1; d <= 12; ++d)
        if (det(adams_matrix(d)) == 0) ok = false;
    report(8, ok, "exterior-power Whitney identities for all r <= n; det(M) != 0 for d <= 12");
}

// 9. lambda-ring chain isomorphisms, Kbar ranks, and the comparison map
void criterion9() {
    bool ok = true;
    for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t) {
            auto r = verify_eq22_chain(s, t);
            if (!(r.well_defined && r.mutually_inverse && r.ranks_ok)) ok = false;
        }
    for (auto& c : kcases) {
        auto r = compare_Knk_K0(c.n, c.k);
        if (!(r.well_defined && r.surjective && r.ranks_equal)) ok = false;
    }
    report(9, ok,
           "ring chain isomorphisms for s,t <= 3 with free rank (s+t choose s); comparison map "
           "well-defined, surjective, equal ranks");
}

// 10. property suites, exact
void criterion10() {
    bool ok = true;

    // SNF invariants on 200 random matrices
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 6), entry(-20, 20);
    for (int iter = 0; iter < 200 && ok; ++iter) {
        IntMatrix A(dim(rng), dim(rng));
        for (Int& x : A.a) x = entry(rng);
        auto d = smith_normal_form(A);
        if (!(mat_mul(mat_mul(d.U, A), d.V) == d.S)) ok = false;
        Int du = det(d.U), dv = det(d.V);
        if (!((du == 1 || du == -1) && (dv == 1 || dv == -1))) ok = false;
        for (size_t i = 0; i + 1 < d.invariant_factors.size(); ++i)
            if (d.invariant_factors[i + 1] % d.invariant_factors[i] != 0) ok = false;
    }

    // groebner soundness and confluence on curated ideals
    {
        std::vector<VarId> xy = {intern_var("x"), intern_var("y")};
        IdealPresentation<Int> ideal(xy, {parse_polyz("4*x^2 - y"), parse_polyz("6*x*y - 3"),
                                          parse_polyz("y^3 - 2*x")});
        auto G = strong_groebner(ideal);
        std::uniform_int_distribution<int> coef(-5, 5), expd(0, 2);
        for (int iter = 0; iter < 30 && ok; ++iter) {
            PolyZ combo;
            for (auto& g : ideal.gens) {
                Monomial mnm = Monomial::var(xy[0], expd(rng)) * Monomial::var(xy[1], expd(rng));
                combo += PolyZ::term(mnm, Int(coef(rng))) * g;
            }
            if (!normal_form(combo, G).is_zero()) ok = false;
        }
        // canonical under generator permutation
        IdealPresentation<Int> perm(xy, {parse_polyz("y^3 - 2*x"), parse_polyz("4*x^2 - y"),
                                         parse_polyz("6*x*y - 3")});
        if (!(strong_groebner(perm).basis == G.basis)) ok = false;

        // random ideals: soundness and path-independent normal forms on every
        // instance that stays inside the deterministic growth guard
        std::mt19937_64 grng(987123);
        int completed = 0;
        for (int iter = 0; iter < 25; ++iter) {
            auto gens = gkt_oracles::random_ideal(grng, xy, 3);
            if (gens.empty()) continue;
            Budget b;
            b.max_steps = 200'000;
            b.max_coeff_bits = 4096;
            StrongGB<Int> RG;
            try {
                RG = strong_groebner(IdealPresentation<Int>(xy, gens), b);
            } catch (const BudgetExceeded&) {
                continue;
            }
            ++completed;
            for (int check = 0; check < 4; ++check) {
                PolyZ combo;
                for (auto& g : gens) {
                    Monomial mnm =
                        Monomial::var(xy[0], expd(grng)) * Monomial::var(xy[1], expd(grng));
                    combo += PolyZ::term(mnm, Int(coef(grng))) * g;
                }
                if (!normal_form(combo, RG).is_zero()) ok = false;
                PolyZ probe = combo + PolyZ::term(Monomial::var(xy[1], expd(grng)), Int(3));
                if (!(gkt_oracles::shuffled_nf(probe, RG, grng) == normal_form(probe, RG)))
                    ok = false;
            }
        }
        if (completed < 15) ok = false;
    }

    // newton round trips on 100 random rational vectors
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int iter = 0; iter < 100 && ok; ++iter) {
        int d = 1 + iter % 6;
        std::vector<Rat> e;
        for (int i = 0; i < d; ++i) e.push_back(make_rat(Int(num(rng)), Int(den(rng))));
        auto ps = newton_convert(NewtonDirection::ElementaryToPower, e, d);
        if (newton_convert(NewtonDirection::PowerToElementary, ps, d) != e) ok = false;
    }

    // schur at all-ones equals brute-force tableau counts for |lambda| <= 6
    for (int nv = 1; nv <= 3 && ok; ++nv) {
        std::vector<VarId> vars;
        for (int i = 1; i <= nv; ++i) vars.push_back(intern_var("x" + std::to_string(i)));
        std::map<VarId, Int> ones;
        for (VarId v : vars) ones[v] = 1;
        for (int total = 1; total <= 6; ++total)
            for (auto& lambda : partitions_in_box(total, total)) {
                if (lambda.size() != total) continue;
                auto s = schur_polynomial<Int>(lambda, vars);
                if (evaluate(s, ones) != Int(gkt_oracles::count_ssyt(lambda, nv))) ok = false;
            }
    }

    report(10, ok, "property suites: SNF x200, GB soundness/canonicity, Newton x100, Schur SSYT");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion34();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
