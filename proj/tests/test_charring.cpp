#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gkt/charring.hpp"

using namespace gkt;

namespace {

Int dim_of(const PolyZ& character) {
    std::map<VarId, Int> ones;
    for (VarId v : character.variables()) ones[v] = 1;
    // negative exponents: evaluate via abs since 1^{-1} = 1
    Int sum(0);
    for (auto& [m, c] : character.t) sum += c;
    (void)ones;
    return sum;
}

PolyZ swap_vars(const PolyZ& p, VarId a, VarId b) {
    std::map<VarId, PolyZ> h;
    h[a] = laurent_var(b, 1);
    h[b] = laurent_var(a, 1);
    return substitute(p, h);
}

PolyZ flip_var(const PolyZ& p, VarId a) {
    std::map<VarId, PolyZ> h;
    h[a] = laurent_var(a, -1);
    return substitute(p, h);
}

// Random monomial in u1..um with uniform exponent parity.
Monomial random_spin_monomial(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> pick(0, 1), mag(-2, 2);
    bool odd = pick(rng);
    Monomial mono;
    for (int j = 1; j <= m; ++j) {
        int e = 2 * mag(rng) + (odd ? 1 : 0);
        mono = mono * Monomial::var(uvar(j), e);
    }
    return mono;
}

}  // namespace

TEST_CASE("pinned characters") {
    // Spin(5): 2^s = 4 monomials u1^{+-1} u2^{+-1}
    auto d = char_spin_odd(2);
    REQUIRE(d.t.size() == 4);
    REQUIRE(dim_of(d) == 4);

    REQUIRE(dim_of(char_exterior_D(1, 4)) == 8);   // Lambda_1 of Spin(8) at all-ones
    REQUIRE(dim_of(char_half_spin(+1, 4)) == 8);   // Delta_4^+ has dimension 2^{m-1}
    REQUIRE(dim_of(char_half_spin(-1, 4)) == 8);
}

TEST_CASE("dimension consistency across symbols") {
    for (int m = 1; m <= 6; ++m) {
        for (int j = 0; j <= 2 * m; ++j)
            REQUIRE(dim_of(char_exterior_D(j, m)) == binomial(2 * m, j));
        REQUIRE(dim_of(char_half_spin(+1, m)) == int_pow2(m - 1));
        REQUIRE(dim_of(char_spin_odd(m)) == int_pow2(m));
        for (int p = 0; p <= 2 * m + 1; ++p)
            REQUIRE(dim_of(char_exterior_B(p, m)) == binomial(2 * m + 1, p));
    }
}

TEST_CASE("middle exterior split: integrality, sum and labels") {
    for (int s = 1; s <= 3; ++s) {
        auto plus = char_middle_half_D(+1, s);
        auto minus = char_middle_half_D(-1, s);
        REQUIRE(plus + minus == char_exterior_D(s, s));
        REQUIRE(dim_of(plus) * 2 == binomial(2 * s, s));
    }
}

TEST_CASE("weyl invariance") {
    // B type: permutations and all sign flips
    for (int s = 2; s <= 3; ++s) {
        for (int p = 1; p <= s; ++p) {
            auto c = char_exterior_B(p, s);
            for (int i = 1; i < s; ++i) REQUIRE(swap_vars(c, uvar(i), uvar(i + 1)) == c);
            REQUIRE(flip_var(c, uvar(1)) == c);
        }
        auto d = char_spin_odd(s);
        for (int i = 1; i < s; ++i) REQUIRE(swap_vars(d, uvar(i), uvar(i + 1)) == d);
        REQUIRE(flip_var(d, uvar(1)) == d);
    }
    // D type: permutations and even sign flips only
    for (int m = 2; m <= 4; ++m) {
        auto hp = char_half_spin(+1, m);
        for (int i = 1; i < m; ++i) REQUIRE(swap_vars(hp, uvar(i), uvar(i + 1)) == hp);
        REQUIRE(flip_var(flip_var(hp, uvar(1)), uvar(2)) == hp);
        REQUIRE(flip_var(hp, uvar(1)) == char_half_spin(-1, m));
    }
}

TEST_CASE("parity classes") {
    REQUIRE(parity_class(char_exterior_D(2, 3)) == ParityClass::AllEven);
    REQUIRE(parity_class(char_half_spin(+1, 3)) == ParityClass::AllOdd);
    REQUIRE(parity_class(laurent_var(uvar(1), 1) * laurent_var(uvar(2), 2)) == ParityClass::Mixed);
}

TEST_CASE("mu_star pinned examples") {
    // u1^2 * u2^{-2} at (8,3): s = 1, so u2 is the dropped coordinate;
    // theta^2 = 1 leaves plain u1^2
    PolyZ x = PolyZ::term(Monomial::var(uvar(1), 2) * Monomial::var(uvar(2), -2), Int(1), true);
    REQUIRE(mu_star(x, 8, 3) == parse_polyz("u1^2", true));

    // full odd monomial at n = 8: no theta
    PolyZ odd = PolyZ::term(Monomial::var(uvar(1), 1) * Monomial::var(uvar(2), 1) *
                                Monomial::var(uvar(3), 1) * Monomial::var(uvar(4), 1),
                            Int(1), true);
    REQUIRE(mu_star(odd, 8, 3) == parse_polyz("u1*v1*v2", true));

    // same shape at n = 12 (m = 6): one extra theta
    Monomial mall;
    for (int j = 1; j <= 6; ++j) mall = mall * Monomial::var(uvar(j), 1);
    PolyZ odd12 = PolyZ::term(mall, Int(1), true);
    REQUIRE(mu_star(odd12, 12, 3) == parse_polyz("theta*u1*v1*v2*v3*v4", true));

    REQUIRE_THROWS_AS(mu_star(laurent_var(uvar(1), 1) * laurent_var(uvar(2), 2) +
                              PolyZ::constant(Int(0), true), 8, 3),
                      std::invalid_argument);
}

TEST_CASE("mu_star is multiplicative on random torus-ring pairs") {
    std::mt19937_64 rng(811);
    for (int iter = 0; iter < 100; ++iter) {
        int n = (iter % 2) ? 8 : 12;
        int k = 3;
        int m = n / 2;
        PolyZ a = PolyZ::term(random_spin_monomial(rng, m), Int(1), true);
        PolyZ b = PolyZ::term(random_spin_monomial(rng, m), Int(1), true);
        REQUIRE(mu_star(a * b, n, k) == fold_theta(mu_star(a, n, k) * mu_star(b, n, k)));
    }
}

TEST_CASE("evaluation at the central quarter-turn element") {
    auto full = [](int m) {
        Monomial mm;
        for (int j = 1; j <= m; ++j) mm = mm * Monomial::var(uvar(j), 1);
        return PolyZ::term(mm, Int(1), true);
    };
    REQUIRE(evaluate_at_z0(full(4)) == GaussianInt{1, 0});   // n = 8
    REQUIRE(evaluate_at_z0(full(8)) == GaussianInt{1, 0});   // n = 16
    REQUIRE(evaluate_at_z0(full(6)) == GaussianInt{-1, 0});  // n = 12
    REQUIRE(evaluate_at_z0(PolyZ::constant(Int(1), true)) == GaussianInt{1, 0});
    REQUIRE(evaluate_at_z0(theta_poly()) == GaussianInt{-1, 0});
}

TEST_CASE("splitting criterion") {
    REQUIRE(splits_as_direct_product(8, 3));
    REQUIRE_FALSE(splits_as_direct_product(10, 3));
    REQUIRE_FALSE(splits_as_direct_product(8, 2));
    REQUIRE_THROWS_AS(splits_as_direct_product(8, 5), std::invalid_argument);
}

TEST_CASE("identity suite desk-scale sweep") {
    auto results = run_charring_suite(6, 3, 3);
    REQUIRE(results.size() > 20);
    for (auto& r : results) {
        INFO(r.name << " s=" << (r.params.count("s") ? r.params.at("s") : -1)
                    << " t=" << (r.params.count("t") ? r.params.at("t") : -1)
                    << " m=" << (r.params.count("m") ? r.params.at("m") : -1)
                    << " witness=" << to_text(r.witness));
        REQUIRE(r.pass);
    }
}

TEST_CASE("injected sign error is detected with a nonzero witness") {
    // perturb eq3 by flipping the sign of one side's theta-free constant
    PolyZ lhs = char_spin_odd(1, uvar).pow(2) * char_spin_odd(1, vvar).pow(2);
    PolyZ rhs(true);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q)
            rhs += char_exterior_B(p, 1, uvar) * char_exterior_B(q, 1, vvar);
    PolyZ bad = rhs + PolyZ::constant(Int(2), true);  // injected error
    auto r = identity_result("eq3_perturbed", {}, lhs - bad);
    REQUIRE_FALSE(r.pass);
    REQUIRE(!r.witness.is_zero());
}

TEST_CASE("restriction cases pass individually") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {12, 3}, {12, 5}}) {
        auto r = verify_restriction(n, k);
        INFO("(" << n << "," << k << ") witness=" << to_text(r.witness));
        REQUIRE(r.pass);
    }
}

TEST_CASE("character_of dispatch with dimension guard") {
    REQUIRE(character_of("Delta", {{"s", 2}}).character.t.size() == 4);
    REQUIRE(character_of("Lambda", {{"j", 1}, {"m", 4}}).symbol == "Lambda");
    REQUIRE(character_of("Delta_plus", {{"m", 4}}).group == GroupTag::SpinEven);
    REQUIRE(character_of("lambda_plus", {{"s", 2}}).character ==
            char_middle_half_D(+1, 2));
    REQUIRE_THROWS_AS(character_of("nope", {}), std::invalid_argument);
    REQUIRE_THROWS_AS(character_of("Delta", {}), std::invalid_argument);
}

TEST_CASE("verify_identity dispatch") {
    REQUIRE(verify_identity("delta_product", {{"m", 4}}).pass);
    REQUIRE(verify_identity("restriction", {{"n", 8}, {"k", 3}}).pass);
    REQUIRE_THROWS_AS(verify_identity("nope", {}), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_identity("delta_product", {{"m", 50}}), std::invalid_argument);
}
