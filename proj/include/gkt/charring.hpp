#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gkt/express.hpp"
#include "gkt/polynomial.hpp"
#include "gkt/symfunc.hpp"

namespace gkt {

// Characters live in Z[u_1^{+-1},...,u_m^{+-1}] (optionally v_1..v_t after
// restriction) tensored with Z[theta]/(theta^2-1). theta is an ordinary
// variable folded to exponent 0 or 1.

inline VarId uvar(int j) { return intern_var("u" + std::to_string(j)); }
inline VarId vvar(int j) { return intern_var("v" + std::to_string(j)); }
inline VarId theta_var() { return intern_var("theta"); }

inline PolyZ theta_poly(int e = 1) {
    return PolyZ::term(Monomial::var(theta_var(), e % 2), Int(1), true);
}

inline PolyZ fold_theta(const PolyZ& p) {
    VarId th = theta_var();
    std::map<Monomial, Int, GrlexNameLess> acc;
    for (auto& [m, c] : p.t) {
        Monomial out;
        int te = 0;
        for (auto& [v, x] : m.e) {
            if (v == th) te = x;
            else out = out * Monomial::var(v, x);
        }
        if (te < 0) throw std::invalid_argument("negative theta exponent");
        if (te % 2 == 1) out = out * Monomial::var(th, 1);
        acc[out] += c;
    }
    return PolyZ::from_map(std::move(acc), p.laurent);
}

enum class ParityClass { AllEven, AllOdd, Mixed };

// Exponent parity across the torus coordinates of a single monomial must be
// uniform for membership in the representation ring of the spin torus.
inline ParityClass parity_class(const PolyZ& p) {
    bool even_seen = false, odd_seen = false;
    VarId th = theta_var();
    for (auto& [m, c] : p.t) {
        bool mono_even = true, mono_odd = true;
        for (auto& [v, x] : m.e) {
            if (v == th) continue;
            if (x % 2 == 0) mono_odd = false;
            else mono_even = false;
        }
        if (mono_even) even_seen = true;
        else if (mono_odd) odd_seen = true;
        else return ParityClass::Mixed;
    }
    if (even_seen && odd_seen) return ParityClass::Mixed;
    return odd_seen ? ParityClass::AllOdd : ParityClass::AllEven;
}

using VarGen = std::function<VarId(int)>;

inline PolyZ laurent_var(VarId v, int e) { return PolyZ::term(Monomial::var(v, e), Int(1), true); }

// e_j(u_1^2, u_1^{-2}, ..., u_m^2, u_m^{-2}): the exterior-power generators of
// R Spin(2m) / R SO(2m) in torus coordinates.
inline PolyZ char_exterior_D(int j, int m, const VarGen& var = uvar) {
    std::vector<PolyZ> args;
    for (int i = 1; i <= m; ++i) {
        args.push_back(laurent_var(var(i), 2));
        args.push_back(laurent_var(var(i), -2));
    }
    return elementary_symmetric(args, j);
}

// e_p(u_1^2, u_1^{-2}, ..., u_s^2, u_s^{-2}, 1): exterior powers for the odd
// orthogonal group SO(2s+1).
inline PolyZ char_exterior_B(int p, int s, const VarGen& var = uvar) {
    std::vector<PolyZ> args;
    for (int i = 1; i <= s; ++i) {
        args.push_back(laurent_var(var(i), 2));
        args.push_back(laurent_var(var(i), -2));
    }
    args.push_back(PolyZ::constant(Int(1), true));
    return elementary_symmetric(args, p);
}

// Spin representation of Spin(2s+1): sum over all sign vectors.
inline PolyZ char_spin_odd(int s, const VarGen& var = uvar) {
    PolyZ prod = PolyZ::constant(Int(1), true);
    for (int i = 1; i <= s; ++i) prod *= laurent_var(var(i), 1) + laurent_var(var(i), -1);
    return prod;
}

// Half-spin representations of Spin(2m): sign vectors with an even (+) or
// odd (-) number of -1 entries.
inline PolyZ char_half_spin(int sign, int m, const VarGen& var = uvar) {
    PolyZ sum(true);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int neg = __builtin_popcount(mask);
        if ((neg % 2 == 0) != (sign > 0)) continue;
        Monomial mono;
        for (int i = 1; i <= m; ++i)
            mono = mono * Monomial::var(var(i), (mask >> (i - 1)) & 1 ? -1 : 1);
        sum += PolyZ::term(mono, Int(1), true);
    }
    return sum;
}

// delta_m = Delta^+ - Delta^- = prod (u_i - u_i^{-1}).
inline PolyZ char_spinor_difference(int m, const VarGen& var = uvar) {
    PolyZ prod = PolyZ::constant(Int(1), true);
    for (int i = 1; i <= m; ++i) prod *= laurent_var(var(i), 1) - laurent_var(var(i), -1);
    return prod;
}

// Hodge eigenspace halves of the middle exterior power of SO(2s):
// (e_s(u^{+-2}) +- prod(u_i^2 - u_i^{-2})) / 2. Integrality is asserted.
inline PolyZ char_middle_half_D(int sign, int s, const VarGen& var = uvar) {
    PolyZ prod = PolyZ::constant(Int(1), true);
    for (int i = 1; i <= s; ++i) prod *= laurent_var(var(i), 2) - laurent_var(var(i), -2);
    PolyZ num = char_exterior_D(s, s, var);
    num = sign > 0 ? num + prod : num - prod;
    PolyZ half(true);
    for (auto& [m, c] : num.t) {
        if (c % 2 != 0) throw std::logic_error("middle exterior split is not integral");
        half.t.push_back({m, Int(c / 2)});
    }
    return half;
}

// Spin(k) x Spin(n-k) spin product Delta_{s,t} for odd k = 2s+1, n-k = 2t+1.
inline PolyZ char_delta_st(int s, int t) {
    return char_spin_odd(s, uvar) * char_spin_odd(t, vvar);
}

enum class GroupTag { SpinEven, SpinOdd, SOEven, SOOdd, H0, H };

struct RepElement {
    GroupTag group;
    std::string symbol;
    PolyZ character;
};

namespace chardetail {

inline Int char_dimension(const PolyZ& c) {
    Int sum(0);  // all torus coordinates and theta at 1
    for (auto& [m, x] : c.t) sum += x;
    return sum;
}

}  // namespace chardetail

// Symbol-dispatched character constructor. The formal dimension (character
// at the identity) is asserted against the expected count for each symbol.
inline RepElement character_of(const std::string& symbol,
                               const std::map<std::string, int>& params) {
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("character_of: missing param " + key);
        return it->second;
    };
    RepElement r;
    r.symbol = symbol;
    Int want;
    if (symbol == "Lambda") {  // exterior power of Spin(2m)/SO(2m)
        int j = get("j"), m = get("m");
        r.group = GroupTag::SpinEven;
        r.character = char_exterior_D(j, m);
        want = binomial(2 * m, j);
    } else if (symbol == "lambda_B") {  // exterior power of SO(2s+1)
        int p = get("p"), s = get("s");
        r.group = GroupTag::SOOdd;
        r.character = char_exterior_B(p, s);
        want = binomial(2 * s + 1, p);
    } else if (symbol == "lambda_D") {
        int p = get("p"), s = get("s");
        r.group = GroupTag::SOEven;
        r.character = char_exterior_D(p, s);
        want = binomial(2 * s, p);
    } else if (symbol == "lambda_plus" || symbol == "lambda_minus") {
        int s = get("s");
        r.group = GroupTag::SOEven;
        r.character = char_middle_half_D(symbol == "lambda_plus" ? +1 : -1, s);
        want = binomial(2 * s, s) / 2;
    } else if (symbol == "Delta") {  // spin representation of Spin(2s+1)
        int s = get("s");
        r.group = GroupTag::SpinOdd;
        r.character = char_spin_odd(s);
        want = int_pow2(s);
    } else if (symbol == "Delta_plus" || symbol == "Delta_minus") {
        int m = get("m");
        r.group = GroupTag::SpinEven;
        r.character = char_half_spin(symbol == "Delta_plus" ? +1 : -1, m);
        want = int_pow2(m - 1);
    } else if (symbol == "Delta_st") {  // product spin class of the subgroup
        int s = get("s"), t = get("t");
        r.group = GroupTag::H0;
        r.character = char_delta_st(s, t);
        want = int_pow2(s + t);
    } else if (symbol == "theta") {
        r.group = GroupTag::H;
        r.character = theta_poly();
        want = 1;
    } else {
        throw std::invalid_argument("character_of: unknown symbol " + symbol);
    }
    if (chardetail::char_dimension(r.character) != want)
        throw std::logic_error("character_of: dimension mismatch for " + symbol);
    return r;
}

struct GrassmannShape {
    int n, k, s, t, m;
    int n_mod_8;
    int epsilon;  // theta exponent of the restricted positive half-spin

    static GrassmannShape of(int n, int k) {
        if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
        if (n % 4 != 0 || k % 2 != 1)
            throw std::invalid_argument("restriction shape needs n = 0 mod 4 and odd k");
        GrassmannShape g;
        g.n = n;
        g.k = k;
        g.s = (k - 1) / 2;
        g.t = (n - k - 1) / 2;
        g.m = n / 2;
        g.n_mod_8 = n % 8;
        g.epsilon = (g.n_mod_8 == 0) ? 0 : 1;
        return g;
    }
};

// Restriction along H_{n,k} x Z -> Spin(n): monomial-wise on the torus.
// u_j^{a} keeps index j <= s, coordinate s+1 is dropped, the rest become
// v_{j-s-1}; the theta exponent of a monomial u^a is (sum_j a_j)/2 mod 2.
inline PolyZ mu_star(const PolyZ& x, int n, int k) {
    GrassmannShape g = GrassmannShape::of(n, k);
    if (parity_class(x) == ParityClass::Mixed)
        throw std::invalid_argument("mu_star: mixed-parity input is not in the spin torus ring");
    std::map<VarId, int> upos;
    for (int j = 1; j <= g.m; ++j) upos[uvar(j)] = j;
    std::map<Monomial, Int, GrlexNameLess> acc;
    for (auto& [m, c] : x.t) {
        long tsum = 0;
        Monomial out;
        for (auto& [v, a] : m.e) {
            auto it = upos.find(v);
            if (it == upos.end())
                throw std::invalid_argument("mu_star: input must be a character in u1..um");
            int j = it->second;
            tsum += a;
            if (j <= g.s) out = out * Monomial::var(uvar(j), a);
            else if (j > g.s + 1) out = out * Monomial::var(vvar(j - g.s - 1), a);
        }
        if (tsum % 2 != 0) throw std::logic_error("mu_star: odd character weight sum");
        long texp = ((tsum / 2) % 2 + 2) % 2;
        if (texp) out = out * Monomial::var(theta_var(), 1);
        acc[out] += c;
    }
    return PolyZ::from_map(std::move(acc), true);
}

// Restriction to the identity-component torus: the (s+1)-st coordinate is set
// to 1, the trailing ones renamed to v. No theta appears.
inline PolyZ rho0_restrict(const PolyZ& x, int s, int m) {
    std::map<VarId, int> upos;
    for (int j = 1; j <= m; ++j) upos[uvar(j)] = j;
    std::map<Monomial, Int, GrlexNameLess> acc;
    for (auto& [mon, c] : x.t) {
        Monomial out;
        for (auto& [v, a] : mon.e) {
            auto it = upos.find(v);
            if (it == upos.end()) throw std::invalid_argument("rho0: input must live in u1..um");
            int j = it->second;
            if (a % 2 != 0) throw std::invalid_argument("rho0: only even characters restrict");
            if (j <= s) out = out * Monomial::var(uvar(j), a);
            else if (j > s + 1) out = out * Monomial::var(vvar(j - s - 1), a);
        }
        acc[out] += c;
    }
    return PolyZ::from_map(std::move(acc), true);
}

struct GaussianInt {
    Int re, im;
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
};

// Evaluation at the order-two central element realized by quarter turns:
// every torus coordinate goes to i, theta goes to -1. Defined on characters
// whose monomials have uniform exponent parity.
inline GaussianInt evaluate_at_z0(const PolyZ& x) {
    if (parity_class(x) == ParityClass::Mixed)
        throw std::invalid_argument("evaluate_at_z0: mixed-parity character");
    GaussianInt z{0, 0};
    VarId th = theta_var();
    for (auto& [m, c] : x.t) {
        long e = 0;
        Int sgn = 1;
        for (auto& [v, a] : m.e) {
            if (v == th) {
                if (a % 2 != 0) sgn = -sgn;
            } else {
                e += a;
            }
        }
        switch (((e % 4) + 4) % 4) {
            case 0: z.re += sgn * c; break;
            case 1: z.im += sgn * c; break;
            case 2: z.re -= sgn * c; break;
            case 3: z.im -= sgn * c; break;
        }
    }
    return z;
}

inline bool splits_as_direct_product(int n, int k) {
    if (k < 2 || 2 * k > n) throw std::invalid_argument("need 2 <= k <= n/2");
    return n % 4 == 0 && k % 2 == 1;
}

// ---------------------------------------------------------------------------
// Identity suite

struct IdentityResult {
    std::string name;
    std::map<std::string, int> params;
    bool pass = false;
    PolyZ witness;  // zero on pass, the nonzero difference otherwise
};

inline IdentityResult identity_result(std::string name, std::map<std::string, int> params,
                                      const PolyZ& difference) {
    IdentityResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.witness = difference;
    r.pass = difference.is_zero();
    return r;
}

// Delta_s^2 (Delta'_t)^2 = (sum lambda_p)(sum mu_q)
inline IdentityResult verify_eq3(int s, int t) {
    PolyZ lhs = char_spin_odd(s, uvar).pow(2) * char_spin_odd(t, vvar).pow(2);
    PolyZ sl(true), sm(true);
    for (int p = 0; p <= s; ++p) sl += char_exterior_B(p, s, uvar);
    for (int q = 0; q <= t; ++q) sm += char_exterior_B(q, t, vvar);
    return identity_result("eq3", {{"s", s}, {"t", t}}, lhs - sl * sm);
}

// Delta_m^+ Delta_m^- = Lambda_{m-1} + Lambda_{m-3} + ...
inline IdentityResult verify_delta_product(int m) {
    PolyZ lhs = char_half_spin(+1, m) * char_half_spin(-1, m);
    PolyZ rhs(true);
    for (int j = m - 1; j >= 0; j -= 2) rhs += char_exterior_D(j, m);
    return identity_result("delta_product", {{"m", m}}, lhs - rhs);
}

// Delta_s^2 = sum_{0<=p<=s} lambda_p
inline IdentityResult verify_odd_spin_square(int s) {
    PolyZ lhs = char_spin_odd(s, uvar).pow(2);
    PolyZ rhs(true);
    for (int p = 0; p <= s; ++p) rhs += char_exterior_B(p, s, uvar);
    return identity_result("odd_spin_square", {{"s", s}}, lhs - rhs);
}

// lambda_s^+ lambda_s^- = (lambda_{s-1}+lambda_{s-3}+...)^2
//                        - lambda_s (lambda_{s-2}+...) - (lambda_{s-2}+...)^2
inline IdentityResult verify_hodge_quadratic(int s) {
    PolyZ lhs = char_middle_half_D(+1, s) * char_middle_half_D(-1, s);
    PolyZ odd(true), even(true);
    for (int j = s - 1; j >= 0; j -= 2) odd += char_exterior_D(j, s);
    for (int j = s - 2; j >= 0; j -= 2) even += char_exterior_D(j, s);
    PolyZ rhs = odd * odd - char_exterior_D(s, s) * even - even * even;
    return identity_result("hodge_quadratic", {{"s", s}}, lhs - rhs);
}

// rho(Lambda_j) = theta^j sum_{p+q=j} lambda_p mu_q and
// rho(Delta^+-_m) = theta^{eps,(1+eps)} Delta_{s,t}
inline IdentityResult verify_restriction(int n, int k) {
    GrassmannShape g = GrassmannShape::of(n, k);
    PolyZ diff(true);
    for (int j = 1; j <= g.m && diff.is_zero(); ++j) {
        PolyZ lhs = mu_star(char_exterior_D(j, g.m), n, k);
        PolyZ rhs(true);
        for (int p = 0; p <= j; ++p) {
            int q = j - p;
            if (p > g.k || q > g.n - g.k) continue;
            rhs += char_exterior_B(p, g.s, uvar) * char_exterior_B(q, g.t, vvar);
        }
        rhs = fold_theta(theta_poly(j % 2) * rhs);
        diff = lhs - rhs;
    }
    if (diff.is_zero()) {
        PolyZ dst = char_delta_st(g.s, g.t);
        PolyZ lp = mu_star(char_half_spin(+1, g.m), n, k);
        PolyZ lm = mu_star(char_half_spin(-1, g.m), n, k);
        diff = lp - fold_theta(theta_poly(g.epsilon) * dst);
        if (diff.is_zero()) diff = lm - fold_theta(theta_poly(1 + g.epsilon) * dst);
    }
    return identity_result("restriction", {{"n", n}, {"k", k}}, diff);
}

// rho_0(z_j) = sum_{p+q=j} x_p y_q + 2 sum_{p+q=j-1} x_p y_q, the z' recursion
// rho_0(z'_r) = sum_{p+q=r} x_p y_q, and rho_0(z_m) = 2 x_s y_t.
inline IdentityResult verify_z_identities(int s, int t) {
    int m = s + t + 1;
    auto zchar = [&](int j) {
        std::vector<PolyZ> args;
        for (int i = 1; i <= m; ++i) args.push_back(laurent_var(uvar(i), 2) + laurent_var(uvar(i), -2));
        return elementary_symmetric(args, j);
    };
    auto xchar = [&](int p) {
        if (p < 0 || p > s) return PolyZ::zero(true);
        std::vector<PolyZ> args;
        for (int i = 1; i <= s; ++i) args.push_back(laurent_var(uvar(i), 2) + laurent_var(uvar(i), -2));
        return elementary_symmetric(args, p);
    };
    auto ychar = [&](int q) {
        if (q < 0 || q > t) return PolyZ::zero(true);
        std::vector<PolyZ> args;
        for (int i = 1; i <= t; ++i) args.push_back(laurent_var(vvar(i), 2) + laurent_var(vvar(i), -2));
        return elementary_symmetric(args, q);
    };
    auto conv = [&](int r) {
        PolyZ sum(true);
        for (int p = 0; p <= r; ++p) sum += xchar(p) * ychar(r - p);
        return sum;
    };

    PolyZ diff(true);
    std::vector<PolyZ> zprime(m);  // zprime[r] for r >= 1
    for (int j = 1; j <= m - 1 && diff.is_zero(); ++j) {
        diff = rho0_restrict(zchar(j), s, m) - (conv(j) + Int(2) * conv(j - 1));
    }
    if (diff.is_zero()) diff = rho0_restrict(zchar(m), s, m) - Int(2) * xchar(s) * ychar(t);
    if (diff.is_zero()) {
        PolyZ prev = PolyZ::constant(Int(1), true);  // z'_0 = 1, so z'_1 = z_1 - 2
        for (int r = 1; r <= m - 1 && diff.is_zero(); ++r) {
            PolyZ zp = zchar(r) - Int(2) * prev;
            diff = rho0_restrict(zp, s, m) - conv(r);
            prev = zp;
        }
    }
    return identity_result("z_identities", {{"s", s}, {"t", t}}, diff);
}

// Squares of the component-group generators land in R(SO(k) x SO(n-k)).
inline IdentityResult verify_rh0_squares(int s, int t, int k_parity_even, int nk_parity_even) {
    std::vector<PolyZ> gens;  // generators of R as a polynomial/quadratic ring
    for (int p = 1; p <= s; ++p)
        gens.push_back(k_parity_even ? char_exterior_D(p, s, uvar) : char_exterior_B(p, s, uvar));
    if (k_parity_even) gens.push_back(char_middle_half_D(+1, s, uvar));
    for (int q = 1; q <= t; ++q)
        gens.push_back(nk_parity_even ? char_exterior_D(q, t, vvar) : char_exterior_B(q, t, vvar));
    if (nk_parity_even) gens.push_back(char_middle_half_D(+1, t, vvar));

    std::vector<PolyZ> half_u, half_v;
    if (k_parity_even) {
        half_u = {char_half_spin(+1, s, uvar), char_half_spin(-1, s, uvar)};
    } else {
        half_u = {char_spin_odd(s, uvar)};
    }
    if (nk_parity_even) {
        half_v = {char_half_spin(+1, t, vvar), char_half_spin(-1, t, vvar)};
    } else {
        half_v = {char_spin_odd(t, vvar)};
    }

    PolyZ witness(true);
    bool ok = true;
    // squares of the spin factors are linear in the generators, so the
    // product square needs generator-degree at most 2
    for (auto& hu : half_u) {
        for (auto& hv : half_v) {
            PolyZ square = (hu * hv).pow(2);
            auto res = express_in_subring(square, gens, 2);
            if (res.status != ExpressStatus::Found || reexpand(res, gens) != square) {
                ok = false;
                witness = square;
                break;
            }
        }
        if (!ok) break;
    }
    IdentityResult r;
    r.name = "rh0_squares";
    r.params = {{"s", s}, {"t", t}, {"k_even", k_parity_even}, {"nk_even", nk_parity_even}};
    r.pass = ok;
    if (!ok) r.witness = witness;
    return r;
}

// Configured desk-scale sweep of the whole suite.
inline std::vector<IdentityResult> run_charring_suite(int max_m = 6, int max_s = 3, int max_t = 3) {
    std::vector<IdentityResult> out;
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t)
            if (s + t + 1 <= max_m) out.push_back(verify_eq3(s, t));
    for (int m = 2; m <= max_m; ++m) out.push_back(verify_delta_product(m));
    for (int s = 1; s <= max_s; ++s) out.push_back(verify_odd_spin_square(s));
    for (int s = 1; s <= max_s; ++s) out.push_back(verify_hodge_quadratic(s));
    for (int n = 8; n <= 2 * max_m; n += 4)
        for (int k = 3; 2 * k <= n; k += 2) out.push_back(verify_restriction(n, k));
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t)
            if (s + t + 1 <= max_m) out.push_back(verify_z_identities(s, t));
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t)
            if (s + t + 1 <= max_m)
                for (int ke = 0; ke <= 1; ++ke)
                    for (int ne = 0; ne <= 1; ++ne) out.push_back(verify_rh0_squares(s, t, ke, ne));
    return out;
}

inline IdentityResult verify_identity(const std::string& name,
                                      const std::map<std::string, int>& params,
                                      int cap_m = 8, int cap_st = 4) {
    auto get = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) throw std::invalid_argument("verify_identity: missing param " + key);
        int v = it->second;
        int cap = (key == "m" || key == "n") ? ((key == "n") ? 2 * cap_m : cap_m) : cap_st;
        if (v > cap) throw std::invalid_argument("verify_identity: desk-scale cap exceeded for " + key);
        return v;
    };
    if (name == "eq3") return verify_eq3(get("s"), get("t"));
    if (name == "delta_product") return verify_delta_product(get("m"));
    if (name == "odd_spin_square") return verify_odd_spin_square(get("s"));
    if (name == "hodge_quadratic") return verify_hodge_quadratic(get("s"));
    if (name == "restriction") return verify_restriction(get("n"), get("k"));
    if (name == "z_identities") return verify_z_identities(get("s"), get("t"));
    if (name == "rh0_squares")
        return verify_rh0_squares(get("s"), get("t"), get("k_even"), get("nk_even"));
    throw std::invalid_argument("unknown identity case: " + name);
}

}  // namespace gkt
