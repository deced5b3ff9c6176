#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkt/bigint.hpp"
#include "gkt/monomial.hpp"

namespace gkt {

// Exact multivariate (optionally Laurent) polynomial. Terms are kept in
// canonical graded-lex-on-names order, leading term first, no zero
// coefficients. C is Int or Rat.
template <class C>
struct Polynomial {
    std::vector<std::pair<Monomial, C>> t;
    bool laurent = false;

    Polynomial() = default;
    explicit Polynomial(bool laurent_) : laurent(laurent_) {}

    static Polynomial zero(bool laurent = false) { return Polynomial(laurent); }

    static Polynomial constant(const C& c, bool laurent = false) {
        Polynomial p(laurent);
        if (c != 0) p.t.push_back({Monomial::one(), c});
        return p;
    }

    static Polynomial term(const Monomial& m, const C& c, bool laurent = false) {
        if (!laurent && m.has_negative())
            throw std::invalid_argument("negative exponent outside Laurent context");
        Polynomial p(laurent);
        if (c != 0) p.t.push_back({m, c});
        return p;
    }

    static Polynomial variable(VarId v, bool laurent = false) {
        return term(Monomial::var(v), C(1), laurent);
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_one()); }

    C coeff(const Monomial& m) const {
        for (auto& [mm, c] : t)
            if (mm == m) return c;
        return C(0);
    }

    C constant_coeff() const { return coeff(Monomial::one()); }

    long degree() const {  // signed total degree; 0 for the zero polynomial
        long d = 0;
        bool first = true;
        for (auto& [m, c] : t) {
            long md = m.degree();
            if (first || md > d) d = md;
            first = false;
        }
        return d;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (auto& [m, c] : t)
            for (auto& [v, x] : m.e) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    static Polynomial from_map(std::map<Monomial, C, GrlexNameLess>&& acc, bool laurent) {
        Polynomial p(laurent);
        p.t.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) p.t.push_back({it->first, it->second});
        return p;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.t) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::map<Monomial, C, GrlexNameLess> acc;
        for (auto& [m, c] : a.t) acc[m] += c;
        for (auto& [m, c] : b.t) acc[m] += c;
        return from_map(std::move(acc), a.laurent || b.laurent);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::map<Monomial, C, GrlexNameLess> acc;
        for (auto& [ma, ca] : a.t)
            for (auto& [mb, cb] : b.t) acc[ma * mb] += ca * cb;
        return from_map(std::move(acc), a.laurent || b.laurent);
    }

    friend Polynomial operator*(const C& c, const Polynomial& a) {
        Polynomial r = a;
        if (c == 0) return Polynomial(a.laurent);
        for (auto& [m, x] : r.t) x = c * x;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return t == o.t; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(long n) const {
        if (n < 0) throw std::invalid_argument("negative polynomial power");
        Polynomial r = constant(C(1), laurent);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }
};

using PolyZ = Polynomial<Int>;
using PolyQ = Polynomial<Rat>;

// Ring-homomorphic substitution; every variable of p must have an image.
// Negative exponents require the image to be an invertible term (+-monomial).
template <class C>
Polynomial<C> apply_hom(const Polynomial<C>& p, const std::map<VarId, Polynomial<C>>& images) {
    std::map<Monomial, C, GrlexNameLess> acc;
    bool laurent = p.laurent;
    for (auto& [v, img] : images) laurent = laurent || img.laurent;
    for (auto& [m, c] : p.t) {
        Polynomial<C> prod = Polynomial<C>::constant(c, laurent);
        for (auto& [v, x] : m.e) {
            auto it = images.find(v);
            if (it == images.end())
                throw std::invalid_argument("apply_hom: no image for variable " + var_name(v));
            const Polynomial<C>& img = it->second;
            if (x >= 0) {
                prod *= img.pow(x);
            } else {
                if (img.t.size() != 1)
                    throw std::invalid_argument("apply_hom: negative power of non-invertible image");
                const C& ic = img.t[0].second;
                if (ic != 1 && ic != -1)
                    throw std::invalid_argument("apply_hom: negative power of non-unit coefficient");
                Monomial inv = img.t[0].first.inverse();
                Polynomial<C> invp = Polynomial<C>::term(inv, ic, true);
                prod *= invp.pow(-x);
            }
        }
        for (auto& [mm, cc] : prod.t) acc[mm] += cc;
    }
    return Polynomial<C>::from_map(std::move(acc), laurent);
}

// Substitution of a subset of variables (all others map to themselves).
template <class C>
Polynomial<C> substitute(const Polynomial<C>& p, const std::map<VarId, Polynomial<C>>& part) {
    std::map<VarId, Polynomial<C>> images = part;
    for (VarId v : p.variables())
        if (!images.count(v)) images.emplace(v, Polynomial<C>::variable(v, p.laurent));
    return apply_hom(p, images);
}

// Evaluate with scalar values for every variable.
template <class C>
C evaluate(const Polynomial<C>& p, const std::map<VarId, C>& vals) {
    C sum(0);
    for (auto& [m, c] : p.t) {
        C prod = c;
        for (auto& [v, x] : m.e) {
            auto it = vals.find(v);
            if (it == vals.end())
                throw std::invalid_argument("evaluate: no value for variable " + var_name(v));
            if (x < 0) throw std::invalid_argument("evaluate: negative exponent");
            for (int i = 0; i < x; ++i) prod *= it->second;
        }
        sum += prod;
    }
    return sum;
}

// Exact division: q with f = q*g, throws if the division is not exact.
template <class C>
Polynomial<C> divide_exact(const Polynomial<C>& f, const Polynomial<C>& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact by zero");
    Polynomial<C> rem = f, q(f.laurent || g.laurent);
    std::map<Monomial, C, GrlexNameLess> qacc;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = rem.t.front();
        const auto& [gm, gc] = g.t.front();
        auto mm = lm.divide(gm);
        if (!mm) throw std::invalid_argument("divide_exact: not divisible");
        C qc;
        if constexpr (std::is_same_v<C, Int>) {
            if (lc % gc != 0) throw std::invalid_argument("divide_exact: coefficient not divisible");
            qc = lc / gc;
        } else {
            qc = lc / gc;
        }
        qacc[*mm] += qc;
        rem -= Polynomial<C>::term(*mm, qc, rem.laurent) * g;
    }
    return Polynomial<C>::from_map(std::move(qacc), f.laurent || g.laurent);
}

namespace detail {

inline std::string coeff_str(const Int& c) { return c.get_str(); }
inline std::string coeff_str(const Rat& c) { return c.get_str(); }
inline bool coeff_is_one(const Int& c) { return c == 1; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }

}  // namespace detail

// Text format: terms joined by " + " / " - ", each term `coef*var^exp*...`,
// unit coefficients and unit exponents omitted. Round-trips through parse().
template <class C>
std::string to_text(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.t) {
        C ac = c < 0 ? C(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::pair<std::string, int>> vs;
        for (auto& [v, x] : m.e) vs.push_back({var_name(v), x});
        std::sort(vs.begin(), vs.end());
        bool wrote = false;
        if (!detail::coeff_is_one(ac) || vs.empty()) {
            os << detail::coeff_str(ac);
            wrote = true;
        }
        for (auto& [name, x] : vs) {
            if (wrote) os << "*";
            os << name;
            if (x != 1) os << "^" << x;
            wrote = true;
        }
    }
    return os.str();
}

namespace detail {

struct PolyParser {
    const std::string& s;
    size_t i = 0;
    explicit PolyParser(const std::string& str) : s(str) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + why);
    }

    Int integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected integer");
        return Int(s.substr(start, i - start));
    }

    std::string ident() {
        skip();
        size_t start = i;
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            fail("expected identifier");
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return s.substr(start, i - start);
    }

    // factor := number | ident ('^' int)?
    template <class C>
    void factor(C& coef, Monomial& mono, bool laurent) {
        skip();
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            Int num = integer();
            if constexpr (std::is_same_v<C, Rat>) {
                if (eat('/')) {
                    Int den = integer();
                    coef *= make_rat(num, den);
                    return;
                }
            }
            coef *= C(num);
            return;
        }
        std::string name = ident();
        int exp = 1;
        if (eat('^')) {
            Int e = integer();
            if (!e.fits_sint_p()) fail("exponent too large");
            exp = static_cast<int>(e.get_si());
            if (exp < 0 && !laurent) fail("negative exponent in non-Laurent polynomial");
        }
        mono = mono * Monomial::var(intern_var(name), exp);
    }

    template <class C>
    Polynomial<C> parse(bool laurent) {
        std::map<Monomial, C, GrlexNameLess> acc;
        skip();
        bool any = false;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        for (;;) {
            C coef(sign);
            Monomial mono;
            factor<C>(coef, mono, laurent);
            while (eat('*')) factor<C>(coef, mono, laurent);
            acc[mono] += coef;
            any = true;
            skip();
            if (i >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else fail("expected '+' or '-'");
        }
        if (!any) fail("empty polynomial");
        return Polynomial<C>::from_map(std::move(acc), laurent);
    }
};

}  // namespace detail

inline PolyZ parse_polyz(const std::string& s, bool laurent = false) {
    detail::PolyParser p(s);
    return p.parse<Int>(laurent);
}

inline PolyQ parse_polyq(const std::string& s, bool laurent = false) {
    detail::PolyParser p(s);
    return p.parse<Rat>(laurent);
}

inline PolyQ to_rational(const PolyZ& p) {
    PolyQ q(p.laurent);
    for (auto& [m, c] : p.t) q.t.push_back({m, Rat(c)});
    return q;
}

// Exact when every coefficient is integral.
inline PolyZ to_integral(const PolyQ& p) {
    PolyZ z(p.laurent);
    for (auto& [m, c] : p.t) {
        if (c.get_den() != 1) throw std::invalid_argument("to_integral: non-integer coefficient");
        z.t.push_back({m, c.get_num()});
    }
    return z;
}

}  // namespace gkt
