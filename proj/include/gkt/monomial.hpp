#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkt {

using VarId = int;

namespace detail {
struct VarTable {
    std::map<std::string, VarId> ids;
    std::vector<std::string> names;
    std::mutex mu;
};
inline VarTable& var_table() {
    static VarTable t;
    return t;
}
}  // namespace detail

inline VarId intern_var(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    auto& t = detail::var_table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    VarId id = static_cast<VarId>(t.names.size());
    t.ids.emplace(name, id);
    t.names.push_back(name);
    return id;
}

inline const std::string& var_name(VarId v) {
    auto& t = detail::var_table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(static_cast<size_t>(v));
}

// Exponent vector, sparse: (variable, exponent) pairs sorted by VarId,
// zero exponents never stored. Negative exponents appear only in Laurent
// contexts; the polynomial layer polices that.
struct Monomial {
    std::vector<std::pair<VarId, int>> e;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.e.push_back({v, exp});
        return m;
    }

    bool is_one() const { return e.empty(); }

    int exp(VarId v) const {
        for (auto& [w, x] : e)
            if (w == v) return x;
        return 0;
    }

    long degree() const {  // signed total degree in the Laurent case
        long d = 0;
        for (auto& [w, x] : e) d += x;
        return d;
    }

    bool has_negative() const {
        for (auto& [w, x] : e)
            if (x < 0) return true;
        return false;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < e.size() || j < o.e.size()) {
            if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
                r.e.push_back(e[i++]);
            } else if (i == e.size() || o.e[j].first < e[i].first) {
                r.e.push_back(o.e[j++]);
            } else {
                int x = e[i].second + o.e[j].second;
                if (x != 0) r.e.push_back({e[i].first, x});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r = *this;
        for (auto& [w, x] : r.e) x = -x;
        return r;
    }

    // Division in the ordinary (non-Laurent) sense: o | *this componentwise.
    bool divisible_by(const Monomial& o) const {
        size_t i = 0;
        for (auto& [w, x] : o.e) {
            while (i < e.size() && e[i].first < w) ++i;
            if (i == e.size() || e[i].first != w || e[i].second < x) return false;
        }
        return true;
    }

    std::optional<Monomial> divide(const Monomial& o) const {
        if (!divisible_by(o)) return std::nullopt;
        return *this * o.inverse();
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.e.size() || j < b.e.size()) {
            if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
                r.e.push_back(a.e[i++]);
            } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
                r.e.push_back(b.e[j++]);
            } else {
                r.e.push_back({a.e[i].first, std::max(a.e[i].second, b.e[j].second)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // structural order, used only as a map key
    bool operator<(const Monomial& o) const { return e < o.e; }
};

// Canonical display/storage order: graded lexicographic on variable names
// (total degree first, then earliest name with the larger exponent wins).
inline int cmp_grlex_names(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto named = [](const Monomial& m) {
        std::vector<std::pair<std::string, int>> v;
        v.reserve(m.e.size());
        for (auto& [w, x] : m.e) v.push_back({var_name(w), x});
        std::sort(v.begin(), v.end());
        return v;
    };
    auto va = named(a), vb = named(b);
    size_t i = 0, j = 0;
    while (i < va.size() || j < vb.size()) {
        if (i == va.size()) {
            // a has run out: b still has a variable; larger exponent on the
            // earlier name wins, absent counts as zero
            return vb[j].second > 0 ? -1 : 1;
        }
        if (j == vb.size()) return va[i].second > 0 ? 1 : -1;
        if (va[i].first != vb[j].first) {
            if (va[i].first < vb[j].first) return va[i].second > 0 ? 1 : -1;
            return vb[j].second > 0 ? -1 : 1;
        }
        if (va[i].second != vb[j].second) return va[i].second > vb[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    return 0;
}

struct GrlexNameLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_grlex_names(a, b) < 0;
    }
};

}  // namespace gkt
