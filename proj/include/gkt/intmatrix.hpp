#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gkt/bigint.hpp"

namespace gkt {

// Dense integer matrix, row-major. Rows are the natural carriers here:
// a matrix holds a list of relation/lattice vectors and "rowspan" means the
// subgroup of Z^cols they generate.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows_in, int cols_hint = -1) {
        int c = cols_hint;
        if (c < 0) c = rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size());
        IntMatrix m(static_cast<int>(rows_in.size()), c);
        for (int i = 0; i < m.rows; ++i) {
            if (static_cast<int>(rows_in[i].size()) != c)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    std::vector<Int> row(int i) const {
        std::vector<Int> r(cols);
        for (int j = 0; j < cols; ++j) r[j] = at(i, j);
        return r;
    }

    void append_row(const std::vector<Int>& r) {
        if (cols == 0 && rows == 0) cols = static_cast<int>(r.size());
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("row size mismatch");
        a.insert(a.end(), r.begin(), r.end());
        ++rows;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

inline std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("vec_mat shape mismatch");
    std::vector<Int> r(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

// Fraction-free determinant (Bareiss).
inline Int det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

// Smith normal form U*A*V = S with U, V unimodular and S diagonal,
// each diagonal entry dividing the next, zeros trailing.
struct SmithDecomposition {
    IntMatrix U, S, V;
    std::vector<Int> invariant_factors;  // positive nonzero diagonal entries
};

namespace detail {

inline void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
inline void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row j
inline void row_axpy(IntMatrix& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}
inline void col_axpy(IntMatrix& m, int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}
inline void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    if (A.rows == 0 || A.cols == 0) throw std::invalid_argument("smith_normal_form: empty matrix");
    SmithDecomposition d;
    d.S = A;
    d.U = IntMatrix::identity(A.rows);
    d.V = IntMatrix::identity(A.cols);
    IntMatrix& S = d.S;
    IntMatrix& U = d.U;
    IntMatrix& V = d.V;
    const int n = std::min(A.rows, A.cols);

    for (int t = 0; t < n; ++t) {
        // gcd-driven pivot: smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < A.rows; ++i)
            for (int j = t; j < A.cols; ++j) {
                if (S.at(i, j) == 0) continue;
                if (pi < 0 || int_cmpabs(S.at(i, j), S.at(pi, pj)) < 0) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        detail::swap_rows(S, t, pi);
        detail::swap_rows(U, t, pi);
        detail::swap_cols(S, t, pj);
        detail::swap_cols(V, t, pj);

        for (;;) {
            bool dirty = false;
            for (int i = t + 1; i < A.rows; ++i) {
                if (S.at(i, t) == 0) continue;
                Int q, r;
                int_fdiv_qr(S.at(i, t), S.at(t, t), q, r);
                detail::row_axpy(S, i, t, q);
                detail::row_axpy(U, i, t, q);
                if (r != 0) {  // remainder is strictly smaller; promote it
                    detail::swap_rows(S, t, i);
                    detail::swap_rows(U, t, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < A.cols; ++j) {
                if (S.at(t, j) == 0) continue;
                Int q, r;
                int_fdiv_qr(S.at(t, j), S.at(t, t), q, r);
                detail::col_axpy(S, j, t, q);
                detail::col_axpy(V, j, t, q);
                if (r != 0) {
                    detail::swap_cols(S, t, j);
                    detail::swap_cols(V, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot divides everything in its row/col; check the whole block
            bool fixed = true;
            for (int i = t + 1; i < A.rows && fixed; ++i)
                for (int j = t + 1; j < A.cols && fixed; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        detail::row_axpy(S, t, i, Int(-1));  // row t += row i
                        detail::row_axpy(U, t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    for (int t = 0; t < n; ++t) {
        if (S.at(t, t) < 0) {
            detail::negate_row(S, t);
            detail::negate_row(U, t);
        }
        if (S.at(t, t) != 0) d.invariant_factors.push_back(S.at(t, t));
    }
    return d;
}

inline int rank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return static_cast<int>(smith_normal_form(m).invariant_factors.size());
}

// Row-style Hermite form of the row lattice: echelon basis, pivots positive,
// entries above a pivot reduced into [0, pivot). Zero rows dropped.
// If T is non-null it receives a unimodular matrix with T*A = (H padded with
// the dropped zero rows).
inline IntMatrix row_hnf(const IntMatrix& A, IntMatrix* T = nullptr) {
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    int r = 0;  // next pivot row
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (H.at(i, c) != 0 && (p < 0 || int_cmpabs(H.at(i, c), H.at(p, c)) < 0)) p = i;
        if (p < 0) continue;
        detail::swap_rows(H, r, p);
        detail::swap_rows(U, r, p);
        for (;;) {
            bool dirty = false;
            for (int i = r + 1; i < A.rows; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q, rem;
                int_fdiv_qr(H.at(i, c), H.at(r, c), q, rem);
                detail::row_axpy(H, i, r, q);
                detail::row_axpy(U, i, r, q);
                if (rem != 0) {
                    detail::swap_rows(H, r, i);
                    detail::swap_rows(U, r, i);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }
        if (H.at(r, c) < 0) {
            detail::negate_row(H, r);
            detail::negate_row(U, r);
        }
        for (int i = 0; i < r; ++i) {  // reduce entries above the pivot
            Int q, rem;
            int_fdiv_qr(H.at(i, c), H.at(r, c), q, rem);
            detail::row_axpy(H, i, r, q);
            detail::row_axpy(U, i, r, q);
        }
        ++r;
    }
    if (T) *T = U;
    IntMatrix out(0, A.cols);
    for (int i = 0; i < r; ++i) out.append_row(H.row(i));
    return out;
}

// Basis for {x : x*A = 0}, returned as rows.
inline IntMatrix left_kernel(const IntMatrix& A) {
    if (A.rows == 0) return IntMatrix(0, 0);
    SmithDecomposition d = smith_normal_form(A);
    int rk = static_cast<int>(d.invariant_factors.size());
    IntMatrix out(0, A.rows);
    for (int i = rk; i < A.rows; ++i) out.append_row(d.U.row(i));
    return out;
}

// Solve x*A = b over the integers; nullopt if no solution.
inline std::optional<std::vector<Int>> solve_left(const IntMatrix& A, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.cols) throw std::invalid_argument("solve_left shape mismatch");
    if (A.rows == 0) {
        for (const Int& x : b)
            if (x != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    SmithDecomposition d = smith_normal_form(A);
    int rk = static_cast<int>(d.invariant_factors.size());
    std::vector<Int> bv = vec_mat(b, d.V);  // x*A = b  <=>  y*S = b*V, y = x*U^{-1}
    std::vector<Int> y(A.rows);
    for (int i = 0; i < std::min(A.rows, A.cols); ++i) {
        const Int& s = d.S.at(i, i);
        if (s == 0) {
            if (bv[i] != 0) return std::nullopt;
            continue;
        }
        if (bv[i] % s != 0) return std::nullopt;
        y[i] = bv[i] / s;
    }
    for (int j = rk; j < A.cols; ++j)
        if (bv[j] != 0) return std::nullopt;
    return vec_mat(y, d.U);
}

// Finitely generated abelian group: free rank plus invariant-factor torsion
// d_1 | d_2 | ... with every d_i >= 2.
struct FinAbGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FinAbGroup& o) const { return rank == o.rank && torsion == o.torsion; }

    std::string to_string() const {
        std::string s = "Z^" + std::to_string(rank);
        for (const Int& t : torsion) s += " + Z/" + t.get_str();
        return s;
    }
};

// Z^generators / rowspan(relations).
inline FinAbGroup cokernel_group(const IntMatrix& relations, int generators) {
    if (relations.rows > 0 && relations.cols != generators)
        throw std::invalid_argument("cokernel_group: relation width != generator count");
    FinAbGroup g;
    if (generators == 0) return g;
    if (relations.rows == 0) {
        g.rank = generators;
        return g;
    }
    SmithDecomposition d = smith_normal_form(relations);
    g.rank = generators - static_cast<int>(d.invariant_factors.size());
    for (const Int& f : d.invariant_factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

// Additive order of vec in Z^n / rowspan(relations); nullopt means infinite.
inline std::optional<Int> element_order(const std::vector<Int>& vec, const IntMatrix& relations) {
    const int n = static_cast<int>(vec.size());
    if (relations.rows == 0) {
        for (const Int& x : vec)
            if (x != 0) return std::nullopt;
        return Int(1);
    }
    if (relations.cols != n) throw std::invalid_argument("element_order: dimension mismatch");
    SmithDecomposition d = smith_normal_form(relations);
    int rk = static_cast<int>(d.invariant_factors.size());
    std::vector<Int> w = vec_mat(vec, d.V);
    // d*vec in rowspan(A) <=> d*w in rowspan(S); free coordinates must vanish
    for (int j = rk; j < n; ++j)
        if (w[j] != 0) return std::nullopt;
    Int order = 1;
    for (int i = 0; i < rk; ++i) {
        const Int& s = d.S.at(i, i);
        Int need = s / int_gcd(s, w[i]);
        order = int_lcm(order, need);
    }
    return order;
}

// (rowspan(sub) + rowspan(mod_out)) / rowspan(mod_out), i.e. the subgroup of
// Z^n/mod_out generated by the rows of sub.
inline FinAbGroup subgroup_structure(const IntMatrix& sub, const IntMatrix& mod_out) {
    IntMatrix all = sub;
    for (int i = 0; i < mod_out.rows; ++i) all.append_row(mod_out.row(i));
    if (all.rows == 0) return FinAbGroup{};
    IntMatrix basis = row_hnf(all);
    if (basis.rows == 0) return FinAbGroup{};
    IntMatrix rel(0, basis.rows);
    for (int i = 0; i < mod_out.rows; ++i) {
        // basis rows generate the big lattice, so every mod_out row is expressible
        auto sol = solve_left(basis, mod_out.row(i));
        if (!sol) throw std::logic_error("subgroup_structure: inconsistent lattice");
        rel.append_row(*sol);
    }
    return cokernel_group(rel, basis.rows);
}

}  // namespace gkt
