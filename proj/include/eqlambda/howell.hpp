#pragma once

// Linear algebra over the chain ring Z/p^N: Howell normal form (canonical
// generating sets for row-span submodules), membership, kernels, solving,
// exact determinants and Smith normal form. The Howell form makes equality
// of submodules -- and hence of ideals in finite truncated rings -- a
// comparison of canonical matrices.

#include <algorithm>
#include <optional>
#include <vector>

#include "eqlambda/zmod.hpp"

namespace eqlambda {

using ZRow = std::vector<u64>;
using ZRows = std::vector<ZRow>;

namespace detail {

inline int lead_col(const ZRow& r) {
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) return (int)i;
    return -1;
}

inline void row_submul(const ZMod& zm, ZRow& r, u64 c, const ZRow& s) {
    for (size_t i = 0; i < r.size(); ++i)
        if (s[i] != 0) r[i] = zm.sub(r[i], zm.mul(c, s[i]));
}

inline void row_scale(const ZMod& zm, ZRow& r, u64 c) {
    for (auto& x : r) x = zm.mul(x, c);
}

}  // namespace detail

// Canonical Howell form of the row span. Rows come out sorted by leading
// column, each pivot a power of p, entries above a pivot reduced modulo it.
inline ZRows howell_form(const ZMod& zm, ZRows rows) {
    size_t ncols = 0;
    for (auto& r : rows) ncols = std::max(ncols, r.size());
    for (auto& r : rows) r.resize(ncols, 0);

    std::vector<ZRow> active = std::move(rows), result;
    for (size_t c = 0; c < ncols; ++c) {
        // rows whose leading column is c
        std::vector<ZRow> here;
        std::vector<ZRow> rest;
        for (auto& r : active) {
            int lc = detail::lead_col(r);
            if (lc == (int)c) here.push_back(std::move(r));
            else if (lc > (int)c) rest.push_back(std::move(r));
        }
        active = std::move(rest);
        while (!here.empty()) {
            size_t best = 0;
            int bestv = zm.N + 1;
            for (size_t i = 0; i < here.size(); ++i) {
                int v = val_p(here[i][c], zm.p, zm.N);
                if (v < bestv) { bestv = v; best = i; }
            }
            ZRow piv = std::move(here[best]);
            here.erase(here.begin() + best);
            // eliminate column c from the others
            for (auto& r : here) {
                u64 mult = zm.mul(zm.div_pk(r[c], bestv),
                                  zm.inv(zm.unit_part(piv[c])));
                detail::row_submul(zm, r, mult, piv);
            }
            // survivors move to later columns
            for (auto& r : here) {
                if (detail::lead_col(r) > (int)c) active.push_back(std::move(r));
                else if (detail::lead_col(r) != -1) throw std::logic_error("howell: elimination failed");
            }
            here.clear();
            // normalize pivot to p^v
            detail::row_scale(zm, piv, zm.inv(zm.unit_part(piv[c])));
            if (bestv > 0) {
                // Howell saturation: p^(N-v) * piv lives strictly to the right
                ZRow shadow = piv;
                detail::row_scale(zm, shadow, ipow(zm.p, (unsigned)(zm.N - bestv)));
                if (detail::lead_col(shadow) != -1) active.push_back(std::move(shadow));
            }
            result.push_back(std::move(piv));
        }
    }
    // reduce entries above each pivot
    for (size_t j = 0; j < result.size(); ++j) {
        int c = detail::lead_col(result[j]);
        u64 pk = result[j][c];
        for (size_t i = 0; i < j; ++i) {
            u64 x = result[i][c];
            if (x == 0) continue;
            u64 mult = (x - x % pk) / pk;
            detail::row_submul(zm, result[i], mult % zm.q, result[j]);
        }
    }
    return result;
}

// Membership of v in the row span given by a Howell form.
inline bool howell_member(const ZMod& zm, const ZRows& H, ZRow v) {
    size_t ncols = H.empty() ? v.size() : H[0].size();
    v.resize(ncols, 0);
    for (const auto& row : H) {
        int c = detail::lead_col(row);
        if (c < 0) continue;
        if (v[(size_t)c] == 0) continue;
        u64 pk = row[(size_t)c];
        if (v[(size_t)c] % pk != 0) return false;
        detail::row_submul(zm, v, v[(size_t)c] / pk, row);
    }
    return detail::lead_col(v) == -1;
}

inline bool howell_equal(const ZRows& a, const ZRows& b) { return a == b; }

// Howell basis of { x : x A = 0 } (x a row vector of length rows(A)).
inline ZRows kernel(const ZMod& zm, const ZRows& A) {
    size_t m = A.size();
    size_t n = A.empty() ? 0 : A[0].size();
    ZRows aug(m, ZRow(n + m, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = 1;
    }
    ZRows H = howell_form(zm, aug);
    ZRows ker;
    for (auto& r : H) {
        int lc = detail::lead_col(r);
        if (lc >= (int)n) ker.push_back(ZRow(r.begin() + n, r.end()));
    }
    return ker;
}

// Solve x A = b; returns nullopt when b is outside the row span.
inline std::optional<ZRow> solve_left(const ZMod& zm, const ZRows& A, ZRow b) {
    size_t m = A.size();
    size_t n = A.empty() ? b.size() : A[0].size();
    b.resize(n, 0);
    ZRows aug(m, ZRow(n + m, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
        aug[i][n + i] = 1;
    }
    ZRows H = howell_form(zm, aug);
    ZRow v(n + m, 0);
    for (size_t j = 0; j < n; ++j) v[j] = b[j];
    for (const auto& row : H) {
        int c = detail::lead_col(row);
        if (c < 0 || c >= (int)n) break;  // rows sorted; I-block pivots can't help
        if (v[(size_t)c] == 0) continue;
        u64 pk = row[(size_t)c];
        if (v[(size_t)c] % pk != 0) return std::nullopt;
        detail::row_submul(zm, v, v[(size_t)c] / pk, row);
    }
    for (size_t j = 0; j < n; ++j)
        if (v[j] != 0) return std::nullopt;
    ZRow x(m, 0);
    for (size_t i = 0; i < m; ++i) x[i] = zm.neg(v[n + i]);
    return x;
}

// Exact determinant mod p^N via valuation-pivoted elimination.
inline u64 det(const ZMod& zm, ZRows A) {
    size_t n = A.size();
    for (auto& r : A)
        if (r.size() != n) throw std::invalid_argument("det: non-square matrix");
    u64 res = 1;
    bool negate = false;
    for (size_t c = 0; c < n; ++c) {
        size_t best = c;
        int bestv = zm.N + 1;
        for (size_t r = c; r < n; ++r) {
            int v = val_p(A[r][c], zm.p, zm.N);
            if (v < bestv) { bestv = v; best = r; }
        }
        if (bestv >= zm.N) return 0;  // whole column ~ 0 at precision
        if (best != c) { std::swap(A[best], A[c]); negate = !negate; }
        u64 inv_unit = zm.inv(zm.unit_part(A[c][c]));
        for (size_t r = c + 1; r < n; ++r) {
            if (A[r][c] == 0) continue;
            u64 mult = zm.mul(zm.div_pk(A[r][c], bestv), inv_unit);
            detail::row_submul(zm, A[r], mult, A[c]);
        }
        res = zm.mul(res, A[c][c]);
        if (res == 0) return 0;
    }
    return negate ? zm.neg(res) : res;
}

// Smith normal form over Z/p^N for a relation matrix A (rows = relations
// among m generators): finds invertible T with
//    rowspan(A) . T = rowspan( d_i * e_i ),
// so that the module (Z/p^N)^m / rowspan(A) is isomorphic to
// sum_i (Z/p^N)/(d_i) via x -> x T. Entries d_i are p-powers in increasing
// valuation; d_i = 0 means no relation hits that coordinate (component Z/p^N).
struct SmithForm {
    std::vector<u64> d;   // length m
    ZRows T, Tinv;        // m x m, T Tinv = I
};

inline SmithForm smith_form(const ZMod& zm, ZRows A) {
    size_t n = A.size();
    size_t m = A.empty() ? 0 : A[0].size();
    SmithForm S;
    S.T.assign(m, ZRow(m, 0));
    S.Tinv.assign(m, ZRow(m, 0));
    for (size_t i = 0; i < m; ++i) S.T[i][i] = S.Tinv[i][i] = 1;
    S.d.assign(m, 0);

    size_t k = 0;
    while (k < n && k < m) {
        int bestv = zm.N + 1;
        size_t br = k, bc = k;
        for (size_t r = k; r < n; ++r)
            for (size_t c = k; c < m; ++c) {
                int v = val_p(A[r][c], zm.p, zm.N);
                if (v < bestv) { bestv = v; br = r; bc = c; }
            }
        if (bestv >= zm.N) break;  // remaining block is 0 at precision
        std::swap(A[k], A[br]);
        if (bc != k) {
            for (size_t r = k; r < n; ++r) std::swap(A[r][k], A[r][bc]);
            for (size_t r = 0; r < m; ++r) std::swap(S.T[r][k], S.T[r][bc]);
            std::swap(S.Tinv[k], S.Tinv[bc]);
        }
        u64 unit = zm.unit_part(A[k][k]);
        u64 inv_unit = zm.inv(unit);
        // normalize pivot to p^v: column scale, T col k *= u^-1, Tinv row k *= u
        for (size_t r = k; r < n; ++r) A[r][k] = zm.mul(A[r][k], inv_unit);
        for (size_t r = 0; r < m; ++r) S.T[r][k] = zm.mul(S.T[r][k], inv_unit);
        detail::row_scale(zm, S.Tinv[k], unit);
        // clear the column below the pivot (row ops, untracked)
        for (size_t r = k + 1; r < n; ++r) {
            if (A[r][k] == 0) continue;
            u64 mult = zm.div_pk(A[r][k], bestv);
            detail::row_submul(zm, A[r], mult, A[k]);
        }
        // clear the row to the right (column ops: col_c -= mult col_k).
        // Only row k is affected since the column below the pivot is clear.
        for (size_t c = k + 1; c < m; ++c) {
            if (A[k][c] == 0) continue;
            u64 mult = zm.div_pk(A[k][c], bestv);
            A[k][c] = 0;
            for (size_t r = 0; r < m; ++r)
                S.T[r][c] = zm.sub(S.T[r][c], zm.mul(mult, S.T[r][k]));
            for (size_t j = 0; j < m; ++j)
                S.Tinv[k][j] = zm.add(S.Tinv[k][j], zm.mul(mult, S.Tinv[c][j]));
        }
        S.d[k] = ipow(zm.p, (unsigned)bestv) % zm.q;
        if (bestv == zm.N) S.d[k] = 0;
        ++k;
    }
    return S;
}

}  // namespace eqlambda
