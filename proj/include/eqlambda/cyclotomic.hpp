#pragma once

// Exact rational and cyclotomic-rational arithmetic (GMP backed):
// Bernoulli numbers and polynomials, cyclotomic polynomials, and the
// fields Q(zeta_n) as Q[x]/(Phi_n).

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqlambda/nt.hpp"

namespace eqlambda {

// B_0 .. B_m with B_1 = +1/2 handled separately by callers; this is the
// classical convention B_1 = -1/2.
inline const std::vector<mpq_class>& bernoulli_numbers(int m) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    while ((int)cache.size() <= m) {
        int n = (int)cache.size();
        // sum_{k=0}^{n} C(n+1,k) B_k = 0
        mpq_class s = 0;
        mpz_class binom = 1;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            s += mpq_class(binom) * cache[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        cache.push_back(-s / mpq_class(binom));  // binom = C(n+1, n) = n+1
    }
    return cache;
}

// B_m(x), exact.
inline mpq_class bernoulli_poly(int m, const mpq_class& x) {
    const auto& B = bernoulli_numbers(m);
    mpq_class acc = 0;
    mpz_class binom = 1;
    mpq_class xpow = 1;
    // sum_k C(m,k) B_{m-k} x^k
    for (int k = 0; k <= m; ++k) {
        acc += mpq_class(binom) * B[m - k] * xpow;
        binom = binom * (m - k) / (k + 1);
        xpow *= x;
    }
    return acc;
}

// Phi_n over Z, by exact division of x^n - 1 by the proper cyclotomic factors.
inline std::vector<mpz_class> cyclotomic_poly(u64 n) {
    static std::map<u64, std::vector<mpz_class>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<mpz_class> f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (u64 d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto g = cyclotomic_poly(d);
        // exact division f /= g (both monic up to content)
        std::vector<mpz_class> q(f.size() - g.size() + 1, 0);
        for (int i = (int)q.size() - 1; i >= 0; --i) {
            q[i] = f[i + g.size() - 1] / g.back();
            for (size_t j = 0; j < g.size(); ++j) f[i + j] -= q[i] * g[j];
        }
        f = q;
    }
    cache[n] = f;
    return f;
}

// The field Q(zeta_n), elements as coefficient vectors of length phi(n).
struct CycField {
    u64 n = 1;
    size_t deg = 1;
    std::vector<mpz_class> phi;                    // Phi_n
    std::vector<std::vector<mpq_class>> powred;    // x^{deg..2deg-2} mod Phi_n

    explicit CycField(u64 n_ = 1) : n(n_) {
        phi = cyclotomic_poly(n);
        deg = phi.size() - 1;
        powred.resize(deg > 1 ? deg - 1 : 0);
        std::vector<mpq_class> cur(deg, 0);
        // start with x^deg = -(lower terms)
        for (size_t i = 0; i < deg; ++i) cur[i] = -mpq_class(phi[i]);
        for (size_t k = 0; k + 1 < deg; ++k) {
            powred[k] = cur;
            // multiply by x
            std::vector<mpq_class> nxt(deg, 0);
            for (size_t i = 0; i + 1 < deg; ++i) nxt[i + 1] = cur[i];
            for (size_t i = 0; i < deg; ++i) nxt[i] += cur[deg - 1] * -mpq_class(phi[i]);
            cur = nxt;
        }
    }
};

struct CycElem {
    std::vector<mpq_class> c;  // length = field degree

    bool operator==(const CycElem& o) const { return c == o.c; }
};

inline CycElem cyc_zero(const CycField& F) { return {std::vector<mpq_class>(F.deg, 0)}; }

inline CycElem cyc_rat(const CycField& F, const mpq_class& a) {
    CycElem z = cyc_zero(F);
    z.c[0] = a;
    return z;
}

inline bool cyc_is_zero(const CycElem& a) {
    for (auto& x : a.c)
        if (x != 0) return false;
    return true;
}

inline CycElem cyc_add(const CycField&, const CycElem& a, const CycElem& b) {
    CycElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

inline CycElem cyc_sub(const CycField&, const CycElem& a, const CycElem& b) {
    CycElem r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

inline CycElem cyc_neg(const CycField&, const CycElem& a) {
    CycElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline CycElem cyc_scale(const CycField&, const CycElem& a, const mpq_class& s) {
    CycElem r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline CycElem cyc_mul(const CycField& F, const CycElem& a, const CycElem& b) {
    size_t d = F.deg;
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    CycElem r = cyc_zero(F);
    for (size_t i = 0; i < d; ++i) r.c[i] = prod[i];
    for (size_t k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& red = F.powred[k - d];
        for (size_t i = 0; i < d; ++i) r.c[i] += prod[k] * red[i];
    }
    return r;
}

// zeta_n^k as a field element.
inline CycElem cyc_root(const CycField& F, u64 k) {
    k %= F.n;
    if (k < F.deg) {
        CycElem r = cyc_zero(F);
        r.c[k] = 1;
        return r;
    }
    // x reduced mod Phi_n (covers deg 1: Phi_1 = x-1, Phi_2 = x+1)
    CycElem x = cyc_zero(F);
    if (F.deg == 1)
        x.c[0] = -mpq_class(F.phi[0]);
    else
        x.c[1] = 1;
    CycElem acc = cyc_rat(F, 1);
    for (u64 i = 0; i < k; ++i) acc = cyc_mul(F, acc, x);  // n is small
    return acc;
}

// Galois action zeta -> zeta^s, gcd(s, n) = 1.
inline CycElem cyc_galois(const CycField& F, const CycElem& a, u64 s) {
    CycElem r = cyc_zero(F);
    for (size_t i = 0; i < F.deg; ++i) {
        if (a.c[i] == 0) continue;
        CycElem t = cyc_scale(F, cyc_root(F, (u64)(i * (u128)s % F.n)), a.c[i]);
        r = cyc_add(F, r, t);
    }
    return r;
}

inline bool cyc_is_rational(const CycElem& a) {
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

inline std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

}  // namespace eqlambda
