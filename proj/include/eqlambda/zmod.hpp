#pragma once

// Truncated arithmetic in Zp: residues mod p^N on 64-bit words.
// p is always an odd prime here; moduli are kept below 2^62.

#include <optional>
#include <stdexcept>

#include "eqlambda/nt.hpp"

namespace eqlambda {

struct ZMod {
    u64 p = 0;
    int N = 0;
    u64 q = 0;  // p^N

    ZMod() = default;
    ZMod(u64 p_, int N_) : p(p_), N(N_) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("ZMod: p must be an odd prime");
        if (N < 1) throw std::invalid_argument("ZMod: N must be >= 1");
        q = 1;
        for (int i = 0; i < N; ++i) {
            if (q > (u64(1) << 62) / p) throw std::invalid_argument("ZMod: p^N exceeds 2^62");
            q *= p;
        }
    }

    u64 reduce(i64 x) const {
        i64 r = x % (i64)q;
        return r < 0 ? (u64)(r + (i64)q) : (u64)r;
    }
    u64 add(u64 a, u64 b) const { return addmod(a, b, q); }
    u64 sub(u64 a, u64 b) const { return submod(a, b, q); }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, q); }
    u64 neg(u64 a) const { return a == 0 ? 0 : q - a; }
    u64 pow(u64 a, u64 e) const { return powmod(a, e, q); }

    bool is_unit(u64 a) const { return a % p != 0; }

    u64 inv(u64 a) const {
        if (!is_unit(a)) throw std::domain_error("ZMod::inv: not a unit");
        return invmod(a, q);
    }

    // p-adic valuation of the residue; nullopt means zero at this precision.
    std::optional<int> val(u64 a) const {
        if (a == 0) return std::nullopt;
        return val_p(a, p, N);
    }

    // Exact division by p^k; requires p^k | a (a == 0 allowed).
    u64 div_pk(u64 a, int k) const {
        u64 pk = ipow(p, (unsigned)k);
        if (a % pk != 0) throw std::domain_error("ZMod::div_pk: not divisible");
        return a / pk;
    }

    u64 unit_part(u64 a) const {
        if (a == 0) throw std::domain_error("ZMod::unit_part: zero");
        while (a % p == 0) a /= p;
        return a % q;
    }

    // Teichmueller representative: the unique (p-1)-st root of unity
    // congruent to a mod p. Fixed point of x -> x^p.
    u64 teichmuller(u64 a) const {
        a %= q;
        if (a % p == 0) throw std::domain_error("teichmuller: residue divisible by p");
        u64 x = a;
        for (int i = 0; i < N; ++i) x = pow(x, p);
        return x;
    }
};

// log of a principal unit (x = 1 mod p), exact mod p^N. log is an isometry
// 1 + pZp -> pZp for p odd, so the residue of x determines the result; the
// series is evaluated at a boosted internal precision so divisions by k are
// exact.
inline u64 padic_log_unit(const ZMod& zm, u64 x) {
    if (zm.sub(x % zm.q, 1) % zm.p != 0)
        throw std::domain_error("padic_log_unit: x must be = 1 mod p");
    // term u^k/k has valuation >= k - v_p(k); stop once that clears N.
    int K = zm.N;
    while (K - val_p((u64)K, zm.p, 62) < zm.N) ++K;
    int boost = 0;
    for (int k = 2; k <= K; ++k) boost = std::max(boost, val_p((u64)k, zm.p, 62));
    ZMod big(zm.p, zm.N + boost);
    u64 u = big.sub(x % big.q, 1);
    u64 upow = 1, acc = 0;
    for (int k = 1; k <= K; ++k) {
        upow = big.mul(upow, u);
        int vk = val_p((u64)k, zm.p, 62);
        u64 t = big.div_pk(upow, vk);  // exact: v(u^k) >= k >= vk
        t = big.mul(t, big.inv(((u64)k / ipow(zm.p, (unsigned)vk)) % big.q));
        acc = (k % 2 == 1) ? big.add(acc, t) : big.sub(acc, t);
    }
    return acc % zm.q;
}

// exp of x with v(x) >= 1, exact mod p^N (p odd).
inline u64 padic_exp(const ZMod& zm, u64 x) {
    if (x % zm.p != 0) throw std::domain_error("padic_exp: need v(x) >= 1");
    // term x^k/k! has valuation >= k - (k-1)/(p-1) >= (k+1)/2 for p >= 3.
    int K = 2 * zm.N + 2;
    int boost = 0;
    for (int k = 2; k <= K; ++k) boost += val_p((u64)k, zm.p, 62);
    ZMod big(zm.p, zm.N + boost);
    u64 term = 1, acc = 1;
    for (int k = 1; k <= K; ++k) {
        term = big.mul(term, x % big.q);
        int vk = val_p((u64)k, zm.p, 62);
        term = big.div_pk(term, vk);
        term = big.mul(term, big.inv(((u64)k / ipow(zm.p, (unsigned)vk)) % big.q));
        acc = big.add(acc, term);
    }
    return acc % zm.q;
}

// Solves u^a = y for a in Zp, where u, y are principal units.
// Returns a mod p^(N-1); also the natural home for the Frobenius
// Gamma-exponents a_v = log<q>/log u.
inline u64 unit_exponent(const ZMod& zm, u64 y, u64 u) {
    ZMod big(zm.p, zm.N + 1);
    u64 lu = padic_log_unit(big, u % big.q);
    u64 ly = padic_log_unit(big, y % big.q);
    int vu = val_p(lu, zm.p, big.N);
    if (vu >= big.N || val_p(ly, zm.p, big.N) < vu)
        throw std::domain_error("unit_exponent: y not in the subgroup generated by u");
    // a = log y / log u, determined mod p^(N+1-vu)
    u64 a = big.mul(big.div_pk(ly, vu), big.inv(big.div_pk(lu, vu)));
    u64 modexp = ipow(zm.p, (unsigned)(big.N - vu));
    return a % modexp;
}

}  // namespace eqlambda
