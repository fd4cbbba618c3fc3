#pragma once

// Elementary number theory on machine integers. Everything here is exact;
// moduli are assumed < 2^62 so that products fit in unsigned __int128.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace eqlambda {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a, m) = 1, via extended Euclid.
inline u64 invmod(u64 a, u64 m) {
    i64 t = 0, newt = 1;
    i64 r = (i64)m, newr = (i64)(a % m);
    while (newr != 0) {
        i64 q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("invmod: element not invertible");
    if (t < 0) t += (i64)m;
    return (u64)t;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    for (u64 d = 29; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> f;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            f.push_back({d, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
    return r;
}

// p-adic valuation of n, with v(0) reported as `cap`.
inline int val_p(u64 n, u64 p, int cap = 1 << 20) {
    if (n == 0) return cap;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

// Multiplicative order of a modulo n (gcd(a, n) = 1).
inline u64 mult_order(u64 a, u64 n) {
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw std::domain_error("mult_order: gcd != 1");
    u64 ord = euler_phi(n);
    for (auto [q, e] : factorize(ord)) {
        for (int i = 0; i < e && powmod(a, ord / q, n) == 1; ++i) ord /= q;
    }
    return ord;
}

// Smallest primitive root modulo q^e (q odd prime) or mod 2, 4.
inline u64 primitive_root(u64 m) {
    u64 phi = euler_phi(m);
    auto fac = factorize(phi);
    for (u64 g = 2; g < m; ++g) {
        if (std::gcd(g, m) != 1) continue;
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod(g, phi / q, m) == 1) { ok = false; break; }
        if (ok) return g;
    }
    if (m <= 2) return 1;
    if (m == 4) return 3;
    throw std::domain_error("primitive_root: none found");
}

// Discrete log of x in the cyclic group generated by g mod m, order ord.
// Brute force; group orders here are tiny.
inline u64 discrete_log(u64 x, u64 g, u64 ord, u64 m) {
    u64 cur = 1;
    for (u64 k = 0; k < ord; ++k) {
        if (cur == x % m) return k;
        cur = mulmod(cur, g, m);
    }
    throw std::domain_error("discrete_log: not in cyclic subgroup");
}

inline u64 crt_pair(u64 r1, u64 m1, u64 r2, u64 m2) {
    // Assumes gcd(m1, m2) = 1 and m1*m2 < 2^62.
    u64 m = m1 * m2;
    u64 t = mulmod(submod(r2 % m2, r1 % m2, m2), invmod(m1 % m2, m2), m2);
    return (r1 + (u128)t * m1) % m;
}

}  // namespace eqlambda
