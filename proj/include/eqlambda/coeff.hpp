#pragma once

// Truncated exact arithmetic in O = Zp[mu_m], m = m' p^k with p odd, p ∤ m'.
// O is represented on the integral basis y^i w^j (0 <= i < d, 0 <= j < e):
//   y  = a primitive m'-th root of unity, minimal polynomial h of degree
//        d = ord(p mod m'), a Hensel-lifted factor of Phi_{m'};
//   w  = zeta_{p^k} - 1, Eisenstein minimal polynomial E(w) = Phi_{p^k}(1+w)
//        of degree e = phi(p^k).
// The uniformizer is pi = w (pi = p when k = 0); valuations are normalized
// so that v(p) = e. Elements carry an effective pi-adic precision.

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "eqlambda/cyclotomic.hpp"
#include "eqlambda/howell.hpp"
#include "eqlambda/nt.hpp"
#include "eqlambda/zmod.hpp"

namespace eqlambda {

namespace poly {

// Univariate polynomials over Z/p^N as coefficient vectors (index = degree).

inline void trim(std::vector<u64>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<u64> mul(const ZMod& zm, const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] = zm.add(c[i + j], zm.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

inline std::vector<u64> sub(const ZMod& zm, std::vector<u64> a, const std::vector<u64>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = zm.sub(a[i], b[i]);
    trim(a);
    return a;
}

// division with remainder by a monic divisor
inline std::pair<std::vector<u64>, std::vector<u64>> divmod_monic(const ZMod& zm, std::vector<u64> f,
                                                                  const std::vector<u64>& g) {
    if (g.empty() || g.back() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
    if (f.size() < g.size()) return {{}, f};
    std::vector<u64> q(f.size() - g.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        u64 c = f[i + g.size() - 1];
        if (c == 0) continue;
        q[i] = c;
        for (size_t j = 0; j < g.size(); ++j)
            f[i + j] = zm.sub(f[i + j], zm.mul(c, g[j]));
    }
    trim(f);
    trim(q);
    return {q, f};
}

// gcd over F_p (both inputs reduced mod p), monic output
inline std::vector<u64> gcd_fp(u64 p, std::vector<u64> a, std::vector<u64> b) {
    ZMod zp(p, 1);
    for (auto& x : a) x %= p;
    for (auto& x : b) x %= p;
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        u64 inv = invmod(b.back(), p);
        for (auto& x : b) x = mulmod(x, inv, p);
        auto [q, r] = divmod_monic(zp, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

inline std::vector<u64> powmod_fp(u64 p, std::vector<u64> base, u64 exp, const std::vector<u64>& mod) {
    ZMod zp(p, 1);
    std::vector<u64> r{1};
    base = divmod_monic(zp, base, mod).second;
    while (exp) {
        if (exp & 1) r = divmod_monic(zp, mul(zp, r, base), mod).second;
        base = divmod_monic(zp, mul(zp, base, base), mod).second;
        exp >>= 1;
    }
    return r;
}

// extended euclid over F_p: s a + t b = g (monic)
inline void xgcd_fp(u64 p, std::vector<u64> a, std::vector<u64> b, std::vector<u64>& g,
                    std::vector<u64>& s, std::vector<u64>& t) {
    ZMod zp(p, 1);
    std::vector<u64> s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        u64 lead = b.back();
        u64 inv = invmod(lead, p);
        std::vector<u64> bm = b;
        for (auto& x : bm) x = mulmod(x, inv, p);
        auto [q, r] = divmod_monic(zp, a, bm);
        // a = q' b + r with q' = q * inv
        std::vector<u64> qq = q;
        for (auto& x : qq) x = mulmod(x, inv, p);
        auto step = [&](std::vector<u64>& u0, std::vector<u64>& u1) {
            auto nu = sub(zp, u0, mul(zp, qq, u1));
            u0 = std::move(u1);
            u1 = std::move(nu);
        };
        step(s0, s1);
        step(t0, t1);
        a = std::move(b);
        b = std::move(r);
    }
    u64 inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
    for (auto& x : s0) x = mulmod(x, inv, p);
    for (auto& x : t0) x = mulmod(x, inv, p);
    g = a;
    s = s0;
    t = t0;
}

// one irreducible factor (all factors share degree d) of a squarefree monic
// polynomial over F_p, by Cantor-Zassenhaus equal-degree splitting
inline std::vector<u64> edf_factor_fp(u64 p, std::vector<u64> f, size_t d, std::mt19937_64& rng) {
    while (f.size() - 1 > d) {
        std::vector<u64> r(f.size() - 1);
        for (auto& x : r) x = rng() % p;
        trim(r);
        if (r.empty()) continue;
        u64 exp = (ipow(p, (unsigned)d) - 1) / 2;
        auto h = powmod_fp(p, r, exp, f);
        if (h.empty()) continue;
        h[0] = submod(h[0], 1, p);
        trim(h);
        auto g = gcd_fp(p, f, h);
        if (g.size() <= 1 || g.size() == f.size()) continue;
        if ((g.size() - 1) % d != 0) throw std::logic_error("edf: degree mismatch");
        f = g;
    }
    return f;
}

// Hensel-lift the factorization F = h*g (mod p), gcd(h,g)=1, to mod p^N.
// h0 monic; returns the lifted monic h mod p^N.
inline std::vector<u64> hensel_lift_factor(const ZMod& zm, const std::vector<u64>& F,
                                           std::vector<u64> h) {
    u64 p = zm.p;
    ZMod zp(p, 1);
    std::vector<u64> Fp = F;
    for (auto& x : Fp) x %= p;
    trim(Fp);
    auto g = divmod_monic(zp, Fp, h).first;
    std::vector<u64> gg, s, t;
    xgcd_fp(p, h, g, gg, s, t);
    if (gg.size() != 1) throw std::logic_error("hensel: factors not coprime");

    u64 pk = p;  // current modulus p^i
    for (int i = 1; i < zm.N; ++i) {
        ZMod znext(p, i + 1);
        // delta = (F - h g)/p^i mod p
        auto hg = mul(znext, h, g);
        auto diff = sub(znext, F, hg);
        std::vector<u64> delta(diff.size());
        for (size_t j = 0; j < diff.size(); ++j) delta[j] = (diff[j] / pk) % p;
        trim(delta);
        // a = t*delta mod h, b = (delta - a g)/h over F_p
        auto a = divmod_monic(zp, mul(zp, t, delta), h).second;
        auto rem = sub(zp, delta, mul(zp, a, g));
        auto b = divmod_monic(zp, rem, h).first;
        for (size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) {
                if (j >= h.size()) h.resize(j + 1, 0);
                h[j] = znext.add(h[j] % znext.q, mulmod(a[j], pk, znext.q));
            }
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) {
                if (j >= g.size()) g.resize(j + 1, 0);
                g[j] = znext.add(g[j] % znext.q, mulmod(b[j], pk, znext.q));
            }
        pk *= p;
    }
    return h;
}

}  // namespace poly

struct Coeff;

struct CoeffRing {
    u64 p = 3;
    int N = 1;
    u64 m = 1;
    u64 mprime = 1;
    int k = 0;
    size_t d = 1, e = 1;
    ZMod zm;
    std::vector<u64> h;          // minimal polynomial of y over Zp, monic degree d
    std::vector<u64> E;          // Eisenstein polynomial of w, monic degree e
    std::vector<u64> p_over_pi;  // (p / w) as a scalar polynomial in w, degree e-1 (k >= 1)
    std::vector<std::vector<u64>> yred;  // y^(d+j) mod h
    std::vector<std::vector<u64>> wred;  // w^(e+j) mod E
    int prec_cap = 1;
    std::vector<u64> tame_gen_flat;  // Teichmueller generator of mu_{p^d-1}

    CoeffRing() = default;
    CoeffRing(u64 p_, int N_, u64 m_);

    size_t dim() const { return d * e; }
    Coeff zero() const;
    Coeff one() const;
    Coeff from_scalar(u64 a) const;
    Coeff from_rational(const mpq_class& x) const;
    Coeff root_of_unity(u64 n, u64 pow = 1) const;
    Coeff embed_cyc(const CycField& F, const CycElem& x) const;

    bool operator==(const CoeffRing& o) const { return p == o.p && N == o.N && m == o.m; }
};

struct Coeff {
    const CoeffRing* R = nullptr;
    std::vector<u64> a;  // d*e entries, a[i + d*j] <-> y^i w^j
    int prec = 0;        // pi-adic effective precision

    u64& at(size_t i, size_t j) { return a[i + R->d * j]; }
    u64 at(size_t i, size_t j) const { return a[i + R->d * j]; }
};

inline Coeff CoeffRing::zero() const { return Coeff{this, std::vector<u64>(dim(), 0), prec_cap}; }

inline Coeff CoeffRing::one() const {
    Coeff c = zero();
    c.a[0] = 1;
    return c;
}

inline Coeff CoeffRing::from_scalar(u64 x) const {
    Coeff c = zero();
    c.a[0] = x % zm.q;
    return c;
}

inline Coeff coeff_mul(const Coeff& x, const Coeff& y);
inline Coeff coeff_pow(const Coeff& x, u64 n);

// ---- construction ----

inline CoeffRing::CoeffRing(u64 p_, int N_, u64 m_) : p(p_), N(N_), m(m_) {
    if (m == 0) throw std::invalid_argument("CoeffRing: m must be positive");
    zm = ZMod(p, N);  // validates p odd prime, N >= 1
    mprime = m;
    k = 0;
    while (mprime % p == 0) { mprime /= p; ++k; }
    d = (size_t)mult_order(p, mprime);
    e = k == 0 ? 1 : (size_t)euler_phi(ipow(p, (unsigned)k));
    prec_cap = N * (int)e;

    // unramified part: a degree-d factor of Phi_{m'} mod p^N
    if (d == 1) {
        if (mprime == 1) {
            h = {zm.q - 1, 1};  // y - 1
        } else {
            // root of Phi_{m'} in Zp: Teichmueller power of a generator
            // of the subgroup of order m' in F_p^* (m' | p-1 here)
            u64 g = primitive_root(p);
            u64 r0 = powmod(g, (p - 1) / mprime, p);
            u64 r = zm.teichmuller(r0);
            // ensure primitive m'-th root: r0 has exact order m'
            h = {zm.neg(r), 1};
        }
    } else {
        // Phi_{m'} mod p, one irreducible (degree d) factor, Hensel lift
        auto phi_z = cyclotomic_poly(mprime);
        std::vector<u64> F(phi_z.size());
        for (size_t i = 0; i < phi_z.size(); ++i) {
            mpz_class c = phi_z[i] % mpz_class((unsigned long)zm.q);
            if (c < 0) c += (unsigned long)zm.q;
            F[i] = c.get_ui();
        }
        std::vector<u64> Fp = F;
        for (auto& x : Fp) x %= p;
        poly::trim(Fp);
        std::mt19937_64 rng(0x5eed5eedULL ^ (p << 16) ^ m);
        auto h0 = poly::edf_factor_fp(p, Fp, d, rng);
        h = poly::hensel_lift_factor(zm, F, h0);
    }

    // ramified part: E(w) = Phi_{p^k}(1+w)
    if (k == 0) {
        E = {0, 1};  // unused beyond degree bookkeeping; pi = p
    } else {
        u64 pk_ = ipow(p, (unsigned)k);
        auto phi_z = cyclotomic_poly(pk_);
        // substitute x -> 1 + w by Horner over Z/p^N
        std::vector<u64> acc;  // polynomial in w
        for (int i = (int)phi_z.size() - 1; i >= 0; --i) {
            // acc = acc * (1 + w) + phi[i]
            std::vector<u64> nxt(acc.size() + 1, 0);
            for (size_t j = 0; j < acc.size(); ++j) {
                nxt[j] = zm.add(nxt[j], acc[j]);
                nxt[j + 1] = zm.add(nxt[j + 1], acc[j]);
            }
            mpz_class c = phi_z[i] % mpz_class((unsigned long)zm.q);
            if (c < 0) c += (unsigned long)zm.q;
            if (!nxt.empty())
                nxt[0] = zm.add(nxt[0], c.get_ui());
            else
                nxt.push_back(c.get_ui());
            acc = std::move(nxt);
        }
        poly::trim(acc);
        E = acc;
        if (E.size() != e + 1 || E.back() != 1) throw std::logic_error("CoeffRing: bad Eisenstein polynomial");
        if (E[0] != p % zm.q) throw std::logic_error("CoeffRing: E(0) != p");
        // p = -w * (w^{e-1} + c_{e-1} w^{e-2} + ... + c_1)  =>
        p_over_pi.assign(e, 0);
        for (size_t j = 1; j <= e; ++j) p_over_pi[j - 1] = zm.neg(E[j]);
    }

    // reduction tables
    auto build_red = [&](const std::vector<u64>& f, size_t deg) {
        std::vector<std::vector<u64>> red;
        if (deg <= 1) return red;
        std::vector<u64> cur(deg, 0);
        for (size_t i = 0; i < deg; ++i) cur[i] = zm.neg(f[i]);
        for (size_t t = 0; t + 1 < deg; ++t) {
            red.push_back(cur);
            std::vector<u64> nxt(deg, 0);
            u64 top = cur[deg - 1];
            for (size_t i = deg - 1; i > 0; --i) nxt[i] = cur[i - 1];
            for (size_t i = 0; i < deg; ++i) nxt[i] = zm.add(nxt[i], zm.mul(top, zm.neg(f[i])));
            cur = std::move(nxt);
        }
        return red;
    };
    yred = build_red(h, d);
    wred = build_red(E, e);

    // Teichmueller generator of the tame roots of unity mu_{p^d - 1}:
    // pick a generator of the residue field F_{p^d}^* and lift it by
    // iterating the Frobenius-power map x -> x^{p^d}.
    {
        u64 tame_order = ipow(p, (unsigned)d) - 1;
        ZMod zp(p, 1);
        std::vector<u64> hp(h.size());
        for (size_t i = 0; i < h.size(); ++i) hp[i] = h[i] % p;
        auto fac = factorize(tame_order);
        std::mt19937_64 rng(0xabcdULL ^ m ^ (p << 8));
        std::vector<u64> gen;
        while (true) {
            std::vector<u64> cand(d);
            for (auto& c : cand) c = rng() % p;
            poly::trim(cand);
            if (cand.empty()) continue;
            bool ok = true;
            for (auto [qf, ef] : fac) {
                (void)ef;
                if (poly::powmod_fp(p, cand, tame_order / qf, hp) == std::vector<u64>{1}) {
                    ok = false;
                    break;
                }
            }
            if (ok && poly::powmod_fp(p, cand, tame_order, hp) != std::vector<u64>{1}) ok = false;
            if (ok) { gen = cand; break; }
        }
        Coeff g0 = zero();
        for (size_t i = 0; i < gen.size(); ++i) g0.at(i, 0) = gen[i];
        u64 pd = ipow(p, (unsigned)d);
        for (int it = 0; it < prec_cap + 2; ++it) g0 = coeff_pow(g0, pd);
        tame_gen_flat = g0.a;
    }
}

// ---- elementwise operations ----

inline bool coeff_compatible(const Coeff& x, const Coeff& y) {
    return x.R == y.R || (x.R && y.R && *x.R == *y.R);
}

inline Coeff coeff_add(const Coeff& x, const Coeff& y) {
    if (!coeff_compatible(x, y)) throw std::invalid_argument("coeff_add: ring mismatch");
    Coeff r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.R->zm.add(r.a[i], y.a[i]);
    r.prec = std::min(x.prec, y.prec);
    return r;
}

inline Coeff coeff_sub(const Coeff& x, const Coeff& y) {
    if (!coeff_compatible(x, y)) throw std::invalid_argument("coeff_sub: ring mismatch");
    Coeff r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.R->zm.sub(r.a[i], y.a[i]);
    r.prec = std::min(x.prec, y.prec);
    return r;
}

inline Coeff coeff_neg(const Coeff& x) {
    Coeff r = x;
    for (auto& c : r.a) c = x.R->zm.neg(c);
    return r;
}

inline bool coeff_is_zero(const Coeff& x) {
    for (u64 c : x.a)
        if (c != 0) return false;
    return true;
}

// normalized pi-adic valuation; nullopt when zero at the stored precision
inline std::optional<int> coeff_val(const Coeff& x) {
    const auto& R = *x.R;
    int best = -1;
    for (size_t j = 0; j < R.e; ++j)
        for (size_t i = 0; i < R.d; ++i) {
            u64 c = x.at(i, j);
            if (c == 0) continue;
            int v = (int)R.e * val_p(c, R.p, R.N) + (int)j;
            if (best < 0 || v < best) best = v;
        }
    if (best < 0 || best >= x.prec) return std::nullopt;
    return best;
}

inline Coeff coeff_mul(const Coeff& x, const Coeff& y) {
    if (!coeff_compatible(x, y)) throw std::invalid_argument("coeff_mul: ring mismatch");
    const CoeffRing& R = *x.R;
    const ZMod& zm = R.zm;
    size_t d = R.d, e = R.e;
    // convolution on the (2d-1) x (2e-1) grid
    std::vector<u64> grid((2 * d - 1) * (2 * e - 1), 0);
    auto G = [&](size_t i, size_t j) -> u64& { return grid[i + (2 * d - 1) * j]; };
    for (size_t j1 = 0; j1 < e; ++j1)
        for (size_t i1 = 0; i1 < d; ++i1) {
            u64 c1 = x.at(i1, j1);
            if (c1 == 0) continue;
            for (size_t j2 = 0; j2 < e; ++j2)
                for (size_t i2 = 0; i2 < d; ++i2) {
                    u64 c2 = y.at(i2, j2);
                    if (c2 == 0) continue;
                    G(i1 + i2, j1 + j2) = zm.add(G(i1 + i2, j1 + j2), zm.mul(c1, c2));
                }
        }
    // reduce y-degree (loops are skipped entirely when d = 1 resp. e = 1)
    for (size_t j = 0; j < 2 * e - 1; ++j)
        for (size_t i = 2 * d - 2; i >= d; --i) {
            u64 c = G(i, j);
            if (c == 0) continue;
            G(i, j) = 0;
            const auto& red = R.yred[i - d];
            for (size_t t = 0; t < d; ++t) G(t, j) = zm.add(G(t, j), zm.mul(c, red[t]));
        }
    // reduce w-degree
    for (size_t j = 2 * e - 2; j >= e; --j) {
        const auto& red = R.wred[j - e];
        for (size_t i = 0; i < d; ++i) {
            u64 c = G(i, j);
            if (c == 0) continue;
            G(i, j) = 0;
            for (size_t t = 0; t < e; ++t) G(i, t) = zm.add(G(i, t), zm.mul(c, red[t]));
        }
    }
    Coeff r = R.zero();
    for (size_t j = 0; j < e; ++j)
        for (size_t i = 0; i < d; ++i) r.at(i, j) = G(i, j);
    auto vx = coeff_val(x), vy = coeff_val(y);
    int px = x.prec + (vy ? *vy : y.prec);
    int py = y.prec + (vx ? *vx : x.prec);
    r.prec = std::min({px, py, R.prec_cap});
    return r;
}

// exact division by p on coordinates (requires all divisible); drops e digits
inline Coeff coeff_div_p(const Coeff& x) {
    Coeff r = x;
    for (auto& c : r.a) {
        if (c % x.R->p != 0) throw std::domain_error("coeff_div_p: not divisible by p");
        c /= x.R->p;
    }
    r.prec = x.prec - (int)x.R->e;
    return r;
}

inline Coeff coeff_mul_pi(const Coeff& x) {
    const CoeffRing& R = *x.R;
    if (R.k == 0) {
        Coeff r = x;
        for (auto& c : r.a) c = R.zm.mul(c, R.p);
        r.prec = std::min(x.prec + 1, R.prec_cap);
        return r;
    }
    // multiply by w: shift in j, reduce top via E
    Coeff r = R.zero();
    const ZMod& zm = R.zm;
    for (size_t j = 0; j + 1 < R.e; ++j)
        for (size_t i = 0; i < R.d; ++i) r.at(i, j + 1) = x.at(i, j);
    if (R.e >= 1) {
        const auto& red = R.wred.empty() ? std::vector<u64>{} : R.wred[0];
        for (size_t i = 0; i < R.d; ++i) {
            u64 c = x.at(i, R.e - 1);
            if (c == 0) continue;
            for (size_t t = 0; t < R.e; ++t) r.at(i, t) = zm.add(r.at(i, t), zm.mul(c, red[t]));
        }
    }
    r.prec = std::min(x.prec + 1, R.prec_cap);
    return r;
}

// exact division by pi; requires v(x) >= 1, costs one digit of precision
inline Coeff coeff_div_pi(const Coeff& x) {
    const CoeffRing& R = *x.R;
    if (R.k == 0) return coeff_div_p(x);
    auto v = coeff_val(x);
    if (v && *v < 1) throw std::domain_error("coeff_div_pi: valuation 0");
    const ZMod& zm = R.zm;
    Coeff r = R.zero();
    // x = sum_j A_j w^j : x/w = sum_{j>=1} A_j w^{j-1} + (A_0/p) * (p/w)
    for (size_t j = 1; j < R.e; ++j)
        for (size_t i = 0; i < R.d; ++i) r.at(i, j - 1) = x.at(i, j);
    for (size_t i = 0; i < R.d; ++i) {
        u64 c = x.at(i, 0);
        if (c == 0) continue;
        if (c % R.p != 0) throw std::domain_error("coeff_div_pi: constant term not divisible");
        u64 b = c / R.p;
        for (size_t t = 0; t < R.e; ++t)
            r.at(i, t) = zm.add(r.at(i, t), zm.mul(b, R.p_over_pi[t]));
    }
    r.prec = x.prec - 1;
    return r;
}

inline Coeff coeff_unit_part(const Coeff& x) {
    auto v = coeff_val(x);
    if (!v) throw std::domain_error("coeff_unit_part: zero at precision");
    Coeff r = x;
    for (int i = 0; i < *v; ++i) r = coeff_div_pi(r);
    return r;
}

// multiplicative inverse of a unit, by solving the multiplication system
inline Coeff coeff_inv(const Coeff& x) {
    auto v = coeff_val(x);
    if (!v || *v != 0) throw std::domain_error("coeff_inv: not a unit");
    const CoeffRing& R = *x.R;
    size_t dim = R.dim();
    // rows of M = coordinates of basis_r * x
    ZRows M(dim, ZRow(dim, 0));
    for (size_t r0 = 0; r0 < dim; ++r0) {
        Coeff b = R.zero();
        b.a[r0] = 1;
        Coeff prod = coeff_mul(b, x);
        M[r0] = prod.a;
    }
    ZRow target(dim, 0);
    target[0] = 1;
    auto sol = solve_left(R.zm, M, target);
    if (!sol) throw std::logic_error("coeff_inv: unit inversion failed");
    Coeff r = R.zero();
    r.a = *sol;
    r.prec = x.prec;
    return r;
}

inline Coeff coeff_pow(const Coeff& x, u64 n) {
    Coeff r = x.R->one(), b = x;
    while (n) {
        if (n & 1) r = coeff_mul(r, b);
        b = coeff_mul(b, b);
        n >>= 1;
    }
    return r;
}

// omega(a): embeds the scalar Teichmueller lift
inline Coeff coeff_teichmuller(const CoeffRing& R, u64 a) {
    return R.from_scalar(R.zm.teichmuller(a));
}

// log of x with v(x - 1) >= 1; reports the honestly achieved precision
inline Coeff coeff_log(const Coeff& x) {
    const CoeffRing& R = *x.R;
    Coeff u = coeff_sub(x, R.one());
    auto v1o = coeff_val(u);
    if (!v1o) {
        Coeff z = R.zero();
        z.prec = u.prec;
        return z;  // log(1 + O(pi^prec)) = O(pi^prec)
    }
    int v1 = *v1o;
    if (v1 < 1) throw std::domain_error("coeff_log: v(x-1) = 0");
    // integral convergence of the series requires v(x-1) > e/(p-1)
    if ((u64)v1 * (R.p - 1) <= R.e)
        throw std::domain_error("coeff_log: v(x-1) too small for the ramified series");
    int P = u.prec;
    // k-th term valuation is >= k*v1 - e*v_p(k); since v_p(k) <= 8 for the
    // term counts reached here, K = P + 8e clears P for every k > K
    int K = P + 8 * (int)R.e;
    if (ipow(R.p, 8) <= (u64)K) throw std::logic_error("coeff_log: term bound too small");
    Coeff term = R.one(), acc = R.zero();
    int worst = R.prec_cap;
    for (int k = 1; k <= K; ++k) {
        term = coeff_mul(term, u);
        int t = val_p((u64)k, R.p, 62);
        Coeff contrib = term;
        for (int s = 0; s < t; ++s) contrib = coeff_div_p(contrib);
        u64 kunit = ((u64)k / ipow(R.p, (unsigned)t)) % R.zm.q;
        Coeff ku = R.from_scalar(R.zm.inv(kunit));
        contrib = coeff_mul(contrib, ku);
        worst = std::min(worst, contrib.prec);
        acc = (k % 2 == 1) ? coeff_add(acc, contrib) : coeff_sub(acc, contrib);
    }
    acc.prec = worst;
    return acc;
}

inline Coeff CoeffRing::from_rational(const mpq_class& x) const {
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class qz((unsigned long)zm.q);
    mpz_class nr = num % qz;
    if (nr < 0) nr += qz;
    mpz_class dr = den % qz;
    if (dr < 0) dr += qz;
    u64 dn = dr.get_ui();
    if (dn % p == 0) throw std::domain_error("from_rational: denominator divisible by p");
    return from_scalar(zm.mul(nr.get_ui(), zm.inv(dn)));
}

inline Coeff CoeffRing::root_of_unity(u64 n, u64 powr) const {
    if (n == 0) throw std::invalid_argument("root_of_unity: n = 0");
    u64 nt = n;
    int jp = 0;
    while (nt % p == 0) { nt /= p; ++jp; }
    if (jp > k) throw std::domain_error("root_of_unity: p-part not contained in the ring");
    u64 tame_order = ipow(p, (unsigned)d) - 1;
    if (tame_order % nt != 0) throw std::domain_error("root_of_unity: tame part not contained in the ring");

    Coeff z = one();
    if (nt > 1) {
        Coeff tg = zero();
        tg.a = tame_gen_flat;
        tg.prec = prec_cap;
        z = coeff_mul(z, coeff_pow(tg, tame_order / nt));
    }
    if (jp > 0) {
        // zeta_{p^jp} = (1 + w)^{p^{k - jp}}; k >= 1 forces e >= 2 for p odd
        Coeff zw = zero();
        zw.a[0] = 1;
        zw.at(0, 1) = 1;
        z = coeff_mul(z, coeff_pow(zw, ipow(p, (unsigned)(k - jp))));
    }
    return coeff_pow(z, powr % n);
}

inline Coeff CoeffRing::embed_cyc(const CycField& F, const CycElem& x) const {
    Coeff acc = zero();
    Coeff zr = root_of_unity(F.n, 1);
    Coeff zp = one();
    for (size_t i = 0; i < F.deg; ++i) {
        if (x.c[i] != 0) acc = coeff_add(acc, coeff_mul(zp, from_rational(x.c[i])));
        if (i + 1 < F.deg) zp = coeff_mul(zp, zr);
    }
    return acc;
}

// equality at the shared effective precision
inline bool coeff_eq(const Coeff& x, const Coeff& y) {
    Coeff diff = coeff_sub(x, y);
    return !coeff_val(diff).has_value();
}

}  // namespace eqlambda
