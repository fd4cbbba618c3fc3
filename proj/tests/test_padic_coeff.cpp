#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqlambda/coeff.hpp"

using namespace eqlambda;

TEST_CASE("ring descriptors") {
    SECTION("Zp itself") {
        CoeffRing R(3, 5, 1);
        CHECK(R.d == 1);
        CHECK(R.e == 1);
        CHECK(R.prec_cap == 5);
    }
    SECTION("mu_4 over Q3 is unramified quadratic") {
        CoeffRing R(3, 5, 4);
        CHECK(R.d == 2);
        CHECK(R.e == 1);
    }
    SECTION("mu_9 over Q3 is totally ramified of degree 6") {
        CoeffRing R(3, 5, 9);
        CHECK(R.d == 1);
        CHECK(R.e == 6);
        CHECK(R.prec_cap == 30);
    }
    SECTION("rejections") {
        CHECK_THROWS_AS(CoeffRing(2, 5, 1), std::invalid_argument);
        CHECK_THROWS_AS(CoeffRing(9, 5, 1), std::invalid_argument);
        CHECK_THROWS_AS(CoeffRing(3, 5, 0), std::invalid_argument);
    }
}

TEST_CASE("defining polynomial divides the cyclotomic one") {
    CoeffRing R(3, 5, 4);
    // y^2 + 1 = 0 must hold for the lifted factor of Phi_4
    Coeff y = R.zero();
    y.at(1, 0) = 1;
    Coeff y2 = coeff_mul(y, y);
    Coeff should_be_zero = coeff_add(y2, R.one());
    CHECK_FALSE(coeff_val(should_be_zero).has_value());
}

TEST_CASE("valuations") {
    SECTION("v(9) = 2 in Z3") {
        CoeffRing R(3, 5, 1);
        CHECK(coeff_val(R.from_scalar(9)).value() == 2);
        CHECK_FALSE(coeff_val(R.zero()).has_value());
    }
    SECTION("v(zeta_9 - 1) = 1, v(3) = 6 in Z3[mu_9]") {
        CoeffRing R(3, 5, 9);
        Coeff pi = R.zero();
        pi.at(0, 1) = 1;  // w = zeta_9 - 1
        CHECK(coeff_val(pi).value() == 1);
        CHECK(coeff_val(R.from_scalar(3)).value() == 6);
        CHECK(coeff_val(coeff_mul(pi, pi)).value() == 2);
    }
    SECTION("v is additive under multiplication") {
        CoeffRing R(3, 4, 9);
        std::mt19937_64 rng(5);
        for (int t = 0; t < 50; ++t) {
            Coeff x = R.zero(), y = R.zero();
            for (auto& c : x.a) c = rng() % R.zm.q;
            for (auto& c : y.a) c = rng() % R.zm.q;
            auto vx = coeff_val(x), vy = coeff_val(y);
            if (!vx || !vy) continue;
            if (*vx + *vy >= std::min(x.prec + *vy, y.prec + *vx)) continue;
            CHECK(coeff_val(coeff_mul(x, y)).value() == *vx + *vy);
        }
    }
}

TEST_CASE("ring axioms on random samples") {
    CoeffRing R(3, 3, 36);  // d = 2, e = 6: full mixed case
    REQUIRE(R.d == 2);
    REQUIRE(R.e == 6);
    std::mt19937_64 rng(11);
    auto rnd = [&] {
        Coeff x = R.zero();
        for (auto& c : x.a) c = rng() % R.zm.q;
        return x;
    };
    for (int t = 0; t < 25; ++t) {
        Coeff a = rnd(), b = rnd(), c = rnd();
        CHECK(coeff_eq(coeff_mul(coeff_mul(a, b), c), coeff_mul(a, coeff_mul(b, c))));
        CHECK(coeff_eq(coeff_mul(a, coeff_add(b, c)), coeff_add(coeff_mul(a, b), coeff_mul(a, c))));
        CHECK(coeff_eq(coeff_mul(a, b), coeff_mul(b, a)));
    }
}

TEST_CASE("invert and unit_part") {
    SECTION("invert(1) = 1, invert(2) = 41 mod 3^4") {
        CoeffRing R(3, 4, 1);
        CHECK(coeff_inv(R.one()).a[0] == 1);
        CHECK(coeff_inv(R.from_scalar(2)).a[0] == 41);
    }
    SECTION("unit_part(9) = 1 in Z3") {
        CoeffRing R(3, 5, 1);
        Coeff u = coeff_unit_part(R.from_scalar(9));
        CHECK(u.a[0] == 1);
    }
    SECTION("x * invert(x) = 1 in ramified and mixed rings") {
        for (u64 m : {9ull, 12ull}) {
            CoeffRing R(3, 3, m);
            std::mt19937_64 rng(m);
            for (int t = 0; t < 10; ++t) {
                Coeff x = R.zero();
                for (auto& c : x.a) c = rng() % R.zm.q;
                auto v = coeff_val(x);
                if (!v || *v != 0) continue;
                CHECK(coeff_eq(coeff_mul(x, coeff_inv(x)), R.one()));
            }
        }
    }
    SECTION("pi * (x/pi) = x and x = pi^v * unit_part(x)") {
        CoeffRing R(3, 4, 9);
        Coeff x = R.zero();
        x.at(0, 2) = 5;
        x.at(0, 3) = 7;  // v = 2
        auto v = coeff_val(x).value();
        CHECK(v == 2);
        Coeff u = coeff_unit_part(x);
        Coeff back = u;
        for (int i = 0; i < v; ++i) back = coeff_mul_pi(back);
        Coeff diff = coeff_sub(back, x);
        CHECK_FALSE(coeff_val(diff).has_value());
        CHECK(diff.prec >= R.prec_cap - v);  // documented loss
    }
    SECTION("non-unit inversion rejected") {
        CoeffRing R(3, 4, 1);
        CHECK_THROWS_AS(coeff_inv(R.from_scalar(3)), std::domain_error);
    }
}

TEST_CASE("teichmuller examples") {
    CoeffRing R3(3, 5, 1);
    CHECK(coeff_teichmuller(R3, 1).a[0] == 1);
    CHECK(coeff_teichmuller(R3, 2).a[0] == R3.zm.q - 1);
    CoeffRing R5(5, 4, 1);
    Coeff w = coeff_teichmuller(R5, 2);
    CHECK(w.a[0] % 5 == 2);
    CHECK(coeff_eq(coeff_pow(w, 4), R5.one()));
}

TEST_CASE("p-adic log on coefficients") {
    CoeffRing R(3, 4, 1);
    SECTION("log 1 = 0") {
        Coeff l = coeff_log(R.one());
        CHECK(coeff_is_zero(l));
    }
    SECTION("log(4^2) = 2 log 4") {
        Coeff l4 = coeff_log(R.from_scalar(4));
        Coeff l16 = coeff_log(R.from_scalar(16));
        Coeff twice = coeff_add(l4, l4);
        CHECK(coeff_eq(l16, twice));
    }
    SECTION("additivity in a ramified ring, with honest precision") {
        CoeffRing R9(3, 5, 9);
        Coeff pi = R9.zero();
        pi.at(0, 1) = 1;
        Coeff p4 = coeff_mul(coeff_mul(pi, pi), coeff_mul(pi, pi));
        Coeff x = coeff_add(R9.one(), p4);                    // 1 + pi^4
        Coeff y = coeff_add(R9.one(), coeff_mul_pi(p4));      // 1 + pi^5
        Coeff lx = coeff_log(x), ly = coeff_log(y);
        Coeff lxy = coeff_log(coeff_mul(x, y));
        Coeff sum = coeff_add(lx, ly);
        CHECK(coeff_eq(lxy, sum));
        CHECK(lxy.prec < R9.prec_cap);  // division by 3 cost digits
    }
    SECTION("series outside its integral domain of convergence is rejected") {
        CoeffRing R9(3, 5, 9);
        Coeff pi = R9.zero();
        pi.at(0, 1) = 1;
        CHECK_THROWS_AS(coeff_log(coeff_add(R9.one(), pi)), std::domain_error);
    }
    SECTION("rejects v(x-1) = 0") {
        CHECK_THROWS_AS(coeff_log(R.from_scalar(2)), std::domain_error);
    }
}

TEST_CASE("roots of unity and cyclotomic embedding") {
    SECTION("mu_4 in the unramified quadratic over Q3") {
        CoeffRing R(3, 5, 4);
        Coeff i = R.root_of_unity(4, 1);
        CHECK(coeff_eq(coeff_pow(i, 4), R.one()));
        CHECK_FALSE(coeff_eq(coeff_pow(i, 2), R.one()));
    }
    SECTION("mu_9 in the ramified ring") {
        CoeffRing R(3, 4, 9);
        Coeff z = R.root_of_unity(9, 1);
        CHECK(coeff_eq(coeff_pow(z, 9), R.one()));
        CHECK_FALSE(coeff_eq(coeff_pow(z, 3), R.one()));
    }
    SECTION("teichmueller roots live downstairs: mu_2") {
        CoeffRing R(3, 5, 1);
        Coeff m1 = R.root_of_unity(2, 1);
        CHECK(m1.a[0] == R.zm.q - 1);
    }
    SECTION("embedding Q(zeta_4) respects arithmetic") {
        CoeffRing R(3, 4, 4);
        CycField F(4);
        std::mt19937_64 rng(17);
        for (int t = 0; t < 10; ++t) {
            CycElem a = cyc_zero(F), b = cyc_zero(F);
            for (auto& c : a.c) c = mpq_class((long)(rng() % 19) - 9);
            for (auto& c : b.c) c = mpq_class((long)(rng() % 19) - 9);
            Coeff ea = R.embed_cyc(F, a), eb = R.embed_cyc(F, b);
            Coeff eab = R.embed_cyc(F, cyc_mul(F, a, b));
            CHECK(coeff_eq(coeff_mul(ea, eb), eab));
        }
    }
    SECTION("unsupported roots rejected") {
        CoeffRing R(3, 4, 4);
        CHECK_THROWS_AS(R.root_of_unity(9, 1), std::domain_error);
        CHECK_THROWS_AS(R.root_of_unity(5, 1), std::domain_error);
    }
}
