#include <catch2/catch_amalgamated.hpp>

#include "eqlambda/cyclotomic.hpp"

using namespace eqlambda;

TEST_CASE("Bernoulli numbers") {
    const auto& B = bernoulli_numbers(12);
    CHECK(B[0] == 1);
    CHECK(B[1] == mpq_class(-1, 2));
    CHECK(B[2] == mpq_class(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == mpq_class(-1, 30));
    CHECK(B[12] == mpq_class(-691, 2730));
}

TEST_CASE("Bernoulli polynomial values") {
    // B_2(x) = x^2 - x + 1/6
    CHECK(bernoulli_poly(2, mpq_class(1, 3)) == mpq_class(1, 9) - mpq_class(1, 3) + mpq_class(1, 6));
    CHECK(bernoulli_poly(1, mpq_class(1)) == mpq_class(1, 2));
    CHECK(bernoulli_poly(2, mpq_class(1)) == mpq_class(1, 6));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_poly(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
}

TEST_CASE("Q(zeta_5) arithmetic") {
    CycField F(5);
    REQUIRE(F.deg == 4);
    // zeta^4 = -(1 + z + z^2 + z^3)
    CycElem z4 = cyc_root(F, 4);
    CHECK(z4.c == std::vector<mpq_class>{-1, -1, -1, -1});
    // zeta^5 = 1
    CHECK(cyc_root(F, 5) == cyc_rat(F, 1));
    // zeta * zeta^4 = 1
    CHECK(cyc_mul(F, cyc_root(F, 1), z4) == cyc_rat(F, 1));
    // sum of all roots = -1 ... 1 + z + z^2 + z^3 + z^4 = 0
    CycElem s = cyc_rat(F, 1);
    for (u64 k = 1; k < 5; ++k) s = cyc_add(F, s, cyc_root(F, k));
    CHECK(cyc_is_zero(s));
}

TEST_CASE("roots of unity in degree-1 fields") {
    CycField F1(1), F2(2);
    CHECK(cyc_root(F1, 0) == cyc_rat(F1, 1));
    CHECK(cyc_root(F2, 1) == cyc_rat(F2, -1));
    CHECK(cyc_root(F2, 3) == cyc_rat(F2, -1));
    CHECK(cyc_root(F2, 2) == cyc_rat(F2, 1));
}

TEST_CASE("Galois action") {
    CycField F(12);
    CycElem a = cyc_add(F, cyc_root(F, 1), cyc_rat(F, 7));
    // sigma_5 then sigma_5 = sigma_25 = sigma_1
    CHECK(cyc_galois(F, cyc_galois(F, a, 5), 5) == a);
    // trace-type element fixed by Galois is rational
    CycElem tr = cyc_zero(F);
    for (u64 s : {1ull, 5ull, 7ull, 11ull}) tr = cyc_add(F, tr, cyc_galois(F, cyc_root(F, 1), s));
    CHECK(cyc_is_rational(tr));
}
