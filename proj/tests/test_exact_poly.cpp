// Exact polynomial arithmetic, series expansion and the Bernoulli machinery.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "weylstat/bipoly.hpp"
#include "weylstat/caps.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/series.hpp"
#include "weylstat/unipoly.hpp"

using namespace weylstat;

namespace {
UniPoly P(std::vector<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return UniPoly(std::move(c));
}
} // namespace

TEST_CASE("normalization trims trailing zeros and marks the zero polynomial") {
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(P({0, 0}).degree() == -1);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({}).is_zero());
    CHECK(UniPoly::constant(Int(7)).degree() == 0);
    CHECK(UniPoly::constant(Int(0)).is_zero());
    CHECK(P({1, 2}).coeff(5) == 0);
    CHECK(P({1, 2}).coeff(1) == 2);
}

TEST_CASE("ring operations on fixed polynomials") {
    const UniPoly a = P({1, 2, 1});  // (1+t)^2
    const UniPoly b = P({1, -1});    // 1-t
    CHECK(a + b == P({2, 1, 1}));
    CHECK(a - a == UniPoly());
    CHECK(a * b == P({1, 1, -1, -1}));
    CHECK(b * b == P({1, -2, 1}));
    CHECK(a * Int(3) == P({3, 6, 3}));
    CHECK(a.shifted(2) == P({0, 0, 1, 2, 1}));
    CHECK(UniPoly().shifted(3) == UniPoly());
    CHECK(a.eval(Int(2)) == 9);
    CHECK(a.total() == 4);
    CHECK(P({1, -3}).eval(Int(2)) == -5);
    CHECK(b * UniPoly() == UniPoly());
}

TEST_CASE("halved divides exactly or reports the inconsistency") {
    CHECK(P({2, 4, 6}).halved() == P({1, 2, 3}));
    CHECK(P({0, -4}).halved() == P({0, -2}));
    CHECK_THROWS_AS(P({1, 2}).halved(), inconsistency_error);
    CHECK_THROWS_AS(P({2, 3}).halved(), inconsistency_error);
}

TEST_CASE("nonnegativity scan") {
    CHECK(P({0, 1, 2}).all_coeffs_nonnegative());
    CHECK(UniPoly().all_coeffs_nonnegative());
    CHECK(!P({1, -1}).all_coeffs_nonnegative());
}

TEST_CASE("binomial powers of 1 - t") {
    CHECK(one_minus_t_pow(0) == P({1}));
    CHECK(one_minus_t_pow(1) == P({1, -1}));
    CHECK(one_minus_t_pow(3) == P({1, -3, 3, -1}));
    CHECK(one_minus_t_pow(4).eval(Int(1)) == 0);
    CHECK(one_minus_t_pow(5).coeff(2) == 10);
}

TEST_CASE("printing follows the explicit-coefficient style") {
    CHECK(UniPoly().to_string() == "0");
    CHECK(P({1, 4, 1}).to_string() == "1 + 4*t + 1*t^2");
    CHECK(P({0, 2}).to_string() == "2*t");
    CHECK(P({1, -1}).to_string() == "1 + -1*t");
    CHECK(P({3, 0, 0, 5}).to_string() == "3 + 5*t^3");
}

TEST_CASE("series quotient worked example") {
    // (1+t)^2 / (1-t)^3: coefficients 1, 5, 13, 25, ... (squares doubled minus
    // offsets; checked by hand: sum_j p_j C(k-j+2, 2)).
    RatSeq q = series_quotient(P({1, 2, 1}), 3, 4);
    REQUIRE(q.size() == 5);
    CHECK(q[0] == 1);
    CHECK(q[1] == 5);
    CHECK(q[2] == 13);
    CHECK(q[3] == 25);
    CHECK(q[4] == 41);
}

TEST_CASE("series quotient of 1 by (1-t)^m gives binomial diagonals") {
    RatSeq ones = series_quotient(P({1}), 1, 5);
    for (const Rat& c : ones) CHECK(c == 1);
    RatSeq tri = series_quotient(P({1}), 3, 4);
    // C(k+2, 2): 1, 3, 6, 10, 15
    CHECK(tri[2] == 6);
    CHECK(tri[4] == 15);
}

TEST_CASE("series quotient inverts multiplication by (1-t)^m") {
    for (int m = 1; m <= 5; ++m) {
        const UniPoly p = P({3, -1, 4, 1, 5});
        const UniPoly prod = p * one_minus_t_pow(m);
        RatSeq q = series_quotient(prod, m, 10);
        for (int k = 0; k <= 10; ++k)
            CHECK(q[static_cast<size_t>(k)] == Rat(p.coeff(k)));
    }
}

TEST_CASE("series quotient rejects bad arguments") {
    CHECK_THROWS_AS(series_quotient(P({1}), 0, 3), error);
    CHECK_THROWS_AS(series_quotient(P({1}), 2, -1), error);
}

TEST_CASE("Bernoulli polynomials in the x - 1/2 convention") {
    RatSeq b0 = bernoulli_poly(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == 1);
    RatSeq b1 = bernoulli_poly(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == Rat(-1, 2));
    CHECK(b1[1] == 1);
    RatSeq b2 = bernoulli_poly(2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == Rat(1, 6));
    CHECK(b2[1] == -1);
    CHECK(b2[2] == 1);
    RatSeq b3 = bernoulli_poly(3);
    REQUIRE(b3.size() == 4);
    CHECK(b3[0] == 0);
    CHECK(b3[1] == Rat(1, 2));
    CHECK(b3[2] == Rat(-3, 2));
    CHECK(b3[3] == 1);
    // constant terms are the Bernoulli numbers: B_4 = -1/30, B_6 = 1/42
    CHECK(bernoulli_poly(4)[0] == Rat(-1, 30));
    CHECK(bernoulli_poly(6)[0] == Rat(1, 42));
    CHECK(bernoulli_poly(5)[0] == 0);
}

TEST_CASE("Bernoulli difference identity at rational points") {
    // B_n(x+1) - B_n(x) = n x^(n-1), the property defining the family.
    for (int n = 1; n <= 8; ++n)
        for (const Rat& x : {Rat(0), Rat(1), Rat(5), Rat(-2), Rat(3, 2), Rat(-7, 3)}) {
            Rat lhs = bernoulli_eval(n, x + 1) - bernoulli_eval(n, x);
            lhs.canonicalize();
            Rat pow = 1;
            for (int i = 0; i < n - 1; ++i) pow *= x;
            Rat rhs = Rat(n) * pow;
            rhs.canonicalize();
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Bernoulli polynomials integrate to zero over [0, 1]") {
    // sum_i c_i / (i+1) = 0 for n >= 1.
    for (int n = 1; n <= 10; ++n) {
        RatSeq c = bernoulli_poly(n);
        Rat acc = 0;
        for (size_t i = 0; i < c.size(); ++i) acc += c[i] / Rat(static_cast<long>(i) + 1);
        acc.canonicalize();
        CHECK(acc == 0);
    }
}

TEST_CASE("bernoulli_eval agrees with direct coefficient evaluation") {
    for (int n = 0; n <= 6; ++n) {
        RatSeq c = bernoulli_poly(n);
        const Rat x(7, 3);
        Rat direct = 0;
        Rat xp = 1;
        for (size_t i = 0; i < c.size(); ++i) {
            direct += c[i] * xp;
            xp *= x;
        }
        direct.canonicalize();
        CHECK(bernoulli_eval(n, x) == direct);
    }
}

TEST_CASE("power sums by direct summation and by Faulhaber agree") {
    CHECK(power_sum(1, Int(100)) == 5050);
    CHECK(power_sum(3, Int(4)) == 100);
    CHECK(power_sum(0, Int(7)) == 7);
    CHECK(power_sum(5, Int(0)) == 0);
    for (int m = 0; m <= 12; ++m)
        for (long k : {0L, 1L, 2L, 3L, 7L, 20L, 100L})
            CHECK(power_sum(m, Int(k)) == power_sum_bernoulli(m, Int(k)));
}

TEST_CASE("the Bernoulli index cap raises the resource error") {
    CHECK_THROWS_AS(bernoulli_poly(caps().bernoulli + 1), resource_limit_error);
}

TEST_CASE("bivariate monomials, arithmetic and substitution") {
    const BiPoly m = BiPoly::monomial(2, 1, Int(3)); // 3 s^2 t
    CHECK(!m.is_zero());
    CHECK(m.terms().at({2, 1}) == 3);
    BiPoly z = m - m;
    CHECK(z.is_zero());

    BiPoly sm2 = BiPoly::s_minus_t_pow(2); // s^2 - 2st + t^2
    CHECK(sm2.terms().at({2, 0}) == 1);
    CHECK(sm2.terms().at({1, 1}) == -2);
    CHECK(sm2.terms().at({0, 2}) == 1);
    CHECK(sm2.is_homogeneous(2));
    CHECK(!sm2.is_homogeneous(3));
    CHECK(BiPoly::s_minus_t_pow(0).terms().at({0, 0}) == 1);

    // (s-t)^2 * (s-t) = (s-t)^3
    CHECK(sm2 * BiPoly::s_minus_t_pow(1) == BiPoly::s_minus_t_pow(3));
    CHECK(sm2 + BiPoly() == sm2);

    // At s = 1, (s-t)^n collapses to (1-t)^n.
    CHECK(BiPoly::s_minus_t_pow(4).eval_s1() == one_minus_t_pow(4));

    // add_term cancels entries exactly.
    BiPoly c = BiPoly::monomial(1, 1, Int(5));
    c.add_term(1, 1, Int(-5));
    CHECK(c.is_zero());
    CHECK(c.to_string() == "0");
}
