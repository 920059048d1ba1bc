#include "galinv/matrix.hpp"
#include "galinv/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace galinv;

namespace {

Rational rand_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> n(-9, 9), d(1, 5);
    return Rational(n(rng), d(rng));
}

MatQ rand_mat(std::mt19937_64& rng, int r, int c) {
    MatQ m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rand_q(rng);
    return m;
}

LaurentQ rand_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k(-2, 2), n(0, 3);
    LaurentQ p;
    for (int t = n(rng); t > 0; --t) p += LaurentQ::monomial(k(rng), rand_q(rng));
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("gaussian rationals") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    GaussRational z(Rational(1, 2), Rational(-3));
    CHECK(z.str() == "1/2-3 i");
    CHECK(parse_gaussian(z.str()) == z);
    CHECK(parse_gaussian("-1/3+2/5 i") == GaussRational(Rational(-1, 3), Rational(2, 5)));
    CHECK(parse_gaussian("i") == i);
    CHECK((z / z) == GaussRational(1));
}

TEST_CASE("laurent polynomials: ring laws and exact division") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentQ a = rand_laurent(rng), b = rand_laurent(rng), c = rand_laurent(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == LaurentQ());
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
    LaurentQ e = LaurentQ::eps();
    CHECK_THROWS_AS((LaurentQ(1) + e) / (LaurentQ(2) + e), DomainError);
    CHECK((LaurentQ(1) - e * e) / (LaurentQ(1) + e) == LaurentQ(1) - e);
}

TEST_CASE("mat_mul and commutator") {
    MatQ a(2, 2), b(2, 2);
    a << Rational(1), Rational(2), Rational(3), Rational(4);
    b << Rational(0), Rational(1), Rational(1), Rational(0);
    MatQ expect(2, 2);
    expect << Rational(2), Rational(1), Rational(4), Rational(3);
    CHECK(mat_equal(mat_mul(a, b), expect));
    CHECK_THROWS_AS(mat_mul(a, zeros<Rational>(3, 1)), DomainError);

    // [s1, s2] = i s3 with (s_a)_bc = -i eps_abc
    auto s = [](int a) {
        MatQi m = zeros<GaussRational>(3, 3);
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                int e = (a - b) * (b - c) * (c - a) / 2;
                m(b, c) = GaussRational(Rational(0), Rational(-e));
            }
        return m;
    };
    CHECK(mat_equal(commutator(s(0), s(1)), mat_scale(s(2), GaussRational::i())));
}

TEST_CASE("property: matrix product associativity and commutator antisymmetry") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        MatQ a = rand_mat(rng, 3, 3), b = rand_mat(rng, 3, 3), c = rand_mat(rng, 3, 3);
        CHECK(mat_equal(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
        CHECK(mat_equal(commutator(a, b), mat_scale(commutator(b, a), Rational(-1))));
        // Jacobi identity
        MatQ j = mat_add(mat_add(commutator(a, commutator(b, c)), commutator(b, commutator(c, a))),
                         commutator(c, commutator(a, b)));
        CHECK(is_zero_matrix(j));
    }
}

TEST_CASE("inverse over rationals and laurent polynomials") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        MatQ a = rand_mat(rng, 4, 4);
        MatQ inv = inverse(a);
        CHECK(mat_equal(mat_mul(a, inv), identity<Rational>(4)));
    }
    LaurentQ e = LaurentQ::eps();
    MatLQ v = identity<LaurentQ>(5);
    v(3, 3) = -e * LaurentQ(Rational(1, 2));
    v(3, 4) = e * LaurentQ(Rational(1, 2));
    v(4, 3) = LaurentQ::monomial(-1);
    v(4, 4) = LaurentQ::monomial(-1);
    MatLQ vi = inverse(v);
    CHECK(mat_equal(mat_mul(v, vi), identity<LaurentQ>(5)));
    MatLQ printed = identity<LaurentQ>(5);
    printed(3, 3) = -LaurentQ::monomial(-1);
    printed(3, 4) = e * LaurentQ(Rational(1, 2));
    printed(4, 3) = LaurentQ::monomial(-1);
    printed(4, 4) = e * LaurentQ(Rational(1, 2));
    CHECK(mat_equal(vi, printed));

    MatLQ bad = identity<LaurentQ>(2);
    bad(0, 0) = LaurentQ(1) + e;
    CHECK_THROWS_AS(inverse(bad), DomainError);
    MatQ sing = zeros<Rational>(2, 2);
    CHECK_THROWS_AS(inverse(sing), DomainError);
}

TEST_CASE("laurent_limit") {
    MatLQ m = zeros<LaurentQ>(2, 2);
    m(0, 0) = LaurentQ(3) + LaurentQ::eps();
    m(1, 0) = LaurentQ::monomial(2, Rational(5));
    MatQ l = laurent_limit(m);
    CHECK(l(0, 0) == Rational(3));
    CHECK(l(1, 0) == Rational(0));
    m(0, 1) = LaurentQ::monomial(-2);
    try {
        laurent_limit(m);
        FAIL("expected SingularLimit");
    } catch (const SingularLimit& s) {
        CHECK(s.row() == 0);
        CHECK(s.col() == 1);
        CHECK(s.pole_order() == 2);
    }
}

TEST_CASE("nilpotent_exp") {
    MatQ n = zeros<Rational>(3, 3);
    n(0, 1) = Rational(1);
    n(1, 2) = Rational(1);
    MatQ e = nilpotent_exp(n);
    CHECK(e(0, 2) == Rational(1, 2));
    CHECK(e(0, 1) == Rational(1));
    MatQ id = identity<Rational>(2);
    CHECK_THROWS_AS(nilpotent_exp(id), NotNilpotent);
    // exp(N) exp(-N) = I for strictly upper triangular N
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        MatQ u = zeros<Rational>(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) u(i, j) = rand_q(rng);
        CHECK(mat_equal(mat_mul(nilpotent_exp(u), nilpotent_exp(mat_scale(u, Rational(-1)))),
                        identity<Rational>(4)));
    }
}

TEST_CASE("multivariate polynomials") {
    VarList v = make_vars({"x", "y"});
    PolyQ x = PolyQ::var(v, 0), y = PolyQ::var(v, 1);
    PolyQ p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.derivative(0) == PolyQ(2) * x);
    CHECK((p - p).is_zero());
    CHECK((p - x * x + y * y).nvars() == 0);
    CHECK(substitute(p, 1, x) == PolyQ(0));
    VarList w = make_vars({"a"});
    CHECK_THROWS_AS(x + PolyQ::var(w, 0), DomainError);
    CHECK(p.evaluate(std::vector<Rational>{Rational(3), Rational(1)}) == Rational(8));
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(99);
    MatQi m(2, 3);
    for (int i = 0; i < 6; ++i) m(i) = GaussRational(rand_q(rng), rand_q(rng));
    CHECK(mat_equal(matrix_from_json<GaussRational>(to_json(m)), m));
    MatLQ l(2, 2);
    for (int i = 0; i < 4; ++i) l(i) = rand_laurent(rng);
    CHECK(mat_equal(matrix_from_json<LaurentQ>(Json::parse(to_json(l).dump())), l));
}
