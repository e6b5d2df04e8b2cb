#include <doctest.h>
#include <random>
#include "lya/linalg.hpp"

using namespace lya;

static Scalar Q(long n, long d = 1) {
    return Scalar::from_rat(Field::rationals(), mpq_class(n, d));
}

static Matrix mat(Field f, std::size_t r, std::size_t c, std::vector<long> v) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, v[i * c + j]);
    return m;
}

TEST_CASE("scalar arithmetic over Q") {
    auto a = Scalar::parse(Field::rationals(), "3/7");
    auto b = Scalar::parse(Field::rationals(), "-2/21");
    CHECK((a + b).str() == "1/3");
    CHECK((a * b).str() == "-2/49");
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    CHECK((a.inverse() * a).is_one());
    CHECK(Scalar::parse(Field::rationals(), "6/4").str() == "3/2");
    CHECK_THROWS_AS(Scalar::parse(Field::rationals(), "1/x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Field::rationals(), ""), ParseError);
    CHECK_THROWS_AS(a / Scalar(Field::rationals()), Error);
}

TEST_CASE("scalar arithmetic over F_p") {
    auto f = Field::prime(101);
    auto a = Scalar(f, 45), b = Scalar(f, -7);
    CHECK(b.str() == "94");
    CHECK((a * b).str() == std::to_string((45 * 94) % 101));
    CHECK((a / a).is_one());
    // Fermat: x * x^(p-2) = 1
    Scalar pw(f, 1);
    for (int i = 0; i < 99; ++i) pw *= a;
    CHECK((a * pw).is_one());
    CHECK(Scalar::parse(f, "1/2") * Scalar(f, 2) == Scalar(f, 1));
    CHECK_THROWS_AS(Field::prime(2), UnsupportedConfig);
    CHECK_THROWS_AS(Field::prime(9), UnsupportedConfig);
    CHECK_THROWS_AS(Scalar(f, 1) + Scalar(Field::rationals(), 1), FieldMismatch);
}

TEST_CASE("rref canonical examples") {
    auto f = Field::rationals();
    auto e = rref(mat(f, 2, 2, {2, 4, 1, 2}));
    CHECK(e.rank() == 1);
    CHECK(e.m.at(0, 0).is_one());
    CHECK(e.m.at(0, 1) == Q(2));
    CHECK(e.m.at(1, 0).is_zero());
    CHECK(e.m.at(1, 1).is_zero());

    auto e2 = rref(mat(f, 3, 3, {0, 1, 2, 1, 2, 3, 2, 3, 4}));
    CHECK(e2.rank() == 2);
    CHECK(e2.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m(Field::rationals(), r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Q(num(rng), den(rng));
        auto e = rref(m);
        auto e2 = rref(e.m);
        CHECK(e.m == e2.m);
        auto k = nullspace(m);
        CHECK(e.rank() + k.rows() == c);
        for (std::size_t i = 0; i < k.rows(); ++i)
            CHECK(vec_is_zero(m.apply(k.row(i))));
    }
    // prime field too
    auto f = Field::prime(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, (long)(rng() % 13));
        auto e = rref(m);
        CHECK(rref(e.m).m == e.m);
        CHECK(e.rank() + nullspace(m).rows() == c);
    }
}

TEST_CASE("nullspace canonical basis") {
    auto f = Field::rationals();
    auto k = nullspace(mat(f, 1, 2, {1, 2}));
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) == Q(1));
    CHECK(k.at(0, 1) == Q(-1, 2));
    CHECK(nullspace(Matrix::identity(f, 3)).rows() == 0);
}

TEST_CASE("solve examples and exactness") {
    auto f = Field::rationals();
    auto x = solve(mat(f, 2, 1, {1, 2}), {Q(1), Q(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Q(1));
    CHECK(!solve(mat(f, 2, 1, {1, 2}), {Q(1), Q(3)}).has_value());

    std::mt19937 rng(21);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Q(num(rng), den(rng));
        Vec x0 = vec_zero(f, c);
        for (auto& s : x0) s = Q(num(rng), den(rng));
        Vec t = m.apply(x0);
        auto got = solve(m, t);
        REQUIRE(got.has_value());
        CHECK(vec_eq(m.apply(*got), t));   // exact residual, no tolerance
    }
}

TEST_CASE("subspace operations") {
    auto f = Field::rationals();
    auto s = Subspace::span(f, 3, {{Q(1), Q(0), Q(1)}, {Q(2), Q(0), Q(2)}, {Q(0), Q(1), Q(0)}});
    CHECK(s.dim() == 2);
    CHECK(s.contains({Q(3), Q(5), Q(3)}));
    CHECK(!s.contains({Q(1), Q(0), Q(0)}));

    auto a = Subspace::span(f, 3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}});
    auto b = Subspace::span(f, 3, {{Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}});
    auto i = a.intersect(b);
    CHECK(i.dim() == 1);
    CHECK(i.contains({Q(0), Q(1), Q(0)}));
    CHECK(a.sum(b).dim() == 3);
}

TEST_CASE("quotient with representatives") {
    auto f = Field::rationals();
    auto big = Subspace::span(f, 3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}});
    auto small = Subspace::span(f, 3, {{Q(1), Q(1), Q(0)}});
    auto q = quotient(big, small);
    CHECK(q.dim == 1);
    REQUIRE(q.reps.size() == 1);
    CHECK(big.contains(q.reps[0]));
    CHECK(!small.contains(q.reps[0]));

    auto outside = Subspace::span(f, 3, {{Q(0), Q(0), Q(1)}});
    CHECK_THROWS_AS(quotient(big, outside), ContainmentError);

    // full mod zero
    auto q2 = quotient(Subspace::full(f, 2), Subspace::zero(f, 2));
    CHECK(q2.dim == 2);
}

TEST_CASE("matrix inverse") {
    auto f = Field::rationals();
    auto m = mat(f, 2, 2, {1, 2, 3, 5});
    auto mi = inverse(m);
    CHECK(m * mi == Matrix::identity(f, 2));
    CHECK_THROWS_AS(inverse(mat(f, 2, 2, {1, 2, 2, 4})), Error);
}
