#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace lya;
using fx::basis_vec;
using fx::rnd_cochain;
using fx::rnd_matrix;
using fx::rnd_pair;

namespace {

MultiTable bracket_table(const LyAlgebra& a) {
    MultiTable tb(a.field(), a.dim(), 2, a.dim());
    std::vector<std::size_t> ij(2, 0);
    if (a.dim() == 0) return tb;
    do {
        tb.add(ij, a.bracket(ij[0], ij[1]));
    } while (next_tuple(ij, a.dim()));
    return tb;
}

MultiTable ternary_table(const LyAlgebra& a) {
    MultiTable tb(a.field(), a.dim(), 3, a.dim());
    std::vector<std::size_t> ijk(3, 0);
    if (a.dim() == 0) return tb;
    do {
        tb.add(ijk, a.ternary(ijk[0], ijk[1], ijk[2]));
    } while (next_tuple(ijk, a.dim()));
    return tb;
}

bool negated(const MultiTable& a, const MultiTable& b) {
    if (a.raw().size() != b.raw().size()) return false;
    for (std::size_t q = 0; q < a.raw().size(); ++q)
        if (!(a.raw()[q] == -b.raw()[q])) return false;
    return true;
}

bool scaled_by_two(const MultiTable& a, const MultiTable& b) {
    if (a.raw().size() != b.raw().size()) return false;
    Scalar two(a.field(), 2);
    for (std::size_t q = 0; q < a.raw().size(); ++q)
        if (!(a.raw()[q] == two * b.raw()[q])) return false;
    return true;
}

}  // namespace

TEST_CASE("delta1 of the zero and identity maps") {
    for (const LyAlgebra& a : {fx::ex33(), fx::l0(), fx::sl2()}) {
        Representation adj = fx::verified_adjoint(a);
        CHECK(delta1(adj, Matrix(a.field(), a.dim(), a.dim())).is_zero());

        // the identity yields the bracket in the even part and twice the
        // ternary product in the odd part
        CochainPair p = delta1(adj, Matrix::identity(a.field(), a.dim()));
        MultiTable te = table_from_cochain(p.even), to = table_from_cochain(p.odd);
        MultiTable bt = bracket_table(a), tt = ternary_table(a);
        CHECK(te.raw() == bt.raw());
        CHECK(scaled_by_two(to, tt));
    }
}

TEST_CASE("a map commuting with both products has vanishing delta1") {
    LyAlgebra a = fx::ex33();
    Representation adj = fx::verified_adjoint(a);
    Matrix phi(a.field(), 2, 2);
    phi.at(0, 0) = Scalar(a.field(), 1);  // e1 -> e1, e2 -> 0
    CHECK(delta1(adj, phi).is_zero());
}

TEST_CASE("delta1 validates its inputs") {
    LyAlgebra a = fx::ex33();
    Representation unchecked = adjoint_rep(a);
    CHECK_THROWS_AS(delta1(unchecked, Matrix::identity(a.field(), 2)), Unverified);
    Representation adj = fx::verified_adjoint(a);
    CHECK_THROWS_AS(delta1(adj, Matrix(a.field(), 3, 3)), DimensionError);
}

TEST_CASE("delta1_matrix columns agree with delta1 on basis maps") {
    LyAlgebra a = fx::l0();
    Representation adj = fx::verified_adjoint(a);
    Matrix m = delta1_matrix(adj);
    const std::size_t d = a.dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t v = 0; v < d; ++v) {
            Matrix phi(a.field(), d, d);
            phi.at(v, r) = Scalar(a.field(), 1);
            Vec s = delta1(adj, phi).stacked();
            for (std::size_t q = 0; q < s.size(); ++q) CHECK(m.at(q, r * d + v) == s[q]);
        }
}

TEST_CASE("delta23 vanishes on the zero pair and on the structure pair") {
    for (const LyAlgebra& a : {fx::ex33(), fx::l0(), fx::abelian(2), fx::abelian(3), fx::sl2()}) {
        Representation adj = fx::verified_adjoint(a);
        CochainSpace c2(adj, 2), c3(adj, 3);
        CochainPair zero(Cochain::zero(c2), Cochain::zero(c3));
        CHECK(delta23(zero).is_zero());

        // (0, ternary product) satisfies all four linearized laws
        CochainPair st(Cochain::zero(c2), cochain_from_table(c3, ternary_table(a)));
        Delta23Residual res = delta23(st);
        CHECK(res.is_zero());
        CHECK(!res.first_nonzero().has_value());
        CHECK(vec_is_zero(res.stacked()));
    }
}

TEST_CASE("on an abelian algebra only the cyclic-sum condition survives") {
    std::mt19937 g(31);
    LyAlgebra a = fx::abelian(3);
    Representation adj = fx::verified_adjoint(a);
    CochainPair p = rnd_pair(adj, 1, g);
    Delta23Residual res = delta23(p);
    CHECK(res.ly4.is_zero());
    CHECK(res.ly5.is_zero());
    CHECK(res.ly6.is_zero());
    MultiTable gt = table_from_cochain(p.odd);
    std::vector<std::size_t> ijk(3, 0);
    do {
        Vec cyc = gt.value({ijk[0], ijk[1], ijk[2]});
        cyc = vec_add(cyc, gt.value({ijk[1], ijk[2], ijk[0]}));
        cyc = vec_add(cyc, gt.value({ijk[2], ijk[0], ijk[1]}));
        CHECK(vec_eq(res.ly3.value(ijk), cyc));
    } while (next_tuple(ijk, 3));
}

TEST_CASE("delta23 annihilates every delta1 image") {
    std::mt19937 g(101);
    struct Run {
        LyAlgebra a;
        int count;
    };
    for (const Run& run : {Run{fx::ex33(), 40}, Run{fx::l0(), 40}, Run{fx::sl2(), 20}}) {
        Representation adj = fx::verified_adjoint(run.a);
        for (int it = 0; it < run.count; ++it) {
            Matrix phi = rnd_matrix(g, run.a.dim(), run.a.dim());
            CHECK(delta23(delta1(adj, phi)).is_zero());
        }
    }
}

TEST_CASE("the two linear level-1 blocks equal the negated general coboundary") {
    std::mt19937 g(59);
    for (const LyAlgebra& a : {fx::ex33(), fx::l0(), fx::sl2()}) {
        Representation adj = fx::verified_adjoint(a);
        for (int it = 0; it < 2; ++it) {
            CochainPair p = rnd_pair(adj, 1, g);
            Delta23Residual res = delta23(p);
            MultiTable f = table_from_cochain(p.even), gt = table_from_cochain(p.odd);
            CHECK(negated(res.ly5, delta_even_table(adj, 1, f, gt)));
            CHECK(negated(res.ly6, delta_odd_table(adj, 1, gt)));
        }
    }
}

TEST_CASE("the general coboundary squares to zero") {
    std::mt19937 g(13);
    for (const LyAlgebra& a : {fx::ex33(), fx::l0()}) {
        Representation adj = fx::verified_adjoint(a);
        for (int it = 0; it < 5; ++it) {
            CochainPair once = delta_general(rnd_pair(adj, 1, g));
            CHECK(once.level() == 2);
            CHECK(delta_general(once).is_zero());
        }
        // one level higher: (4,5) -> (6,7) -> (8,9)
        CochainPair two = delta_general(rnd_pair(adj, 2, g));
        CHECK(two.level() == 3);
        CHECK(delta_general(two).is_zero());
    }
    Representation adj = fx::verified_adjoint(fx::sl2());
    for (int it = 0; it < 2; ++it) CHECK(delta_general(delta_general(rnd_pair(adj, 1, g))).is_zero());
}

TEST_CASE("delta_general validates its inputs") {
    std::mt19937 g(3);
    LyAlgebra a = fx::ex33();
    Representation unchecked = adjoint_rep(a);
    // building spaces is fine, applying the coboundary is not
    CochainSpace c2(unchecked, 2), c3(unchecked, 3);
    CochainPair p(rnd_cochain(c2, g), rnd_cochain(c3, g));
    CHECK_THROWS_AS(delta_general(p), Unverified);
}

TEST_CASE("level-1 cohomology dimensions in adjoint coefficients") {
    struct Expect {
        LyAlgebra a;
        std::size_t z, b, h2, h3;
    };
    const Expect table[] = {
        {fx::ex33(), 3, 2, 0, 1},   {fx::l0(), 4, 2, 1, 1},   {fx::abelian(2), 6, 0, 2, 4},
        {fx::abelian(3), 33, 0, 9, 24}, {fx::sl2(), 15, 6, 3, 6},
    };
    for (const Expect& e : table) {
        Representation adj = fx::verified_adjoint(e.a);
        CohomologyResult r = cohomology(adj, 1);
        CHECK(r.level == 1);
        CHECK(r.dim_even_space == CochainSpace(adj, 2).dim());
        CHECK(r.dim_odd_space == CochainSpace(adj, 3).dim());
        CHECK(r.Z.dim() == e.z);
        CHECK(r.B.dim() == e.b);
        CHECK(r.h_even == e.h2);
        CHECK(r.h_odd == e.h3);
        CHECK(r.reps.size() == e.h2 + e.h3);
        CHECK(r.Z.contains(r.B));
        REQUIRE(r.general_kernel_dim.has_value());
        CHECK(*r.general_kernel_dim >= r.Z.dim());
    }
}

TEST_CASE("the level-1 kernel sits inside the general kernel, strictly for sl2") {
    Representation adj = fx::verified_adjoint(fx::sl2());
    CohomologyResult r = cohomology(adj, 1);
    CHECK(r.Z.dim() == 15);
    REQUIRE(r.general_kernel_dim.has_value());
    CHECK(*r.general_kernel_dim == 18);

    Matrix gen = nullspace(delta_pair_matrix(adj, 1));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < gen.rows(); ++i) rows.push_back(gen.row(i));
    Subspace zgen = Subspace::span(adj.field(), r.Z.ambient(), rows);
    CHECK(zgen.dim() == 18);
    CHECK(zgen.contains(r.Z));
    CHECK(!r.Z.contains(zgen));
}

TEST_CASE("level-2 cohomology dimensions") {
    struct Expect {
        LyAlgebra a;
        std::size_t h4, h5;
    };
    const Expect table[] = {
        {fx::abelian(2), 2, 4},
        {fx::ex33(), 0, 1},
        {fx::l0(), 1, 1},
    };
    for (const Expect& e : table) {
        Representation adj = fx::verified_adjoint(e.a);
        CohomologyResult r = cohomology(adj, 2);
        CHECK(r.level == 2);
        CHECK(r.h_even == e.h4);
        CHECK(r.h_odd == e.h5);
        CHECK(r.reps.size() == e.h4 + e.h5);
        CHECK(r.h_even + r.h_odd == r.Z.dim() - r.B.dim());
        CHECK(!r.general_kernel_dim.has_value());
    }
}

TEST_CASE("higher-level cohomology accepts non-adjoint coefficients") {
    LyAlgebra a = fx::abelian(2);
    const Field f = a.field();
    // one-dimensional module with all structure maps zero
    std::vector<Matrix> rho(2, Matrix(f, 1, 1)), dm(4, Matrix(f, 1, 1)), th(4, Matrix(f, 1, 1));
    Representation r(a, 1, rho, dm, th);
    REQUIRE(check_representation(r).ok);
    CHECK_THROWS_AS(cohomology(r, 1), UnsupportedConfig);

    // every map is zero, so cocycles fill the space and coboundaries vanish
    CohomologyResult c = cohomology(r, 2);
    CHECK(c.dim_even_space == 1);
    CHECK(c.dim_odd_space == 2);
    CHECK(c.h_even == 1);
    CHECK(c.h_odd == 2);
    CHECK(c.B.dim() == 0);
}

TEST_CASE("cohomology validates its inputs") {
    LyAlgebra a = fx::ex33();
    Representation unchecked = adjoint_rep(a);
    CHECK_THROWS_AS(cohomology(unchecked, 1), Unverified);
    Representation adj = fx::verified_adjoint(a);
    CHECK_THROWS_AS(cohomology(adj, 0), UnsupportedConfig);
}

TEST_CASE("same_class separates cohomology classes") {
    std::mt19937 g(2718);
    LyAlgebra a = fx::l0();
    Representation adj = fx::verified_adjoint(a);
    CohomologyResult r = cohomology(adj, 1);
    CochainSpace c2(adj, 2), c3(adj, 3);
    CochainPair zero(Cochain::zero(c2), Cochain::zero(c3));

    // a coboundary is equivalent to zero
    CochainPair cob = delta1(adj, rnd_matrix(g, 2, 2));
    CHECK(same_class(cob, zero, r));
    CHECK(same_class(cob, cob, r));

    // a representative of a nonzero class is not
    REQUIRE(!r.reps.empty());
    CochainPair rep = pair_from_stacked(adj, 1, r.reps.front());
    CHECK(!same_class(rep, zero, r));
    CHECK(same_class(rep, rep, r));

    // shifting a class by a coboundary stays in the class
    CochainPair shifted(rep.even + cob.even, rep.odd + cob.odd);
    CHECK(same_class(rep, shifted, r));

    // non-cocycles are rejected
    Vec bad = vec_zero(a.field(), r.Z.ambient());
    bool found = false;
    for (std::size_t i = 0; i < bad.size() && !found; ++i) {
        bad[i] = Scalar(a.field(), 1);
        if (!r.Z.contains(bad)) found = true;
        else bad[i] = Scalar(a.field(), 0);
    }
    REQUIRE(found);
    CochainPair off = pair_from_stacked(adj, 1, bad);
    CHECK_THROWS_AS(same_class(off, zero, r), CheckError);
}

TEST_CASE("split_dims projects onto the leading block") {
    const Field f = Field::rationals();
    auto v = [&](std::initializer_list<long> xs) {
        Vec out;
        for (long x : xs) out.push_back(Scalar(f, x));
        return out;
    };
    Subspace s = Subspace::span(f, 4, {v({1, 0, 0, 1}), v({0, 0, 1, 0})});
    auto [pe, po] = split_dims(s, 2);
    CHECK(pe == 1);
    CHECK(po == 1);
    auto [ze, zo] = split_dims(Subspace::zero(f, 4), 2);
    CHECK(ze == 0);
    CHECK(zo == 0);
}
