#pragma once
// Shared test fixtures. All verified (check_lya run) before being returned.
#include <stdexcept>

#include "lya/group.hpp"

namespace fx {

using namespace lya;

inline Scalar Q(long n, long d = 1) {
    return Scalar::from_rat(Field::rationals(), mpq_class(n, d));
}

inline LyAlgebra verified(LyAlgebra a) {
    if (!check_lya(a).ok) throw std::logic_error("fixture failed verification");
    return a;
}

// d=2: [e1,e2] = e1, {e1,e2,e2} = e1
inline LyAlgebra ex33() {
    auto f = Field::rationals();
    return verified(LyAlgebra::from_independent(f, 2, {{0, 1, 0, Scalar(f, 1)}},
                                                {{0, 1, 1, 0, Scalar(f, 1)}}));
}

// d=2: zero binary, {e1,e2,e2} = e1
inline LyAlgebra l0() {
    auto f = Field::rationals();
    return verified(LyAlgebra::from_independent(f, 2, {}, {{0, 1, 1, 0, Scalar(f, 1)}}));
}

inline LyAlgebra abelian(std::size_t d) {
    return verified(LyAlgebra::from_independent(Field::rationals(), d, {}, {}));
}

// sl2 with its Lie bracket, zero ternary: [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2
inline LyAlgebra sl2() {
    auto f = Field::rationals();
    return verified(LyAlgebra::from_independent(
        f, 3,
        {{0, 1, 2, Scalar(f, 1)}, {0, 2, 0, Scalar(f, -2)}, {1, 2, 1, Scalar(f, 2)}}, {}));
}

inline Representation verified_adjoint(const LyAlgebra& a) {
    Representation r = adjoint_rep(a);
    if (!check_representation(r).ok) throw std::logic_error("adjoint failed verification");
    return r;
}

// d=2: zero binary, {e1,e2,e1} = e2
inline LyAlgebra tern2() {
    auto f = Field::rationals();
    return verified(LyAlgebra::from_independent(f, 2, {}, {{0, 1, 0, 1, Scalar(f, 1)}}));
}

inline FiniteGroup verified_group(FiniteGroup g) {
    if (!check_group(g).ok) throw std::logic_error("group fixture failed verification");
    return g;
}

inline GroupAction verified_action(GroupAction a) {
    if (!check_action(a).ok) throw std::logic_error("action fixture failed verification");
    return a;
}

inline EquivariantModuleAction verified_modact(EquivariantModuleAction ma) {
    if (!check_equivariant_compat(ma).ok)
        throw std::logic_error("module action fixture failed verification");
    return ma;
}

inline Matrix diag(Field f, const std::vector<long>& entries) {
    Matrix m(f, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = Scalar(f, entries[i]);
    return m;
}

// order-2 sign action; an automorphism whenever the binary bracket vanishes
inline GroupAction sign_action(const LyAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<long> neg(d, -1);
    return verified_action(GroupAction(FiniteGroup::cyclic(2), a,
                                       {Matrix::identity(a.field(), d), diag(a.field(), neg)}));
}

inline GroupAction trivial_action(const LyAlgebra& a) {
    return verified_action(
        GroupAction(FiniteGroup::cyclic(1), a, {Matrix::identity(a.field(), a.dim())}));
}

// permutations of {0,1,2} in lexicographic order; composition maps to a table
inline const std::vector<std::vector<std::size_t>>& s3_perms() {
    static const std::vector<std::vector<std::size_t>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return perms;
}

inline FiniteGroup s3() {
    const auto& perms = s3_perms();
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t p = 0; p < 6; ++p)
        for (std::size_t q = 0; q < 6; ++q) {
            std::vector<std::size_t> comp(3);
            for (std::size_t i = 0; i < 3; ++i) comp[i] = perms[p][perms[q][i]];
            for (std::size_t r = 0; r < 6; ++r)
                if (perms[r] == comp) table[p][q] = r;
        }
    return verified_group(FiniteGroup::from_table(std::move(table)));
}

inline GroupAction s3_on_ab3() {
    LyAlgebra a = abelian(3);
    std::vector<Matrix> mats;
    for (const auto& perm : s3_perms()) {
        Matrix m(a.field(), 3, 3);
        for (std::size_t j = 0; j < 3; ++j) m.at(perm[j], j) = Scalar(a.field(), 1);
        mats.push_back(std::move(m));
    }
    return verified_action(GroupAction(s3(), a, std::move(mats)));
}

}  // namespace fx
