#pragma once
// Deterministic random data for property tests.
#include <random>

#include "fixtures.hpp"
#include "lya/cochain.hpp"

namespace fx {

inline Scalar rnd_scalar(std::mt19937& g) {
    std::uniform_int_distribution<long> num(-3, 3);
    return Q(num(g));
}

inline Vec rnd_vec(std::mt19937& g, std::size_t n) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rnd_scalar(g));
    return v;
}

inline Matrix rnd_matrix(std::mt19937& g, std::size_t rows, std::size_t cols) {
    Matrix m(Field::rationals(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rnd_scalar(g);
    return m;
}

inline Cochain rnd_cochain(const CochainSpace& sp, std::mt19937& g) {
    return Cochain(sp, rnd_vec(g, sp.dim()));
}

inline CochainPair rnd_pair(const Representation& r, std::size_t level, std::mt19937& g) {
    CochainSpace e(r, 2 * level), o(r, 2 * level + 1);
    return CochainPair(rnd_cochain(e, g), rnd_cochain(o, g));
}

inline Vec basis_vec(Field f, std::size_t d, std::size_t i) {
    Vec v = vec_zero(f, d);
    v[i] = Scalar(f, 1);
    return v;
}

}  // namespace fx
