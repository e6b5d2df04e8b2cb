#pragma once
#include <optional>
#include <vector>
#include "lya/matrix.hpp"

namespace lya {

struct Echelon {
    Matrix m;                        // reduced row echelon form, same shape
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/* Canonical RREF: leftmost-column pivot rule, leading ones, zeros above and
   below. Over the rationals the forward phase runs fraction-free
   (Bareiss one-step updates on a common-denominator integer matrix). */
Echelon rref(const Matrix& m);

/* Kernel {x : m x = 0}, basis returned as rows in canonical RREF. */
Matrix nullspace(const Matrix& m);

/* Deterministic particular solution of m x = target (free variables 0). */
std::optional<Vec> solve(const Matrix& m, const Vec& target);

Matrix inverse(const Matrix& m);     // throws Error if singular

struct ContainmentError : Error {
    Vec witness;
    ContainmentError(std::string msg, Vec w) : Error(std::move(msg)), witness(std::move(w)) {}
};

/* Row space with canonical RREF basis (no zero rows). */
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    Field field() const { return f_; }
    const Matrix& basis() const { return basis_; }

    Vec reduce(const Vec& v) const;          // remainder of v modulo the row space
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    bool contains(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    Field f_;
    std::size_t ambient_ = 0;
    Matrix basis_;   // dim x ambient, RREF
};

struct Quotient {
    std::size_t dim = 0;
    std::vector<Vec> reps;   // rows of big completing small, in big's basis order
};

/* Representatives of big/small; throws ContainmentError if small ⊄ big. */
Quotient quotient(const Subspace& big, const Subspace& small);

} // namespace lya
