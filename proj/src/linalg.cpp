#include "lya/linalg.hpp"

namespace lya {

/* Fraction-free forward elimination (Bareiss one-step updates), then a short
   rational back-substitution pass to reach reduced echelon form. Pivot rule:
   scan columns left to right, take the first row at or below the frontier
   with a nonzero entry. Division in the update is exact by construction. */
static Echelon rref_rational(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rat().get_den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = m.at(i, j).rat();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }

    std::vector<std::size_t> pivots;
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        const mpz_class piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                mpz_class t = piv * a[i][j] - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    Matrix out(m.field(), rows, cols);
    std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& piv = a[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j) {
            q[i][j] = mpq_class(a[i][j], piv);
            q[i][j].canonicalize();
        }
    }
    for (std::size_t i = r; i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            const mpq_class f = q[k][pivots[i]];
            if (f == 0) continue;
            for (std::size_t j = pivots[i]; j < cols; ++j)
                q[k][j] -= f * q[i][j];
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.at(i, j) = Scalar::from_rat(m.field(), q[i][j]);
    return Echelon{std::move(out), std::move(pivots)};
}

static Echelon rref_prime(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a.at(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pr, j));
        const Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            const Scalar f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(a), std::move(pivots)};
}

Echelon rref(const Matrix& m) {
    return m.field().is_rational() ? rref_rational(m) : rref_prime(m);
}

Matrix nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_piv(cols, false);
    for (auto c : e.pivots) is_piv[c] = true;
    std::vector<Vec> rows;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_piv[fc]) continue;
        Vec v = vec_zero(m.field(), cols);
        v[fc] = Scalar(m.field(), 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.m.at(i, fc);
        rows.push_back(std::move(v));
    }
    if (rows.empty()) return Matrix(m.field(), 0, cols);
    const Echelon k = rref(Matrix::from_rows(m.field(), rows, cols));
    Matrix out(m.field(), k.rank(), cols);
    for (std::size_t i = 0; i < k.rank(); ++i) out.set_row(i, k.m.row(i));
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& target) {
    if (target.size() != m.rows()) throw DimensionError("solve: target size mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = target[i];
    }
    const Echelon e = rref(aug);
    Vec x = vec_zero(m.field(), m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;  // inconsistent
        x[e.pivots[i]] = e.m.at(i, m.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(m.field(), 1);
    }
    const Echelon e = rref(aug);
    if (e.rank() < n || e.pivots[n - 1] >= n) throw Error("inverse: singular matrix");
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = e.m.at(i, n + j);
    return out;
}

Subspace Subspace::zero(Field f, std::size_t ambient) {
    Subspace s;
    s.f_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, 0, ambient);
    return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    Subspace s;
    s.f_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return zero(f, ambient);
    for (const auto& v : vectors)
        if (v.size() != ambient) throw DimensionError("span: vector size mismatch");
    const Echelon e = rref(Matrix::from_rows(f, vectors, ambient));
    Subspace s;
    s.f_ = f;
    s.ambient_ = ambient;
    s.basis_ = Matrix(f, e.rank(), ambient);
    for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.set_row(i, e.m.row(i));
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionError("reduce: vector size mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // pivot of RREF row i = first nonzero column
        std::size_t c = 0;
        while (c < ambient_ && basis_.at(i, c).is_zero()) ++c;
        if (c == ambient_) continue;
        const Scalar f = r[c];
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.basis_.rows(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionError("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
    for (std::size_t i = 0; i < o.basis_.rows(); ++i) rows.push_back(o.basis_.row(i));
    return span(f_, ambient_, rows);
}

/* u in U ∩ W iff u = x^T U_basis = y^T W_basis; kernel of [U^T | -W^T]. */
Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionError("intersect: ambient mismatch");
    const std::size_t du = dim(), dw = o.dim();
    if (du == 0 || dw == 0) return zero(f_, ambient_);
    Matrix m(f_, ambient_, du + dw);
    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m.at(j, i) = basis_.at(i, j);
    for (std::size_t i = 0; i < dw; ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m.at(j, du + i) = -o.basis_.at(i, j);
    const Matrix k = nullspace(m);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        Vec u = vec_zero(f_, ambient_);
        for (std::size_t x = 0; x < du; ++x) {
            if (k.at(i, x).is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                u[j] += k.at(i, x) * basis_.at(x, j);
        }
        rows.push_back(std::move(u));
    }
    return span(f_, ambient_, rows);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Quotient quotient(const Subspace& big, const Subspace& small) {
    if (big.ambient() != small.ambient())
        throw DimensionError("quotient: ambient mismatch");
    for (std::size_t i = 0; i < small.dim(); ++i) {
        Vec v = small.basis().row(i);
        if (!big.contains(v))
            throw ContainmentError("quotient: small subspace not contained in big; witness " + vec_str(v), v);
    }
    Quotient q;
    Subspace w = small;
    for (std::size_t i = 0; i < big.dim(); ++i) {
        Vec v = big.basis().row(i);
        if (!w.contains(v)) {
            q.reps.push_back(v);
            w = w.sum(Subspace::span(big.field(), big.ambient(), {v}));
        }
    }
    q.dim = big.dim() - small.dim();
    if (q.dim != q.reps.size()) throw Error("quotient: representative count mismatch");
    return q;
}

} // namespace lya
