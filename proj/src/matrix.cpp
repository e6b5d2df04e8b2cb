#include "lya/matrix.hpp"
#include <sstream>

namespace lya {

Vec vec_zero(Field f, std::size_t n) { return Vec(n, Scalar(f)); }

static void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = -x;
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const Vec& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? ", " : "") << a[i].str();
    os << ")";
    return os.str();
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw DimensionError("row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionError("matrix apply: size mismatch");
    Vec r = vec_zero(f_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(f_);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& m = at(i, j);
            if (!m.is_zero() && !x[j].is_zero()) acc += m * x[j];
        }
        r[i] = acc;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product: shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& m = at(i, k);
            if (m.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& n = o.at(k, j);
                if (!n.is_zero()) r.at(i, j) += m * n;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix diff: shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

} // namespace lya
