#pragma once
#include <vector>
#include <cstddef>
#include "lya/field.hpp"

namespace lya {

using Vec = std::vector<Scalar>;

Vec vec_zero(Field f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);
std::string vec_str(const Vec& a);

/* Dense row-major matrix over one field. Acts on column Vecs from the left. */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(f)) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);

    Field field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);
    Vec apply(const Vec& x) const;           // matrix * column vector
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    Matrix transpose() const;

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

} // namespace lya
