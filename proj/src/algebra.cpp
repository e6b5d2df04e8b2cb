#include "lya/algebra.hpp"

#include <sstream>

namespace lya {

CheckReport CheckReport::fail(std::string rule, std::vector<std::size_t> witness, Matrix residual) {
    CheckReport r;
    r.ok = false;
    r.failure = CheckFailure{std::move(rule), std::move(witness), std::move(residual)};
    return r;
}

std::string CheckReport::describe() const {
    if (ok) return "pass";
    std::ostringstream os;
    os << "violated " << failure->rule << " at (";
    for (std::size_t k = 0; k < failure->witness.size(); ++k)
        os << (k ? "," : "") << failure->witness[k];
    os << "), residual ";
    const Matrix& m = failure->residual;
    if (m.rows() == 1) {
        os << vec_str(m.row(0));
    } else {
        os << "[";
        for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "; " : "") << vec_str(m.row(i));
        os << "]";
    }
    return os.str();
}

CheckError::CheckError(const CheckFailure& f)
    : Error("check failed: " + CheckReport::fail(f.rule, f.witness, f.residual).describe()),
      failure(f) {}

static std::vector<std::string> default_labels(std::size_t d, std::vector<std::string> given) {
    if (!given.empty()) {
        if (given.size() != d) throw DimensionError("label count does not match dimension");
        return given;
    }
    std::vector<std::string> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) out.push_back("e" + std::to_string(i + 1));
    return out;
}

LyAlgebra::LyAlgebra(Field f, std::size_t d, std::vector<Scalar> b, std::vector<Scalar> t,
                     std::vector<std::string> labels)
    : f_(f), d_(d), b_(std::move(b)), t_(std::move(t)), labels_(default_labels(d, std::move(labels))) {
    for (const Scalar& s : b_)
        if (!(s.field() == f_)) throw FieldMismatch("mixed field descriptors in binary constants");
    for (const Scalar& s : t_)
        if (!(s.field() == f_)) throw FieldMismatch("mixed field descriptors in ternary constants");
}

LyAlgebra LyAlgebra::from_independent(Field f, std::size_t d, const std::vector<BinaryEntry>& bin,
                                      const std::vector<TernaryEntry>& ter,
                                      std::vector<std::string> labels) {
    std::vector<Scalar> b(d * d * d, Scalar(f)), t(d * d * d * d, Scalar(f));
    for (const auto& e : bin) {
        if (e.i >= d || e.j >= d || e.k >= d) throw DimensionError("binary constant index out of range");
        if (e.i >= e.j) throw DimensionError("binary constants take independent slots i<j only");
        b[(e.i * d + e.j) * d + e.k] += e.c;
        b[(e.j * d + e.i) * d + e.k] -= e.c;
    }
    for (const auto& e : ter) {
        if (e.i >= d || e.j >= d || e.k >= d || e.l >= d)
            throw DimensionError("ternary constant index out of range");
        if (e.i >= e.j) throw DimensionError("ternary constants take independent slots i<j only");
        t[((e.i * d + e.j) * d + e.k) * d + e.l] += e.c;
        t[((e.j * d + e.i) * d + e.k) * d + e.l] -= e.c;
    }
    return LyAlgebra(f, d, std::move(b), std::move(t), std::move(labels));
}

LyAlgebra LyAlgebra::from_raw(Field f, std::size_t d, std::vector<Scalar> b, std::vector<Scalar> t,
                              std::vector<std::string> labels) {
    if (b.size() != d * d * d) throw DimensionError("binary table must hold d^3 entries");
    if (t.size() != d * d * d * d) throw DimensionError("ternary table must hold d^4 entries");
    return LyAlgebra(f, d, std::move(b), std::move(t), std::move(labels));
}

Vec LyAlgebra::bracket(std::size_t i, std::size_t j) const {
    return Vec(b_.begin() + (i * d_ + j) * d_, b_.begin() + (i * d_ + j + 1) * d_);
}

Vec LyAlgebra::ternary(std::size_t i, std::size_t j, std::size_t k) const {
    std::size_t base = ((i * d_ + j) * d_ + k) * d_;
    return Vec(t_.begin() + base, t_.begin() + base + d_);
}

Vec LyAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != d_ || y.size() != d_) throw DimensionError("bracket argument size");
    Vec out = vec_zero(f_, d_);
    for (std::size_t i = 0; i < d_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < d_; ++k) out[k] += c * b(i, j, k);
        }
    }
    return out;
}

Vec LyAlgebra::ternary(const Vec& x, const Vec& y, const Vec& z) const {
    if (x.size() != d_ || y.size() != d_ || z.size() != d_)
        throw DimensionError("ternary argument size");
    Vec out = vec_zero(f_, d_);
    for (std::size_t i = 0; i < d_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < d_; ++k) {
                if (z[k].is_zero()) continue;
                Scalar c2 = c * z[k];
                for (std::size_t l = 0; l < d_; ++l) out[l] += c2 * t(i, j, k, l);
            }
        }
    }
    return out;
}

void LyAlgebra::require_verified(const char* what) const {
    if (!verified_) throw Unverified(std::string(what) + " requires a verified algebra");
}

bool LyAlgebra::operator==(const LyAlgebra& o) const {
    return f_ == o.f_ && d_ == o.d_ && b_ == o.b_ && t_ == o.t_ && labels_ == o.labels_;
}

static Matrix row_residual(Field f, const Vec& v) {
    return Matrix::from_rows(f, {v}, v.size());
}

CheckReport check_lya(LyAlgebra& a) {
    const std::size_t d = a.dim();
    const Field f = a.field();
    a.verified_ = false;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec r = vec_add(a.bracket(i, j), a.bracket(j, i));
            if (!vec_is_zero(r)) return CheckReport::fail("LY1", {i, j}, row_residual(f, r));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec r = vec_add(a.ternary(i, j, k), a.ternary(j, i, k));
                if (!vec_is_zero(r)) return CheckReport::fail("LY2", {i, j, k}, row_residual(f, r));
            }

    auto e = [&](std::size_t i) {
        Vec v = vec_zero(f, d);
        v[i] = Scalar(f, 1);
        return v;
    };

    // cyclic sum of [[x,y],z] + {x,y,z}
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                std::size_t c[3] = {i, j, k};
                Vec r = vec_zero(f, d);
                for (int rot = 0; rot < 3; ++rot) {
                    std::size_t x = c[rot], y = c[(rot + 1) % 3], z = c[(rot + 2) % 3];
                    r = vec_add(r, a.bracket(a.bracket(x, y), e(z)));
                    r = vec_add(r, a.ternary(x, y, z));
                }
                if (!vec_is_zero(r)) return CheckReport::fail("LY3", {i, j, k}, row_residual(f, r));
            }
    // cyclic sum of {[x,y],z,u}
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    std::size_t c[3] = {i, j, k};
                    Vec r = vec_zero(f, d);
                    for (int rot = 0; rot < 3; ++rot) {
                        std::size_t x = c[rot], y = c[(rot + 1) % 3], z = c[(rot + 2) % 3];
                        r = vec_add(r, a.ternary(a.bracket(x, y), e(z), e(l)));
                    }
                    if (!vec_is_zero(r))
                        return CheckReport::fail("LY4", {i, j, k, l}, row_residual(f, r));
                }
    // {x,y,[u,v]} = [{x,y,u},v] + [u,{x,y,v}]
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Vec lhs = a.ternary(e(i), e(j), a.bracket(k, l));
                    Vec rhs = vec_add(a.bracket(a.ternary(i, j, k), e(l)),
                                      a.bracket(e(k), a.ternary(i, j, l)));
                    Vec r = vec_sub(lhs, rhs);
                    if (!vec_is_zero(r))
                        return CheckReport::fail("LY5", {i, j, k, l}, row_residual(f, r));
                }
    // {x,y,{u,v,w}} = {{x,y,u},v,w} + {u,{x,y,v},w} + {u,v,{x,y,w}}
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    for (std::size_t m = 0; m < d; ++m) {
                        Vec lhs = a.ternary(e(i), e(j), a.ternary(k, l, m));
                        Vec rhs = a.ternary(a.ternary(i, j, k), e(l), e(m));
                        rhs = vec_add(rhs, a.ternary(e(k), a.ternary(i, j, l), e(m)));
                        rhs = vec_add(rhs, a.ternary(e(k), e(l), a.ternary(i, j, m)));
                        Vec r = vec_sub(lhs, rhs);
                        if (!vec_is_zero(r))
                            return CheckReport::fail("LY6", {i, j, k, l, m}, row_residual(f, r));
                    }

    a.verified_ = true;
    return CheckReport::pass();
}

Representation::Representation(LyAlgebra alg, std::size_t dim_v, std::vector<Matrix> rho,
                               std::vector<Matrix> d_ops, std::vector<Matrix> theta_ops)
    : alg_(std::move(alg)), dim_v_(dim_v), rho_(std::move(rho)), d_(std::move(d_ops)),
      th_(std::move(theta_ops)) {
    const std::size_t d = alg_.dim();
    if (rho_.size() != d || d_.size() != d * d || th_.size() != d * d)
        throw DimensionError("operator family sizes must be d, d^2, d^2");
    for (const auto& fam : {std::cref(rho_), std::cref(d_), std::cref(th_)})
        for (const Matrix& m : fam.get()) {
            if (m.rows() != dim_v_ || m.cols() != dim_v_)
                throw DimensionError("operator must be dimV x dimV");
            if (!(m.field() == alg_.field())) throw FieldMismatch("mixed field descriptors");
        }
}

static void add_scaled(Matrix& acc, const Scalar& c, const Matrix& m) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < acc.rows(); ++i)
        for (std::size_t j = 0; j < acc.cols(); ++j) acc.at(i, j) += c * m.at(i, j);
}

Matrix Representation::rho_at(const Vec& x) const {
    Matrix acc(field(), dim_v_, dim_v_);
    for (std::size_t i = 0; i < alg_.dim(); ++i) add_scaled(acc, x[i], rho_[i]);
    return acc;
}

Matrix Representation::D_at(const Vec& x, const Vec& y) const {
    Matrix acc(field(), dim_v_, dim_v_);
    for (std::size_t i = 0; i < alg_.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg_.dim(); ++j) add_scaled(acc, x[i] * y[j], D(i, j));
    }
    return acc;
}

Matrix Representation::theta_at(const Vec& x, const Vec& y) const {
    Matrix acc(field(), dim_v_, dim_v_);
    for (std::size_t i = 0; i < alg_.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg_.dim(); ++j) add_scaled(acc, x[i] * y[j], theta(i, j));
    }
    return acc;
}

void Representation::require_verified(const char* what) const {
    if (!verified_) throw Unverified(std::string(what) + " requires a verified representation");
}

Representation adjoint_rep(const LyAlgebra& a) {
    a.require_verified("adjoint_rep");
    const std::size_t d = a.dim();
    const Field f = a.field();
    std::vector<Matrix> rho(d, Matrix(f, d, d)), dm(d * d, Matrix(f, d, d)),
        th(d * d, Matrix(f, d, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                rho[i].at(k, j) = a.b(i, j, k);                // rho(e_i) e_j = [e_i, e_j]
                for (std::size_t l = 0; l < d; ++l) {
                    dm[i * d + j].at(l, k) = a.t(i, j, k, l);  // D(e_i,e_j) e_k = {e_i,e_j,e_k}
                    th[i * d + j].at(l, k) = a.t(k, i, j, l);  // theta(e_i,e_j) e_k = {e_k,e_i,e_j}
                }
            }
    Representation r(a, d, std::move(rho), std::move(dm), std::move(th));
    r.adjoint_ = true;
    return r;
}

CheckReport check_representation(Representation& r) {
    const LyAlgebra& a = r.algebra();
    const std::size_t d = a.dim();
    const Field f = a.field();
    r.verified_ = false;

    auto e = [&](std::size_t i) {
        Vec v = vec_zero(f, d);
        v[i] = Scalar(f, 1);
        return v;
    };

    // R1: D(x,y) - theta(y,x) + theta(x,y) + rho([x,y]) - rho(x)rho(y) + rho(y)rho(x) = 0
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix res = r.D(i, j) - r.theta(j, i) + r.theta(i, j) + r.rho_at(a.bracket(i, j)) -
                         r.rho(i) * r.rho(j) + r.rho(j) * r.rho(i);
            if (!res.is_zero()) return CheckReport::fail("R1", {i, j}, res);
        }
    // R2: D([x,y],z) + D([y,z],x) + D([z,x],y) = 0
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Matrix res = r.D_at(a.bracket(i, j), e(k)) + r.D_at(a.bracket(j, k), e(i)) +
                             r.D_at(a.bracket(k, i), e(j));
                if (!res.is_zero()) return CheckReport::fail("R2", {i, j, k}, res);
            }
    // R3: theta([x,y],z) = theta(x,z)rho(y) - theta(y,z)rho(x)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Matrix res = r.theta_at(a.bracket(i, j), e(k)) - r.theta(i, k) * r.rho(j) +
                             r.theta(j, k) * r.rho(i);
                if (!res.is_zero()) return CheckReport::fail("R3", {i, j, k}, res);
            }
    // R4: D(x,y)rho(z) = rho(z)D(x,y) + rho({x,y,z})
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Matrix res =
                    r.D(i, j) * r.rho(k) - r.rho(k) * r.D(i, j) - r.rho_at(a.ternary(i, j, k));
                if (!res.is_zero()) return CheckReport::fail("R4", {i, j, k}, res);
            }
    // R5: theta(x,[y,z]) = rho(y)theta(x,z) - rho(z)theta(x,y)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Matrix res = r.theta_at(e(i), a.bracket(j, k)) - r.rho(j) * r.theta(i, k) +
                             r.rho(k) * r.theta(i, j);
                if (!res.is_zero()) return CheckReport::fail("R5", {i, j, k}, res);
            }
    // R6: D(x,y)theta(u,v) = theta(u,v)D(x,y) + theta({x,y,u},v) + theta(u,{x,y,v})
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Matrix res = r.D(i, j) * r.theta(k, l) - r.theta(k, l) * r.D(i, j) -
                                 r.theta_at(a.ternary(i, j, k), e(l)) -
                                 r.theta_at(e(k), a.ternary(i, j, l));
                    if (!res.is_zero()) return CheckReport::fail("R6", {i, j, k, l}, res);
                }
    // R7: theta(x,{y,z,u}) = theta(z,u)theta(x,y) - theta(y,u)theta(x,z) + D(y,z)theta(x,u)
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Matrix res = r.theta_at(e(i), a.ternary(j, k, l)) -
                                 r.theta(k, l) * r.theta(i, j) + r.theta(j, l) * r.theta(i, k) -
                                 r.D(j, k) * r.theta(i, l);
                    if (!res.is_zero()) return CheckReport::fail("R7", {i, j, k, l}, res);
                }

    r.verified_ = true;
    return CheckReport::pass();
}

LeibnizAlgebra::LeibnizAlgebra(Field f, std::size_t d, const std::vector<Entry>& entries,
                               std::vector<std::string> labels)
    : f_(f), d_(d), c_(d * d * d, Scalar(f)), labels_(default_labels(d, std::move(labels))) {
    for (const auto& e : entries) {
        if (e.i >= d || e.j >= d || e.k >= d) throw DimensionError("product constant index out of range");
        if (!(e.c.field() == f_)) throw FieldMismatch("mixed field descriptors");
        c_[(e.i * d + e.j) * d + e.k] += e.c;
    }
}

Vec LeibnizAlgebra::product(std::size_t i, std::size_t j) const {
    return Vec(c_.begin() + (i * d_ + j) * d_, c_.begin() + (i * d_ + j + 1) * d_);
}

CheckReport check_leibniz(const LeibnizAlgebra& lz) {
    const std::size_t d = lz.dim();
    const Field f = lz.field();
    auto prod_vec = [&](const Vec& x, const Vec& y) {
        Vec out = vec_zero(f, d);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                for (std::size_t k = 0; k < d; ++k) out[k] += c * lz.c(i, j, k);
            }
        }
        return out;
    };
    auto e = [&](std::size_t i) {
        Vec v = vec_zero(f, d);
        v[i] = Scalar(f, 1);
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = prod_vec(e(i), lz.product(j, k));
                Vec rhs = vec_add(prod_vec(lz.product(i, j), e(k)), prod_vec(e(j), lz.product(i, k)));
                Vec r = vec_sub(lhs, rhs);
                if (!vec_is_zero(r))
                    return CheckReport::fail("leibniz-identity", {i, j, k}, row_residual(f, r));
            }
    return CheckReport::pass();
}

LyAlgebra leibniz_to_lya(const LeibnizAlgebra& lz) {
    CheckReport pre = check_leibniz(lz);
    if (!pre.ok) throw CheckError(*pre.failure);
    const std::size_t d = lz.dim();
    const Field f = lz.field();
    std::vector<Scalar> b(d * d * d, Scalar(f)), t(d * d * d * d, Scalar(f));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                b[(i * d + j) * d + k] = lz.c(i, j, k) - lz.c(j, i, k);
                // {e_i,e_j,e_k} = -(e_i.e_j).e_k
                for (std::size_t m = 0; m < d; ++m)
                    if (!lz.c(i, j, m).is_zero())
                        for (std::size_t l = 0; l < d; ++l)
                            t[((i * d + j) * d + k) * d + l] -= lz.c(i, j, m) * lz.c(m, k, l);
            }
    LyAlgebra out = LyAlgebra::from_raw(f, d, std::move(b), std::move(t), lz.labels());
    CheckReport post = check_lya(out);
    if (!post.ok) throw CheckError(*post.failure);
    return out;
}

CheckReport check_morphism(const LyAlgebra& src, const LyAlgebra& dst, const Matrix& m) {
    if (m.rows() != dst.dim() || m.cols() != src.dim())
        throw DimensionError("morphism matrix must be dim(dst) x dim(src)");
    if (!(src.field() == dst.field()) || !(m.field() == src.field()))
        throw FieldMismatch("mixed field descriptors");
    const std::size_t d = src.dim();
    const Field f = src.field();
    auto img = [&](std::size_t i) {
        Vec v = vec_zero(f, src.dim());
        v[i] = Scalar(f, 1);
        return m.apply(v);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec r = vec_sub(m.apply(src.bracket(i, j)), dst.bracket(img(i), img(j)));
            if (!vec_is_zero(r))
                return CheckReport::fail("morphism-binary", {i, j}, row_residual(f, r));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec r = vec_sub(m.apply(src.ternary(i, j, k)), dst.ternary(img(i), img(j), img(k)));
                if (!vec_is_zero(r))
                    return CheckReport::fail("morphism-ternary", {i, j, k}, row_residual(f, r));
            }
    return CheckReport::pass();
}

}  // namespace lya
