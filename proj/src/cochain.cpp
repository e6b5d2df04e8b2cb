#include "lya/cochain.hpp"

#include <algorithm>

namespace lya {

IncompatibleTable::IncompatibleTable(std::vector<std::size_t> w, std::size_t s, bool diagonal)
    : Error(std::string("representation incompatible with cochain condition: ") +
            (diagonal ? "nonzero value on a diagonal pair slot"
                      : "pair-slot antisymmetry broken")),
      witness(std::move(w)), slot(s) {}

bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix) {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
        if (++idx[pos] < radix) return true;
        idx[pos] = 0;
    }
    return false;
}

static std::size_t int_pow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

MultiTable::MultiTable(Field f, std::size_t d, std::size_t arity, std::size_t dim_v)
    : f_(f), d_(d), n_(arity), dim_v_(dim_v),
      vals_(int_pow(d, arity) * dim_v, Scalar(f)) {}

std::size_t MultiTable::flat(const std::vector<std::size_t>& idx) const {
    std::size_t ix = 0;
    for (std::size_t i : idx) ix = ix * d_ + i;
    return ix;
}

Vec MultiTable::value(const std::vector<std::size_t>& idx) const {
    std::size_t base = flat(idx) * dim_v_;
    return Vec(vals_.begin() + base, vals_.begin() + base + dim_v_);
}

void MultiTable::add(const std::vector<std::size_t>& idx, const Vec& v) {
    std::size_t base = flat(idx) * dim_v_;
    for (std::size_t q = 0; q < dim_v_; ++q) vals_[base + q] += v[q];
}

bool MultiTable::is_zero() const {
    for (const Scalar& s : vals_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<std::vector<std::size_t>> MultiTable::first_nonzero() const {
    if (d_ == 0 || dim_v_ == 0) return std::nullopt;
    std::vector<std::size_t> idx(n_, 0);
    std::size_t t = 0;
    do {
        for (std::size_t v = 0; v < dim_v_; ++v)
            if (!at(t, v).is_zero()) return idx;
        ++t;
    } while (next_tuple(idx, d_));
    return std::nullopt;
}

Vec MultiTable::substituted(std::vector<std::size_t> idx, std::size_t pos, const Vec& coefs) const {
    Vec out = vec_zero(f_, dim_v_);
    for (std::size_t m = 0; m < d_; ++m) {
        if (coefs[m].is_zero()) continue;
        idx[pos] = m;
        std::size_t base = flat(idx) * dim_v_;
        for (std::size_t q = 0; q < dim_v_; ++q) out[q] += coefs[m] * vals_[base + q];
    }
    return out;
}

CochainSpace::CochainSpace(Representation rep, std::size_t arity)
    : rep_(std::move(rep)), n_(arity) {
    if (n_ == 0) throw DimensionError("cochain arity must be at least 1");
    const std::size_t d = rep_.algebra().dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) pairs_.push_back({a, b});
    dim_ = int_pow(pairs_.size(), n_ / 2) * (odd_arity() ? d : 1) * rep_.dim_v();
}

std::size_t CochainSpace::pair_index(std::size_t a, std::size_t b) const {
    const std::size_t d = rep_.algebra().dim();
    return a * (2 * d - a - 1) / 2 + (b - a - 1);
}

std::size_t CochainSpace::coord(const std::vector<std::size_t>& pair_idx, std::size_t free_idx,
                                std::size_t v) const {
    std::size_t ix = 0;
    for (std::size_t p : pair_idx) ix = ix * pairs_.size() + p;
    if (odd_arity()) ix = ix * alg_dim() + free_idx;
    return ix * dim_v() + v;
}

std::vector<std::vector<std::size_t>> CochainSpace::canonical_tuples() const {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t m = pair_slots();
    if (dim_ == 0) return out;
    std::vector<std::size_t> ps(m, 0);
    do {
        std::vector<std::size_t> args;
        args.reserve(n_);
        for (std::size_t p : ps) {
            args.push_back(pairs_[p].first);
            args.push_back(pairs_[p].second);
        }
        if (odd_arity()) {
            args.push_back(0);
            for (std::size_t r = 0; r < alg_dim(); ++r) {
                args.back() = r;
                out.push_back(args);
            }
        } else {
            out.push_back(args);
        }
    } while (next_tuple(ps, pairs_.size()));
    return out;
}

bool CochainSpace::same_signature(const CochainSpace& o) const {
    return n_ == o.n_ && dim_v() == o.dim_v() && rep_.algebra() == o.rep_.algebra();
}

Cochain::Cochain(CochainSpace space, Vec coords) : sp_(std::move(space)), c_(std::move(coords)) {
    if (c_.size() != sp_.dim()) throw DimensionError("coordinate vector does not match space");
    for (const Scalar& s : c_)
        if (!(s.field() == sp_.field())) throw FieldMismatch("mixed field descriptors");
}

Cochain Cochain::zero(CochainSpace space) {
    Vec z = vec_zero(space.field(), space.dim());
    return Cochain(std::move(space), std::move(z));
}

Vec Cochain::evaluate(const std::vector<Vec>& args) const {
    const std::size_t n = sp_.arity(), d = sp_.alg_dim();
    if (args.size() != n) throw DimensionError("argument count does not match arity");
    for (const Vec& a : args)
        if (a.size() != d) throw DimensionError("argument size does not match algebra");
    Vec out = vec_zero(sp_.field(), sp_.dim_v());
    std::vector<std::size_t> idx(n, 0);
    // depth-first over index tuples, pruning zero coefficients
    auto rec = [&](auto&& self, std::size_t pos, const Scalar& coef) -> void {
        if (pos == n) {
            int sign = 1;
            std::vector<std::size_t> ps(sp_.pair_slots());
            for (std::size_t k = 0; k < sp_.pair_slots(); ++k) {
                std::size_t a = idx[2 * k], b = idx[2 * k + 1];
                if (a == b) return;
                if (a > b) {
                    sign = -sign;
                    std::swap(a, b);
                }
                ps[k] = sp_.pair_index(a, b);
            }
            std::size_t base = sp_.coord(ps, sp_.odd_arity() ? idx[n - 1] : 0, 0);
            for (std::size_t v = 0; v < sp_.dim_v(); ++v) {
                if (c_[base + v].is_zero()) continue;
                Scalar term = coef * c_[base + v];
                if (sign < 0) out[v] -= term; else out[v] += term;
            }
            return;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (args[pos][i].is_zero()) continue;
            idx[pos] = i;
            self(self, pos + 1, coef * args[pos][i]);
        }
    };
    rec(rec, 0, Scalar(sp_.field(), 1));
    return out;
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (!sp_.same_signature(o.sp_)) throw DimensionError("cochain spaces differ");
    return Cochain(sp_, vec_add(c_, o.c_));
}

Cochain Cochain::operator-(const Cochain& o) const {
    if (!sp_.same_signature(o.sp_)) throw DimensionError("cochain spaces differ");
    return Cochain(sp_, vec_sub(c_, o.c_));
}

Cochain Cochain::scaled(const Scalar& c) const { return Cochain(sp_, vec_scale(c, c_)); }

MultiTable table_from_cochain(const Cochain& c) {
    const CochainSpace& sp = c.space();
    const std::size_t n = sp.arity(), d = sp.alg_dim(), dv = sp.dim_v();
    MultiTable tb(sp.field(), d, n, dv);
    if (d == 0 || dv == 0) return tb;
    std::vector<std::size_t> idx(n, 0), ps(sp.pair_slots());
    std::size_t t = 0;
    do {
        int sign = 1;
        bool diag = false;
        for (std::size_t k = 0; k < sp.pair_slots(); ++k) {
            std::size_t a = idx[2 * k], b = idx[2 * k + 1];
            if (a == b) {
                diag = true;
                break;
            }
            if (a > b) {
                sign = -sign;
                std::swap(a, b);
            }
            ps[k] = sp.pair_index(a, b);
        }
        if (!diag && sp.dim() != 0) {
            std::size_t base = sp.coord(ps, sp.odd_arity() ? idx[n - 1] : 0, 0);
            for (std::size_t v = 0; v < dv; ++v)
                tb.at(t, v) = sign < 0 ? -c.coords()[base + v] : c.coords()[base + v];
        }
        ++t;
    } while (next_tuple(idx, d));
    return tb;
}

Cochain cochain_from_table(const CochainSpace& space, const MultiTable& table) {
    const std::size_t n = space.arity(), d = space.alg_dim(), dv = space.dim_v();
    if (table.arity() != n || table.alg_dim() != d || table.dim_v() != dv)
        throw DimensionError("table shape does not match space");
    // verify the vanishing condition and antisymmetry in every pair slot
    if (d > 0 && dv > 0) {
        std::vector<std::size_t> idx(n, 0);
        std::size_t t = 0;
        do {
            for (std::size_t k = 0; k < space.pair_slots(); ++k) {
                std::size_t a = idx[2 * k], b = idx[2 * k + 1];
                if (a == b) {
                    for (std::size_t v = 0; v < dv; ++v)
                        if (!table.at(t, v).is_zero()) throw IncompatibleTable(idx, k, true);
                } else if (a > b) {
                    std::vector<std::size_t> sw = idx;
                    std::swap(sw[2 * k], sw[2 * k + 1]);
                    std::size_t ts = table.flat(sw);
                    for (std::size_t v = 0; v < dv; ++v)
                        if (!(table.at(t, v) == -table.at(ts, v)))
                            throw IncompatibleTable(idx, k, false);
                }
            }
            ++t;
        } while (next_tuple(idx, d));
    }
    Vec coords = vec_zero(space.field(), space.dim());
    std::vector<std::size_t> ps(space.pair_slots());
    for (const auto& args : space.canonical_tuples()) {
        for (std::size_t k = 0; k < space.pair_slots(); ++k)
            ps[k] = space.pair_index(args[2 * k], args[2 * k + 1]);
        std::size_t base = space.coord(ps, space.odd_arity() ? args[n - 1] : 0, 0);
        std::size_t t = table.flat(args);
        for (std::size_t v = 0; v < dv; ++v) coords[base + v] = table.at(t, v);
    }
    return Cochain(space, std::move(coords));
}

CochainPair::CochainPair(Cochain e, Cochain o) : even(std::move(e)), odd(std::move(o)) {
    if (even.space().arity() % 2 != 0 || odd.space().arity() != even.space().arity() + 1)
        throw DimensionError("pair arities must be consecutive with the even one first");
    if (!(even.space().algebra() == odd.space().algebra()) ||
        even.space().dim_v() != odd.space().dim_v())
        throw DimensionError("pair components live over different representations");
}

Vec CochainPair::stacked() const {
    Vec out = even.coords();
    out.insert(out.end(), odd.coords().begin(), odd.coords().end());
    return out;
}

CochainPair pair_from_stacked(const Representation& r, std::size_t level, const Vec& coords) {
    CochainSpace ce(r, 2 * level), co(r, 2 * level + 1);
    if (coords.size() != ce.dim() + co.dim())
        throw DimensionError("stacked coordinate size does not match the level");
    Vec e(coords.begin(), coords.begin() + ce.dim());
    Vec o(coords.begin() + ce.dim(), coords.end());
    return CochainPair(Cochain(std::move(ce), std::move(e)), Cochain(std::move(co), std::move(o)));
}

// value of the even coboundary at one output tuple; gargs/rest are scratch
// of sizes 2n+1 and 2n
static Vec delta_even_at(const Representation& r, std::size_t n, const MultiTable& f,
                         const MultiTable& g, const std::vector<std::size_t>& idx,
                         std::vector<std::size_t>& gargs, std::vector<std::size_t>& rest) {
    const LyAlgebra& a = r.algebra();
    const std::size_t N = 2 * n + 2;
    std::copy(idx.begin(), idx.begin() + 2 * n, gargs.begin());
    gargs[2 * n] = idx[N - 1];
    Vec acc = r.rho(idx[N - 2]).apply(g.value(gargs));
    gargs[2 * n] = idx[N - 2];
    acc = vec_sub(acc, r.rho(idx[N - 1]).apply(g.value(gargs)));
    acc = vec_sub(acc, g.substituted(gargs, 2 * n, a.bracket(idx[N - 2], idx[N - 1])));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t q = 0, w = 0; q < N; ++q)
            if (q != 2 * k - 2 && q != 2 * k - 1) rest[w++] = idx[q];
        Vec dw = r.D(idx[2 * k - 2], idx[2 * k - 1]).apply(f.value(rest));
        // D-term sign (-1)^{n+k+1}, substitution sign (-1)^{n+k}
        bool d_neg = (n + k) % 2 == 0;
        acc = d_neg ? vec_sub(acc, dw) : vec_add(acc, dw);
        for (std::size_t jj = 2 * k; jj < N; ++jj) {
            Vec sw = f.substituted(rest, jj - 2, a.ternary(idx[2 * k - 2], idx[2 * k - 1], idx[jj]));
            acc = d_neg ? vec_add(acc, sw) : vec_sub(acc, sw);
        }
    }
    return acc;
}

// value of the odd coboundary at one output tuple; gargs/rest are scratch
// of sizes 2n+1 and 2n+1
static Vec delta_odd_at(const Representation& r, std::size_t n, const MultiTable& g,
                        const std::vector<std::size_t>& idx, std::vector<std::size_t>& gargs,
                        std::vector<std::size_t>& rest) {
    const LyAlgebra& a = r.algebra();
    const std::size_t N = 2 * n + 3;
    std::copy(idx.begin(), idx.begin() + 2 * n + 1, gargs.begin());
    Vec acc = r.theta(idx[N - 2], idx[N - 1]).apply(g.value(gargs));
    // the second argument list omits the entry consumed by theta
    gargs[2 * n] = idx[2 * n + 1];
    acc = vec_sub(acc, r.theta(idx[2 * n], idx[N - 1]).apply(g.value(gargs)));
    for (std::size_t k = 1; k <= n + 1; ++k) {
        for (std::size_t q = 0, w = 0; q < N; ++q)
            if (q != 2 * k - 2 && q != 2 * k - 1) rest[w++] = idx[q];
        Vec dw = r.D(idx[2 * k - 2], idx[2 * k - 1]).apply(g.value(rest));
        bool d_neg = (n + k) % 2 == 0;
        acc = d_neg ? vec_sub(acc, dw) : vec_add(acc, dw);
        for (std::size_t jj = 2 * k; jj < N; ++jj) {
            Vec sw = g.substituted(rest, jj - 2, a.ternary(idx[2 * k - 2], idx[2 * k - 1], idx[jj]));
            acc = d_neg ? vec_add(acc, sw) : vec_sub(acc, sw);
        }
    }
    return acc;
}

MultiTable delta_even_table(const Representation& r, std::size_t level, const MultiTable& f,
                            const MultiTable& g) {
    const std::size_t n = level;
    if (n < 1) throw DimensionError("coboundary level must be at least 1");
    if (f.arity() != 2 * n || g.arity() != 2 * n + 1)
        throw DimensionError("component arities do not match the level");
    const std::size_t d = r.algebra().dim(), N = 2 * n + 2, dv = r.dim_v();
    MultiTable out(r.field(), d, N, dv);
    if (d == 0 || dv == 0) return out;

    std::vector<std::size_t> idx(N, 0), gargs(2 * n + 1), rest(2 * n);
    std::size_t t = 0;
    do {
        Vec acc = delta_even_at(r, n, f, g, idx, gargs, rest);
        for (std::size_t v = 0; v < dv; ++v) out.at(t, v) = acc[v];
        ++t;
    } while (next_tuple(idx, d));
    return out;
}

MultiTable delta_odd_table(const Representation& r, std::size_t level, const MultiTable& g) {
    const std::size_t n = level;
    if (n < 1) throw DimensionError("coboundary level must be at least 1");
    if (g.arity() != 2 * n + 1) throw DimensionError("component arity does not match the level");
    const std::size_t d = r.algebra().dim(), N = 2 * n + 3, dv = r.dim_v();
    MultiTable out(r.field(), d, N, dv);
    if (d == 0 || dv == 0) return out;

    std::vector<std::size_t> idx(N, 0), gargs(2 * n + 1), rest(2 * n + 1);
    std::size_t t = 0;
    do {
        Vec acc = delta_odd_at(r, n, g, idx, gargs, rest);
        for (std::size_t v = 0; v < dv; ++v) out.at(t, v) = acc[v];
        ++t;
    } while (next_tuple(idx, d));
    return out;
}

CochainPair delta_general(const CochainPair& p) {
    const Representation& r = p.even.space().rep();
    r.require_verified("delta_general");
    const std::size_t n = p.level();
    MultiTable fe = table_from_cochain(p.even), fo = table_from_cochain(p.odd);
    MultiTable oe = delta_even_table(r, n, fe, fo);
    MultiTable oo = delta_odd_table(r, n, fo);
    CochainSpace te(r, 2 * n + 2), to(r, 2 * n + 3);
    return CochainPair(cochain_from_table(te, oe), cochain_from_table(to, oo));
}

CochainPair delta_canonical(const CochainPair& p) {
    const Representation& r = p.even.space().rep();
    r.require_verified("delta_canonical");
    const std::size_t n = p.level(), dv = r.dim_v();
    MultiTable fe = table_from_cochain(p.even), fo = table_from_cochain(p.odd);
    CochainSpace te(r, 2 * n + 2), to(r, 2 * n + 3);
    Vec ce = vec_zero(r.field(), te.dim()), co = vec_zero(r.field(), to.dim());
    std::vector<std::size_t> gargs(2 * n + 1), erest(2 * n), orest(2 * n + 1);
    std::size_t q = 0;
    for (const auto& args : te.canonical_tuples()) {
        Vec val = delta_even_at(r, n, fe, fo, args, gargs, erest);
        for (std::size_t v = 0; v < dv; ++v) ce[q * dv + v] = val[v];
        ++q;
    }
    q = 0;
    for (const auto& args : to.canonical_tuples()) {
        Vec val = delta_odd_at(r, n, fo, args, gargs, orest);
        for (std::size_t v = 0; v < dv; ++v) co[q * dv + v] = val[v];
        ++q;
    }
    return CochainPair(Cochain(te, std::move(ce)), Cochain(to, std::move(co)));
}

CochainPair delta1(const Representation& adj, const Matrix& phi) {
    if (!adj.is_adjoint()) throw UnsupportedConfig("delta1 is defined in adjoint coefficients");
    adj.require_verified("delta1");
    const LyAlgebra& a = adj.algebra();
    const std::size_t d = a.dim();
    if (phi.rows() != d || phi.cols() != d) throw DimensionError("phi must be d x d");
    auto e = [&](std::size_t i) {
        Vec v = vec_zero(a.field(), d);
        v[i] = Scalar(a.field(), 1);
        return v;
    };
    auto col = [&](std::size_t i) {
        Vec v = vec_zero(a.field(), d);
        for (std::size_t q = 0; q < d; ++q) v[q] = phi.at(q, i);
        return v;
    };
    MultiTable t2(a.field(), d, 2, d), t3(a.field(), d, 3, d);
    if (d > 0) {
        std::vector<std::size_t> ij(2, 0);
        do {
            Vec v = a.bracket(col(ij[0]), e(ij[1]));
            v = vec_add(v, a.bracket(e(ij[0]), col(ij[1])));
            v = vec_sub(v, phi.apply(a.bracket(ij[0], ij[1])));
            t2.add(ij, v);
        } while (next_tuple(ij, d));
        std::vector<std::size_t> ijk(3, 0);
        do {
            Vec v = a.ternary(col(ijk[0]), e(ijk[1]), e(ijk[2]));
            v = vec_add(v, a.ternary(e(ijk[0]), col(ijk[1]), e(ijk[2])));
            v = vec_add(v, a.ternary(e(ijk[0]), e(ijk[1]), col(ijk[2])));
            v = vec_sub(v, phi.apply(a.ternary(ijk[0], ijk[1], ijk[2])));
            t3.add(ijk, v);
        } while (next_tuple(ijk, d));
    }
    return CochainPair(cochain_from_table(CochainSpace(adj, 2), t2),
                       cochain_from_table(CochainSpace(adj, 3), t3));
}

Matrix delta1_matrix(const Representation& adj) {
    const std::size_t d = adj.algebra().dim();
    CochainSpace c2(adj, 2), c3(adj, 3);
    Matrix m(adj.field(), c2.dim() + c3.dim(), d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t v = 0; v < d; ++v) {
            Matrix phi(adj.field(), d, d);
            phi.at(v, r) = Scalar(adj.field(), 1);
            Vec s = delta1(adj, phi).stacked();
            for (std::size_t q = 0; q < s.size(); ++q) m.at(q, r * d + v) = s[q];
        }
    return m;
}

bool Delta23Residual::is_zero() const {
    return ly3.is_zero() && ly4.is_zero() && ly5.is_zero() && ly6.is_zero();
}

std::optional<std::pair<std::string, std::vector<std::size_t>>> Delta23Residual::first_nonzero()
    const {
    if (auto w = ly3.first_nonzero()) return std::make_pair(std::string("LY3"), *w);
    if (auto w = ly4.first_nonzero()) return std::make_pair(std::string("LY4"), *w);
    if (auto w = ly5.first_nonzero()) return std::make_pair(std::string("LY5"), *w);
    if (auto w = ly6.first_nonzero()) return std::make_pair(std::string("LY6"), *w);
    return std::nullopt;
}

Vec Delta23Residual::stacked() const {
    Vec out;
    for (const MultiTable* tb : {&ly3, &ly4, &ly5, &ly6})
        out.insert(out.end(), tb->raw().begin(), tb->raw().end());
    return out;
}

Delta23Residual delta23(const CochainPair& p) {
    const Representation& r = p.even.space().rep();
    if (!r.is_adjoint())
        throw UnsupportedConfig("the level-1 cocycle conditions are defined in adjoint coefficients");
    if (p.level() != 1) throw DimensionError("delta23 takes a (2,3) pair");
    const LyAlgebra& a = r.algebra();
    const std::size_t d = a.dim();
    const Field fl = a.field();
    MultiTable f = table_from_cochain(p.even), g = table_from_cochain(p.odd);
    Delta23Residual res{MultiTable(fl, d, 3, d), MultiTable(fl, d, 4, d),
                        MultiTable(fl, d, 4, d), MultiTable(fl, d, 5, d)};
    if (d == 0) return res;
    auto e = [&](std::size_t i) {
        Vec v = vec_zero(fl, d);
        v[i] = Scalar(fl, 1);
        return v;
    };

    std::vector<std::size_t> idx3(3, 0);
    do {
        Vec acc = vec_zero(fl, d);
        for (int rot = 0; rot < 3; ++rot) {
            std::size_t x = idx3[rot], y = idx3[(rot + 1) % 3], z = idx3[(rot + 2) % 3];
            acc = vec_add(acc, a.bracket(f.value({x, y}), e(z)));
            acc = vec_add(acc, f.substituted({0, z}, 0, a.bracket(x, y)));
            acc = vec_add(acc, g.value({x, y, z}));
        }
        res.ly3.add(idx3, acc);
    } while (next_tuple(idx3, d));

    std::vector<std::size_t> idx4(4, 0);
    do {
        Vec acc = vec_zero(fl, d);
        std::size_t u = idx4[3];
        for (int rot = 0; rot < 3; ++rot) {
            std::size_t x = idx4[rot], y = idx4[(rot + 1) % 3], z = idx4[(rot + 2) % 3];
            acc = vec_add(acc, a.ternary(f.value({x, y}), e(z), e(u)));
            acc = vec_add(acc, g.substituted({0, z, u}, 0, a.bracket(x, y)));
        }
        res.ly4.add(idx4, acc);
    } while (next_tuple(idx4, d));

    do {
        std::size_t x = idx4[0], y = idx4[1], u = idx4[2], v = idx4[3];
        Vec acc = a.ternary(e(x), e(y), f.value({u, v}));
        acc = vec_add(acc, g.substituted({x, y, 0}, 2, a.bracket(u, v)));
        acc = vec_sub(acc, a.bracket(g.value({x, y, u}), e(v)));
        acc = vec_sub(acc, f.substituted({0, v}, 0, a.ternary(x, y, u)));
        acc = vec_sub(acc, a.bracket(e(u), g.value({x, y, v})));
        acc = vec_sub(acc, f.substituted({u, 0}, 1, a.ternary(x, y, v)));
        res.ly5.add(idx4, acc);
    } while (next_tuple(idx4, d));

    std::vector<std::size_t> idx5(5, 0);
    do {
        std::size_t x = idx5[0], y = idx5[1], u = idx5[2], v = idx5[3], w = idx5[4];
        Vec acc = a.ternary(e(x), e(y), g.value({u, v, w}));
        acc = vec_add(acc, g.substituted({x, y, 0}, 2, a.ternary(u, v, w)));
        acc = vec_sub(acc, a.ternary(g.value({x, y, u}), e(v), e(w)));
        acc = vec_sub(acc, g.substituted({0, v, w}, 0, a.ternary(x, y, u)));
        acc = vec_sub(acc, a.ternary(e(u), g.value({x, y, v}), e(w)));
        acc = vec_sub(acc, g.substituted({u, 0, w}, 1, a.ternary(x, y, v)));
        acc = vec_sub(acc, a.ternary(e(u), e(v), g.value({x, y, w})));
        acc = vec_sub(acc, g.substituted({u, v, 0}, 2, a.ternary(x, y, w)));
        res.ly6.add(idx5, acc);
    } while (next_tuple(idx5, d));

    return res;
}

Matrix delta23_matrix(const Representation& adj) {
    CochainSpace c2(adj, 2), c3(adj, 3);
    const std::size_t n2 = c2.dim(), n3 = c3.dim();
    const std::size_t d = adj.algebra().dim();
    std::size_t rows = (int_pow(d, 3) + 2 * int_pow(d, 4) + int_pow(d, 5)) * d;
    Matrix m(adj.field(), rows, n2 + n3);
    for (std::size_t ci = 0; ci < n2 + n3; ++ci) {
        Vec f = vec_zero(adj.field(), n2), g = vec_zero(adj.field(), n3);
        if (ci < n2) f[ci] = Scalar(adj.field(), 1);
        else g[ci - n2] = Scalar(adj.field(), 1);
        CochainPair p(Cochain(c2, f), Cochain(c3, g));
        Vec col = delta23(p).stacked();
        for (std::size_t q = 0; q < rows; ++q) m.at(q, ci) = col[q];
    }
    return m;
}

Matrix delta_pair_matrix(const Representation& r, std::size_t level) {
    CochainSpace ce(r, 2 * level), co(r, 2 * level + 1);
    CochainSpace te(r, 2 * level + 2), to(r, 2 * level + 3);
    const std::size_t cols = ce.dim() + co.dim(), rows = te.dim() + to.dim();
    Matrix m(r.field(), rows, cols);
    for (std::size_t ci = 0; ci < cols; ++ci) {
        Vec f = vec_zero(r.field(), ce.dim()), g = vec_zero(r.field(), co.dim());
        if (ci < ce.dim()) f[ci] = Scalar(r.field(), 1);
        else g[ci - ce.dim()] = Scalar(r.field(), 1);
        Vec col = delta_canonical(CochainPair(Cochain(ce, f), Cochain(co, g))).stacked();
        for (std::size_t q = 0; q < rows; ++q) m.at(q, ci) = col[q];
    }
    return m;
}

std::pair<std::size_t, std::size_t> split_dims(const Subspace& s, std::size_t n_even) {
    if (s.dim() == 0) return {0, 0};
    Matrix proj(s.field(), s.dim(), n_even);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < n_even; ++j) proj.at(i, j) = s.basis().at(i, j);
    std::size_t pe = rref(proj).rank();
    return {pe, s.dim() - pe};
}

static Subspace rows_to_subspace(Field f, std::size_t ambient, const Matrix& rows) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < rows.rows(); ++i) vs.push_back(rows.row(i));
    return Subspace::span(f, ambient, vs);
}

CohomologyResult cohomology(const Representation& r, std::size_t level) {
    r.require_verified("cohomology");
    if (level == 0) throw UnsupportedConfig("cohomology level must be at least 1");
    if (level == 1 && !r.is_adjoint())
        throw UnsupportedConfig("level-1 cohomology is defined for adjoint coefficients only");
    const Field fl = r.field();
    CochainSpace ce(r, 2 * level), co(r, 2 * level + 1);
    const std::size_t amb = ce.dim() + co.dim();

    CohomologyResult out;
    out.level = level;
    out.dim_even_space = ce.dim();
    out.dim_odd_space = co.dim();

    Matrix zmat = level == 1 ? delta23_matrix(r) : delta_pair_matrix(r, level);
    out.Z = rows_to_subspace(fl, amb, nullspace(zmat));

    std::vector<Vec> images;
    if (level == 1) {
        Matrix d1 = delta1_matrix(r);
        for (std::size_t c = 0; c < d1.cols(); ++c) {
            Vec col(amb, Scalar(fl));
            for (std::size_t q = 0; q < amb; ++q) col[q] = d1.at(q, c);
            images.push_back(std::move(col));
        }
        out.general_kernel_dim = nullspace(delta_pair_matrix(r, 1)).rows();
    } else {
        CochainSpace pe(r, 2 * level - 2), po(r, 2 * level - 1);
        for (std::size_t ci = 0; ci < pe.dim() + po.dim(); ++ci) {
            Vec f = vec_zero(fl, pe.dim()), g = vec_zero(fl, po.dim());
            if (ci < pe.dim()) f[ci] = Scalar(fl, 1);
            else g[ci - pe.dim()] = Scalar(fl, 1);
            images.push_back(delta_canonical(CochainPair(Cochain(pe, f), Cochain(po, g))).stacked());
        }
    }
    out.B = Subspace::span(fl, amb, images);

    Quotient q = quotient(out.Z, out.B);  // throws ContainmentError if B is not inside Z
    out.reps = q.reps;
    auto zs = split_dims(out.Z, ce.dim());
    auto bs = split_dims(out.B, ce.dim());
    out.h_even = zs.first - bs.first;
    out.h_odd = zs.second - bs.second;
    return out;
}

bool same_class(const CochainPair& p1, const CochainPair& p2, const CohomologyResult& result) {
    Vec v1 = p1.stacked(), v2 = p2.stacked();
    for (const Vec* v : {&v1, &v2}) {
        Vec rem = result.Z.reduce(*v);
        if (!vec_is_zero(rem))
            throw CheckError(CheckFailure{"cocycle-membership", {},
                                          Matrix::from_rows(result.Z.field(), {rem}, rem.size())});
    }
    return result.B.contains(vec_sub(v1, v2));
}

}  // namespace lya
