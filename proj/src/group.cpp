#include "lya/group.hpp"

#include <set>

namespace lya {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table) {
    if (table.empty()) throw DimensionError("a group needs at least one element");
    for (const auto& row : table)
        if (row.size() != table.size()) throw DimensionError("multiplication table must be square");
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::cyclic(std::size_t m) {
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    FiniteGroup g = from_table(std::move(t));
    CheckReport r = check_group(g);
    if (!r.ok) throw CheckError(*r.failure);
    return g;
}

std::size_t FiniteGroup::identity() const {
    require_verified("identity");
    return identity_;
}

std::size_t FiniteGroup::inverse(std::size_t g) const {
    require_verified("inverse");
    return inverse_[g];
}

void FiniteGroup::require_verified(const char* what) const {
    if (!verified_) throw Unverified(std::string(what) + " requires a verified group");
}

CheckReport check_group(FiniteGroup& g) {
    g.verified_ = false;
    const std::size_t m = g.order();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (g.table_[a][b] >= m) return CheckReport::fail("closure", {a, b}, Matrix());

    std::size_t e = m;
    for (std::size_t cand = 0; cand < m && e == m; ++cand) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            ok = g.table_[cand][a] == a && g.table_[a][cand] == a;
        if (ok) e = cand;
    }
    if (e == m) return CheckReport::fail("identity", {}, Matrix());

    std::vector<std::size_t> inv(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t x = 0; x < m; ++x)
            if (g.table_[a][x] == e && g.table_[x][a] == e) {
                inv[a] = x;
                break;
            }
        if (inv[a] == m) return CheckReport::fail("inverse", {a}, Matrix());
    }

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    return CheckReport::fail("associativity", {a, b, c}, Matrix());

    g.identity_ = e;
    g.inverse_ = std::move(inv);
    g.verified_ = true;
    return CheckReport::pass();
}

GroupAction::GroupAction(FiniteGroup group, LyAlgebra algebra, std::vector<Matrix> mats)
    : group_(std::move(group)), alg_(std::move(algebra)), mats_(std::move(mats)) {
    if (mats_.size() != group_.order())
        throw DimensionError("one matrix per group element required");
    for (const Matrix& m : mats_) {
        if (m.rows() != alg_.dim() || m.cols() != alg_.dim())
            throw DimensionError("action matrices must be d x d");
        if (!(m.field() == alg_.field())) throw FieldMismatch("mixed field descriptors");
    }
}

void GroupAction::require_verified(const char* what) const {
    if (!verified_) throw Unverified(std::string(what) + " requires a verified action");
}

CheckReport check_action(GroupAction& a) {
    a.verified_ = false;
    a.group_.require_verified("check_action");
    a.alg_.require_verified("check_action");
    const std::size_t m = a.group_.order(), d = a.alg_.dim();
    const Field f = a.alg_.field();
    const std::size_t e = a.group_.identity();
    const Matrix id = Matrix::identity(f, d);

    if (!(a.mats_[e] == id))
        return CheckReport::fail("action-identity", {e}, a.mats_[e] - id);
    for (std::size_t g = 0; g < m; ++g) {
        Matrix prod = a.mats_[g] * a.mats_[a.group_.inverse(g)];
        if (!(prod == id)) return CheckReport::fail("action-invertibility", {g}, prod - id);
    }
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            Matrix res = a.mats_[g] * a.mats_[h] - a.mats_[a.group_.mult(g, h)];
            if (!res.is_zero()) return CheckReport::fail("action-homomorphism", {g, h}, res);
        }

    auto col = [&](std::size_t g, std::size_t i) {
        Vec v = vec_zero(f, d);
        for (std::size_t q = 0; q < d; ++q) v[q] = a.mats_[g].at(q, i);
        return v;
    };
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec res = vec_sub(a.mats_[g].apply(a.alg_.bracket(i, j)),
                                  a.alg_.bracket(col(g, i), col(g, j)));
                if (!vec_is_zero(res))
                    return CheckReport::fail("action-binary", {g, i, j},
                                             Matrix::from_rows(f, {res}, d));
            }
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    Vec res = vec_sub(a.mats_[g].apply(a.alg_.ternary(i, j, k)),
                                      a.alg_.ternary(col(g, i), col(g, j), col(g, k)));
                    if (!vec_is_zero(res))
                        return CheckReport::fail("action-ternary", {g, i, j, k},
                                                 Matrix::from_rows(f, {res}, d));
                }

    a.verified_ = true;
    return CheckReport::pass();
}

FixedSubalgebra fixed_subalgebra(const GroupAction& act, const std::vector<std::size_t>& subgroup) {
    act.require_verified("fixed_subalgebra");
    const LyAlgebra& a = act.algebra();
    const Field f = a.field();
    const std::size_t d = a.dim();

    if (subgroup.empty()) throw DimensionError("subgroup must be nonempty");
    std::set<std::size_t> sub;
    for (std::size_t h : subgroup) {
        if (h >= act.group().order()) throw DimensionError("subgroup element out of range");
        sub.insert(h);
    }
    for (std::size_t h1 : sub)
        for (std::size_t h2 : sub)
            if (!sub.count(act.group().mult(h1, h2)))
                throw CheckError(CheckFailure{"subgroup-closure", {h1, h2}, Matrix()});

    Matrix stacked(f, sub.size() * d, d);
    std::size_t blk = 0;
    for (std::size_t h : sub) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                stacked.at(blk * d + i, j) = act.mat(h).at(i, j);
                if (i == j) stacked.at(blk * d + i, j) -= Scalar(f, 1);
            }
        ++blk;
    }
    Matrix basis = nullspace(stacked);
    const std::size_t m = basis.rows();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(basis.row(i));
    Subspace fixed = Subspace::span(f, d, rows);

    std::vector<std::size_t> piv(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t c = 0;
        while (c < d && basis.at(i, c).is_zero()) ++c;
        piv[i] = c;
    }
    // coordinates of a fixed vector in the basis: read off the pivot columns
    auto express = [&](const Vec& w, const std::vector<std::size_t>& witness) {
        Vec coeff(m, Scalar(f));
        Vec res = w;
        for (std::size_t i = 0; i < m; ++i) {
            coeff[i] = w[piv[i]];
            res = vec_sub(res, vec_scale(coeff[i], rows[i]));
        }
        if (!vec_is_zero(res))
            throw CheckError(CheckFailure{"subalgebra-closure", witness,
                                          Matrix::from_rows(f, {res}, d)});
        return coeff;
    };

    std::vector<Scalar> bt(m * m * m, Scalar(f)), tt(m * m * m * m, Scalar(f));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec c = express(a.bracket(rows[i], rows[j]), {i, j});
            for (std::size_t k = 0; k < m; ++k) bt[(i * m + j) * m + k] = c[k];
            for (std::size_t k = 0; k < m; ++k) {
                Vec t = express(a.ternary(rows[i], rows[j], rows[k]), {i, j, k});
                for (std::size_t l = 0; l < m; ++l) tt[((i * m + j) * m + k) * m + l] = t[l];
            }
        }
    LyAlgebra induced = LyAlgebra::from_raw(f, m, std::move(bt), std::move(tt));
    CheckReport lya_ok = check_lya(induced);
    if (!lya_ok.ok) throw CheckError(*lya_ok.failure);

    Matrix inclusion(f, d, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < d; ++q) inclusion.at(q, k) = rows[k][q];
    CheckReport mor = check_morphism(induced, a, inclusion);
    if (!mor.ok) throw CheckError(*mor.failure);

    return FixedSubalgebra{std::move(fixed), std::move(induced), std::move(inclusion)};
}

EquivariantModuleAction::EquivariantModuleAction(GroupAction action, Representation rep,
                                                 std::vector<Matrix> mats)
    : action_(std::move(action)), rep_(std::move(rep)), mats_(std::move(mats)) {
    if (!(rep_.algebra() == action_.algebra()))
        throw DimensionError("module action and group action live over different algebras");
    if (mats_.size() != action_.group().order())
        throw DimensionError("one module matrix per group element required");
    for (const Matrix& m : mats_) {
        if (m.rows() != rep_.dim_v() || m.cols() != rep_.dim_v())
            throw DimensionError("module matrices must match the module dimension");
        if (!(m.field() == rep_.field())) throw FieldMismatch("mixed field descriptors");
    }
}

EquivariantModuleAction EquivariantModuleAction::adjoint(GroupAction action) {
    Representation r = adjoint_rep(action.algebra());
    CheckReport rep_ok = check_representation(r);
    if (!rep_ok.ok) throw CheckError(*rep_ok.failure);
    std::vector<Matrix> mats;
    for (std::size_t g = 0; g < action.group().order(); ++g) mats.push_back(action.mat(g));
    return EquivariantModuleAction(std::move(action), std::move(r), std::move(mats));
}

void EquivariantModuleAction::require_verified(const char* what) const {
    if (!verified_)
        throw Unverified(std::string(what) + " requires a verified equivariant structure");
}

CheckReport check_equivariant_compat(EquivariantModuleAction& ma) {
    ma.verified_ = false;
    ma.action_.require_verified("check_equivariant_compat");
    ma.rep_.require_verified("check_equivariant_compat");
    const std::size_t m = ma.action_.group().order(), d = ma.action_.algebra().dim();
    const Field f = ma.rep_.field();
    const std::size_t dv = ma.rep_.dim_v();
    const std::size_t e = ma.action_.group().identity();
    const Matrix id = Matrix::identity(f, dv);

    if (!(ma.mats_[e] == id))
        return CheckReport::fail("modact-identity", {e}, ma.mats_[e] - id);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h) {
            Matrix res = ma.mats_[g] * ma.mats_[h] - ma.mats_[ma.action_.group().mult(g, h)];
            if (!res.is_zero()) return CheckReport::fail("modact-homomorphism", {g, h}, res);
        }

    auto col = [&](std::size_t g, std::size_t i) {
        Vec v = vec_zero(f, d);
        for (std::size_t q = 0; q < d; ++q) v[q] = ma.action_.mat(g).at(q, i);
        return v;
    };
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < d; ++i) {
            Matrix res = ma.rep_.rho_at(col(g, i)) * ma.mats_[g] - ma.mats_[g] * ma.rep_.rho(i);
            if (!res.is_zero()) return CheckReport::fail("modact-rho", {g, i}, res);
        }
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Matrix res = ma.rep_.D_at(col(g, i), col(g, j)) * ma.mats_[g] -
                             ma.mats_[g] * ma.rep_.D(i, j);
                if (!res.is_zero()) return CheckReport::fail("modact-D", {g, i, j}, res);
            }
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Matrix res = ma.rep_.theta_at(col(g, i), col(g, j)) * ma.mats_[g] -
                             ma.mats_[g] * ma.rep_.theta(i, j);
                if (!res.is_zero()) return CheckReport::fail("modact-theta", {g, i, j}, res);
            }

    ma.verified_ = true;
    return CheckReport::pass();
}

Matrix transform_matrix(const EquivariantModuleAction& ma, std::size_t g, std::size_t arity) {
    ma.require_verified("transform_matrix");
    const Representation& r = ma.rep();
    const Field f = r.field();
    CochainSpace sp(r, arity);
    const Matrix& mg = ma.module_mat(g);
    const Matrix& p = ma.action().mat(ma.action().group().inverse(g));
    const auto tuples = sp.canonical_tuples();
    const std::size_t dv = sp.dim_v(), n = arity;
    Matrix out(f, sp.dim(), sp.dim());

    // T_g on a monomial basis cochain expands through 2x2 minors of the
    // inverse action matrix at each pair slot
    for (std::size_t tq = 0; tq < tuples.size(); ++tq) {
        const auto& t = tuples[tq];
        for (std::size_t bi = 0; bi < tuples.size(); ++bi) {
            const auto& b = tuples[bi];
            Scalar coef(f, 1);
            for (std::size_t k = 0; k < sp.pair_slots() && !coef.is_zero(); ++k) {
                std::size_t ak = b[2 * k], bk = b[2 * k + 1];
                coef = coef * (p.at(ak, t[2 * k]) * p.at(bk, t[2 * k + 1]) -
                               p.at(bk, t[2 * k]) * p.at(ak, t[2 * k + 1]));
            }
            if (sp.odd_arity()) coef = coef * p.at(b[n - 1], t[n - 1]);
            if (coef.is_zero()) continue;
            for (std::size_t w = 0; w < dv; ++w)
                for (std::size_t v = 0; v < dv; ++v) {
                    if (mg.at(w, v).is_zero()) continue;
                    out.at(tq * dv + w, bi * dv + v) += coef * mg.at(w, v);
                }
        }
    }
    return out;
}

Subspace equivariant_subspace(const EquivariantModuleAction& ma, std::size_t arity) {
    ma.require_verified("equivariant_subspace");
    const Field f = ma.rep().field();
    const FiniteGroup& gr = ma.action().group();
    if (!f.is_rational() && gr.order() % f.p == 0)
        throw UnsupportedConfig("the group order must be invertible in the field");
    CochainSpace sp(ma.rep(), arity);
    const std::size_t dim = sp.dim(), e = gr.identity();

    std::vector<std::size_t> others;
    for (std::size_t g = 0; g < gr.order(); ++g)
        if (g != e) others.push_back(g);
    Matrix stacked(f, others.size() * dim, dim);
    for (std::size_t b = 0; b < others.size(); ++b) {
        Matrix tg = transform_matrix(ma, others[b], arity);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                stacked.at(b * dim + i, j) = tg.at(i, j);
                if (i == j) stacked.at(b * dim + i, j) -= Scalar(f, 1);
            }
    }
    Matrix basis = nullspace(stacked);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
    return Subspace::span(f, dim, rows);
}

CohomologyResult equivariant_cohomology(const EquivariantModuleAction& ma, std::size_t level) {
    ma.require_verified("equivariant_cohomology");
    const Representation& r = ma.rep();
    const Field f = r.field();
    CohomologyResult base = cohomology(r, level);

    Subspace ce = equivariant_subspace(ma, 2 * level), co = equivariant_subspace(ma, 2 * level + 1);
    const std::size_t ne = base.dim_even_space, amb = ne + base.dim_odd_space;
    std::vector<Vec> block;
    for (std::size_t i = 0; i < ce.dim(); ++i) {
        Vec v = vec_zero(f, amb);
        for (std::size_t q = 0; q < ne; ++q) v[q] = ce.basis().at(i, q);
        block.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < co.dim(); ++i) {
        Vec v = vec_zero(f, amb);
        for (std::size_t q = 0; q + ne < amb; ++q) v[ne + q] = co.basis().at(i, q);
        block.push_back(std::move(v));
    }
    Subspace cpair = Subspace::span(f, amb, block);

    std::vector<Vec> images;
    if (level == 1) {
        Subspace c1 = equivariant_subspace(ma, 1);
        const std::size_t d = r.algebra().dim();
        for (std::size_t i = 0; i < c1.dim(); ++i) {
            Matrix phi(f, d, d);
            for (std::size_t rr = 0; rr < d; ++rr)
                for (std::size_t v = 0; v < d; ++v) phi.at(v, rr) = c1.basis().at(i, rr * d + v);
            images.push_back(delta1(r, phi).stacked());
        }
    } else {
        Subspace pe = equivariant_subspace(ma, 2 * level - 2);
        Subspace po = equivariant_subspace(ma, 2 * level - 1);
        CochainSpace spe(r, 2 * level - 2), spo(r, 2 * level - 1);
        for (std::size_t i = 0; i < pe.dim(); ++i) {
            CochainPair p(Cochain(spe, pe.basis().row(i)), Cochain::zero(spo));
            images.push_back(delta_general(p).stacked());
        }
        for (std::size_t i = 0; i < po.dim(); ++i) {
            CochainPair p(Cochain::zero(spe), Cochain(spo, po.basis().row(i)));
            images.push_back(delta_general(p).stacked());
        }
    }
    for (const Vec& img : images)
        if (!cpair.contains(img))
            throw Error("internal: coboundary image left the invariant subcomplex");

    CohomologyResult out;
    out.level = level;
    out.dim_even_space = ce.dim();
    out.dim_odd_space = co.dim();
    out.Z = base.Z.intersect(cpair);
    out.B = Subspace::span(f, amb, images);
    Quotient q = quotient(out.Z, out.B);
    out.reps = q.reps;
    auto zs = split_dims(out.Z, ne);
    auto bs = split_dims(out.B, ne);
    out.h_even = zs.first - bs.first;
    out.h_odd = zs.second - bs.second;
    return out;
}

}  // namespace lya
