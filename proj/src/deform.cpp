#include "lya/deform.hpp"

namespace lya {

DeformationJet::DeformationJet(Representation adj, std::vector<CochainPair> terms)
    : rep_(std::move(adj)), terms_(std::move(terms)) {
    if (!rep_.is_adjoint())
        throw UnsupportedConfig("deformation jets are defined in adjoint coefficients");
    rep_.require_verified("DeformationJet");
    if (terms_.empty()) throw DimensionError("jet order must be at least 1");
    CochainSpace c2(rep_, 2);
    for (const CochainPair& p : terms_)
        if (!p.even.space().same_signature(c2))
            throw DimensionError("jet terms must be level-1 pairs over the jet algebra");
}

DeformationJet DeformationJet::null(const Representation& adj, std::size_t order) {
    CochainSpace c2(adj, 2), c3(adj, 3);
    std::vector<CochainPair> ts;
    ts.reserve(order);
    for (std::size_t n = 0; n < order; ++n) ts.emplace_back(Cochain::zero(c2), Cochain::zero(c3));
    return DeformationJet(adj, std::move(ts));
}

const CochainPair& DeformationJet::term(std::size_t n) const {
    if (n < 1 || n > terms_.size()) throw DimensionError("term order outside the jet range");
    return terms_[n - 1];
}

std::size_t DeformationJet::lowest_order() const {
    for (std::size_t n = 0; n < terms_.size(); ++n)
        if (!terms_[n].is_zero()) return n + 1;
    return 0;
}

IsomorphismJet::IsomorphismJet(LyAlgebra algebra, std::vector<Matrix> mats)
    : alg_(std::move(algebra)), mats_(std::move(mats)) {
    alg_.require_verified("IsomorphismJet");
    for (const Matrix& m : mats_) {
        if (m.rows() != alg_.dim() || m.cols() != alg_.dim())
            throw DimensionError("iso coefficients must be d x d");
        if (!(m.field() == alg_.field())) throw FieldMismatch("mixed field descriptors");
    }
}

IsomorphismJet IsomorphismJet::identity(LyAlgebra algebra, std::size_t order) {
    const Field fl = algebra.field();
    const std::size_t d = algebra.dim();
    std::vector<Matrix> mats(order, Matrix(fl, d, d));
    return IsomorphismJet(std::move(algebra), std::move(mats));
}

const Matrix& IsomorphismJet::phi(std::size_t n) const {
    if (n < 1 || n > mats_.size()) throw DimensionError("coefficient order outside the jet range");
    return mats_[n - 1];
}

bool IsomorphismJet::is_identity() const {
    for (const Matrix& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

std::vector<Matrix> IsomorphismJet::inverse_coeffs() const {
    std::vector<Matrix> psi{Matrix::identity(alg_.field(), alg_.dim())};
    for (std::size_t n = 1; n <= mats_.size(); ++n) {
        Matrix m(alg_.field(), alg_.dim(), alg_.dim());
        for (std::size_t k = 1; k <= n; ++k) m = m + psi[n - k] * mats_[k - 1];
        psi.push_back(-m);
    }
    return psi;
}

IsomorphismJet IsomorphismJet::after(const IsomorphismJet& o) const {
    if (!(alg_ == o.alg_)) throw DimensionError("composing isos over different algebras");
    if (mats_.size() != o.mats_.size()) throw DimensionError("composing isos of different orders");
    std::vector<Matrix> comp;
    for (std::size_t n = 1; n <= mats_.size(); ++n) {
        Matrix m = mats_[n - 1] + o.mats_[n - 1];
        for (std::size_t i = 1; i < n; ++i) m = m + mats_[i - 1] * o.mats_[n - i - 1];
        comp.push_back(std::move(m));
    }
    return IsomorphismJet(alg_, std::move(comp));
}

JetReport JetReport::fail(std::size_t order, CheckFailure f) {
    JetReport r;
    r.ok = false;
    r.order = order;
    r.failure = std::move(f);
    return r;
}

std::string JetReport::describe() const {
    if (ok) return "pass";
    return "order " + std::to_string(order) + ": " +
           CheckReport::fail(failure->rule, failure->witness, failure->residual).describe();
}

// first nonzero residual entry as a failure record, block scan order LY3..LY6
static std::optional<CheckFailure> residual_failure(const Delta23Residual& res) {
    auto fn = res.first_nonzero();
    if (!fn) return std::nullopt;
    const MultiTable& tb = fn->first == "LY3"   ? res.ly3
                           : fn->first == "LY4" ? res.ly4
                           : fn->first == "LY5" ? res.ly5
                                                : res.ly6;
    Vec val = tb.value(fn->second);
    return CheckFailure{fn->first, fn->second, Matrix::from_rows(tb.field(), {val}, val.size())};
}

// adds the bilinear part of the four equation families for one ordered pair
// of terms: outer (fi, gi) wrapping inner (fj, gj)
static void conv_into(Delta23Residual& res, const MultiTable& fi, const MultiTable& gi,
                      const MultiTable& fj, const MultiTable& gj) {
    const std::size_t d = fi.alg_dim();
    if (d == 0) return;

    std::vector<std::size_t> idx3(3, 0);
    do {
        Vec acc = vec_zero(fi.field(), d);
        for (int rot = 0; rot < 3; ++rot) {
            std::size_t x = idx3[rot], y = idx3[(rot + 1) % 3], z = idx3[(rot + 2) % 3];
            acc = vec_add(acc, fi.substituted({0, z}, 0, fj.value({x, y})));
        }
        res.ly3.add(idx3, acc);
    } while (next_tuple(idx3, d));

    std::vector<std::size_t> idx4(4, 0);
    do {
        Vec acc = vec_zero(fi.field(), d);
        std::size_t u = idx4[3];
        for (int rot = 0; rot < 3; ++rot) {
            std::size_t x = idx4[rot], y = idx4[(rot + 1) % 3], z = idx4[(rot + 2) % 3];
            acc = vec_add(acc, gi.substituted({0, z, u}, 0, fj.value({x, y})));
        }
        res.ly4.add(idx4, acc);
    } while (next_tuple(idx4, d));

    do {
        std::size_t x = idx4[0], y = idx4[1], u = idx4[2], v = idx4[3];
        Vec acc = gi.substituted({x, y, 0}, 2, fj.value({u, v}));
        acc = vec_sub(acc, fi.substituted({0, v}, 0, gj.value({x, y, u})));
        acc = vec_sub(acc, fi.substituted({u, 0}, 1, gj.value({x, y, v})));
        res.ly5.add(idx4, acc);
    } while (next_tuple(idx4, d));

    std::vector<std::size_t> idx5(5, 0);
    do {
        std::size_t x = idx5[0], y = idx5[1], u = idx5[2], v = idx5[3], w = idx5[4];
        Vec acc = gi.substituted({x, y, 0}, 2, gj.value({u, v, w}));
        acc = vec_sub(acc, gi.substituted({0, v, w}, 0, gj.value({x, y, u})));
        acc = vec_sub(acc, gi.substituted({u, 0, w}, 1, gj.value({x, y, v})));
        acc = vec_sub(acc, gi.substituted({u, v, 0}, 2, gj.value({x, y, w})));
        res.ly6.add(idx5, acc);
    } while (next_tuple(idx5, d));
}

Delta23Residual jet_order_residual(const DeformationJet& j, std::size_t n) {
    if (n < 1 || n > j.order()) throw DimensionError("order outside the jet range");
    Delta23Residual res = delta23(j.term(n));
    for (std::size_t i = 1; i < n; ++i) {
        MultiTable fi = table_from_cochain(j.term(i).even);
        MultiTable gi = table_from_cochain(j.term(i).odd);
        MultiTable fj = table_from_cochain(j.term(n - i).even);
        MultiTable gj = table_from_cochain(j.term(n - i).odd);
        conv_into(res, fi, gi, fj, gj);
    }
    return res;
}

JetReport check_jet(const DeformationJet& j) {
    for (std::size_t n = 1; n <= j.order(); ++n)
        if (auto f = residual_failure(jet_order_residual(j, n))) return JetReport::fail(n, *f);
    return JetReport::pass();
}

CochainPair infinitesimal(const DeformationJet& j) {
    if (auto f = residual_failure(delta23(j.term(1)))) throw CheckError(*f);
    return j.term(1);
}

// multilinear expansion of a value table at coordinate-vector arguments
static Vec table_eval(const MultiTable& t, const std::vector<Vec>& args) {
    Vec out = vec_zero(t.field(), t.dim_v());
    const std::size_t n = t.arity(), d = t.alg_dim();
    std::vector<std::size_t> idx(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, const Scalar& coef) -> void {
        if (pos == n) {
            std::size_t base = t.flat(idx);
            for (std::size_t v = 0; v < t.dim_v(); ++v)
                if (!t.at(base, v).is_zero()) out[v] += coef * t.at(base, v);
            return;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (args[pos][i].is_zero()) continue;
            idx[pos] = i;
            self(self, pos + 1, coef * args[pos][i]);
        }
    };
    rec(rec, 0, Scalar(t.field(), 1));
    return out;
}

DeformationJet gauge_transform(const DeformationJet& j, const IsomorphismJet& iso) {
    if (!(iso.algebra() == j.algebra())) throw DimensionError("gauge iso over a different algebra");
    if (iso.order() != j.order()) throw DimensionError("gauge iso order must match the jet order");
    const Representation& rep = j.rep();
    const LyAlgebra& a = j.algebra();
    const Field fl = a.field();
    const std::size_t d = a.dim(), N = j.order();

    std::vector<Matrix> phi{Matrix::identity(fl, d)};
    for (std::size_t n = 1; n <= N; ++n) phi.push_back(iso.phi(n));
    std::vector<Matrix> psi = iso.inverse_coeffs();

    // value tables of every order, index 0 holding the brackets themselves
    std::vector<MultiTable> F{MultiTable(fl, d, 2, d)}, G{MultiTable(fl, d, 3, d)};
    if (d > 0) {
        std::vector<std::size_t> ij(2, 0);
        do { F[0].add(ij, a.bracket(ij[0], ij[1])); } while (next_tuple(ij, d));
        std::vector<std::size_t> ijk(3, 0);
        do { G[0].add(ijk, a.ternary(ijk[0], ijk[1], ijk[2])); } while (next_tuple(ijk, d));
    }
    for (std::size_t n = 1; n <= N; ++n) {
        F.push_back(table_from_cochain(j.term(n).even));
        G.push_back(table_from_cochain(j.term(n).odd));
    }

    auto col = [&](const Matrix& m, std::size_t i) {
        Vec v = vec_zero(fl, d);
        for (std::size_t q = 0; q < d; ++q) v[q] = m.at(q, i);
        return v;
    };

    CochainSpace c2(rep, 2), c3(rep, 3);
    std::vector<CochainPair> out;
    for (std::size_t n = 1; n <= N; ++n) {
        MultiTable tf(fl, d, 2, d), tg(fl, d, 3, d);
        if (d > 0) {
            std::vector<std::size_t> xy(2, 0);
            do {
                Vec acc = vec_zero(fl, d);
                for (std::size_t s = 0; s <= n; ++s)
                    for (std::size_t b = 0; s + b <= n; ++b)
                        for (std::size_t c = 0; s + b + c <= n; ++c) {
                            std::size_t e = n - s - b - c;
                            Vec inner = table_eval(F[b], {col(phi[c], xy[0]), col(phi[e], xy[1])});
                            acc = vec_add(acc, psi[s].apply(inner));
                        }
                tf.add(xy, acc);
            } while (next_tuple(xy, d));
            std::vector<std::size_t> xyz(3, 0);
            do {
                Vec acc = vec_zero(fl, d);
                for (std::size_t s = 0; s <= n; ++s)
                    for (std::size_t b = 0; s + b <= n; ++b)
                        for (std::size_t c = 0; s + b + c <= n; ++c)
                            for (std::size_t e = 0; s + b + c + e <= n; ++e) {
                                std::size_t h = n - s - b - c - e;
                                Vec inner =
                                    table_eval(G[b], {col(phi[c], xyz[0]), col(phi[e], xyz[1]),
                                                      col(phi[h], xyz[2])});
                                acc = vec_add(acc, psi[s].apply(inner));
                            }
                tg.add(xyz, acc);
            } while (next_tuple(xyz, d));
        }
        out.emplace_back(cochain_from_table(c2, tf), cochain_from_table(c3, tg));
    }
    return DeformationJet(rep, std::move(out));
}

std::optional<Matrix> equivalent_first_order(const DeformationJet& j1, const DeformationJet& j2) {
    if (!(j1.algebra() == j2.algebra())) throw DimensionError("jets live over different algebras");
    CochainPair i1 = infinitesimal(j1), i2 = infinitesimal(j2);
    Vec target = vec_sub(i2.stacked(), i1.stacked());
    auto x = solve(delta1_matrix(j1.rep()), target);
    if (!x) return std::nullopt;
    const std::size_t d = j1.algebra().dim();
    Matrix phi(j1.algebra().field(), d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t v = 0; v < d; ++v) phi.at(v, r) = (*x)[r * d + v];
    return phi;
}

// inv, when present, restricts the gauge maps to a subspace of the phi
// coordinates (rows of its basis, coordinate r*d+v for the (v,r) entry)
static TrivializeOutcome trivialize_impl(const DeformationJet& j, const Subspace* inv) {
    const Representation& rep = j.rep();
    const LyAlgebra& alg = j.algebra();
    const Field fl = alg.field();
    const std::size_t d = alg.dim(), N = j.order();

    Matrix a = delta1_matrix(rep);
    if (inv) {
        Matrix r(fl, a.rows(), inv->dim());
        for (std::size_t q = 0; q < a.rows(); ++q)
            for (std::size_t i = 0; i < inv->dim(); ++i) {
                Scalar s(fl);
                for (std::size_t k = 0; k < a.cols(); ++k)
                    s += a.at(q, k) * inv->basis().at(i, k);
                r.at(q, i) = s;
            }
        a = std::move(r);
    }
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        Vec v(a.rows(), Scalar(fl));
        for (std::size_t q = 0; q < a.rows(); ++q) v[q] = a.at(q, c);
        cols.push_back(std::move(v));
    }
    Subspace reachable = Subspace::span(fl, a.rows(), cols);

    DeformationJet cur = j;
    IsomorphismJet total = IsomorphismJet::identity(alg, N);
    for (std::size_t r = cur.lowest_order(); r != 0; r = cur.lowest_order()) {
        // the lowest nonzero term of a jet passing its equations is a cocycle
        if (auto f = residual_failure(delta23(cur.term(r)))) throw CheckError(*f);
        Vec target = cur.term(r).stacked();
        auto y = solve(a, target);
        if (!y) {
            TrivializeOutcome out;
            out.order = r;
            out.obstruction = pair_from_stacked(rep, 1, reachable.reduce(target));
            return out;
        }
        Vec hc;
        if (inv) {
            hc = vec_zero(fl, d * d);
            for (std::size_t i = 0; i < inv->dim(); ++i)
                for (std::size_t k = 0; k < d * d; ++k)
                    hc[k] += (*y)[i] * inv->basis().at(i, k);
            if (!inv->contains(hc))
                throw Error("internal: gauge step left the invariant subspace");
        } else {
            hc = *y;
        }
        Matrix h(fl, d, d);
        for (std::size_t rr = 0; rr < d; ++rr)
            for (std::size_t v = 0; v < d; ++v) h.at(v, rr) = hc[rr * d + v];
        std::vector<Matrix> mats(N, Matrix(fl, d, d));
        mats[r - 1] = -h;
        IsomorphismJet step(alg, std::move(mats));
        cur = gauge_transform(cur, step);
        if (!cur.term(r).is_zero())
            throw Error("internal: gauge step failed to clear the lowest term");
        total = total.after(step);
    }
    TrivializeOutcome out;
    out.trivialized = true;
    out.iso = std::move(total);
    return out;
}

// adjoint module structure of a verified action, compatibility asserted
static EquivariantModuleAction adjoint_modact(const GroupAction& act) {
    EquivariantModuleAction ma = EquivariantModuleAction::adjoint(act);
    CheckReport ok = check_equivariant_compat(ma);
    if (!ok.ok) throw CheckError(*ok.failure);
    return ma;
}

TrivializeOutcome trivialize(const DeformationJet& j) {
    JetReport r = check_jet(j);
    if (!r.ok) throw CheckError(*r.failure);
    return trivialize_impl(j, nullptr);
}

TrivializeOutcome trivialize(const DeformationJet& j, const GroupAction& act) {
    JetReport r = check_equivariant_jet(j, act);
    if (!r.ok) throw CheckError(*r.failure);
    EquivariantModuleAction ma = adjoint_modact(act);
    Subspace inv = equivariant_subspace(ma, 1);
    return trivialize_impl(j, &inv);
}

JetReport check_equivariant_jet(const DeformationJet& j, const GroupAction& act) {
    act.require_verified("check_equivariant_jet");
    if (!(act.algebra() == j.algebra()))
        throw DimensionError("action algebra does not match the jet");
    JetReport base = check_jet(j);
    if (!base.ok) return base;
    EquivariantModuleAction ma = adjoint_modact(act);
    Subspace c2 = equivariant_subspace(ma, 2), c3 = equivariant_subspace(ma, 3);
    for (std::size_t n = 1; n <= j.order(); ++n) {
        Vec re = c2.reduce(j.term(n).even.coords());
        if (!vec_is_zero(re))
            return JetReport::fail(n, CheckFailure{"equivariance-even", {},
                                                   Matrix::from_rows(c2.field(), {re}, re.size())});
        Vec ro = c3.reduce(j.term(n).odd.coords());
        if (!vec_is_zero(ro))
            return JetReport::fail(n, CheckFailure{"equivariance-odd", {},
                                                   Matrix::from_rows(c3.field(), {ro}, ro.size())});
    }
    return JetReport::pass();
}

RigidityReport rigidity_probe(const LyAlgebra& a) {
    a.require_verified("rigidity_probe");
    Representation adj = adjoint_rep(a);
    CheckReport ok = check_representation(adj);
    if (!ok.ok) throw CheckError(*ok.failure);
    CohomologyResult h = cohomology(adj, 1);
    return {h.h_even == 0 && h.h_odd == 0, h.h_even, h.h_odd};
}

RigidityReport rigidity_probe(const GroupAction& act) {
    act.require_verified("rigidity_probe");
    EquivariantModuleAction ma = adjoint_modact(act);
    CohomologyResult h = equivariant_cohomology(ma, 1);
    return {h.h_even == 0 && h.h_odd == 0, h.h_even, h.h_odd};
}

std::string RigidityReport::describe() const {
    std::string dims = "level-1 cohomology dims (" + std::to_string(h_even) + ", " +
                       std::to_string(h_odd) + ")";
    if (rigid) return "rigid: " + dims + "; every jet trivializes order by order";
    return "not provably rigid by this criterion: " + dims;
}

}  // namespace lya
