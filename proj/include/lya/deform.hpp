#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lya/group.hpp"

namespace lya {

// Truncated one-parameter deformation of the brackets in adjoint
// coefficients: one level-1 cochain pair (f_n, g_n) per order n = 1..N,
// the order-0 pair being the algebra's own brackets.
class DeformationJet {
  public:
    // terms[n-1] holds the order-n pair; all pairs over the same adjoint rep
    DeformationJet(Representation adj, std::vector<CochainPair> terms);
    static DeformationJet null(const Representation& adj, std::size_t order);

    const Representation& rep() const { return rep_; }
    const LyAlgebra& algebra() const { return rep_.algebra(); }
    std::size_t order() const { return terms_.size(); }
    const CochainPair& term(std::size_t n) const;  // 1-based
    const std::vector<CochainPair>& terms() const { return terms_; }
    // lowest n with a nonzero term, or 0 when the jet is null
    std::size_t lowest_order() const;
    bool is_null() const { return lowest_order() == 0; }

  private:
    Representation rep_;
    std::vector<CochainPair> terms_;
};

// Truncated formal automorphism phi_t = id + sum phi_n t^n acting on jets.
class IsomorphismJet {
  public:
    // mats[n-1] holds phi_n; the order-0 coefficient is always the identity
    IsomorphismJet(LyAlgebra algebra, std::vector<Matrix> mats);
    static IsomorphismJet identity(LyAlgebra algebra, std::size_t order);

    const LyAlgebra& algebra() const { return alg_; }
    std::size_t order() const { return mats_.size(); }
    const Matrix& phi(std::size_t n) const;  // 1-based
    bool is_identity() const;

    // coefficients psi_0..psi_N of the order-by-order series inverse:
    // psi_0 = id, psi_n = -sum_{k=1..n} psi_{n-k} phi_k
    std::vector<Matrix> inverse_coeffs() const;
    // composite x |-> this(o(x)); gauging by *this and then by o equals
    // gauging by this->after(o)
    IsomorphismJet after(const IsomorphismJet& o) const;

  private:
    LyAlgebra alg_;
    std::vector<Matrix> mats_;
};

// Pass/fail of the order-by-order deformation equations.
struct JetReport {
    bool ok = true;
    std::size_t order = 0;                // first failing order when !ok
    std::optional<CheckFailure> failure;  // rule LY3..LY6 or equivariance-even/-odd

    static JetReport pass() { return {}; }
    static JetReport fail(std::size_t order, CheckFailure f);
    std::string describe() const;
};

// Residual tables of the order-n equations: the level-1 cocycle blocks of
// term n plus the convolution of strictly lower-order terms. At order 1 this
// is exactly delta23 of the first term.
Delta23Residual jet_order_residual(const DeformationJet& j, std::size_t n);

// All four equation families at every order 1..N on all basis tuples.
JetReport check_jet(const DeformationJet& j);

// The order-1 pair; throws CheckError when it is not a level-1 cocycle
// (such a jet already fails check_jet at order 1).
CochainPair infinitesimal(const DeformationJet& j);

// The jet t^n-coefficients of psi_t f_t(phi_t -, phi_t -) and
// psi_t g_t(phi_t -, phi_t -, phi_t -), psi_t the series inverse of phi_t,
// truncated at the common order.
DeformationJet gauge_transform(const DeformationJet& j, const IsomorphismJet& iso);

// Canonical phi with delta1(phi) = infinitesimal(j2) - infinitesimal(j1), or
// nullopt when the infinitesimals lie in different cohomology classes.
std::optional<Matrix> equivalent_first_order(const DeformationJet& j1, const DeformationJet& j2);

struct TrivializeOutcome {
    bool trivialized = false;
    std::optional<IsomorphismJet> iso;       // composed gauge when trivialized
    std::size_t order = 0;                   // blocking order otherwise
    std::optional<CochainPair> obstruction;  // canonical class representative
};

// Repeatedly gauges away the lowest nonzero term r by id - h t^r with
// delta1(h) = term r, until the jet is null through its order or the solve
// fails; then the failed term reduced modulo coboundaries is the obstruction.
TrivializeOutcome trivialize(const DeformationJet& j);
// Same loop with h constrained to the invariant arity-1 cochains of the
// action and the obstruction reduced against their coboundaries only.
TrivializeOutcome trivialize(const DeformationJet& j, const GroupAction& act);

// check_jet plus invariant-subspace membership of every term.
JetReport check_equivariant_jet(const DeformationJet& j, const GroupAction& act);

// Sufficient criterion: when the level-1 cohomology (of the invariant
// subcomplex, in the action form) vanishes, every jet trivializes order by
// order. rigid = false claims nothing beyond the reported dimensions.
struct RigidityReport {
    bool rigid = false;
    std::size_t h_even = 0, h_odd = 0;
    std::string describe() const;
};
RigidityReport rigidity_probe(const LyAlgebra& a);
RigidityReport rigidity_probe(const GroupAction& act);

}  // namespace lya
