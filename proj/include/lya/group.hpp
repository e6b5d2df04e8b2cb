#pragma once
#include <cstddef>
#include <vector>

#include "lya/cochain.hpp"

namespace lya {

// Finite group given by its multiplication table on 0..order-1.
class FiniteGroup {
  public:
    // shape-validated only; run check_group before using identity/inverse
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);
    static FiniteGroup cyclic(std::size_t m);

    std::size_t order() const { return table_.size(); }
    std::size_t mult(std::size_t g, std::size_t h) const { return table_[g][h]; }
    std::size_t identity() const;
    std::size_t inverse(std::size_t g) const;

    bool verified() const { return verified_; }
    void require_verified(const char* what) const;

    friend CheckReport check_group(FiniteGroup& g);

  private:
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table)
        : table_(std::move(table)) {}
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    bool verified_ = false;
};

// Rules, in order: closure (g,h), identity (), inverse (g), associativity (g,h,k).
CheckReport check_group(FiniteGroup& g);

// Group elements acting on the algebra by matrices, column j = image of e_j.
class GroupAction {
  public:
    GroupAction(FiniteGroup group, LyAlgebra algebra, std::vector<Matrix> mats);

    const FiniteGroup& group() const { return group_; }
    const LyAlgebra& algebra() const { return alg_; }
    const Matrix& mat(std::size_t g) const { return mats_[g]; }

    bool verified() const { return verified_; }
    void require_verified(const char* what) const;

    friend CheckReport check_action(GroupAction& a);

  private:
    FiniteGroup group_;
    LyAlgebra alg_;
    std::vector<Matrix> mats_;
    bool verified_ = false;
};

// Rules, in order: action-identity (e), action-invertibility (g),
// action-homomorphism (g,h), action-binary (g,i,j), action-ternary (g,i,j,k).
CheckReport check_action(GroupAction& a);

struct FixedSubalgebra {
    Subspace fixed;     // invariant vectors of L, canonical row basis
    LyAlgebra induced;  // products of the basis vectors in their own coordinates
    Matrix inclusion;   // d x m, column k = k-th basis vector; a morphism into L
};

// Intersection of the fixed spaces of a subgroup, with the induced structure.
// The subgroup is given by element indices; a closure failure throws CheckError
// with rule "subgroup-closure" and the offending pair.
FixedSubalgebra fixed_subalgebra(const GroupAction& act, const std::vector<std::size_t>& subgroup);

// A verified action together with a compatible module structure on the
// representation space: matrices intertwining rho, D and theta with the action.
class EquivariantModuleAction {
  public:
    EquivariantModuleAction(GroupAction action, Representation rep, std::vector<Matrix> mats);
    // module matrices = action matrices on the adjoint representation
    static EquivariantModuleAction adjoint(GroupAction action);

    const GroupAction& action() const { return action_; }
    const Representation& rep() const { return rep_; }
    const Matrix& module_mat(std::size_t g) const { return mats_[g]; }

    bool verified() const { return verified_; }
    void require_verified(const char* what) const;

    friend CheckReport check_equivariant_compat(EquivariantModuleAction& ma);

  private:
    GroupAction action_;
    Representation rep_;
    std::vector<Matrix> mats_;
    bool verified_ = false;
};

// Rules, in order: modact-identity (e), modact-homomorphism (g,h),
// modact-rho (g,i), modact-D (g,i,j), modact-theta (g,i,j). The intertwining
// conditions are checked in the inverse-free form
//   rho(psi_g e_i) M_g = M_g rho(e_i)  etc.
CheckReport check_equivariant_compat(EquivariantModuleAction& ma);

// Matrix of f |-> M_g f(psi_g^{-1} -, ..., psi_g^{-1} -) on cochain coordinates.
Matrix transform_matrix(const EquivariantModuleAction& ma, std::size_t g, std::size_t arity);

// Joint kernel of (T_g - id) over g != e: the invariant cochains, in full
// cochain coordinates. Prime fields must not divide the group order.
Subspace equivariant_subspace(const EquivariantModuleAction& ma, std::size_t arity);

// Cohomology of the invariant subcomplex: Z restricted to invariant pairs,
// coboundaries of invariant cochains. dim_even_space/dim_odd_space report the
// invariant cochain spaces; coordinates stay those of the full complex.
CohomologyResult equivariant_cohomology(const EquivariantModuleAction& ma, std::size_t level);

}  // namespace lya
