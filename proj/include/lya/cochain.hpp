#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lya/algebra.hpp"

namespace lya {

// Thrown when a multilinear value table cannot be expressed in a cochain
// basis because it violates the consecutive-pair vanishing condition.
struct IncompatibleTable : Error {
    std::vector<std::size_t> witness;  // offending argument tuple
    std::size_t slot;                  // pair slot (0-based) that failed
    IncompatibleTable(std::vector<std::size_t> w, std::size_t s, bool diagonal);
};

// Dense table of an arity-n multilinear map L^n -> V at basis arguments,
// flat index = mixed-radix argument tuple, then target coordinate.
class MultiTable {
  public:
    MultiTable(Field f, std::size_t d, std::size_t arity, std::size_t dim_v);

    Field field() const { return f_; }
    std::size_t alg_dim() const { return d_; }
    std::size_t arity() const { return n_; }
    std::size_t dim_v() const { return dim_v_; }
    std::size_t tuple_count() const { return dim_v_ == 0 ? 0 : vals_.size() / dim_v_; }

    std::size_t flat(const std::vector<std::size_t>& idx) const;
    Vec value(const std::vector<std::size_t>& idx) const;
    Scalar& at(std::size_t flat_tuple, std::size_t v) { return vals_[flat_tuple * dim_v_ + v]; }
    const Scalar& at(std::size_t flat_tuple, std::size_t v) const {
        return vals_[flat_tuple * dim_v_ + v];
    }
    void add(const std::vector<std::size_t>& idx, const Vec& v);
    bool is_zero() const;
    // lexicographically first tuple with a nonzero value
    std::optional<std::vector<std::size_t>> first_nonzero() const;
    // value at idx with position pos replaced by the coordinate vector coefs
    Vec substituted(std::vector<std::size_t> idx, std::size_t pos, const Vec& coefs) const;
    const std::vector<Scalar>& raw() const { return vals_; }

  private:
    Field f_;
    std::size_t d_, n_, dim_v_;
    std::vector<Scalar> vals_;
};

// advance a mixed-radix tuple; returns false after the last one
bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix);

// Monomial basis of the n-cochains L^n -> V: maps vanishing whenever the two
// arguments of a consecutive pair slot (positions 2i-1, 2i) coincide. One
// basis element per choice of an unordered index pair for each pair slot, a
// free basis index when n is odd, and a target coordinate; ordered
// lexicographically in (pairs..., free, target).
class CochainSpace {
  public:
    CochainSpace(Representation rep, std::size_t arity);

    std::size_t arity() const { return n_; }
    std::size_t dim() const { return dim_; }
    bool odd_arity() const { return n_ % 2 == 1; }
    std::size_t pair_slots() const { return n_ / 2; }
    std::size_t pair_count() const { return pairs_.size(); }
    std::pair<std::size_t, std::size_t> pair(std::size_t p) const { return pairs_[p]; }
    std::size_t pair_index(std::size_t a, std::size_t b) const;  // requires a < b

    const Representation& rep() const { return rep_; }
    const LyAlgebra& algebra() const { return rep_.algebra(); }
    Field field() const { return rep_.field(); }
    std::size_t alg_dim() const { return rep_.algebra().dim(); }
    std::size_t dim_v() const { return rep_.dim_v(); }

    // flat coordinate of (pair choices, free index, target);
    // free_idx is ignored for even arity
    std::size_t coord(const std::vector<std::size_t>& pair_idx, std::size_t free_idx,
                      std::size_t v) const;
    // one argument tuple per (pairs, free) block, in flat order
    std::vector<std::vector<std::size_t>> canonical_tuples() const;

    bool same_signature(const CochainSpace& o) const;

  private:
    Representation rep_;
    std::size_t n_, dim_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

class Cochain {
  public:
    Cochain(CochainSpace space, Vec coords);
    static Cochain zero(CochainSpace space);

    const CochainSpace& space() const { return sp_; }
    const Vec& coords() const { return c_; }
    bool is_zero() const { return vec_is_zero(c_); }

    // full multilinear expansion at coordinate-vector arguments, with the
    // pair-slot sign rule: a slot fed (a,b) with a>b picks up -1 against the
    // stored {min,max} monomial, and evaluates to 0 when a=b
    Vec evaluate(const std::vector<Vec>& args) const;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;

  private:
    CochainSpace sp_;
    Vec c_;
};

MultiTable table_from_cochain(const Cochain& c);
// Reads coordinates at canonical tuples after verifying the vanishing
// condition and pair-slot antisymmetry on the whole table; throws
// IncompatibleTable with a witness otherwise.
Cochain cochain_from_table(const CochainSpace& space, const MultiTable& table);

// (f, g) with f of arity 2n and g of arity 2n+1 over one representation.
struct CochainPair {
    Cochain even, odd;
    CochainPair(Cochain e, Cochain o);
    std::size_t level() const { return even.space().arity() / 2; }
    Vec stacked() const;
    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
};

// split stacked (even then odd) coordinates back into a level-n pair
CochainPair pair_from_stacked(const Representation& r, std::size_t level, const Vec& coords);

// Raw coboundary tables on all basis tuples (arities 2n+2 and 2n+3).
MultiTable delta_even_table(const Representation& r, std::size_t level, const MultiTable& f,
                            const MultiTable& g);
MultiTable delta_odd_table(const Representation& r, std::size_t level, const MultiTable& g);

// Coboundary at level n >= 1: (f,g) in C^{2n} x C^{2n+1} -> C^{2n+2} x C^{2n+3}.
// Throws IncompatibleTable if an output violates the vanishing condition.
CochainPair delta_general(const CochainPair& p);

// Same map, but the output coordinates are read off at canonical tuples only
// instead of filling and verifying the full d^(2n+2)/d^(2n+3) tables.
// Coboundaries always satisfy the vanishing condition, so the two agree.
CochainPair delta_canonical(const CochainPair& p);

// phi as a matrix (column j = image of e_j) -> the level-1 pair
//   (x,y)   |-> [phi x, y] + [x, phi y] - phi[x, y]
//   (x,y,z) |-> {phi x,y,z} + {x,phi y,z} + {x,y,phi z} - phi{x,y,z}
// in adjoint coefficients.
CochainPair delta1(const Representation& adj, const Matrix& phi);

// Matrix of delta1 over the phi coordinates (column r*d+v: phi = E_{v,r}).
Matrix delta1_matrix(const Representation& adj);

// The four residual blocks deciding whether a level-1 pair is a cocycle:
// linearizations of the four compatibility laws, kept as full multilinear
// tables into L so nothing is projected away.
struct Delta23Residual {
    MultiTable ly3, ly4, ly5, ly6;  // arities 3, 4, 4, 5
    bool is_zero() const;
    // block tag and argument tuple of the first nonzero entry
    std::optional<std::pair<std::string, std::vector<std::size_t>>> first_nonzero() const;
    Vec stacked() const;
};
Delta23Residual delta23(const CochainPair& p);  // level 1, adjoint coefficients

// Matrix of the stacked delta23 residual over pair coordinates.
Matrix delta23_matrix(const Representation& adj);
// Matrix of delta_general at the given level over stacked pair coordinates,
// rows in target stacked coordinates.
Matrix delta_pair_matrix(const Representation& r, std::size_t level);

struct CohomologyResult {
    std::size_t level = 1;
    std::size_t dim_even_space = 0, dim_odd_space = 0;  // dim C^{2n}, C^{2n+1}
    Subspace Z, B;                                      // stacked (even then odd) coordinates
    std::size_t h_even = 0, h_odd = 0;
    std::vector<Vec> reps;                              // canonical coset representatives
    // level 1 only: dimension of ker(delta_general at (2,3)), reported for
    // comparison with the deformation-derived kernel, asserted nowhere
    std::optional<std::size_t> general_kernel_dim;
};

// Level 1 uses the deformation-derived cocycle conditions (delta23) and
// delta1, and requires adjoint coefficients; level >= 2 uses delta_general
// at levels n and n-1. H dimensions split as: even part by projection of the
// stacked spaces onto the even block, odd part as the complement.
CohomologyResult cohomology(const Representation& r, std::size_t level);

// true iff p1 - p2 is a coboundary; both pairs must lie in result.Z
bool same_class(const CochainPair& p1, const CochainPair& p2, const CohomologyResult& result);

// (dim of projection onto first n_even coordinates, remainder)
std::pair<std::size_t, std::size_t> split_dims(const Subspace& s, std::size_t n_even);

}  // namespace lya
