#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lya/linalg.hpp"

namespace lya {

// First violated law, with the basis tuple it failed on and the residual
// (left side minus right side). Vector-valued residuals are 1-row matrices.
struct CheckFailure {
    std::string rule;
    std::vector<std::size_t> witness;
    Matrix residual;
};

struct CheckReport {
    bool ok = true;
    std::optional<CheckFailure> failure;

    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string rule, std::vector<std::size_t> witness, Matrix residual);
    std::string describe() const;
};

// Thrown when an operation requires an input that fails its own checker.
struct CheckError : Error {
    CheckFailure failure;
    explicit CheckError(const CheckFailure& f);
};

// Structure constants of a binary bracket [.,.] and a ternary bracket {.,.,.}
// on a d-dimensional space: [e_i,e_j] = sum_k b(i,j,k) e_k and
// {e_i,e_j,e_k} = sum_l t(i,j,k,l) e_l.
class LyAlgebra {
  public:
    struct BinaryEntry {
        std::size_t i, j, k;
        Scalar c;
    };
    struct TernaryEntry {
        std::size_t i, j, k, l;
        Scalar c;
    };

    // entries carry only i<j slots; the (j,i) counterparts are filled in with
    // opposite sign, so the two skew-symmetry laws hold by construction
    static LyAlgebra from_independent(Field f, std::size_t d,
                                      const std::vector<BinaryEntry>& bin,
                                      const std::vector<TernaryEntry>& ter,
                                      std::vector<std::string> labels = {});
    // full tables, nothing enforced; skew-symmetry violations become check failures
    static LyAlgebra from_raw(Field f, std::size_t d, std::vector<Scalar> b,
                              std::vector<Scalar> t, std::vector<std::string> labels = {});

    const Field& field() const { return f_; }
    std::size_t dim() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Scalar& b(std::size_t i, std::size_t j, std::size_t k) const {
        return b_[(i * d_ + j) * d_ + k];
    }
    const Scalar& t(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return t_[((i * d_ + j) * d_ + k) * d_ + l];
    }
    // [e_i, e_j] and {e_i, e_j, e_k} as coordinate vectors
    Vec bracket(std::size_t i, std::size_t j) const;
    Vec ternary(std::size_t i, std::size_t j, std::size_t k) const;
    // multilinear extension
    Vec bracket(const Vec& x, const Vec& y) const;
    Vec ternary(const Vec& x, const Vec& y, const Vec& z) const;

    bool is_verified() const { return verified_; }
    void require_verified(const char* what) const;

    bool operator==(const LyAlgebra& o) const;

  private:
    friend CheckReport check_lya(LyAlgebra& a);
    LyAlgebra(Field f, std::size_t d, std::vector<Scalar> b, std::vector<Scalar> t,
              std::vector<std::string> labels);
    Field f_;
    std::size_t d_;
    std::vector<Scalar> b_, t_;
    std::vector<std::string> labels_;
    bool verified_ = false;
};

// Exhaustive verification of the six defining laws over basis tuples:
// the two skew symmetries, the cyclic binary/ternary compatibilities, and the
// two derivation laws of {x,y,-}. Tags the algebra verified on pass. Reports
// the lexicographically first violation otherwise.
CheckReport check_lya(LyAlgebra& a);

// A triple of operator families on a module V: rho(x), D(x,y), theta(x,y),
// stored at basis arguments and extended multilinearly.
class Representation {
  public:
    Representation(LyAlgebra alg, std::size_t dim_v, std::vector<Matrix> rho,
                   std::vector<Matrix> d_ops, std::vector<Matrix> theta_ops);

    const LyAlgebra& algebra() const { return alg_; }
    const Field& field() const { return alg_.field(); }
    std::size_t dim_v() const { return dim_v_; }

    const Matrix& rho(std::size_t i) const { return rho_[i]; }
    const Matrix& D(std::size_t i, std::size_t j) const { return d_[i * alg_.dim() + j]; }
    const Matrix& theta(std::size_t i, std::size_t j) const { return th_[i * alg_.dim() + j]; }
    // bilinear extensions at coordinate-vector arguments
    Matrix rho_at(const Vec& x) const;
    Matrix D_at(const Vec& x, const Vec& y) const;
    Matrix theta_at(const Vec& x, const Vec& y) const;

    bool is_verified() const { return verified_; }
    void require_verified(const char* what) const;
    bool is_adjoint() const { return adjoint_; }

  private:
    friend Representation adjoint_rep(const LyAlgebra& a);
    friend CheckReport check_representation(Representation& r);
    LyAlgebra alg_;
    std::size_t dim_v_;
    std::vector<Matrix> rho_, d_, th_;
    bool verified_ = false;
    bool adjoint_ = false;
};

// The action of the algebra on itself: rho(x)y = [x,y], D(x,y)z = {x,y,z},
// theta(x,y)z = {z,x,y}. Requires a verified algebra.
Representation adjoint_rep(const LyAlgebra& a);

// Seven operator identities R1..R7 relating rho, D, theta to the brackets,
// checked at all required basis tuples. Residuals are dimV x dimV matrices.
CheckReport check_representation(Representation& r);

// Structure constants of a bilinear product e_i . e_j = sum_k c(i,j,k) e_k.
class LeibnizAlgebra {
  public:
    struct Entry {
        std::size_t i, j, k;
        Scalar c;
    };
    LeibnizAlgebra(Field f, std::size_t d, const std::vector<Entry>& entries,
                   std::vector<std::string> labels = {});

    const Field& field() const { return f_; }
    std::size_t dim() const { return d_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * d_ + j) * d_ + k];
    }
    Vec product(std::size_t i, std::size_t j) const;

  private:
    Field f_;
    std::size_t d_;
    std::vector<Scalar> c_;
    std::vector<std::string> labels_;
};

// Left derivation property of the product: a.(b.c) = (a.b).c + b.(a.c).
CheckReport check_leibniz(const LeibnizAlgebra& lz);

// [a,b] = a.b - b.a, {a,b,c} = -(a.b).c. Throws CheckError if the Leibniz
// identity fails; asserts the result passes check_lya before returning it.
LyAlgebra leibniz_to_lya(const LeibnizAlgebra& lz);

// Does m intertwine both brackets? Checked on basis pairs/triples.
CheckReport check_morphism(const LyAlgebra& src, const LyAlgebra& dst, const Matrix& m);

}  // namespace lya
