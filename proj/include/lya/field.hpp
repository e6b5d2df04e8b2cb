#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace lya {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FieldMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct UnsupportedConfig : Error { using Error::Error; };
struct Unverified : Error { using Error::Error; };

/* Coefficient field: the rationals, or a prime field F_p with p > 3.
   Every Scalar carries its field descriptor; mixing descriptors throws. */
struct Field {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return kind == Kind::rationals; }
    bool operator==(const Field&) const = default;
    std::string str() const;
};

class Scalar {
public:
    Scalar() : f_() {}                       // rational zero
    explicit Scalar(Field f) : f_(f) {}      // zero of f
    Scalar(Field f, long v);
    static Scalar parse(Field f, const std::string& s);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    std::string str() const;                 // "p/q", "p", or residue

    // rational-mode access (used by the fraction-free elimination)
    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }
    static Scalar from_rat(Field f, mpq_class q);
    static Scalar from_residue(Field f, std::uint64_t r) {
        Scalar s(f); s.r_ = r % f.p; return s;
    }

private:
    Field f_;
    mpq_class q_;          // rational mode
    std::uint64_t r_ = 0;  // prime mode, canonical 0..p-1
    void require_same(const Scalar& o) const;
};

} // namespace lya
