#include "lya/field.hpp"

namespace lya {

static bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p <= 3) throw UnsupportedConfig("field characteristic must exceed 3, got " + std::to_string(p));
    if (p > (1ull << 31)) throw UnsupportedConfig("prime modulus too large: " + std::to_string(p));
    if (!is_prime_u64(p)) throw UnsupportedConfig("modulus is not prime: " + std::to_string(p));
    Field f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string Field::str() const {
    return is_rational() ? "rational" : "F" + std::to_string(p);
}

static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// extended Euclid; x with a*x ≡ 1 (mod p)
static std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw Error("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar::Scalar(Field f, long v) : f_(f) {
    if (f_.is_rational()) {
        q_ = v;
    } else {
        long m = v % static_cast<long>(f_.p);
        if (m < 0) m += static_cast<long>(f_.p);
        r_ = static_cast<std::uint64_t>(m);
    }
}

Scalar Scalar::from_rat(Field f, mpq_class q) {
    if (!f.is_rational()) throw FieldMismatch("from_rat on prime field");
    Scalar s(f);
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::parse(Field f, const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar literal");
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "" : s.substr(slash + 1);
    if (!ok_int(num) || (slash != std::string::npos && (!ok_int(den) || den[0] == '-')))
        throw ParseError("bad scalar literal: '" + s + "'");
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad scalar literal: '" + s + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        q.canonicalize();
        return from_rat(f, q);
    }
    mpz_class zn(num, 10);
    mpz_class zp(static_cast<unsigned long>(f.p));
    mpz_class rn = zn % zp;
    if (rn < 0) rn += zp;
    std::uint64_t rv = rn.get_ui();
    if (slash != std::string::npos) {
        mpz_class zd(den, 10);
        mpz_class rd = zd % zp;
        if (rd == 0) throw ParseError("denominator divisible by p in '" + s + "'");
        rv = mulmod(rv, invmod(rd.get_ui(), f.p), f.p);
    }
    return from_residue(f, rv);
}

void Scalar::require_same(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw FieldMismatch("mixed field descriptors: " + f_.str() + " vs " + o.f_.str());
}

bool Scalar::is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_.is_rational()) s.q_ = -q_;
    else s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s(f_);
    if (f_.is_rational()) s.q_ = q_ + o.q_;
    else { s.r_ = r_ + o.r_; if (s.r_ >= f_.p) s.r_ -= f_.p; }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar s(f_);
    if (f_.is_rational()) s.q_ = q_ - o.q_;
    else s.r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + f_.p - o.r_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s(f_);
    if (f_.is_rational()) s.q_ = q_ * o.q_;
    else s.r_ = mulmod(r_, o.r_, f_.p);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar s(f_);
    if (f_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = invmod(r_, f_.p);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same(o);
    if (o.is_zero()) throw Error("division by zero");
    if (f_.is_rational()) {
        Scalar s(f_);
        s.q_ = q_ / o.q_;
        return s;
    }
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    require_same(o);
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

} // namespace lya
