#pragma once

// Exact scalars: arbitrary-precision rationals (GMP, mpq_class) and prime
// fields GF(p) with a runtime modulus. No floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>
#include <tuple>

#include <gmpxx.h>
#include <Eigen/Core>

namespace hopfkit {

using Rat = mpq_class;

// Prime-field element. p == 0 marks an unreduced integer literal (as produced
// by Scalar(0)/Scalar(1) inside generic code); it binds to a modulus on first
// contact with a bound element. Bound values are kept in [0, p).
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v) : v_(v), p_(0) {}
    Fp(long long v, unsigned long long p) : v_(0), p_(p) {
        if (p != 0) v_ = reduce(v, p);
        else v_ = v;
    }

    long long value() const { return v_; }
    unsigned long long modulus() const { return p_; }
    bool bound() const { return p_ != 0; }

    Fp bound_to(unsigned long long p) const { return Fp(v_, p); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x + y);
        return Fp(static_cast<long long>(addmod(static_cast<unsigned long long>(x),
                                                static_cast<unsigned long long>(y), p)), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x - y);
        unsigned long long yy = static_cast<unsigned long long>(y);
        return Fp(static_cast<long long>(addmod(static_cast<unsigned long long>(x),
                                                yy == 0 ? 0 : p - yy, p)), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x * y);
        return Fp(static_cast<long long>(mulmod(static_cast<unsigned long long>(x),
                                                static_cast<unsigned long long>(y), p)), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp operator-() const {
        if (p_ == 0) return Fp(-v_);
        return Fp(v_ == 0 ? 0 : static_cast<long long>(p_ - static_cast<unsigned long long>(v_)), p_);
    }

    Fp inverse() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return Fp(v_);
            throw std::domain_error("Fp: inverse of an unbound literal");
        }
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        return Fp(inv_mod(static_cast<unsigned long long>(v_), p_), p_);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        return x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

private:
    long long v_;
    unsigned long long p_;

    static long long reduce(long long v, unsigned long long p) {
        long long m = static_cast<long long>(p);
        long long r = v % m;
        if (r < 0) r += m;
        return r;
    }
    // Returns both operands reduced into the common field (or both literals).
    static std::tuple<long long, long long, unsigned long long> align(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return {a.v_, b.v_, a.p_};
        if (a.p_ == 0) return {reduce(a.v_, b.p_), b.v_, b.p_};
        if (b.p_ == 0) return {a.v_, reduce(b.v_, a.p_), a.p_};
        throw std::invalid_argument("Fp: field mismatch (GF(" + std::to_string(a.p_) +
                                    ") vs GF(" + std::to_string(b.p_) + "))");
    }
    static unsigned long long addmod(unsigned long long a, unsigned long long b, unsigned long long p) {
        unsigned long long s = a + b;           // p < 2^63 so no overflow
        return s >= p ? s - p : s;
    }
    static unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
        return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static long long inv_mod(unsigned long long a, unsigned long long p) {
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        if (r != 1) throw std::domain_error("Fp: modulus not prime or element not invertible");
        return t < 0 ? t + static_cast<long long>(p) : t;
    }
};

// Field descriptor shared by all entries of a structure file / bundle.
struct FieldDesc {
    bool rational = true;
    unsigned long long p = 0;

    static FieldDesc rationals() { return {true, 0}; }
    static FieldDesc gf(unsigned long long p) { return {false, p}; }

    friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
        return a.rational == b.rational && a.p == b.p;
    }
    std::string name() const { return rational ? "rational" : ("gf:" + std::to_string(p)); }
};

template <class K>
std::string scalar_to_string(const K& x);

template <>
inline std::string scalar_to_string<Rat>(const Rat& x) { return x.get_str(); }

template <>
inline std::string scalar_to_string<Fp>(const Fp& x) { return std::to_string(x.value()); }

// Parses "n" or "n/d" exactly; rejects zero denominators and junk.
inline Rat parse_rational(const std::string& tok) {
    Rat q;
    if (q.set_str(tok, 10) != 0)
        throw std::invalid_argument("malformed rational scalar '" + tok + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in scalar '" + tok + "'");
    q.canonicalize();
    return q;
}

template <class K>
K parse_scalar(const std::string& tok, const FieldDesc& fd);

template <>
inline Rat parse_scalar<Rat>(const std::string& tok, const FieldDesc&) { return parse_rational(tok); }

template <>
inline Fp parse_scalar<Fp>(const std::string& tok, const FieldDesc& fd) {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("malformed GF scalar '" + tok + "'");
    return Fp(v, fd.p);
}

}  // namespace hopfkit

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<hopfkit::Fp> : GenericNumTraits<hopfkit::Fp> {
    typedef hopfkit::Fp Real;
    typedef hopfkit::Fp NonInteger;
    typedef hopfkit::Fp Nested;
    static inline Real epsilon() { return hopfkit::Fp(0); }
    static inline Real dummy_precision() { return hopfkit::Fp(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 0,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2
    };
};

}  // namespace Eigen
