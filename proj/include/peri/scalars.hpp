#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace peri {

/// Exact rational scalar. GMP's canonicalising mpq_class gives us
/// arbitrary-precision arithmetic with value semantics for free.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline std::string scalar_str(const Rational& x) { return x.get_str(); }
inline bool is_integral(const Rational& x) { return x.get_den() == 1; }
inline long to_long(const Rational& x) {
    if (x.get_den() != 1) throw std::runtime_error("scalar is not an integer");
    return x.get_num().get_si();
}
inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

/// Prime field F_p with a process-global modulus. The ambient computation
/// fixes the characteristic once; mixing moduli is a logic error.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long x) {
        long p = (long)modulus();
        v_ = x % p;
        if (v_ < 0) v_ += p;
    }

    static void set_modulus(std::uint64_t p);
    static std::uint64_t modulus();

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % (long)modulus()); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ - b.v_ + (long)modulus()) % (long)modulus()); }
    friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % (long)modulus()); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : (long)modulus() - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
    friend bool operator<(Fp a, Fp b) { return a.v_ < b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::runtime_error("division by zero in F_p");
        // extended Euclid
        long a = v_, b = (long)modulus(), x0 = 1, x1 = 0;
        while (b) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }
    long value() const { return v_; }

private:
    static Fp from_raw(long v) { Fp r; r.v_ = v; return r; }
    static std::uint64_t& modulus_ref() {
        static std::uint64_t p = 0;
        return p;
    }
    long v_;
};

inline void Fp::set_modulus(std::uint64_t p) {
    if (p < 2) throw std::runtime_error("modulus must be a prime >= 2");
    modulus_ref() = p;
}
inline std::uint64_t Fp::modulus() {
    if (modulus_ref() == 0) throw std::runtime_error("F_p modulus not configured");
    return modulus_ref();
}

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }
inline bool is_integral(const Fp&) { return true; }
inline long to_long(const Fp& x) { return x.value(); }

/// Guard used by module entry points: characteristic must be 0 or a prime > n.
inline void check_characteristic(std::uint64_t p, int n) {
    if (p == 0) return;
    if ((int)p <= n) throw std::runtime_error("characteristic must be 0 or a prime > n");
}

} // namespace peri
