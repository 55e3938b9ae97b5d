#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

#include "gti/errors.hpp"

namespace gti {

/// An exact root of unity e^{2*pi*i*q} stored as the reduced rational
/// exponent q in [0,1). Multiplication is exponent addition mod 1.
class UnitScalar {
public:
    constexpr UnitScalar() = default;

    static UnitScalar from_exponent(long long num, long long den) {
        if (den == 0) throw ContractError("exponent denominator must be nonzero");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        num %= den;
        if (num < 0) num += den;
        long long g = std::gcd(num, den);
        UnitScalar s;
        s.num_ = num / g;
        s.den_ = den / g;
        if (s.den_ > denominator_limit())
            throw ValidationError("exponent denominator exceeds the configured limit");
        return s;
    }

    static UnitScalar one() { return UnitScalar(); }
    static UnitScalar minus_one() { return from_exponent(1, 2); }
    static UnitScalar i() { return from_exponent(1, 4); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_one() const { return num_ == 0; }

    UnitScalar operator*(UnitScalar o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        n %= d;
        __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (d > denominator_limit())
            throw ValidationError("exponent denominator exceeds the configured limit");
        UnitScalar s;
        s.num_ = static_cast<long long>(n);
        s.den_ = static_cast<long long>(d);
        return s;
    }

    UnitScalar& operator*=(UnitScalar o) { return *this = *this * o; }

    UnitScalar inverse() const {
        UnitScalar s;
        s.num_ = num_ == 0 ? 0 : den_ - num_;
        s.den_ = den_;
        return s;
    }

    UnitScalar pow(long long k) const {
        long long kk = k % den_;
        __int128 n = static_cast<__int128>(num_) * kk;
        __int128 d = den_;
        n %= d;
        if (n < 0) n += d;
        __int128 g = gcd128(n, d);
        UnitScalar s;
        s.num_ = static_cast<long long>(n / g);
        s.den_ = static_cast<long long>(d / g);
        return s;
    }

    std::complex<double> value() const {
        double t = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
        return {std::cos(t), std::sin(t)};
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(UnitScalar a, UnitScalar b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    static long long denominator_limit() { return limit_; }
    static void set_denominator_limit(long long v) { limit_ = v; }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    long long num_ = 0;
    long long den_ = 1;
    inline static long long limit_ = 1LL << 53;
};

} // namespace gti
