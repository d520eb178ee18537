#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "tfx/errors.hpp"

namespace tfx {

/// Exact rational over 64-bit integers with overflow detection. Wide enough
/// for every bound and inequality this project evaluates; anything larger
/// throws rather than silently wrapping.
class Rat {
public:
    Rat() = default;
    Rat(long long value) : num_(value) {}
    Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                   checked_mul(a.den_, b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked_add(checked_mul(a.num_, b.den_), -checked_mul(b.num_, a.den_)),
                   checked_mul(a.den_, b.den_));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }

    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
                     : l > r ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static long long checked_mul(long long a, long long b) {
        __int128 r = static_cast<__int128>(a) * b;
        if (r > INT64_MAX || r < INT64_MIN) throw DomainError("Rat: 64-bit overflow");
        return static_cast<long long>(r);
    }
    static long long checked_add(long long a, long long b) {
        __int128 r = static_cast<__int128>(a) + b;
        if (r > INT64_MAX || r < INT64_MIN) throw DomainError("Rat: 64-bit overflow");
        return static_cast<long long>(r);
    }
    void normalize() {
        if (den_ == 0) throw DomainError("Rat: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace tfx
