#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace hopfkit {

// Arbitrary precision integer with an allocation-free fast path.
//
// Values in [-2^62, 2^62) are stored inline as a tagged word (low bit set);
// anything larger lives in a heap mpz_class. Results are always demoted back
// to the inline form when they fit, so equal values have equal representation.
class Integer {
public:
    static constexpr std::int64_t kSmallMax = (std::int64_t{1} << 62) - 1;
    static constexpr std::int64_t kSmallMin = -(std::int64_t{1} << 62);

    Integer() noexcept : bits_(tag(0)) {}
    Integer(std::int64_t v) { assign(v); }  // NOLINT(google-explicit-constructor)
    explicit Integer(const mpz_class& v) { assign(v); }
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o) : bits_(o.bits_) {
        if (!o.is_small()) bits_ = reinterpret_cast<std::uintptr_t>(new mpz_class(*o.big()));
    }
    Integer(Integer&& o) noexcept : bits_(o.bits_) { o.bits_ = tag(0); }
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            Integer tmp(o);
            swap(tmp);
        }
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        if (this != &o) {
            release();
            bits_ = o.bits_;
            o.bits_ = tag(0);
        }
        return *this;
    }
    ~Integer() { release(); }

    void swap(Integer& o) noexcept { std::swap(bits_, o.bits_); }

    bool is_small() const noexcept { return (bits_ & 1U) != 0; }
    std::int64_t small() const noexcept { return static_cast<std::int64_t>(bits_) >> 1; }
    const mpz_class* big() const noexcept { return reinterpret_cast<const mpz_class*>(bits_); }

    bool is_zero() const noexcept { return bits_ == tag(0); }
    bool is_one() const noexcept { return bits_ == tag(1); }
    int sign() const noexcept {
        if (is_small()) return (small() > 0) - (small() < 0);
        return sgn(*big());
    }

    mpz_class to_mpz() const { return is_small() ? mpz_class(static_cast<long>(small())) : *big(); }
    std::string to_string() const;

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a);
    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (a.is_small() || b.is_small()) return a.bits_ == b.bits_;
        return *a.big() == *b.big();
    }
    friend int compare(const Integer& a, const Integer& b);
    friend bool operator<(const Integer& a, const Integer& b) { return compare(a, b) < 0; }

    // Exact division; b must divide a.
    friend Integer divexact(const Integer& a, const Integer& b);
    // Floor-style remainder with the sign of b (used for residues mod p).
    friend Integer mod(const Integer& a, const Integer& b);
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

private:
    static constexpr std::uintptr_t tag(std::int64_t v) noexcept {
        return (static_cast<std::uintptr_t>(v) << 1) | 1U;
    }
    void release() noexcept {
        if (!is_small()) delete reinterpret_cast<mpz_class*>(bits_);
    }
    void assign(std::int64_t v) {
        if (v >= kSmallMin && v <= kSmallMax) {
            bits_ = tag(v);
        } else {
            bits_ = reinterpret_cast<std::uintptr_t>(new mpz_class(static_cast<long>(v)));
        }
    }
    void assign(const mpz_class& v);

    std::uintptr_t bits_;
};

inline Integer operator+(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) return Integer(a.small() + b.small());
    return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
}

inline Integer operator-(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) return Integer(a.small() - b.small());
    return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
}

inline Integer operator-(const Integer& a) {
    if (a.is_small()) return Integer(-a.small());
    return Integer(mpz_class(-*a.big()));
}

inline Integer operator*(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t r = 0;
        if (!__builtin_mul_overflow(a.small(), b.small(), &r)) return Integer(r);
    }
    return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
}

}  // namespace hopfkit
