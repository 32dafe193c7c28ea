#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hopfkit/integer.hpp"

namespace hopfkit {

class Scalar;

enum class FieldKind { rational, prime, cyclotomic };

struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::int64_t param = 0;  // p for prime, n for cyclotomic

    static FieldSpec rational() { return {FieldKind::rational, 0}; }
    static FieldSpec prime(std::int64_t p) { return {FieldKind::prime, p}; }
    static FieldSpec cyclotomic(std::int64_t n) { return {FieldKind::cyclotomic, n}; }

    // "rational", "prime(7)", "cyclotomic(9)"
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// An exact base field. Instances are interned: two handles for the same
// FieldSpec are the same object, so field identity is pointer identity.
//
// Rationals and prime fields have degree 1. Q(zeta_n) elements are
// polynomials of degree < phi(n) reduced modulo the n-th cyclotomic
// polynomial, which makes equality a coefficient comparison.
class Field {
public:
    static const Field& get(const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::string name() const { return spec_.to_string(); }
    int degree() const noexcept { return degree_; }
    bool is_prime() const noexcept { return spec_.kind == FieldKind::prime; }
    const Integer& modulus() const noexcept { return modulus_; }
    // Monic cyclotomic polynomial coefficients, low to high (size degree+1).
    const std::vector<Integer>& minimal_polynomial() const noexcept { return phi_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_rational(const Integer& num, const Integer& den) const;
    // Designated primitive n-th root of unity; only for cyclotomic fields.
    Scalar root() const;
    Scalar parse(std::string_view literal) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    explicit Field(const FieldSpec& spec);

    FieldSpec spec_;
    int degree_ = 1;
    Integer modulus_;
    std::vector<Integer> phi_;
};

// n-th cyclotomic polynomial with integer coefficients, low to high.
std::vector<Integer> cyclotomic_polynomial(std::int64_t n);

// Immutable field element in canonical form.
//
// A default-constructed Scalar carries no field and behaves as zero of
// whatever field it is combined with; this keeps accumulators simple.
class Scalar {
public:
    Scalar() = default;

    const Field* field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Rational coefficient i of the reduced polynomial representative.
    const Integer& numerator(std::size_t i) const { return num_[i]; }
    const Integer& denominator() const noexcept { return den_; }
    std::size_t size() const noexcept { return num_.size(); }

    Scalar inv() const;
    Scalar pow(std::int64_t e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    friend Scalar operator-(const Scalar& a);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

    // Build from raw integer coefficients over a common denominator; the
    // polynomial may be longer than the field degree and is reduced.
    static Scalar from_parts(const Field& f, std::vector<Integer> num, Integer den);

private:
    friend class Field;
    using Coeffs = boost::container::small_vector<Integer, 6>;

    Scalar(const Field* f, Coeffs num, Integer den) : field_(f), den_(std::move(den)), num_(std::move(num)) {}
    void canonicalize();
    static const Field* common_field(const Scalar& a, const Scalar& b);

    const Field* field_ = nullptr;
    Integer den_{1};
    Coeffs num_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit
