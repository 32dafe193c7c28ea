#include "hopfkit/integer.hpp"

#include <numeric>
#include <stdexcept>

namespace hopfkit {

Integer::Integer(const std::string& decimal) : bits_(tag(0)) {
    mpz_class v;
    if (v.set_str(decimal, 10) != 0) throw std::invalid_argument("not an integer: '" + decimal + "'");
    assign(v);
}

void Integer::assign(const mpz_class& v) {
    if (v.fits_slong_p()) {
        const long s = v.get_si();
        if (s >= kSmallMin && s <= kSmallMax) {
            bits_ = tag(s);
            return;
        }
    }
    bits_ = reinterpret_cast<std::uintptr_t>(new mpz_class(v));
}

std::string Integer::to_string() const {
    if (is_small()) return std::to_string(small());
    return big()->get_str(10);
}

int compare(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) return (a.small() > b.small()) - (a.small() < b.small());
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) return Integer(a.small() / b.small());
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("modulus zero");
    if (a.is_small() && b.is_small()) {
        std::int64_t r = a.small() % b.small();
        if (r != 0 && ((r < 0) != (b.small() < 0))) r += b.small();
        return Integer(r);
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small()) {
        std::int64_t x = a.small() < 0 ? -a.small() : a.small();
        std::int64_t y = b.small() < 0 ? -b.small() : b.small();
        return Integer(std::gcd(x, y));
    }
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

}  // namespace hopfkit
