#include "hopfkit/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

constexpr std::int64_t kMaxCyclotomicOrder = 10000;

// Polynomial division of integer polynomials by a monic divisor (exact).
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn);
    for (std::size_t k = num.size(); k-- > dn;) {
        const Integer c = num[k];
        q[k - dn] = c;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (!num[i].is_zero()) throw std::logic_error("cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> poly(static_cast<std::size_t>(n) + 1);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    auto param_of = [&](std::string_view prefix) -> std::int64_t {
        std::string_view rest = text.substr(prefix.size());
        if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
            throw std::invalid_argument("malformed field '" + std::string(text) + "'");
        const std::string digits(rest.substr(1, rest.size() - 2));
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != digits.size() || digits.empty())
            throw std::invalid_argument("malformed field parameter in '" + std::string(text) + "'");
        return v;
    };
    if (text == "rational" || text == "Q") return rational();
    if (text.starts_with("prime")) return prime(param_of("prime"));
    if (text.starts_with("cyclotomic")) return cyclotomic(param_of("cyclotomic"));
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::rational: return "rational";
        case FieldKind::prime: return "prime(" + std::to_string(param) + ")";
        case FieldKind::cyclotomic: return "cyclotomic(" + std::to_string(param) + ")";
    }
    return "?";
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
    switch (spec.kind) {
        case FieldKind::rational:
            phi_ = {0, 1};
            break;
        case FieldKind::prime: {
            const mpz_class p(static_cast<long>(spec.param));
            if (spec.param < 2 || mpz_probab_prime_p(p.get_mpz_t(), 50) == 0)
                throw std::invalid_argument("prime field modulus " + std::to_string(spec.param) + " is not prime");
            modulus_ = Integer(spec.param);
            phi_ = {0, 1};
            break;
        }
        case FieldKind::cyclotomic:
            if (spec.param < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
            if (spec.param > kMaxCyclotomicOrder) throw std::invalid_argument("cyclotomic field order too large");
            phi_ = cyclotomic_polynomial(spec.param);
            degree_ = static_cast<int>(phi_.size()) - 1;
            break;
    }
}

const Field& Field::get(const FieldSpec& spec) {
    static std::mutex mu;
    static std::map<std::pair<int, std::int64_t>, std::unique_ptr<Field>> registry;
    const std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(spec.kind), spec.kind == FieldKind::rational ? 0 : spec.param);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
    return *it->second;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
    Scalar::Coeffs c(static_cast<std::size_t>(degree_));
    c[0] = Integer(v);
    Scalar s(this, std::move(c), Integer(1));
    s.canonicalize();
    return s;
}

Scalar Field::from_rational(const Integer& num, const Integer& den) const {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (is_prime()) {
        Scalar n = Scalar::from_parts(*this, {num}, Integer(1));
        Scalar d = Scalar::from_parts(*this, {den}, Integer(1));
        return n * d.inv();
    }
    return Scalar::from_parts(*this, {num}, den);
}

Scalar Field::root() const {
    if (spec_.kind != FieldKind::cyclotomic) throw std::invalid_argument("field " + name() + " has no designated root");
    return Scalar::from_parts(*this, {Integer(0), Integer(1)}, Integer(1));
}

Scalar Scalar::from_parts(const Field& f, std::vector<Integer> num, Integer den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (num.size() > d) {
        if (f.is_prime() || f.spec().kind == FieldKind::rational) {
            for (std::size_t k = 1; k < num.size(); ++k)
                if (!num[k].is_zero()) throw std::invalid_argument("polynomial literal in a degree-1 field");
        } else {
            const auto& phi = f.minimal_polynomial();
            for (std::size_t k = num.size(); k-- > d;) {
                const Integer c = num[k];
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < d; ++i)
                    if (!phi[i].is_zero()) num[k - d + i] -= c * phi[i];
            }
        }
    }
    num.resize(d);
    Coeffs c(num.begin(), num.end());
    if (f.is_prime()) {
        if (!den.is_one()) {
            Scalar n(&f, std::move(c), Integer(1));
            n.canonicalize();
            Scalar dd(&f, Coeffs{den}, Integer(1));
            dd.canonicalize();
            return n * dd.inv();
        }
    }
    Scalar s(&f, std::move(c), std::move(den));
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    if (field_ == nullptr) return;
    if (field_->is_prime()) {
        num_[0] = mod(num_[0], field_->modulus());
        den_ = Integer(1);
        return;
    }
    if (den_.sign() < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    bool all_zero = true;
    for (const auto& c : num_)
        if (!c.is_zero()) {
            all_zero = false;
            break;
        }
    if (all_zero) {
        den_ = Integer(1);
        return;
    }
    if (den_.is_one()) return;
    Integer g = den_;
    for (const auto& c : num_) {
        if (g.is_one()) return;
        if (!c.is_zero()) g = gcd(g, c);
    }
    if (g.is_one()) return;
    den_ = divexact(den_, g);
    for (auto& c : num_)
        if (!c.is_zero()) c = divexact(c, g);
}

const Field* Scalar::common_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != nullptr && b.field_ != nullptr && a.field_ != b.field_)
        throw std::invalid_argument("field mismatch: " + a.field_->name() + " vs " + b.field_->name());
    return a.field_ != nullptr ? a.field_ : b.field_;
}

bool Scalar::is_zero() const noexcept {
    for (const auto& c : num_)
        if (!c.is_zero()) return false;
    return true;
}

bool Scalar::is_one() const noexcept {
    if (num_.empty() || !den_.is_one() || !num_[0].is_one()) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (!num_[i].is_zero()) return false;
    return true;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    const Field* f = Scalar::common_field(a, b);
    if (a.field_ == nullptr) return b;
    if (b.field_ == nullptr) return a;
    const std::size_t d = a.num_.size();
    Scalar::Coeffs c(d);
    if (f->is_prime()) {
        c[0] = mod(a.num_[0] + b.num_[0], f->modulus());
        return Scalar(f, std::move(c), Integer(1));
    }
    if (a.den_ == b.den_) {
        for (std::size_t i = 0; i < d; ++i) c[i] = a.num_[i] + b.num_[i];
        Scalar r(f, std::move(c), a.den_);
        r.canonicalize();
        return r;
    }
    for (std::size_t i = 0; i < d; ++i) c[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    Scalar r(f, std::move(c), a.den_ * b.den_);
    r.canonicalize();
    return r;
}

Scalar operator-(const Scalar& a) {
    Scalar r = a;
    for (auto& c : r.num_) c = -c;
    r.canonicalize();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    const Field* f = Scalar::common_field(a, b);
    if (f == nullptr) return {};
    if (a.field_ == nullptr || b.field_ == nullptr) return f->zero();
    const std::size_t d = a.num_.size();
    if (f->is_prime()) {
        Scalar::Coeffs c(1);
        c[0] = mod(a.num_[0] * b.num_[0], f->modulus());
        return Scalar(f, std::move(c), Integer(1));
    }
    if (d == 1) {
        Scalar::Coeffs c(1);
        c[0] = a.num_[0] * b.num_[0];
        Scalar r(f, std::move(c), a.den_ * b.den_);
        r.canonicalize();
        return r;
    }
    boost::container::small_vector<Integer, 16> prod(2 * d - 1);
    bool any = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (a.num_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b.num_[j].is_zero()) continue;
            prod[i + j] += a.num_[i] * b.num_[j];
            any = true;
        }
    }
    if (!any) return f->zero();
    const auto& phi = f->minimal_polynomial();
    for (std::size_t k = 2 * d - 1; k-- > d;) {
        if (prod[k].is_zero()) continue;
        const Integer t = prod[k];
        for (std::size_t i = 0; i < d; ++i)
            if (!phi[i].is_zero()) prod[k - d + i] -= t * phi[i];
    }
    Scalar::Coeffs c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
    Scalar r(f, std::move(c), a.den_ * b.den_);
    r.canonicalize();
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ == nullptr || b.field_ == nullptr) return a.is_zero() && b.is_zero();
    if (a.field_ != b.field_) return false;
    return a.den_ == b.den_ && a.num_ == b.num_;
}

Scalar Scalar::inv() const {
    if (field_ == nullptr || is_zero()) throw std::domain_error("inverse of zero");
    const Field& f = *field_;
    if (f.is_prime()) {
        mpz_class r;
        mpz_invert(r.get_mpz_t(), num_[0].to_mpz().get_mpz_t(), f.modulus().to_mpz().get_mpz_t());
        return from_parts(f, {Integer(r)}, Integer(1));
    }
    const std::size_t d = num_.size();
    if (d == 1) return from_parts(f, {den_}, num_[0]);

    // Solve M c = e_0 over Q where column j of M holds num * x^j mod Phi.
    const Field& q = Field::get(FieldSpec::rational());
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d + 1, q.zero()));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Integer> shifted(d + j);
        for (std::size_t i = 0; i < d; ++i) shifted[i + j] = num_[i];
        const Scalar col = from_parts(f, std::move(shifted), Integer(1));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = q.from_rational(col.num_[i], col.den_);
    }
    m[0][d] = q.one();
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c].is_zero()) ++p;
        if (p == d) throw std::logic_error("singular multiplication matrix for nonzero cyclotomic element");
        std::swap(m[p], m[c]);
        const Scalar piv = m[c][c].inv();
        for (auto& e : m[c]) e = e * piv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Scalar factor = m[r][c];
            for (std::size_t k = c; k <= d; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    Integer common(1);
    for (std::size_t i = 0; i < d; ++i) {
        const Integer& den = m[i][d].denominator();
        common = divexact(common * den, gcd(common, den));
    }
    std::vector<Integer> out(d);
    for (std::size_t i = 0; i < d; ++i)
        out[i] = m[i][d].numerator(0) * divexact(common, m[i][d].denominator()) * den_;
    return from_parts(f, std::move(out), common);
}

Scalar Scalar::pow(std::int64_t e) const {
    if (field_ == nullptr) throw std::invalid_argument("power of a field-less scalar");
    if (e < 0) return inv().pow(-e);
    Scalar result = field_->one();
    Scalar base = *this;
    while (e > 0) {
        if ((e & 1) != 0) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

std::string rational_string(const Integer& num, const Integer& den) {
    const Integer g = gcd(num, den);
    const Integer n = divexact(num, g);
    const Integer d = divexact(den, g);
    if (d.is_one()) return n.to_string();
    return n.to_string() + "/" + d.to_string();
}

}  // namespace

std::string Scalar::to_string() const {
    if (field_ == nullptr || is_zero()) return "0";
    if (field_->is_prime()) return num_[0].to_string();
    std::string out;
    for (std::size_t k = num_.size(); k-- > 0;) {
        if (num_[k].is_zero()) continue;
        const bool negative = num_[k].sign() < 0;
        const Integer mag = abs(num_[k]);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string coeff = rational_string(mag, den_);
        if (k == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += coeff + "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

class LiteralParser {
public:
    LiteralParser(const Field& f, std::string_view text) : f_(f), text_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad scalar literal '" + std::string(text_) + "' at column " +
                                    std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) {
                v = v + term();
            } else if (eat('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                const Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v * d.inv();
            } else {
                return v;
            }
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar base = primary();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            if (start == pos_) fail("expected exponent");
            const std::int64_t e = std::stoll(std::string(text_.substr(start, pos_ - start)));
            if (neg && base.is_zero()) fail("negative power of zero");
            base = base.pow(neg ? -e : e);
        }
        return base;
    }
    Scalar primary() {
        skip();
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('z')) return f_.root();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected number, 'z' or '('");
        return Scalar::from_parts(f_, {Integer(std::string(text_.substr(start, pos_ - start)))}, Integer(1));
    }

    const Field& f_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Field::parse(std::string_view literal) const { return LiteralParser(*this, literal).parse(); }

}  // namespace hopfkit
