#include "lv/rational.hpp"

#include <ostream>

#include "lv/errors.hpp"

namespace lv {

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    for (char c : text) {
        if (c != '-' && c != '/' && (c < '0' || c > '9'))
            throw parse_error("invalid character in rational literal: \"" + text + "\"");
    }
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw parse_error("malformed rational literal: \"" + text + "\"");
    if (v.get_den() == 0) throw parse_error("zero denominator in rational literal: \"" + text + "\"");
    v.canonicalize();
    if (v.get_str() != text)
        throw parse_error("rational literal not in reduced form: \"" + text + "\"");
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<std::uint32_t> reduce_mod(const Rational& r, std::uint32_t p) {
    const std::uint64_t den = mpz_fdiv_ui(r.den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    const std::uint64_t num = mpz_fdiv_ui(r.num().get_mpz_t(), p);
    // den^(p-2) mod p inverts den for prime p
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

} // namespace lv
