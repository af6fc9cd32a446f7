#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace lv {

/// Exact rational number. Always stored reduced with positive denominator,
/// so equality is plain structural equality.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses the canonical text form: "p" or "p/q" with q > 1 and
    /// gcd(|p|, q) = 1, sign on the numerator. Anything else (floats,
    /// whitespace, unreduced fractions, "5/1", "-0") is rejected so that
    /// parse/str round-trips are bit-exact.
    static Rational parse(const std::string& text);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;

    const mpq_class& raw() const { return v_; }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

/// Residue of r modulo the prime p, or nullopt when the denominator of r is
/// divisible by p.
std::optional<std::uint32_t> reduce_mod(const Rational& r, std::uint32_t p);

} // namespace lv
