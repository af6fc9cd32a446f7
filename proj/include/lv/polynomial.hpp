#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lv/rational.hpp"

namespace lv {

/// Exponent vector; position j is the exponent of variable j (0-based).
struct Monomial {
    std::vector<int> exps;

    int degree() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }
    bool operator==(const Monomial&) const = default;
};

/// Graded-lexicographic term order, largest first, so map iteration starts at
/// the leading term.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

/// Canonical multivariate polynomial over the rationals: no stored zero
/// coefficients, fixed variable count, term map keyed by exponent vector.
/// Values are immutable in spirit; all operations return fresh polynomials.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    explicit Polynomial(int nvars);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(const Rational& c, int nvars);
    static Polynomial variable(int index, int nvars);
    static Polynomial term(const Monomial& m, const Rational& c, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    /// Max total degree over terms; nullopt (minus infinity) for the zero
    /// polynomial, never -1.
    std::optional<int> total_degree() const;

    /// Degree when every term has the same total degree; nullopt otherwise.
    /// The zero polynomial counts as homogeneous of every degree and reports 0.
    std::optional<int> homogeneous_degree() const;

    /// Nonzero homogeneous components, ascending degree. They sum to *this.
    std::vector<std::pair<int, Polynomial>> homogeneous_components() const;

    /// Image under the ring homomorphism x_j -> images[j]. All images must
    /// share one variable count, which becomes the result's.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    Polynomial partial(int var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    bool operator==(const Polynomial&) const = default;

    /// Holds by construction; exposed so tests can assert idempotence of
    /// normalization on arbitrary values.
    bool is_canonical() const;

    /// Human-readable form, leading term first. Default variable names are
    /// x1..xn; callers may supply their own (e.g. parameter names).
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    void add_term(const Monomial& m, const Rational& c);

    int nvars_;
    TermMap terms_;
};

} // namespace lv
