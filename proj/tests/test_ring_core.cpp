#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lv/errors.hpp"
#include "lv/polynomial.hpp"

using lv::Monomial;
using lv::Polynomial;
using lv::Rational;

namespace {

Polynomial X(int i, int n = 3) { return Polynomial::variable(i, n); }
Polynomial K(long c, int n = 3) { return Polynomial::constant(Rational(c), n); }

std::mt19937 rng(20240811);

Rational random_coeff() {
    std::uniform_int_distribution<int> d(-9, 9);
    return Rational(d(rng));
}

Polynomial random_poly(int nvars, int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> tcount(0, max_terms);
    std::uniform_int_distribution<int> ed(0, max_deg);
    Polynomial p(nvars);
    const int t = tcount(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m{std::vector<int>(nvars, 0)};
        int budget = max_deg;
        for (int j = 0; j < nvars; ++j) {
            const int e = std::min(ed(rng), budget);
            m.exps[j] = e;
            budget -= e;
        }
        p += Polynomial::term(m, random_coeff(), nvars);
    }
    return p;
}

} // namespace

TEST_CASE("rational parse and format round-trip") {
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("-3/7").str() == "-3/7");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("2/4"), lv::parse_error);
    CHECK_THROWS_AS(Rational::parse("5/1"), lv::parse_error);
    CHECK_THROWS_AS(Rational::parse("0.5"), lv::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), lv::parse_error);
    CHECK_THROWS_AS(Rational::parse(""), lv::parse_error);
    CHECK_THROWS_AS(Rational::parse("-0"), lv::parse_error);
    CHECK_THROWS_AS(Rational(1, 0), lv::domain_error);
}

TEST_CASE("rational arithmetic stays reduced") {
    const Rational a = Rational::parse("2/3");
    const Rational b = Rational::parse("1/7");
    CHECK((a + b).str() == "17/21");
    CHECK((a * b).str() == "2/21");
    CHECK((a / b).str() == "14/3");
    CHECK((a - a).is_zero());
    CHECK(Rational(-1).inverse() == Rational(-1));
    CHECK_THROWS_AS(Rational(0).inverse(), lv::domain_error);
}

TEST_CASE("addition cancels terms") {
    // (x1 + x2) + (x1 - x2) = 2 x1
    CHECK(X(0) + X(1) + (X(0) - X(1)) == Rational(2) * X(0));
    // f + 0 = f
    const Polynomial f = X(0) * X(2) - K(3);
    CHECK(f + Polynomial::zero(3) == f);
    // (x1 x3 - x1 x2) + x1 x2 = x1 x3, re-checked by term merge
    const Polynomial lhs = (X(0) * X(2) - X(0) * X(1)) + X(0) * X(1);
    CHECK(lhs == X(0) * X(2));
    CHECK(lhs.terms().size() == 1);
}

TEST_CASE("multiplication") {
    CHECK((X(0) + X(1)) * (X(0) - X(1)) == X(0) * X(0) - X(1) * X(1));
    CHECK((Polynomial::zero(3) * X(0)).is_zero());
    // x1 (x3 - x2) expands to the first generator image with unit coefficients
    CHECK(X(0) * (X(2) - X(1)) == X(0) * X(2) - X(0) * X(1));
    CHECK_THROWS_AS(X(0, 3) * X(0, 4), lv::dimension_error);
}

TEST_CASE("total degree and the zero sentinel") {
    CHECK(X(0) * X(1) + X(2) == X(0) * X(1) + X(2));
    CHECK((X(0) * X(1) + X(2)).total_degree() == 2);
    CHECK(!Polynomial::zero(3).total_degree().has_value());
    // degree-one image shape: c + sum c_j x_j
    const Polynomial aff = K(4) + Rational(2) * X(0) - X(2);
    CHECK(aff.total_degree() == 1);
}

TEST_CASE("substitute") {
    // monomial relabeling
    std::vector<Polynomial> rot{X(1), X(2), X(0)};
    CHECK((X(0) * X(1)).substitute(rot) == X(1) * X(2));
    // identity images
    std::vector<Polynomial> id{X(0), X(1), X(2)};
    const Polynomial f = random_poly(3);
    CHECK(f.substitute(id) == f);
    // images from a degenerate-case classification row
    std::vector<Polynomial> row{X(0), -X(0) + X(1), X(0) + X(2)};
    CHECK((X(0) + X(2)).substitute(row) == Rational(2) * X(0) + X(2));
    CHECK_THROWS_AS(f.substitute({X(0), X(1)}), lv::dimension_error);
}

TEST_CASE("homogeneous components") {
    const Polynomial f = X(0) * X(0) + X(1) + K(3);
    const auto comps = f.homogeneous_components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].first == 0);
    CHECK(comps[0].second == K(3));
    CHECK(comps[1].first == 1);
    CHECK(comps[1].second == X(1));
    CHECK(comps[2].first == 2);
    CHECK(comps[2].second == X(0) * X(0));

    const Polynomial h = X(0) * (X(2) - Rational(2) * X(1));
    const auto hc = h.homogeneous_components();
    REQUIRE(hc.size() == 1);
    CHECK(hc[0].first == 2);
    CHECK(hc[0].second == X(0) * X(2) - Rational(2) * X(0) * X(1));

    Polynomial sum(3);
    for (const auto& [deg, comp] : f.homogeneous_components()) {
        CHECK(comp.homogeneous_degree() == deg);
        sum += comp;
    }
    CHECK(sum == f);
}

TEST_CASE("ring axioms on random inputs") {
    for (int iter = 0; iter < 120; ++iter) {
        const Polynomial f = random_poly(3), g = random_poly(3), h = random_poly(3);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("degree is additive for nonzero factors") {
    for (int iter = 0; iter < 120; ++iter) {
        const Polynomial f = random_poly(4), g = random_poly(4);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).total_degree() == *f.total_degree() + *g.total_degree());
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    for (int iter = 0; iter < 60; ++iter) {
        const Polynomial f = random_poly(3), g = random_poly(3);
        std::vector<Polynomial> images{random_poly(3, 3, 2), random_poly(3, 3, 2),
                                       random_poly(3, 3, 2)};
        CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
        CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    }
}

TEST_CASE("canonical form is stable") {
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial f = random_poly(4);
        CHECK(f.is_canonical());
        // rebuilding from the term list changes nothing
        Polynomial rebuilt(4);
        for (const auto& [m, c] : f.terms()) rebuilt += Polynomial::term(m, c, 4);
        CHECK(rebuilt == f);
    }
}

TEST_CASE("pretty printing") {
    CHECK(Polynomial::zero(3).str() == "0");
    CHECK((X(0) * X(2) - X(0) * X(1)).str() == "-x1*x2 + x1*x3");
    CHECK((Rational(1, 2) * X(1) - K(3)).str() == "1/2*x2 - 3");
}
