#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lv/errors.hpp"
#include "lv/oracle.hpp"

using namespace lv;

namespace {

Rational Q(long n) { return Rational(n); }
Rational Q(long n, long d) { return Rational(n, d); }

std::string dump(const std::vector<ModpMap>& maps) {
    std::ostringstream os;
    for (const auto& m : maps) {
        for (auto v : m.flat) os << v << ',';
        os << ';';
    }
    return os.str();
}

} // namespace

TEST_CASE("admissible primes") {
    CHECK(admissible_prime({3, {Q(1), Q(1), Q(1)}}, 7));
    CHECK(admissible_prime({3, {Q(1), Q(1), Q(1)}}, 3));
    // denominator divisible by p
    CHECK(!admissible_prime({3, {Q(1, 7), Q(1), Q(1)}}, 7));
    // 2 * 4 = 8 looks like 1 mod 7: a fresh product relation
    CHECK(!admissible_prime({3, {Q(2), Q(4), Q(1)}}, 7));
    // 2 collides with -1 mod 3
    CHECK(!admissible_prime({3, {Q(2), Q(2), Q(2)}}, 3));
    CHECK(admissible_prime({3, {Q(2), Q(2), Q(2)}}, 5));
    // 5 collides with 0 mod 5
    CHECK(!admissible_prime({3, {Q(0), Q(5), Q(0)}}, 5));
    CHECK(admissible_prime({3, {Q(0), Q(5), Q(0)}}, 7));
    CHECK(first_admissible_prime({3, {Q(0), Q(5), Q(0)}}) == 7);
    CHECK(first_admissible_prime({3, {Q(1), Q(1), Q(1)}}) == 5);
    CHECK(admissible_prime({4, {Q(-1), Q(-1), Q(-1), Q(2)}}, 5));
}

TEST_CASE("pruned search equals the exhaustive scan at the smallest scale") {
    const LVParameters P{3, {Q(1), Q(1), Q(1)}};
    const auto pruned = enumerate_modp(P, 3, OracleMode::Affine);
    const auto full = enumerate_modp_exhaustive(P, 3, OracleMode::Affine);
    CHECK(pruned.solutions == full);

    // and for a coefficient vector with a zero
    const LVParameters Z{3, {Q(0), Q(1), Q(0)}};
    REQUIRE(admissible_prime(Z, 3));
    CHECK(enumerate_modp(Z, 3, OracleMode::Linear).solutions ==
          enumerate_modp_exhaustive(Z, 3, OracleMode::Linear));
}

TEST_CASE("soundness: every returned map passes the straightforward check") {
    const LVParameters P{4, {Q(-1), Q(-1), Q(-1), Q(2)}};
    const auto run = enumerate_modp(P, 5, OracleMode::Linear);
    CHECK(!run.solutions.empty());
    for (const auto& m : run.solutions) CHECK(modp_commutes(m, P, 5, OracleMode::Linear));

    const LVParameters P3{3, {Q(-1), Q(2), Q(1, 2)}};
    const auto run3 = enumerate_modp(P3, 5, OracleMode::Affine);
    for (const auto& m : run3.solutions) CHECK(modp_commutes(m, P3, 5, OracleMode::Affine));
}

TEST_CASE("identity is always found") {
    const LVParameters P{3, {Q(0), Q(5), Q(0)}};
    const auto run = enumerate_modp(P, 7, OracleMode::Linear);
    ModpMap id;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) id.flat.push_back(i == j ? 1 : 0);
    CHECK(std::count(run.solutions.begin(), run.solutions.end(), id) == 1);
}

TEST_CASE("deterministic output independent of the thread count") {
    const LVParameters P{3, {Q(1), Q(1), Q(1)}};
    OracleOptions one;
    one.threads = 1;
    OracleOptions many;
    many.threads = 8;
    const auto a = enumerate_modp(P, 7, OracleMode::Affine, one);
    const auto b = enumerate_modp(P, 7, OracleMode::Affine, many);
    CHECK(dump(a.solutions) == dump(b.solutions));
    CHECK(a.visited_nodes == b.visited_nodes);
}

TEST_CASE("budget exhaustion is all-or-nothing") {
    const LVParameters P{3, {Q(1), Q(1), Q(1)}};
    OracleOptions tiny;
    tiny.node_budget = 100; // below the shard count: rejected upfront
    CHECK_THROWS_AS(enumerate_modp(P, 7, OracleMode::Affine, tiny), budget_exceeded_error);
    OracleOptions mid;
    mid.node_budget = 5000; // enough to start, exhausted mid-search
    CHECK_THROWS_AS(enumerate_modp(P, 7, OracleMode::Affine, mid), budget_exceeded_error);
    OracleOptions enough;
    enough.node_budget = 200000;
    CHECK(enumerate_modp(P, 7, OracleMode::Affine, enough).solutions.size() == 6);
}

TEST_CASE("inadmissible prime is rejected") {
    CHECK_THROWS_AS(enumerate_modp({3, {Q(2), Q(2), Q(2)}}, 3, OracleMode::Linear),
                    inadmissible_prime_error);
}

TEST_CASE("cross-check against classifications") {
    SUBCASE("three ones, affine mode") {
        const LVParameters P{3, {Q(1), Q(1), Q(1)}};
        const auto rep = cross_check(classify(P), P, 7, OracleMode::Affine);
        CHECK(rep.injection);
        CHECK(rep.missing.empty());
        CHECK(rep.count >= 6);
    }
    SUBCASE("Klein four at p = 5") {
        const LVParameters P{3, {Q(-1), Q(-1), Q(1)}};
        const auto rep = cross_check(classify(P), P, 5, OracleMode::Affine);
        CHECK(rep.injection);
    }
    SUBCASE("four variables, linear mode") {
        const LVParameters P{4, {Q(-1), Q(-1), Q(-1), Q(2)}};
        const auto rep = cross_check(classify(P), P, 5, OracleMode::Linear);
        CHECK(rep.injection);
        CHECK(rep.missing.empty());
    }
    SUBCASE("infinite classifications are unsupported") {
        const LVParameters P{4, {Q(-1), Q(-1), Q(-1), Q(-1)}};
        CHECK_THROWS_AS(cross_check(classify(P), P, 5, OracleMode::Linear), unsupported_error);
    }
    SUBCASE("elements with denominators divisible by p are skipped and reported") {
        const LVParameters P{3, {Q(1), Q(1), Q(1)}};
        IsotropyResult fake = classify(P);
        Endomorphism scaled = Endomorphism::identity(3);
        scaled.images[0] = Q(1, 5) * Polynomial::variable(0, 3);
        fake.elements.push_back(scaled);
        const auto rep = cross_check(fake, P, 5, OracleMode::Affine);
        CHECK(rep.skipped.size() == 1);
        CHECK(!rep.injection);
    }
}
