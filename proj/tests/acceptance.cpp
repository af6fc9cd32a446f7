// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lv/json_io.hpp"
#include "lv/oracle.hpp"
#include "lv/solver.hpp"

using namespace lv;

namespace {

struct Check {
    bool ok = true;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

Rational Q(long n) { return Rational(n); }
Rational Q(long n, long d) { return Rational(n, d); }
Polynomial X(int i, int n) { return Polynomial::variable(i, n); }

std::set<std::string> keys(const std::vector<Endomorphism>& els) {
    std::set<std::string> out;
    for (const auto& e : els) out.insert(canonical_key(e));
    return out;
}

std::set<std::string> keys(std::initializer_list<Endomorphism> els) {
    std::set<std::string> out;
    for (const auto& e : els) out.insert(canonical_key(e));
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct CliResult {
    int exit_code = -1;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LV_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        res.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
    struct Golden {
        LVParameters params;
        std::vector<Endomorphism> elements;
        GroupType::Tag tag;
        int order;
    };
    const int n = 3;
    const Polynomial x1 = X(0, n), x2 = X(1, n), x3 = X(2, n);
    auto E = [&](Polynomial a, Polynomial b, Polynomial cc) {
        return Endomorphism{n, {std::move(a), std::move(b), std::move(cc)}};
    };
    const Endomorphism id = Endomorphism::identity(n);
    const std::vector<Golden> goldens = {
        {{3, {Q(1), Q(1), Q(1)}},
         {id, E(x2, x3, x1), E(x3, x1, x2), E(-x3, -x2, -x1), E(-x1, -x3, -x2),
          E(-x2, -x1, -x3)},
         GroupType::Tag::Dihedral,
         6},
        {{3, {Q(-1), Q(-1), Q(-1)}},
         {id, E(x2, x3, x1), E(x3, x1, x2), E(x2, x1, x3), E(x1, x3, x2), E(x3, x2, x1)},
         GroupType::Tag::Dihedral,
         6},
        {{3, {Q(-1), Q(-1), Q(1)}},
         {id, E(-x1, x3, x2), E(x1, x1 + x3, -x1 + x2), E(-x1, -x1 + x2, x1 + x3)},
         GroupType::Tag::Klein4,
         4},
        {{3, {Q(2), Q(2), Q(2)}},
         {id, E(x2, x3, x1), E(x3, x1, x2)},
         GroupType::Tag::Cyclic,
         3},
        {{3, {Q(0), Q(5), Q(0)}}, {id}, GroupType::Tag::Trivial, 1},
        {{3, {Q(-1), Q(2), Q(1, 2)}},
         {id, E(Q(-2) * x3, x2, Q(-1, 2) * x1)},
         GroupType::Tag::Cyclic,
         2},
    };
    for (const auto& g : goldens) {
        const auto t0 = std::chrono::steady_clock::now();
        const IsotropyResult r = classify(g.params);
        const double elapsed = ms_since(t0);
        c.require(elapsed < 1000.0, "classification exceeded one second");
        c.require(r.kind == IsotropyResult::Kind::Finite, "expected a finite result");
        c.require(keys(r.elements) == keys(g.elements), "element set mismatch");
        c.require(r.group.has_value(), "group identification missing");
        if (r.group) {
            c.require(r.group->tag == g.tag, "group type mismatch");
            c.require(r.group->order == g.order, "group order mismatch");
        }
        c.require(!r.proven_element_failed, "internal verification failed");
    }
}

void criterion2(Check& c) {
    const int n = 4;
    const Polynomial x1 = X(0, n), x2 = X(1, n), x3 = X(2, n), x4 = X(3, n);
    auto E = [&](Polynomial a, Polynomial b, Polynomial cc, Polynomial dd) {
        return Endomorphism{n, {std::move(a), std::move(b), std::move(cc), std::move(dd)}};
    };
    {
        const auto r = classify({4, {Q(1), Q(1), Q(1), Q(1)}});
        c.require(keys(r.elements) ==
                      keys({E(x1, x2, x3, x4), E(x2, x3, x4, x1), E(x3, x4, x1, x2),
                            E(x4, x1, x2, x3), E(-x3, -x2, -x1, -x4), E(-x4, -x3, -x2, -x1),
                            E(-x1, -x4, -x3, -x2), E(-x2, -x1, -x4, -x3)}),
                  "all-ones element set mismatch");
        c.require(r.group && r.group->tag == GroupType::Tag::Dihedral && r.group->order == 8,
                  "all-ones group should be dihedral of order eight");
    }
    {
        const auto r = classify({4, {Q(-1), Q(-1), Q(-1), Q(2)}});
        c.require(keys(r.elements) ==
                      keys({Endomorphism::identity(4), E(-x1, x4, x3 - x1, x2)}),
                  "three-minus-one element set mismatch");
        c.require(r.group && r.group->tag == GroupType::Tag::Cyclic && r.group->order == 2,
                  "three-minus-one group should be cyclic of order two");
    }
    for (const auto& params :
         {LVParameters{4, {Q(-1), Q(-1), Q(-1), Q(-1)}}, LVParameters{4, {Q(1), Q(-1), Q(1), Q(-1)}}}) {
        const auto r = classify(params);
        const Derivation d = lv_derivation(params);
        c.require(r.kind == IsotropyResult::Kind::Infinite, "expected an infinite result");
        bool any_free = false;
        c.require(r.families.size() == r.family_reports.size(), "family report missing");
        for (std::size_t i = 0; i < r.families.size(); ++i) {
            const auto& f = r.families[i];
            const auto& rep = r.family_reports[i];
            c.require(rep.commutation_proven, "family commutation not proven at the grid");
            if (f.nonlinear_candidate) continue;
            any_free |= f.arity() > 0;
            c.require(!rep.inconclusive, "family verification inconclusive");
            c.require(rep.all_samples_invertible, "family sample not certified invertible");
            for (const auto& s : rep.samples) {
                c.require(s.commutes, "family sample does not commute");
                c.require(s.certificate == Certificate::Kind::Affine,
                          "family sample certificate is not affine");
                c.require(static_cast<int>(rep.samples.size()) >= f.parameter_degree_bound + 1,
                          "too few certified samples");
            }
        }
        c.require(any_free, "no free-parameter witness family found");
        (void)d;
    }
}

void criterion3(Check& c) {
    struct Golden {
        LVParameters params;
        GroupType::Tag tag;
        int order;
    };
    const std::vector<Golden> goldens = {
        {{5, std::vector<Rational>(5, Q(1))}, GroupType::Tag::Dihedral, 10},
        {{5, std::vector<Rational>(5, Q(2))}, GroupType::Tag::Cyclic, 5},
        {{5, std::vector<Rational>(5, Q(0))}, GroupType::Tag::Cyclic, 5},
        {{6, {Q(1), Q(-1), Q(1), Q(-1), Q(1), Q(-1)}}, GroupType::Tag::Dihedral, 6},
        {{6, {Q(2), Q(3), Q(4), Q(2), Q(3), Q(4)}}, GroupType::Tag::Cyclic, 2},
        {{7, std::vector<Rational>(7, Q(1))}, GroupType::Tag::Dihedral, 14},
    };
    for (const auto& g : goldens) {
        const auto r = classify(g.params);
        c.require(r.kind == IsotropyResult::Kind::Finite, "expected a finite result");
        c.require(r.group.has_value(), "group identification missing");
        if (r.group) {
            c.require(r.group->tag == g.tag, "group type mismatch");
            c.require(r.group->order == g.order, "group order mismatch");
        }
        c.require(static_cast<int>(r.elements.size()) == g.order, "element count mismatch");
        c.require(!r.proven_element_failed, "internal verification failed");
    }
}

void criterion4(Check& c) {
    std::mt19937 rng(271828);
    const Rational pool[] = {Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2)};
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> nn(3, 8);
    for (int iter = 0; iter < 100; ++iter) {
        LVParameters p{nn(rng), {}};
        for (int i = 0; i < p.n; ++i) p.C.push_back(pool[pick(rng)]);
        const IsotropyResult r = classify(p);
        if (r.kind != IsotropyResult::Kind::Finite) continue;
        const Derivation d = lv_derivation(p);
        c.require(!r.proven_element_failed, "internal verification failed");
        c.require(r.check_commutation == "pass", "commutation check failed");
        c.require(r.check_closure == "pass", "closure check failed");
        c.require(r.check_degree_lemma == "pass", "degree check failed");
        c.require(r.check_constants_zero == "pass", "nonzero affine constants");
        bool has_id = false;
        for (const auto& e : r.elements) {
            has_id |= e == Endomorphism::identity(p.n);
            c.require(commutes(e, d), "element does not commute");
            const auto aff = as_affine(e);
            c.require(aff.has_value(), "element is not affine");
            if (aff) {
                c.require(!linalg::det(aff->matrix).is_zero(), "element is singular");
                const Endomorphism inv = affine_inverse(*aff).expand();
                c.require(keys(r.elements).count(canonical_key(inv)) == 1,
                          "inverse missing from the element set");
            }
        }
        c.require(has_id, "identity missing");
    }
}

void criterion5(Check& c) {
    const std::vector<LVParameters> n3 = {
        {3, {Q(1), Q(1), Q(1)}},      {3, {Q(-1), Q(-1), Q(-1)}}, {3, {Q(-1), Q(-1), Q(1)}},
        {3, {Q(2), Q(2), Q(2)}},      {3, {Q(0), Q(5), Q(0)}},    {3, {Q(-1), Q(2), Q(1, 2)}},
    };
    for (const auto& p : n3) {
        std::uint32_t prime = 0;
        for (std::uint32_t cand : {5u, 7u, 11u})
            if (admissible_prime(p, cand)) {
                prime = cand;
                break;
            }
        c.require(prime != 0, "no admissible prime at or below eleven");
        if (prime == 0) continue;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = cross_check(classify(p), p, prime, OracleMode::Affine);
        c.require(ms_since(t0) < 180000.0, "oracle run exceeded three minutes");
        c.require(rep.injection, "injection failed in affine mode");
    }
    for (const auto& p : {LVParameters{4, {Q(-1), Q(-1), Q(-1), Q(2)}},
                          LVParameters{4, {Q(1), Q(1), Q(1), Q(1)}}}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = cross_check(classify(p), p, 5, OracleMode::Linear);
        c.require(ms_since(t0) < 180000.0, "oracle run exceeded three minutes");
        c.require(rep.injection, "injection failed in linear mode");
    }
    {
        const LVParameters p{3, {Q(1), Q(1), Q(1)}};
        const auto t0 = std::chrono::steady_clock::now();
        const auto pruned = enumerate_modp(p, 3, OracleMode::Affine);
        const auto full = enumerate_modp_exhaustive(p, 3, OracleMode::Affine);
        c.require(ms_since(t0) < 180000.0, "tiny-scale scan exceeded three minutes");
        c.require(pruned.solutions == full, "pruned and exhaustive sets differ");
    }
}

void criterion6(Check& c) {
    const WitnessFamily cand = nonlinear_candidate_family();
    const auto tmp = std::filesystem::temp_directory_path() / "lv_candidate_map.json";
    for (long av : {0L, 1L, 2L, 5L}) {
        const Endomorphism inst = cand.instantiate({Q(av)});
        {
            std::ofstream f(tmp);
            f << endo_to_json(inst).dump();
        }
        const CliResult res =
            run_cli("verify --n 4 --c -1,-1,-1,-1 --map " + tmp.string() + " --format json");
        c.require(res.exit_code == 0, "verify should exit zero on well-formed input");
        Json j;
        try {
            j = Json::parse(res.stdout_text);
        } catch (...) {
            c.require(false, "verify did not print a JSON document");
            continue;
        }
        const Polynomial expected =
            Polynomial::constant(Q(av), 4) + X(0, 4) + X(2, 4) - X(1, 4) - X(3, 4);
        c.require(poly_from_json(j.at("jacobian_det")) == expected,
                  "jacobian determinant mismatch");
        c.require(j.at("certificate").at("kind") == "not_automorphism",
                  "certificate should refute the candidate");
        c.require(j.at("commutes") == true, "commutation result not recorded as computed");
    }
    // flagged content must not flip the classify exit code
    c.require(run_cli("classify --n 4 --c -1,-1,-1,-1").exit_code == 0,
              "classify exited nonzero on flagged published content");
    c.require(run_cli("classify --n 4 --c 2,-1,3,-1").exit_code == 0,
              "classify exited nonzero on an unverified-claim configuration");
    c.require(run_cli("classify --n 3 --c bad").exit_code == 1,
              "malformed coefficients should exit one");
    c.require(run_cli("oracle --n 3 --c 1/7,1,1 --p 7").exit_code == 1,
              "inadmissible prime should exit one");
    c.require(run_cli("verify --n 3 --c 1,1,1 --map /nonexistent.json").exit_code == 1,
              "unreadable map file should exit one");
    std::filesystem::remove(tmp);
}

void criterion7(Check& c) {
    std::mt19937 rng(314159);
    const Rational pool[] = {Q(-2), Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1), Q(2)};
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> ed(0, 2);
    std::uniform_int_distribution<int> tcount(0, 4);

    auto rnd_params = [&](int n) {
        LVParameters p{n, {}};
        for (int i = 0; i < n; ++i) p.C.push_back(pool[pick(rng)]);
        return p;
    };
    auto rnd_poly = [&](int nvars) {
        Polynomial p(nvars);
        for (int i = 0, t = tcount(rng); i < t; ++i) {
            Monomial m{std::vector<int>(nvars, 0)};
            for (int j = 0; j < nvars; ++j) m.exps[j] = ed(rng);
            p += Polynomial::term(m, Q(coeff(rng)), nvars);
        }
        return p;
    };

    for (int iter = 0; iter < 200; ++iter) {
        const LVParameters p = rnd_params(3 + iter % 4);
        const Derivation d = lv_derivation(p);
        const Polynomial f = rnd_poly(p.n), g = rnd_poly(p.n);
        c.require(apply(d, f * g) == f * apply(d, g) + g * apply(d, f), "Leibniz identity failed");
    }
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 3;
        const Polynomial f = rnd_poly(n), g = rnd_poly(n);
        std::vector<Polynomial> images;
        for (int i = 0; i < n; ++i) images.push_back(rnd_poly(n));
        c.require((f + g).substitute(images) == f.substitute(images) + g.substitute(images),
                  "substitution is not additive");
        c.require((f * g).substitute(images) == f.substitute(images) * g.substitute(images),
                  "substitution is not multiplicative");
    }
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 3 + iter % 4;
        const LVParameters p = rnd_params(n);
        const Derivation d = lv_derivation(p);
        // alternate diagonal scalings and cyclic relabelings
        Endomorphism sigma(Endomorphism::identity(n)), sigma_inv(Endomorphism::identity(n));
        if (iter % 2 == 0) {
            AffineEndomorphism diag{n, linalg::Matrix(n, linalg::Vector(n, Q(0))),
                                    linalg::Vector(n, Q(0))};
            for (int i = 0; i < n; ++i) {
                Rational v = pool[pick(rng)];
                diag.matrix[i][i] = v.is_zero() ? Q(1) : v;
            }
            sigma = diag.expand();
            sigma_inv = affine_inverse(diag).expand();
        } else {
            sigma = shift_map(n, 1);
            sigma_inv = shift_map(n, n - 1);
        }
        const Derivation d_conj = conjugate_derivation(sigma, sigma_inv, d);
        const Endomorphism commuting = shift_map(n, shift_subgroup(p).back());
        AffineEndomorphism rnd{n, linalg::Matrix(n, linalg::Vector(n, Q(0))),
                               linalg::Vector(n, Q(0))};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rnd.matrix[i][j] = Q(coeff(rng));
        for (const Endomorphism& rho : {commuting, rnd.expand()}) {
            const Endomorphism conj = conjugate_endomorphism(sigma, sigma_inv, rho);
            c.require(commutes(rho, d) == commutes(conj, d_conj),
                      "conjugation covariance failed");
        }
    }
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 3 + iter % 6;
        const LVParameters p = rnd_params(n);
        const auto s = shift_subgroup(p);
        c.require(!s.empty() && s[0] == 0, "shift set must contain zero");
        for (int a : s)
            for (int b : s)
                c.require(std::find(s.begin(), s.end(), (a + b) % n) != s.end(),
                          "shift set not closed under addition");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: three-variable golden classifications", criterion1},
        {"criterion 2: four-variable golden classifications and witness families", criterion2},
        {"criterion 3: golden classifications for five or more variables", criterion3},
        {"criterion 4: invariant suite on 100 random coefficient vectors", criterion4},
        {"criterion 5: prime-field oracle cross-checks", criterion5},
        {"criterion 6: discrepancy surfacing and exit-code contract", criterion6},
        {"criterion 7: exact property checks", criterion7},
    };
    int failed = 0;
    for (const auto& crit : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            crit.run(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double sec = ms_since(t0) / 1000.0;
        if (c.ok) {
            std::printf("[PASS] %s (%.2fs)\n", crit.name, sec);
        } else {
            std::printf("[FAIL] %s: %s (%.2fs)\n", crit.name, c.first_failure.c_str(), sec);
            ++failed;
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
