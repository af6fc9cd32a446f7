#include "lv/endomorphism.hpp"

#include <map>
#include <sstream>

#include "lv/errors.hpp"

namespace lv {

Endomorphism Endomorphism::identity(int n) {
    Endomorphism e{n, {}};
    e.images.reserve(n);
    for (int i = 0; i < n; ++i) e.images.push_back(Polynomial::variable(i, n));
    return e;
}

std::string Endomorphism::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < nvars; ++i) {
        if (i) os << ", ";
        os << images[i].str();
    }
    os << ")";
    return os.str();
}

Endomorphism AffineEndomorphism::expand() const {
    Endomorphism e{nvars, {}};
    e.images.reserve(nvars);
    for (int i = 0; i < nvars; ++i) {
        Polynomial img = Polynomial::constant(constants[i], nvars);
        for (int j = 0; j < nvars; ++j)
            img += matrix[i][j] * Polynomial::variable(j, nvars);
        e.images.push_back(std::move(img));
    }
    return e;
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
    if (outer.nvars != inner.nvars) throw dimension_error("compose: nvars mismatch");
    Endomorphism out{outer.nvars, {}};
    out.images.reserve(outer.nvars);
    for (const auto& img : outer.images) out.images.push_back(img.substitute(inner.images));
    return out;
}

std::string canonical_key(const Endomorphism& e) {
    std::ostringstream os;
    os << e.nvars << '#';
    for (const auto& img : e.images) {
        for (const auto& [m, c] : img.terms()) {
            for (int x : m.exps) os << x << ',';
            os << c.str() << ';';
        }
        os << '|';
    }
    return os.str();
}

bool commutes(const Endomorphism& rho, const Derivation& d) {
    if (rho.nvars != d.nvars) throw dimension_error("commutes: nvars mismatch");
    for (int i = 0; i < d.nvars; ++i)
        if (apply(d, rho.images[i]) != d.images[i].substitute(rho.images)) return false;
    return true;
}

std::optional<AffineEndomorphism> as_affine(const Endomorphism& rho) {
    const int n = rho.nvars;
    AffineEndomorphism a{n, linalg::Matrix(n, linalg::Vector(n, Rational(0))),
                         linalg::Vector(n, Rational(0))};
    for (int i = 0; i < n; ++i) {
        for (const auto& [m, c] : rho.images[i].terms()) {
            const int deg = m.degree();
            if (deg > 1) return std::nullopt;
            if (deg == 0) {
                a.constants[i] = c;
                continue;
            }
            for (int j = 0; j < n; ++j)
                if (m.exps[j] == 1) a.matrix[i][j] = c;
        }
    }
    return a;
}

AffineEndomorphism affine_inverse(const AffineEndomorphism& a) {
    auto inv = linalg::inverse(a.matrix);
    if (!inv) throw not_invertible_error("affine map has singular linear part");
    linalg::Vector shift = linalg::mat_vec(*inv, a.constants);
    for (auto& s : shift) s = -s;
    return AffineEndomorphism{a.nvars, std::move(*inv), std::move(shift)};
}

namespace {

// Determinant by column-subset recursion; fine for the small n used here.
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, unsigned mask, int row,
                   std::map<unsigned, Polynomial>& memo, int n) {
    if (row == n) return Polynomial::constant(Rational(1), m[0][0].nvars());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial acc(m[0][0].nvars());
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!m[row][j].is_zero()) {
            Polynomial sub = det_rec(m, mask & ~(1u << j), row + 1, memo, n);
            Polynomial contrib = m[row][j] * sub;
            acc += sign > 0 ? contrib : -contrib;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

std::vector<Monomial> monomials_up_to(int nvars, int max_deg) {
    std::vector<Monomial> out;
    Monomial cur{std::vector<int>(nvars, 0)};
    // lexicographic enumeration of exponent vectors with bounded total degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur.exps[var] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

} // namespace

Polynomial jacobian_det(const Endomorphism& rho) {
    const int n = rho.nvars;
    std::vector<std::vector<Polynomial>> jac(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i].push_back(rho.images[i].partial(j));
    std::map<unsigned, Polynomial> memo;
    return det_rec(jac, (1u << n) - 1, 0, memo, n);
}

const char* Certificate::name(Kind k) {
    switch (k) {
        case Kind::Affine: return "affine";
        case Kind::ExplicitInverse: return "explicit_inverse";
        case Kind::NotAutomorphism: return "not_automorphism";
        case Kind::Unknown: return "unknown";
    }
    return "unknown";
}

Certificate certify_automorphism(const Endomorphism& rho, int degree_bound) {
    if (degree_bound < 1) throw domain_error("degree bound must be at least 1");
    const int n = rho.nvars;

    if (auto aff = as_affine(rho)) {
        if (linalg::det(aff->matrix).is_zero())
            return {Certificate::Kind::NotAutomorphism, std::nullopt,
                    "singular linear part"};
        return {Certificate::Kind::Affine, affine_inverse(*aff).expand(), ""};
    }

    const Polynomial jac = jacobian_det(rho);
    if (jac.is_zero())
        return {Certificate::Kind::NotAutomorphism, std::nullopt,
                "jacobian determinant is zero"};
    if (jac.total_degree() > 0)
        return {Certificate::Kind::NotAutomorphism, std::nullopt,
                "jacobian determinant is not constant"};

    // Undetermined coefficients: psi(x_i) = sum_m c_{i,m} * m with
    // psi(rho(x)) = x. The composite of each basis monomial with rho is
    // rho-independent of i, so one coefficient matrix serves all n systems.
    const auto basis = monomials_up_to(n, degree_bound);
    std::vector<Polynomial> composed;
    composed.reserve(basis.size());
    for (const auto& m : basis)
        composed.push_back(Polynomial::term(m, Rational(1), n).substitute(rho.images));

    std::map<Monomial, int, GrlexDesc> row_of;
    for (const auto& p : composed)
        for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
    for (int i = 0; i < n; ++i) {
        Monomial xi{std::vector<int>(n, 0)};
        xi.exps[i] = 1;
        row_of.emplace(xi, 0);
    }
    int idx = 0;
    for (auto& [m, r] : row_of) r = idx++;

    linalg::Matrix a(idx, linalg::Vector(basis.size(), Rational(0)));
    for (std::size_t col = 0; col < composed.size(); ++col)
        for (const auto& [m, c] : composed[col].terms()) a[row_of.at(m)][col] = c;

    Endomorphism psi{n, {}};
    for (int i = 0; i < n; ++i) {
        linalg::Vector b(idx, Rational(0));
        Monomial xi{std::vector<int>(n, 0)};
        xi.exps[i] = 1;
        b[row_of.at(xi)] = Rational(1);
        auto sol = linalg::solve(a, b);
        if (!sol.consistent)
            return {Certificate::Kind::Unknown, std::nullopt,
                    "no inverse with image degree <= " + std::to_string(degree_bound)};
        Polynomial img(n);
        for (std::size_t col = 0; col < basis.size(); ++col)
            if (!sol.particular[col].is_zero())
                img += Polynomial::term(basis[col], sol.particular[col], n);
        psi.images.push_back(std::move(img));
    }

    const Endomorphism id = Endomorphism::identity(n);
    if (compose(psi, rho) == id && compose(rho, psi) == id)
        return {Certificate::Kind::ExplicitInverse, psi, ""};
    return {Certificate::Kind::Unknown, std::nullopt, "one-sided solve did not verify"};
}

bool degree_one_image_check(const Endomorphism& rho, const LVParameters& params) {
    if (rho.nvars != params.n) throw dimension_error("degree check: nvars mismatch");
    for (int i = 0; i < params.n; ++i) {
        const Polynomial g =
            rho.images[cyc(i - 1, params.n)] - params.c(i) * rho.images[cyc(i + 1, params.n)];
        if (g.total_degree() != std::optional<int>(1)) return false;
    }
    return true;
}

Derivation conjugate_derivation(const Endomorphism& sigma, const Endomorphism& sigma_inv,
                                const Derivation& d) {
    if (sigma.nvars != d.nvars) throw dimension_error("conjugate: nvars mismatch");
    Derivation out{d.nvars, {}};
    out.images.reserve(d.nvars);
    for (int i = 0; i < d.nvars; ++i)
        out.images.push_back(sigma(apply(d, sigma_inv.images[i])));
    return out;
}

Endomorphism conjugate_endomorphism(const Endomorphism& sigma, const Endomorphism& sigma_inv,
                                    const Endomorphism& rho) {
    // compose() chains substitution right to left, so this is the map whose
    // ring action is sigma . rho . sigma^{-1}.
    return compose(compose(sigma_inv, rho), sigma);
}

} // namespace lv
