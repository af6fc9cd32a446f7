#include "lv/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lv/errors.hpp"

namespace lv {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw domain_error("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(const Rational& c, int nvars) {
    Polynomial p(nvars);
    p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
    return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
    if (index < 0 || index >= nvars) throw domain_error("variable index out of range");
    Monomial m{std::vector<int>(nvars, 0)};
    m.exps[index] = 1;
    return term(m, Rational(1), nvars);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, int nvars) {
    if (static_cast<int>(m.exps.size()) != nvars) throw dimension_error("monomial width mismatch");
    for (int e : m.exps)
        if (e < 0) throw domain_error("negative exponent");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree(); // leading term has max degree
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    const int d = terms_.begin()->first.degree();
    if (std::prev(terms_.end())->first.degree() != d) return std::nullopt;
    return d;
}

std::vector<std::pair<int, Polynomial>> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> buckets;
    for (const auto& [m, c] : terms_) {
        auto [it, _] = buckets.try_emplace(m.degree(), nvars_);
        it->second.add_term(m, c);
    }
    std::vector<std::pair<int, Polynomial>> out;
    out.reserve(buckets.size());
    for (auto& [d, p] : buckets) out.emplace_back(d, std::move(p));
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw dimension_error("substitute: expected one image per variable");
    const int target = images.empty() ? nvars_ : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != target) throw dimension_error("substitute: images disagree on nvars");

    // cache of images[j]^k
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](int j, int k) -> const Polynomial& {
        auto& cache = pows[j];
        if (cache.empty()) cache.push_back(Polynomial::constant(Rational(1), target));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[j]);
        return cache[k];
    };

    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(c, target);
        for (int j = 0; j < nvars_; ++j)
            if (m.exps[j] > 0) prod = prod * power(j, m.exps[j]);
        out += prod;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw dimension_error("evaluate: wrong point size");
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int j = 0; j < nvars_; ++j)
            for (int e = 0; e < m.exps[j]; ++e) t *= point[j];
        out += t;
    }
    return out;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= nvars_) throw domain_error("partial: variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        Monomial d = m;
        d.exps[var] -= 1;
        out.add_term(d, Rational(m.exps[var]) * c);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw dimension_error("add: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw dimension_error("sub: nvars mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw dimension_error("mul: nvars mismatch");
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (int j = 0; j < a.nvars_; ++j) m.exps[j] += mb.exps[j];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : p.terms_) out.terms_.emplace(m, c * k);
    return out;
}

bool Polynomial::is_canonical() const {
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.exps.size()) != nvars_) return false;
        if (c.is_zero()) return false;
        for (int e : m.exps)
            if (e < 0) return false;
    }
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int j) {
        if (j < static_cast<int>(names.size())) return names[j];
        return "x" + std::to_string(j + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) mag = -c;
        }
        first = false;
        const bool is_const = m.degree() == 0;
        if (!mag.is_one() || is_const) {
            os << mag.str();
            if (!is_const) os << "*";
        }
        bool star = false;
        for (int j = 0; j < nvars_; ++j) {
            if (m.exps[j] == 0) continue;
            if (star) os << "*";
            os << var_name(j);
            if (m.exps[j] > 1) os << "^" << m.exps[j];
            star = true;
        }
    }
    return os.str();
}

} // namespace lv
