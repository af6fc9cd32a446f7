#include "lv/derivation.hpp"

#include "lv/errors.hpp"

namespace lv {

void LVParameters::validate() const {
    if (n < 3) throw domain_error("need at least three variables");
    if (static_cast<int>(C.size()) != n)
        throw dimension_error("coefficient vector length must equal n");
}

Derivation lv_derivation(const LVParameters& params) {
    params.validate();
    const int n = params.n;
    Derivation d{n, {}};
    d.images.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Polynomial xi = Polynomial::variable(i, n);
        const Polynomial prev = Polynomial::variable(cyc(i - 1, n), n);
        const Polynomial next = Polynomial::variable(cyc(i + 1, n), n);
        d.images.push_back(xi * (prev - params.c(i) * next));
    }
    return d;
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    if (d.nvars != f.nvars()) throw dimension_error("apply: nvars mismatch");
    Polynomial out(f.nvars());
    for (int j = 0; j < d.nvars; ++j) {
        const Polynomial pj = f.partial(j);
        if (!pj.is_zero() && !d.images[j].is_zero()) out += pj * d.images[j];
    }
    return out;
}

std::optional<int> homogeneity_degree(const Derivation& d) {
    std::optional<int> s;
    for (const auto& img : d.images) {
        if (img.is_zero()) continue;
        const auto h = img.homogeneous_degree();
        if (!h) return std::nullopt;
        if (s && *s != *h - 1) return std::nullopt;
        s = *h - 1;
    }
    return s ? s : std::optional<int>(0);
}

} // namespace lv
