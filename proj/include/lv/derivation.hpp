#pragma once

#include <optional>
#include <vector>

#include "lv/polynomial.hpp"
#include "lv/rational.hpp"

namespace lv {

/// Cyclic index normalization into [0, n).
inline int cyc(int i, int n) { return ((i % n) + n) % n; }

/// Coefficient vector of a Lotka-Volterra system, indexed cyclically.
struct LVParameters {
    int n = 0;
    std::vector<Rational> C;

    const Rational& c(int i) const { return C[cyc(i, n)]; }
    void validate() const;
};

/// A derivation of the polynomial ring, given by the images of the
/// generators and extended to everything else by linearity and the product
/// rule.
struct Derivation {
    int nvars = 0;
    std::vector<Polynomial> images;

    bool operator==(const Derivation&) const = default;
};

/// d(x_i) = x_i * (x_{i-1} - C_i * x_{i+1}), indices mod n. Requires n >= 3.
Derivation lv_derivation(const LVParameters& params);

/// Applies d to f as sum_j (df/dx_j) * d(x_j).
Polynomial apply(const Derivation& d, const Polynomial& f);

/// Returns s if every image is homogeneous of degree s+1 (zero images are
/// compatible with any s); nullopt for mixed degrees. The all-zero
/// derivation reports 0.
std::optional<int> homogeneity_degree(const Derivation& d);

} // namespace lv
