#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lv/derivation.hpp"
#include "lv/linalg.hpp"
#include "lv/polynomial.hpp"

namespace lv {

/// Ring endomorphism given by generator images; acts on a polynomial f as
/// f(images[0], ..., images[n-1]).
struct Endomorphism {
    int nvars = 0;
    std::vector<Polynomial> images;

    static Endomorphism identity(int n);
    Polynomial operator()(const Polynomial& f) const { return f.substitute(images); }

    bool operator==(const Endomorphism&) const = default;

    /// "(x2, x3, x1)" style display.
    std::string str() const;
};

/// Degree-one endomorphism x_i -> constants[i] + sum_j matrix[i][j] x_j.
struct AffineEndomorphism {
    int nvars = 0;
    linalg::Matrix matrix;
    linalg::Vector constants;

    Endomorphism expand() const;
    bool operator==(const AffineEndomorphism&) const = default;
};

/// images[i] = outer.images[i] evaluated at inner's images; as a polynomial
/// map of points this is outer after inner.
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);

/// Deterministic serialization used for dedup, set membership and stable
/// ordering of element lists.
std::string canonical_key(const Endomorphism& e);

/// True iff d(rho(x_i)) = rho(d(x_i)) for every generator, which extends to
/// the whole ring.
bool commutes(const Endomorphism& rho, const Derivation& d);

/// Extracts the affine form when every image has total degree <= 1.
std::optional<AffineEndomorphism> as_affine(const Endomorphism& rho);

/// Two-sided inverse of an affine map; throws not_invertible_error on a
/// singular linear part.
AffineEndomorphism affine_inverse(const AffineEndomorphism& a);

/// Determinant of the matrix of formal partials d(images[i])/d(x_j).
Polynomial jacobian_det(const Endomorphism& rho);

struct Certificate {
    enum class Kind { Affine, ExplicitInverse, NotAutomorphism, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Endomorphism> inverse;
    std::string reason;

    static const char* name(Kind k);
};

/// Sound but incomplete automorphism test: affine maps are decided exactly;
/// a non-constant or zero Jacobian determinant refutes; otherwise an inverse
/// with image degrees <= degree_bound is searched for by an undetermined
/// coefficient linear solve, and failure to find one yields Unknown.
Certificate certify_automorphism(const Endomorphism& rho, int degree_bound = 4);

/// True iff rho(x_{i-1}) - C_i * rho(x_{i+1}) has total degree exactly 1 for
/// every i, a necessary condition for membership in the isotropy group.
bool degree_one_image_check(const Endomorphism& rho, const LVParameters& params);

/// Conjugated derivation sigma . d . sigma^{-1}, with images
/// sigma(d(sigma^{-1}(x_i))).
Derivation conjugate_derivation(const Endomorphism& sigma, const Endomorphism& sigma_inv,
                                const Derivation& d);

/// Conjugated map sigma . rho . sigma^{-1}, oriented to match
/// conjugate_derivation: it commutes with the conjugated derivation exactly
/// when rho commutes with the original.
Endomorphism conjugate_endomorphism(const Endomorphism& sigma, const Endomorphism& sigma_inv,
                                    const Endomorphism& rho);

} // namespace lv
