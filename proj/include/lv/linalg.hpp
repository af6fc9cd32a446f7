#pragma once

#include <optional>
#include <vector>

#include "lv/rational.hpp"

namespace lv::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

Matrix identity(int n);
Rational det(Matrix m);
std::optional<Matrix> inverse(Matrix m);
Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Full solution set of A x = b over the rationals.
struct Solution {
    bool consistent = false;
    Vector particular;               // one solution, free coordinates set to 0
    std::vector<Vector> nullspace;   // basis of the homogeneous solutions
};

Solution solve(const Matrix& a, const Vector& b);

} // namespace lv::linalg
