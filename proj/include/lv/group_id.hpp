#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lv/endomorphism.hpp"

namespace lv {

struct ClosureResult {
    bool closed = false;                  // input was already a group
    std::vector<Endomorphism> completed;  // closure of the input set
};

/// Checks closure under composition and inverse. When the input is not
/// closed, completes it; completion past `bound` elements throws
/// closure_bound_error. All elements must be invertible affine maps on one
/// ring.
ClosureResult closure_check(const std::vector<Endomorphism>& elements, std::size_t bound = 512);

/// table[i][j] = index of compose(elements[i], elements[j]); requires a
/// closed set.
std::vector<std::vector<int>> cayley(const std::vector<Endomorphism>& elements);

struct GroupType {
    enum class Tag { Trivial, Cyclic, Klein4, Dihedral, Other };
    Tag tag = Tag::Other;
    int order = 0;
    int m = 0; // cyclic order, or half the dihedral order
    std::vector<int> element_orders; // sorted ascending
    bool abelian = false;

    std::string name() const;
};

/// Identifies the isomorphism type among the families arising for these
/// derivations; anything else lands in Other with its order profile. The
/// order-4 dihedral group is reported as Klein4 (they coincide).
GroupType identify(const std::vector<Endomorphism>& elements);

} // namespace lv
