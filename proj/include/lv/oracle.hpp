#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lv/derivation.hpp"
#include "lv/endomorphism.hpp"
#include "lv/solver.hpp"

namespace lv {

enum class OracleMode { Linear, Affine };
const char* oracle_mode_name(OracleMode m);

/// A linear or affine map over the prime field, stored flat: n*n matrix
/// entries row-major, then (affine mode only) the n constants.
struct ModpMap {
    std::vector<std::uint32_t> flat;
    bool operator==(const ModpMap&) const = default;
    bool operator<(const ModpMap& o) const { return flat < o.flat; }
};

/// True when reduction mod p keeps the coefficient relations intact: all
/// denominators coprime to p, and every equality among {C_i} and {0, 1, -1}
/// as well as every product relation C_i C_j = 1 holds mod p exactly when it
/// holds over the rationals.
bool admissible_prime(const LVParameters& params, std::uint32_t p);

struct OracleOptions {
    std::uint64_t node_budget = 2'000'000'000ULL;
    int threads = 0; // 0: ISOTROPY_THREADS env var, else hardware concurrency
};

struct OracleRun {
    std::vector<ModpMap> solutions; // canonically sorted
    std::uint64_t visited_nodes = 0;
};

/// Complete pruned enumeration of the invertible maps over F_p commuting
/// with the reduced derivation. Coefficients are assigned with the rows
/// interleaved (the first row seeds a shard, the rest column by column) and
/// every coefficient equation of the quadratic commutation system is checked
/// as soon as its variables are assigned. Throws inadmissible_prime_error or
/// budget_exceeded_error (all-or-nothing).
OracleRun enumerate_modp(const LVParameters& params, std::uint32_t p, OracleMode mode,
                         const OracleOptions& options = {});

/// Straightforward commutation test over F_p: expands both sides of the
/// generator identities densely. Independent of the pruned search's
/// equation schedule, deliberately.
bool modp_commutes(const ModpMap& map, const LVParameters& params, std::uint32_t p,
                   OracleMode mode);

/// Reference scan: enumerates every assignment and filters with
/// modp_commutes plus the determinant test. Exponential; for tiny inputs
/// only.
std::vector<ModpMap> enumerate_modp_exhaustive(const LVParameters& params, std::uint32_t p,
                                               OracleMode mode);

struct OracleReport {
    std::uint32_t p = 0;
    OracleMode mode = OracleMode::Linear;
    std::size_t count = 0;        // oracle solutions
    bool injection = false;       // every classified element reduces into the set
    std::vector<Endomorphism> missing;
    std::size_t extras = 0;       // oracle solutions with no classified preimage
    std::vector<std::string> skipped; // elements not reducible mod p
    std::uint64_t visited_nodes = 0;
    double elapsed_ms = 0.0;
};

/// Reduces every element of a finite classification mod p and tests
/// membership in the enumerated solution set.
OracleReport cross_check(const IsotropyResult& result, const LVParameters& params,
                         std::uint32_t p, OracleMode mode, const OracleOptions& options = {});

/// First admissible prime from 5, 7, 11, 13; 0 when none fits.
std::uint32_t first_admissible_prime(const LVParameters& params);

} // namespace lv
