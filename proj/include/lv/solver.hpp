#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lv/derivation.hpp"
#include "lv/endomorphism.hpp"
#include "lv/group_id.hpp"

namespace lv {

/// Four-variable case split by how many coefficients equal -1 and, for two,
/// whether the positions are consecutive or opposite.
enum class SentenceClass {
    S1AllMinusOne,
    S2Three,
    S3aConsecutive,
    S3bAlternate,
    S4One,
    S5None,
};

const char* sentence_class_name(SentenceClass c);
SentenceClass sentence_class(const std::vector<Rational>& c4);

/// Shifts sigma with C invariant under index shift by sigma; a subgroup of
/// Z_n containing 0.
std::vector<int> shift_subgroup(const LVParameters& params);

/// Indices r admitting the reversal x_i -> -C_{r-i} x_{r-i+1}; requires
/// C_{i-1} C_{r-i} = 1 for every i, hence empty as soon as some C_i = 0.
std::vector<int> reflection_indices(const LVParameters& params);

Endomorphism shift_map(int nvars, int sigma);
Endomorphism reflection_map(const LVParameters& params, int r);

/// Parametrized set of candidate isotropy elements, affine in its
/// parameters: instantiate(t) = base + sum_k t_k * delta_k imagewise.
struct WitnessFamily {
    std::string description;
    std::vector<std::string> parameter_names;
    Endomorphism base;
    std::vector<Endomorphism> deltas;
    Polynomial constraint;        // in the parameters; instance invertible iff != 0
    std::string constraint_text;
    int parameter_degree_bound = 1;
    bool nonlinear_candidate = false;

    WitnessFamily() : constraint(1) {}

    std::size_t arity() const { return parameter_names.size(); }
    Endomorphism instantiate(const std::vector<Rational>& values) const;
    bool admissible(const std::vector<Rational>& values) const;

    /// Whether rho lies in the affine span of the family at an admissible or
    /// inadmissible parameter point.
    bool contains(const Endomorphism& rho) const;
};

struct FamilySample {
    std::vector<Rational> values;
    bool commutes = false;
    Certificate::Kind certificate = Certificate::Kind::Unknown;
};

struct FamilyVerification {
    bool commutation_proven = false; // residual vanishes on a full degree+1 grid
    bool inconclusive = false;       // not enough admissible sample tuples
    bool all_samples_invertible = false;
    std::vector<FamilySample> samples; // the admissible tuples actually certified
};

/// Proves the family's commutation identity by evaluating the residual on a
/// (degree bound + 1)^arity grid, then certifies invertibility at admissible
/// sample tuples drawn from 0, 1, -1, 2, 3, ...
FamilyVerification verify_family(const WitnessFamily& family, const Derivation& d);

enum class PairAction { Identity, Swap };

struct BlockAffineResult {
    std::vector<WitnessFamily> families;   // at least one free parameter each
    std::vector<Endomorphism> isolated;    // zero-parameter solutions, invertible only
};

/// Exact linear solve, for n = 4, of the commutation identities over the
/// affine maps that act on {x1, x3} by the given pair action and send x2, x4
/// into the affine span of {x2, x4}.
BlockAffineResult block_affine_families(const LVParameters& params, PairAction action);

/// Provenance of a classification result.
enum class Provenance { PublishedTheorem, UnverifiedClaim, SolverDerived };
const char* provenance_name(Provenance p);

struct ElementReport {
    bool commutes = false;
    bool degree_lemma = false;
    bool constants_zero = false;
    bool invertible = false;
};

struct IsotropyResult {
    LVParameters params;
    enum class Kind { Finite, Infinite } kind = Kind::Finite;
    std::vector<Endomorphism> elements; // finite: the whole group; infinite: the
                                        // concrete (monomial and isolated) part
    std::vector<ElementReport> element_reports;
    std::vector<WitnessFamily> families;
    std::vector<FamilyVerification> family_reports;
    std::optional<GroupType> group;
    Provenance provenance = Provenance::PublishedTheorem;
    // "pass" / "fail" / "skipped"
    std::string check_commutation, check_closure, check_degree_lemma, check_constants_zero;
    std::vector<std::string> notes;
    bool proven_element_failed = false; // signals an internal inconsistency
};

/// True iff {rho(x1)+rho(x3), rho(x2)+rho(x4)} equals {x1+x3, x2+x4} as a
/// set. Only meaningful for n = 4.
bool s1_sum_invariant_check(const Endomorphism& rho);

IsotropyResult classify_n3(const LVParameters& params);
IsotropyResult classify_n4(const LVParameters& params);
IsotropyResult classify_general(const LVParameters& params); // n >= 5
IsotropyResult classify(const LVParameters& params);

/// The degree-two one-parameter candidate family attached to the all
/// minus-one case; commutes with the derivation but has non-constant
/// Jacobian determinant, which the verification report must surface.
WitnessFamily nonlinear_candidate_family();

} // namespace lv
