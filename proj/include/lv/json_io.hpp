#pragma once

#include <json.hpp>

#include "lv/derivation.hpp"
#include "lv/endomorphism.hpp"
#include "lv/oracle.hpp"
#include "lv/solver.hpp"

namespace lv {

using Json = nlohmann::ordered_json;

// Terms are emitted in graded-lexicographic order, leading term first, with
// reduced fraction coefficient strings; parse/dump round-trips are bit-exact.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json endo_to_json(const Endomorphism& e);
Endomorphism endo_from_json(const Json& j);

Json affine_to_json(const AffineEndomorphism& a);
AffineEndomorphism affine_from_json(const Json& j);

Json params_to_json(const LVParameters& p);
LVParameters params_from_json(const Json& j);

Json group_to_json(const GroupType& g);
Json certificate_to_json(const Certificate& c);
Json family_to_json(const WitnessFamily& f, const FamilyVerification* report);
Json result_to_json(const IsotropyResult& r);
Json oracle_report_to_json(const OracleReport& r);

} // namespace lv
