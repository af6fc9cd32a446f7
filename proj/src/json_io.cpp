#include "lv/json_io.hpp"

#include "lv/errors.hpp"

namespace lv {

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& s : j) out.push_back(Rational::parse(s.get<std::string>()));
    return out;
}

} // namespace

Json poly_to_json(const Polynomial& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["coeff"] = c.str();
        t["exps"] = m.exps;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.contains("nvars") || !j.contains("terms")) throw parse_error("polynomial: missing keys");
    const int n = j.at("nvars").get<int>();
    Polynomial p(n);
    for (const auto& t : j.at("terms")) {
        Monomial m{t.at("exps").get<std::vector<int>>()};
        p += Polynomial::term(m, Rational::parse(t.at("coeff").get<std::string>()), n);
    }
    return p;
}

Json derivation_to_json(const Derivation& d) {
    Json j;
    j["nvars"] = d.nvars;
    Json imgs = Json::array();
    for (const auto& img : d.images) imgs.push_back(poly_to_json(img));
    j["images"] = std::move(imgs);
    return j;
}

Derivation derivation_from_json(const Json& j) {
    Derivation d{j.at("nvars").get<int>(), {}};
    for (const auto& img : j.at("images")) d.images.push_back(poly_from_json(img));
    if (static_cast<int>(d.images.size()) != d.nvars)
        throw parse_error("derivation: image count mismatch");
    return d;
}

Json endo_to_json(const Endomorphism& e) {
    Json j;
    j["nvars"] = e.nvars;
    Json imgs = Json::array();
    for (const auto& img : e.images) imgs.push_back(poly_to_json(img));
    j["images"] = std::move(imgs);
    return j;
}

Endomorphism endo_from_json(const Json& j) {
    Endomorphism e{j.at("nvars").get<int>(), {}};
    for (const auto& img : j.at("images")) e.images.push_back(poly_from_json(img));
    if (static_cast<int>(e.images.size()) != e.nvars)
        throw parse_error("endomorphism: image count mismatch");
    for (const auto& img : e.images)
        if (img.nvars() != e.nvars) throw parse_error("endomorphism: image nvars mismatch");
    return e;
}

Json affine_to_json(const AffineEndomorphism& a) {
    Json j;
    j["nvars"] = a.nvars;
    Json rows = Json::array();
    for (const auto& row : a.matrix) rows.push_back(rationals_to_json(row));
    j["matrix"] = std::move(rows);
    j["constants"] = rationals_to_json(a.constants);
    return j;
}

AffineEndomorphism affine_from_json(const Json& j) {
    AffineEndomorphism a;
    a.nvars = j.at("nvars").get<int>();
    for (const auto& row : j.at("matrix")) a.matrix.push_back(rationals_from_json(row));
    a.constants = rationals_from_json(j.at("constants"));
    if (static_cast<int>(a.matrix.size()) != a.nvars ||
        static_cast<int>(a.constants.size()) != a.nvars)
        throw parse_error("affine map: shape mismatch");
    for (const auto& row : a.matrix)
        if (static_cast<int>(row.size()) != a.nvars) throw parse_error("affine map: ragged matrix");
    return a;
}

Json params_to_json(const LVParameters& p) {
    Json j;
    j["n"] = p.n;
    j["C"] = rationals_to_json(p.C);
    return j;
}

LVParameters params_from_json(const Json& j) {
    LVParameters p{j.at("n").get<int>(), rationals_from_json(j.at("C"))};
    p.validate();
    return p;
}

Json group_to_json(const GroupType& g) {
    Json j;
    j["order"] = g.order;
    j["type"] = g.name();
    if (g.tag == GroupType::Tag::Cyclic || g.tag == GroupType::Tag::Dihedral) j["m"] = g.m;
    j["element_orders"] = g.element_orders;
    j["abelian"] = g.abelian;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["kind"] = Certificate::name(c.kind);
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.inverse) j["inverse"] = endo_to_json(*c.inverse);
    return j;
}

Json family_to_json(const WitnessFamily& f, const FamilyVerification* report) {
    Json j;
    j["description"] = f.description;
    j["parameters"] = f.parameter_names;
    j["constraint"] = f.constraint_text;
    j["degree_bound"] = f.parameter_degree_bound;
    j["nonlinear_candidate"] = f.nonlinear_candidate;
    if (report) {
        j["verified"] = report->commutation_proven && report->all_samples_invertible;
        Json samples = Json::array();
        for (const auto& s : report->samples) {
            Json sj;
            sj["values"] = rationals_to_json(s.values);
            sj["commutes"] = s.commutes;
            sj["certificate"] = Certificate::name(s.certificate);
            samples.push_back(std::move(sj));
        }
        j["commutation_proven"] = report->commutation_proven;
        j["inconclusive"] = report->inconclusive;
        j["samples"] = std::move(samples);
    } else {
        j["verified"] = false;
    }
    return j;
}

Json result_to_json(const IsotropyResult& r) {
    Json j;
    j["n"] = r.params.n;
    j["C"] = rationals_to_json(r.params.C);
    j["kind"] = r.kind == IsotropyResult::Kind::Finite ? "finite" : "infinite";
    Json els = Json::array();
    for (const auto& e : r.elements) els.push_back(endo_to_json(e));
    j["elements"] = std::move(els);
    Json fams = Json::array();
    for (std::size_t i = 0; i < r.families.size(); ++i)
        fams.push_back(family_to_json(r.families[i],
                                      i < r.family_reports.size() ? &r.family_reports[i]
                                                                  : nullptr));
    j["families"] = std::move(fams);
    j["group"] = r.group ? group_to_json(*r.group) : Json(nullptr);
    j["completeness"] = provenance_name(r.provenance);
    Json checks;
    checks["commutation"] = r.check_commutation;
    checks["closure"] = r.check_closure;
    checks["degree_lemma"] = r.check_degree_lemma;
    checks["constants_zero"] = r.check_constants_zero;
    j["checks"] = std::move(checks);
    j["notes"] = r.notes;
    j["internal_inconsistency"] = r.proven_element_failed;
    return j;
}

Json oracle_report_to_json(const OracleReport& r) {
    Json j;
    j["p"] = r.p;
    j["mode"] = oracle_mode_name(r.mode);
    j["count"] = r.count;
    j["injection"] = r.injection;
    Json missing = Json::array();
    for (const auto& e : r.missing) missing.push_back(endo_to_json(e));
    j["missing"] = std::move(missing);
    j["extras"] = r.extras;
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    j["visited_nodes"] = r.visited_nodes;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace lv
