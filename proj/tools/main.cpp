#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lv/errors.hpp"
#include "lv/json_io.hpp"
#include "lv/oracle.hpp"
#include "lv/solver.hpp"

namespace {

using lv::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDiscrepancy = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void emit(const OutputOptions& opts, const std::string& document) {
    if (opts.out_path.empty()) {
        std::cout << document << "\n";
        return;
    }
    std::ofstream f(opts.out_path);
    if (!f) throw lv::parse_error("cannot open output file: " + opts.out_path);
    f << document << "\n";
}

lv::LVParameters parse_params(int n, const std::string& c_csv) {
    lv::LVParameters params;
    params.n = n;
    std::stringstream ss(c_csv);
    std::string item;
    while (std::getline(ss, item, ',')) params.C.push_back(lv::Rational::parse(item));
    params.validate();
    return params;
}

std::string render_params(const lv::LVParameters& p) {
    std::string s = "(";
    for (int i = 0; i < p.n; ++i) {
        if (i) s += ", ";
        s += p.C[i].str();
    }
    return s + ")";
}

std::string classify_markdown(const lv::IsotropyResult& r) {
    std::ostringstream os;
    os << "# Isotropy group, n = " << r.params.n << ", C = " << render_params(r.params) << "\n\n";
    os << "- kind: " << (r.kind == lv::IsotropyResult::Kind::Finite ? "finite" : "infinite")
       << "\n";
    if (r.group) os << "- group: " << r.group->name() << " of order " << r.group->order << "\n";
    os << "- completeness: " << lv::provenance_name(r.provenance) << "\n";
    os << "- checks: commutation " << r.check_commutation << ", closure " << r.check_closure
       << ", degree_lemma " << r.check_degree_lemma << ", constants_zero "
       << r.check_constants_zero << "\n\n";
    os << "## Elements\n\n";
    for (const auto& e : r.elements) os << "- `" << e.str() << "`\n";
    if (!r.families.empty()) {
        os << "\n## Families\n\n";
        for (std::size_t i = 0; i < r.families.size(); ++i) {
            const auto& f = r.families[i];
            os << "- `" << f.description << "`  \n  constraint: " << f.constraint_text;
            if (i < r.family_reports.size()) {
                const auto& rep = r.family_reports[i];
                os << "  \n  commutation proven: " << (rep.commutation_proven ? "yes" : "no")
                   << ", samples invertible: " << (rep.all_samples_invertible ? "yes" : "no");
            }
            os << "\n";
        }
    }
    if (!r.notes.empty()) {
        os << "\n## Notes\n\n";
        for (const auto& n : r.notes) os << "- " << n << "\n";
    }
    return os.str();
}

int cmd_classify(const lv::LVParameters& params, const OutputOptions& opts) {
    const lv::IsotropyResult result = lv::classify(params);
    if (opts.format == "markdown")
        emit(opts, classify_markdown(result));
    else
        emit(opts, lv::result_to_json(result).dump(2));
    if (result.proven_element_failed) {
        std::cerr << "internal verification failed for a theorem-backed element\n";
        return kExitDiscrepancy;
    }
    return kExitOk;
}

int cmd_verify(const lv::LVParameters& params, const std::string& map_path,
               const OutputOptions& opts) {
    std::ifstream f(map_path);
    if (!f) {
        std::cerr << "cannot open map file: " << map_path << "\n";
        return kExitInput;
    }
    Json mj;
    try {
        f >> mj;
    } catch (const std::exception& e) {
        std::cerr << "map file is not valid JSON: " << e.what() << "\n";
        return kExitInput;
    }
    const lv::Endomorphism rho = lv::endo_from_json(mj);
    if (rho.nvars != params.n) {
        std::cerr << "map has " << rho.nvars << " variables, expected " << params.n << "\n";
        return kExitInput;
    }
    const lv::Derivation d = lv::lv_derivation(params);
    const bool comm = lv::commutes(rho, d);
    const lv::Certificate cert = lv::certify_automorphism(rho);
    const bool deg = lv::degree_one_image_check(rho, params);
    const lv::Polynomial jac = lv::jacobian_det(rho);

    Json j;
    j["n"] = params.n;
    j["C"] = lv::params_to_json(params)["C"];
    j["map"] = lv::endo_to_json(rho);
    j["commutes"] = comm;
    j["certificate"] = lv::certificate_to_json(cert);
    j["degree_lemma"] = deg;
    j["jacobian_det"] = lv::poly_to_json(jac);
    j["jacobian_det_text"] = jac.str();
    if (opts.format == "markdown") {
        std::ostringstream os;
        os << "# Map verification, n = " << params.n << ", C = " << render_params(params)
           << "\n\n"
           << "- map: `" << rho.str() << "`\n"
           << "- commutes: " << (comm ? "yes" : "no") << "\n"
           << "- certificate: " << lv::Certificate::name(cert.kind)
           << (cert.reason.empty() ? "" : " (" + cert.reason + ")") << "\n"
           << "- degree lemma: " << (deg ? "pass" : "fail") << "\n"
           << "- jacobian determinant: `" << jac.str() << "`\n";
        emit(opts, os.str());
    } else {
        emit(opts, j.dump(2));
    }
    return kExitOk;
}

int cmd_oracle(const lv::LVParameters& params, std::uint32_t p, std::string mode_name,
               std::uint64_t budget, const OutputOptions& opts) {
    if (mode_name.empty()) mode_name = params.n == 3 ? "affine" : "linear";
    const lv::OracleMode mode =
        mode_name == "affine" ? lv::OracleMode::Affine : lv::OracleMode::Linear;
    if (p == 0) {
        p = lv::first_admissible_prime(params);
        if (p == 0) {
            std::cerr << "no admissible prime among 5, 7, 11, 13 for these coefficients\n";
            return kExitInput;
        }
    } else if (!lv::admissible_prime(params, p)) {
        std::cerr << "prime " << p << " is inadmissible for these coefficients\n";
        return kExitInput;
    }
    const lv::IsotropyResult result = lv::classify(params);
    if (result.kind != lv::IsotropyResult::Kind::Finite) {
        std::cerr << "oracle cross-check needs a finite classification\n";
        return kExitInput;
    }
    lv::OracleOptions oopts;
    oopts.node_budget = budget;
    const lv::OracleReport report = lv::cross_check(result, params, p, mode, oopts);
    if (opts.format == "markdown") {
        std::ostringstream os;
        os << "# Oracle cross-check, n = " << params.n << ", C = " << render_params(params)
           << "\n\n- prime: " << report.p << ", mode: " << lv::oracle_mode_name(report.mode)
           << "\n- solutions over the prime field: " << report.count
           << "\n- injection holds: " << (report.injection ? "yes" : "no")
           << "\n- extras (no rational preimage in the classification): " << report.extras
           << "\n- visited nodes: " << report.visited_nodes << "\n";
        emit(opts, os.str());
    } else {
        emit(opts, lv::oracle_report_to_json(report).dump(2));
    }
    return report.injection ? kExitOk : kExitDiscrepancy;
}

struct TableRow {
    std::string sigma; // permutation label; empty outside the third table
    std::string condition;
    std::string map_text;
    lv::LVParameters sample;
    lv::Endomorphism (*build)(const lv::LVParameters&);
};

lv::Polynomial X(int i) { return lv::Polynomial::variable(i, 3); }

std::vector<TableRow> table_rows(int which) {
    using P = lv::LVParameters;
    auto C = [](const char* a, const char* b, const char* c) {
        return P{3,
                 {lv::Rational::parse(a), lv::Rational::parse(b), lv::Rational::parse(c)}};
    };
    const auto id_map = +[](const P&) { return lv::Endomorphism::identity(3); };
    const auto rot1 = +[](const P&) { return lv::Endomorphism{3, {X(1), X(2), X(0)}}; };
    const auto rot2 = +[](const P&) { return lv::Endomorphism{3, {X(2), X(0), X(1)}}; };
    // conditional reversal rows, coefficients depending on C
    const auto r23_neg = +[](const P& p) {
        return lv::Endomorphism{3, {-p.C[2].inverse() * X(2), X(1), -p.C[2] * X(0)}};
    };
    const auto r12_neg = +[](const P& p) {
        return lv::Endomorphism{3, {X(0), -p.C[1] * X(2), -p.C[1].inverse() * X(1)}};
    };
    const auto r13_neg = +[](const P& p) {
        return lv::Endomorphism{3, {-p.C[2].inverse() * X(1), -p.C[2] * X(0), X(2)}};
    };
    const auto r23_pos = +[](const P& p) {
        return lv::Endomorphism{3, {-p.C[2].inverse() * X(2), -X(1), -p.C[2] * X(0)}};
    };
    const auto r12_pos = +[](const P& p) {
        return lv::Endomorphism{3, {-X(0), -p.C[1] * X(2), -p.C[1].inverse() * X(1)}};
    };
    const auto r13_pos = +[](const P& p) {
        return lv::Endomorphism{3, {-p.C[2].inverse() * X(1), -p.C[2] * X(0), -X(2)}};
    };

    std::vector<TableRow> rows;
    if (which == 1) {
        rows = {
            {"", "C1, C2, C3 arbitrary, C1*C2*C3 != 1", "(x1, x2, x3)", C("2", "3", "5"), id_map},
            {"", "C2*C3 = 1, C1 = -1", "(-C3^-1*x3, x2, -C3*x1)", C("-1", "1/2", "2"), r23_neg},
            {"", "C1*C2 = 1, C3 = -1", "(x1, -C2*x3, -C2^-1*x2)", C("1/2", "2", "-1"), r12_neg},
            {"", "C1*C3 = 1, C2 = -1", "(-C3^-1*x2, -C3*x1, x3)", C("1/2", "-1", "2"), r13_neg},
            {"", "C1 = C2 = C3, C1^3 != 1", "(x2, x3, x1)", C("5", "5", "5"), rot1},
            {"", "C1 = C2 = C3, C1^3 != 1", "(x3, x1, x2)", C("5", "5", "5"), rot2},
        };
    } else if (which == 2) {
        const auto s23a = +[](const P&) { return lv::Endomorphism{3, {X(0) + X(1), -X(1), -X(1) + X(2)}}; };
        const auto s23b = +[](const P&) { return lv::Endomorphism{3, {-X(1) + X(2), X(1), X(0) + X(1)}}; };
        const auto s12a = +[](const P&) { return lv::Endomorphism{3, {X(0), X(0) + X(2), -X(0) + X(1)}}; };
        const auto s12b = +[](const P&) { return lv::Endomorphism{3, {-X(0), -X(0) + X(1), X(0) + X(2)}}; };
        const auto s13a = +[](const P&) { return lv::Endomorphism{3, {X(0) - X(2), X(1) + X(2), -X(2)}}; };
        const auto s13b = +[](const P&) { return lv::Endomorphism{3, {X(1) + X(2), X(0) - X(2), X(2)}}; };
        rows = {
            {"", "C1, C2, C3 arbitrary, C1*C2*C3 = 1", "(x1, x2, x3)", C("2", "3", "1/6"), id_map},
            {"", "C2*C3 = 1, C1 = 1", "(-C3^-1*x3, -x2, -C3*x1)", C("1", "1/2", "2"), r23_pos},
            {"", "C1*C2 = 1, C3 = 1", "(-x1, -C2*x3, -C2^-1*x2)", C("1/2", "2", "1"), r12_pos},
            {"", "C1*C3 = 1, C2 = 1", "(-C3^-1*x2, -C3*x1, -x3)", C("1/2", "1", "2"), r13_pos},
            {"", "C1 = C2 = C3 = 1", "(x2, x3, x1)", C("1", "1", "1"), rot1},
            {"", "C1 = C2 = C3 = 1", "(x3, x1, x2)", C("1", "1", "1"), rot2},
            {"", "C2 = C3 = -1, C1 = 1", "(x1+x2, -x2, -x2+x3)", C("1", "-1", "-1"), s23a},
            {"", "C2 = C3 = -1, C1 = 1", "(-x2+x3, x2, x1+x2)", C("1", "-1", "-1"), s23b},
            {"", "C1 = C2 = -1, C3 = 1", "(x1, x1+x3, -x1+x2)", C("-1", "-1", "1"), s12a},
            {"", "C1 = C2 = -1, C3 = 1", "(-x1, -x1+x2, x1+x3)", C("-1", "-1", "1"), s12b},
            {"", "C1 = C3 = -1, C2 = 1", "(x1-x3, x2+x3, -x3)", C("-1", "1", "-1"), s13a},
            {"", "C1 = C3 = -1, C2 = 1", "(x2+x3, x1-x3, x3)", C("-1", "1", "-1"), s13b},
        };
    } else {
        rows = {
            {"id", "C1, C2, C3 arbitrary", "(x1, x2, x3)", C("2", "3", "5"), id_map},
            {"(1 2)", "C1*C3 = 1, C2 = -1", "(-C3^-1*x2, -C3*x1, x3)", C("1/2", "-1", "2"), r13_neg},
            {"(1 3)", "C2*C3 = 1, C1 = -1", "(-C3^-1*x3, x2, -C3*x1)", C("-1", "1/2", "2"), r23_neg},
            {"(2 3)", "C1*C2 = 1, C3 = -1", "(x1, -C2*x3, -C2^-1*x2)", C("1/2", "2", "-1"), r12_neg},
            {"(1 2 3)", "C1 = C2 = C3", "(x2, x3, x1)", C("5", "5", "5"), rot1},
            {"(1 3 2)", "C1 = C2 = C3", "(x3, x1, x2)", C("5", "5", "5"), rot2},
        };
    }
    return rows;
}

int cmd_tables(int which, const OutputOptions& opts) {
    const auto rows = table_rows(which);
    bool all_verified = true;
    Json j;
    j["which"] = which;
    Json out_rows = Json::array();
    for (const auto& row : rows) {
        const lv::Endomorphism e = row.build(row.sample);
        const bool ok = lv::commutes(e, lv::lv_derivation(row.sample));
        all_verified &= ok;
        Json rj;
        if (!row.sigma.empty()) rj["sigma"] = row.sigma;
        rj["condition"] = row.condition;
        rj["map"] = row.map_text;
        rj["sample_C"] = lv::params_to_json(row.sample)["C"];
        rj["sample_map"] = e.str();
        rj["verified"] = ok;
        out_rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(out_rows);
    if (opts.format == "markdown") {
        std::ostringstream os;
        os << "# Classification table " << which << "\n\n";
        const bool with_sigma = which == 3;
        os << (with_sigma ? "| sigma | condition | map | sample C | verified |\n|---|---|---|---|---|\n"
                          : "| condition | map | sample C | verified |\n|---|---|---|---|\n");
        for (const auto& rj : j["rows"]) {
            os << "| ";
            if (with_sigma) os << rj["sigma"].get<std::string>() << " | ";
            os << rj["condition"].get<std::string>() << " | `" << rj["map"].get<std::string>()
               << "` | " << rj["sample_C"].dump() << " | "
               << (rj["verified"].get<bool>() ? "yes" : "no") << " |\n";
        }
        emit(opts, os.str());
    } else {
        emit(opts, j.dump(2));
    }
    return all_verified ? kExitOk : kExitDiscrepancy;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification and verification of the symmetry groups of "
                 "Lotka-Volterra polynomial vector fields"};
    app.require_subcommand(1);

    int n = 0;
    std::string c_csv, map_path, mode_name;
    std::uint32_t prime = 0;
    std::uint64_t budget = 2'000'000'000ULL;
    int which = 1;
    OutputOptions opts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opts.format, "json or markdown")
            ->check(CLI::IsMember({"json", "markdown"}));
        sub->add_option("--out", opts.out_path, "write the document to a file instead of stdout");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--n", n, "number of variables (>= 3)")->required();
        sub->add_option("--c", c_csv, "comma-separated rational coefficients, e.g. 1,-1,1/2")
            ->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the isotropy group");
    add_params(classify);
    add_common(classify);

    CLI::App* verify = app.add_subcommand("verify", "verify a user-supplied map");
    add_params(verify);
    verify->add_option("--map", map_path, "path to an endomorphism JSON file")->required();
    add_common(verify);

    CLI::App* oracle = app.add_subcommand("oracle", "prime-field brute-force cross-check");
    add_params(oracle);
    oracle->add_option("--p", prime, "prime modulus (default: first admissible of 5,7,11,13)");
    oracle->add_option("--mode", mode_name, "linear or affine (default: affine for n=3)")
        ->check(CLI::IsMember({"linear", "affine"}));
    oracle->add_option("--budget", budget, "search node budget");
    add_common(oracle);

    CLI::App* tables = app.add_subcommand("tables", "print a three-variable classification table");
    tables->add_option("--which", which, "table number")->check(CLI::IsMember({1, 2, 3}))
        ->required();
    add_common(tables);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(parse_params(n, c_csv), opts);
        if (verify->parsed()) return cmd_verify(parse_params(n, c_csv), map_path, opts);
        if (oracle->parsed())
            return cmd_oracle(parse_params(n, c_csv), prime, mode_name, budget, opts);
        if (tables->parsed()) return cmd_tables(which, opts);
    } catch (const lv::budget_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiscrepancy;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
