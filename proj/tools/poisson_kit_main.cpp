// Command-line front end: every verification and computation of the library
// as a reproducible command with human-readable output and a uniform JSON
// report (--json <path>).
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 bad arguments
// or parse error, 3 resource cap exceeded.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "poissonkit/invariants.hpp"
#include "poissonkit/parse.hpp"
#include "poissonkit/suites.hpp"

using namespace poissonkit;

namespace {

bool stable_output() {
    const char* env = std::getenv("POISSON_KIT_STABLE_OUTPUT");
    return env && std::string(env) == "1";
}

std::string timestamp_now() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

/// Prints the suite, writes the JSON report when requested, returns the
/// process exit code.
int finish(const SuiteResult& result, const std::string& json_path,
           std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::steady_clock::now() - started;
    long long wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    std::cout << "# " << result.command;
    for (const auto& [key, value] : result.params.items())
        std::cout << " " << key << "=" << value;
    if (!stable_output())
        std::cout << "  (" << timestamp_now() << ")";
    std::cout << "\n";
    for (const Check& c : result.checks)
        std::cout << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name
                  << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    bool pass = result.pass();
    std::cout << (pass ? "PASS" : "FAIL");
    if (!stable_output())
        std::cout << " (" << wall_ms << " ms)";
    std::cout << "\n";

    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << report_json(result, stable_output() ? 0 : wall_ms).dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

SuiteResult polynomial_result(const std::string& command, nlohmann::ordered_json params,
                              const std::string& printed) {
    SuiteResult r;
    r.command = command;
    r.params = std::move(params);
    r.checks.push_back({"result", true, printed});
    std::cout << printed << "\n";
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Poisson/quantum verification toolkit for matrix coordinate rings"};
    app.require_subcommand(1);

    std::string json_path;
    std::string structure = "semiclassical";
    std::string space = "sl";
    int n = 2;
    int index = 1;
    int max_degree = 5;
    int samples = 200;
    int random_pairs = 50;
    std::uint64_t seed = 0;
    bool force = false;
    std::string f_text, g_text;

    auto add_common = [&](CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--json", json_path, "write the JSON report to this path");
        if (with_n)
            cmd->add_option("--n", n, "matrix size");
    };

    CLI::App* cmd_bracket = app.add_subcommand("bracket", "Poisson bracket of two polynomials");
    add_common(cmd_bracket);
    cmd_bracket->add_option("--structure", structure, "semiclassical | kks | gr");
    cmd_bracket->add_option("f", f_text, "first polynomial")->required();
    cmd_bracket->add_option("g", g_text, "second polynomial")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run an invariant suite");
    cmd_verify->require_subcommand(1);
    CLI::App* v_jacobi = cmd_verify->add_subcommand("jacobi", "Jacobi identity on generator triples");
    add_common(v_jacobi);
    v_jacobi->add_option("--structure", structure, "semiclassical | kks | gr");
    CLI::App* v_invol = cmd_verify->add_subcommand("involutive", "{c_i, c_j} = 0 for all pairs");
    add_common(v_invol);
    v_invol->add_option("--structure", structure, "semiclassical | kks | gr");
    CLI::App* v_limit = cmd_verify->add_subcommand("limit", "commutator/(t-1) limits vs the bracket");
    add_common(v_limit);
    v_limit->add_option("--seed", seed, "random seed");
    v_limit->add_option("--samples", random_pairs, "number of random monomial pairs");
    CLI::App* v_sl2 = cmd_verify->add_subcommand("sl2", "SL2 centralizer dims and expansions");
    add_common(v_sl2, false);
    v_sl2->add_option("--max-degree", max_degree, "top filtration degree (default 6)");
    CLI::App* v_grw = cmd_verify->add_subcommand("gr-weight", "gr bracket weight identity");
    add_common(v_grw);
    v_grw->add_option("--max-degree", max_degree, "top monomial degree");

    CLI::App* cmd_centralizer =
        app.add_subcommand("centralizer", "per-degree centralizer of c1 vs the c-subalgebra");
    add_common(cmd_centralizer);
    cmd_centralizer->add_option("--max-degree", max_degree, "verify degrees 0..D (default 5)");
    cmd_centralizer->add_flag("--force", force, "override the size caps");

    CLI::App* cmd_quantum = app.add_subcommand("quantum", "quantized matrix algebra suites");
    cmd_quantum->require_subcommand(1);
    CLI::App* q_commute = cmd_quantum->add_subcommand("commute", "[sigma_i, sigma_j] = 0");
    add_common(q_commute);
    q_commute->add_flag("--force", force, "allow n > 3");
    CLI::App* q_limit = cmd_quantum->add_subcommand("limit", "semiclassical limits vs the bracket");
    add_common(q_limit);
    q_limit->add_option("--seed", seed, "random seed");
    q_limit->add_option("--samples", random_pairs, "number of random monomial pairs");
    q_limit->add_flag("--force", force, "allow n > 3");
    CLI::App* q_det = cmd_quantum->add_subcommand("det-central", "det_t commutes with every generator");
    add_common(q_det);
    q_det->add_flag("--force", force, "allow n > 3");

    CLI::App* cmd_rank = app.add_subcommand("rank", "sampled exact rank of the bracket matrix");
    add_common(cmd_rank);
    cmd_rank->add_option("--space", space, "m | gl | sl");
    cmd_rank->add_option("--samples", samples, "sample count (default 200)");
    cmd_rank->add_option("--seed", seed, "random seed");

    CLI::App* cmd_weyl = app.add_subcommand("weyl", "leaf-dimension enumeration over S_n x S_n");
    add_common(cmd_weyl);

    CLI::App* cmd_charcoeff = app.add_subcommand("charcoeff", "characteristic coefficient c_i");
    add_common(cmd_charcoeff);
    cmd_charcoeff->add_option("--i", index, "coefficient index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    try {
        if (*cmd_bracket) {
            BracketTable table = BracketTable::by_name(structure, n);
            Polynomial f = poly_parse(f_text, table.context());
            Polynomial g = poly_parse(g_text, table.context());
            nlohmann::ordered_json params;
            params["structure"] = structure;
            params["n"] = n;
            params["f"] = f_text;
            params["g"] = g_text;
            return finish(polynomial_result("bracket", params, bracket(table, f, g).to_string()),
                          json_path, started);
        }
        if (*cmd_charcoeff) {
            nlohmann::ordered_json params;
            params["n"] = n;
            params["i"] = index;
            return finish(polynomial_result("charcoeff", params, char_coeff(n, index).to_string()),
                          json_path, started);
        }
        if (*v_jacobi)
            return finish(suite_jacobi(structure, n), json_path, started);
        if (*v_invol)
            return finish(suite_involutive(n, structure), json_path, started);
        if (*v_limit)
            return finish(suite_limit(n, seed, random_pairs), json_path, started);
        if (*v_sl2) {
            if (v_sl2->count("--max-degree") == 0)
                max_degree = 6;
            return finish(suite_sl2(max_degree), json_path, started);
        }
        if (*v_grw) {
            if (v_grw->count("--max-degree") == 0)
                max_degree = 4;
            return finish(suite_gr_weight(n, max_degree), json_path, started);
        }
        if (*cmd_centralizer) {
            if (n > 3 && !force)
                throw ResourceLimitError("centralizer defaults to n <= 3; pass --force");
            CentralizerOptions opts;
            opts.force = force;
            return finish(suite_centralizer(n, max_degree, opts), json_path, started);
        }
        if (*q_commute || *q_limit || *q_det) {
            if (n > 3 && !force)
                throw ResourceLimitError("quantum suites default to n <= 3; pass --force");
            if (*q_commute)
                return finish(suite_quantum_commute(n), json_path, started);
            if (*q_limit)
                return finish(suite_quantum_limit(n, seed, random_pairs), json_path, started);
            return finish(suite_quantum_det_central(n), json_path, started);
        }
        if (*cmd_rank)
            return finish(suite_rank(space_from_name(space), n, samples, seed), json_path, started);
        if (*cmd_weyl)
            return finish(suite_weyl(n), json_path, started);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ContextMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
