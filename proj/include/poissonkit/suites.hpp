#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poissonkit/centralizer.hpp"
#include "poissonkit/leafrank.hpp"

namespace poissonkit {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Result of one verification suite; rendered as human-readable text and as
/// the uniform JSON report by the CLI.
struct SuiteResult {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    std::vector<Check> checks;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

/// {schema_version, command, params, seed?, checks, pass, wall_ms}.
nlohmann::ordered_json report_json(const SuiteResult& result, long long wall_ms);

/// Jacobi defect of every distinct generator triple under one table.
SuiteResult suite_jacobi(const std::string& structure, int n);

/// {c_i, c_j} = 0 for all pairs.
SuiteResult suite_involutive(int n, const std::string& structure = "semiclassical");

/// Commutator-over-(t-1) limits against the commutative bracket:
/// all generator pairs plus seeded random monomial pairs of degree <= 2.
SuiteResult suite_limit(int n, std::uint64_t seed, int random_pairs);

/// Centralizer dimensions d <= max_degree and the closed-form expansions of
/// {a+d, .} on the three basis families with exponents <= max_exponent.
SuiteResult suite_sl2(int max_degree = 6, int max_exponent = 3);

/// {x[1,1], m}_gr = gr_weight(m) x[1,1] m for every monomial of each degree.
SuiteResult suite_gr_weight(int n, int max_degree);

/// Per-degree centralizer verification: exact nullspace dimension vs the
/// partition count, c-monomial span, gr containment and delta_phi
/// injectivity of the computed basis. States the verified degree range.
SuiteResult suite_centralizer(int n, int max_degree, const CentralizerOptions& opts = {});

SuiteResult suite_quantum_commute(int n);
SuiteResult suite_quantum_det_central(int n);
SuiteResult suite_quantum_limit(int n, std::uint64_t seed, int random_pairs);

SuiteResult suite_rank(SpaceTag space, int n, int samples, std::uint64_t seed);
SuiteResult suite_weyl(int n);

} // namespace poissonkit
