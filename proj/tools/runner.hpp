#pragma once

#include "hallforge/check.hpp"
#include "hallforge/hallcore/hall_algebra.hpp"
#include "hallforge/qtorus/qtorus.hpp"
#include "hallforge/repfield/quiver.hpp"
#include "hallforge/rootcox/rootcox.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hallforge::cli {

inline constexpr const char* kToolName = "hall-forge";
inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed or inconsistent scenario file; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckRequest {
    std::string name;
    nlohmann::json options = nlohmann::json::object();
};

struct Scenario {
    std::string name;
    std::string kind; // quiver | valued-rank2 | jordan | torus
    std::string q_mode = "specialized";
    int p = 0;
    hallcore::DimVec truncation;
    int order = 0;
    int depth = 50;
    nlohmann::json echo;
    std::vector<CheckRequest> checks;

    std::shared_ptr<const repfield::IndecomposableTable> table;
    std::shared_ptr<hallcore::HallAlgebra<Specialized>> alg;
    std::shared_ptr<hallcore::HallAlgebra<Symbolic>> sym;
    std::optional<rootcox::ValuedGraphSpec> graph;
    std::optional<qtorus::TorusParams> torus;

    bool symbolic() const { return q_mode == "symbolic"; }
    std::string truncation_text() const;
    std::string q_mode_text() const;
};

/// Throws ConfigError.
Scenario load_scenario(const nlohmann::json& j);
Scenario load_scenario_file(const std::string& path);

using CheckFn = std::function<CheckOutcome(const Scenario&, const nlohmann::json&)>;

struct CheckInfo {
    std::string name;
    std::string anchor;
    std::vector<std::string> kinds;
    std::vector<std::string> variants;
    CheckFn run;
};

const std::vector<CheckInfo>& registry();
const CheckInfo* find_check(const std::string& name);

struct CheckRecord {
    std::string name;
    CheckOutcome outcome;
    double elapsed_ms = 0;
    int exit_class = 0; // 0 ok, 2 bad options, 3 internal error
};

CheckRecord run_check(const Scenario& s, const CheckRequest& req);

struct RunOptions {
    bool parallel = false;
    bool timing = true;
};

/// Runs every requested check and assembles the report. `exit_code` is 0 when every check
/// passed or was skipped, 1 on a failure or undecided result, 2 or 3 on errors.
nlohmann::json run_scenario(const Scenario& s, const RunOptions& opts, int& exit_code);

std::string list_checks_text();

int cli_main(int argc, char** argv);

} // namespace hallforge::cli
