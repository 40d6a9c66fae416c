#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/vgraph.hpp"

namespace vulnkit::cli {

/// Bad flags, missing parameters or a parameter that does not fit the problem.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Problem { vi, wvi, coc, wcoc };

const char* to_string(Problem problem);
/// Throws UsageError on unknown names.
Problem parse_problem(const std::string& name);

/// True for vi and wvi.
bool is_integrity(Problem problem);

struct Parameters {
    std::optional<Weight> p;
    std::optional<Weight> k;
    std::optional<Weight> l;
};

using StatValue = std::variant<std::int64_t, bool, std::string>;

struct RunResult {
    Problem problem = Problem::wvi;
    /// Algorithm that actually ran (auto is resolved).
    std::string algorithm;
    bool yes = false;
    /// 0-based original ids; meaningful only when yes.
    VertexSet witness;
    /// Objective of the witness when yes.
    std::optional<Certificate> objective;
    std::vector<std::pair<std::string, StatValue>> stats;
    double wall_ms = 0;
};

/// Algorithm names accepted by solve.
const std::vector<std::string>& algorithm_names();

/// Runs one solver on the instance. Explicit parameters override the
/// instance's `param` lines. vi and coc ignore the file weights and use unit
/// weights. Throws UsageError for missing or mismatched parameters and
/// PreconditionError when the chosen algorithm does not apply.
RunResult solve(const ParsedInstance& instance, Problem problem, const std::string& algorithm,
                const Parameters& explicit_params);

/// Command-line entry point; args exclude the program name.
/// Returns 0 when the command ran, 2 on parse or usage errors, 3 when a
/// solver precondition is not met.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vulnkit::cli
