#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minadet/caserng.hpp"
#include "minadet/identities.hpp"

namespace minadet {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a run needs, as it arrives from the command line. The seed
// fully determines the random case stream; identical configs produce
// byte-identical JSON output (timings are opt-in for that reason).
struct RunConfig {
    std::vector<std::string> identities;  // ids, or the single entry "all"
    int n = -1;                           // -1: per-identity default / cap
    std::string z = "1";                  // rational, or "z" for symbolic
    std::vector<std::string> series;      // expression texts (additive takes two)
    std::string expset;                   // "0,1,4,9"
    std::string xs;                       // "0,1/2,2"
    std::string ms;                       // "0,1,3"
    std::string t_point;                  // rational evaluation point
    int cases = 25;
    bool cases_given = false;
    uint64_t seed = 0;
    bool oracle = false;
    std::string format = "text";          // text | json
    int jobs = 1;
    bool timings = false;
};

struct RunResult {
    std::vector<Report> reports;
    int total = 0;
    int failed = 0;
    double elapsed_ms = 0.0;
};

// The stable identity ids, in registry order.
const std::vector<std::string>& identity_ids();

// Runs the selected verifiers: one explicit case per identity when the
// config pins its inputs, a seeded random suite otherwise. Cases are
// generated sequentially and may execute on `jobs` threads; output order is
// generation order regardless of completion order.
RunResult run_verify(const RunConfig& cfg);

std::string render_verify_text(const RunConfig& cfg, const RunResult& res);
std::string render_verify_json(const RunConfig& cfg, const RunResult& res);

// coeff_matrix for the configured series/n/z, as an aligned text grid or a
// JSON array-of-arrays of exact entry strings.
std::string run_table(const RunConfig& cfg);

// det_bareiss against the b-multiplication triangular shortcut over growing
// n; both paths must agree (all_agree, when given, reports that). Reports
// wall times and coefficient bit growth.
std::string run_bench(const RunConfig& cfg, bool* all_agree = nullptr);

}  // namespace minadet
