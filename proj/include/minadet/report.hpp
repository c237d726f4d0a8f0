#pragma once

#include <string>
#include <utility>
#include <vector>

namespace minadet {

// Verdict of one identity verification. pass is true iff computed and
// expected are structurally equal in the coefficient domain (and every
// ancillary entrywise check the verifier performs holds). Parameters are
// rendered strings in a fixed order, so serialized reports are
// deterministic.
struct Report {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::string computed;
    std::string expected;
    bool pass = false;
    double elapsed_ms = 0.0;

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

}  // namespace minadet
