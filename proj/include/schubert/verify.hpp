#pragma once

// Named verification checks. Each check replays one of the engine's
// supporting results exhaustively at desk scale and reports per-case
// failures; reports are deterministic across runs and job counts.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace schubert::verify {

struct Report {
    std::string check;
    int n = 0;
    long long cases = 0;
    std::vector<std::string> failures;
    long long elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& check_names();
bool known_check(const std::string& name);
int default_n(const std::string& name);

// Runs the named check at size n with the given worker count (jobs < 1 is
// treated as 1). Throws std::invalid_argument for unknown names.
Report run(const std::string& name, int n, int jobs);

}  // namespace schubert::verify
