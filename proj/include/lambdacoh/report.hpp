#pragma once

#include "lambdacoh/adams_spec.hpp"
#include "lambdacoh/cohomology.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace lambdacoh {

// Report documents carry "schema": 1, an echo of the ring spec, the prime
// window, results, and provenance tags. JSON output is deterministic (sorted
// keys, big integers as decimal strings) and round-trips through parsing.
nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json cohomology_to_json(const CohomologyReport& rep);

nlohmann::json make_report(const std::string& command, const AdamsSpec& spec,
                           const std::vector<long>& primes, nlohmann::json results, bool ok,
                           std::vector<std::string> theorem_tags);

std::string report_to_markdown(const nlohmann::json& report);

// Matrices render with blanks for zero entries.
std::string matrix_to_markdown(const IntMatrix& m);

}  // namespace lambdacoh
