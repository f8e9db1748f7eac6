#pragma once

#include "lambdacoh/adams_spec.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace lambdacoh {

// Ring-spec document: {"n": int, "family": string, "params": {...},
// "primes": [int]}. Integers encode as decimal strings past 64 bits (plain
// JSON numbers are accepted on input).
// validate = false assembles the structure without the family condition
// checks, so verification commands can report violations as failed checks.
AdamsSpec parse_ring_spec(const nlohmann::json& doc, bool validate = true);
AdamsSpec parse_ring_spec_text(const std::string& text, bool validate = true);
nlohmann::json ring_spec_to_json(const AdamsSpec& spec);

Int json_to_int(const nlohmann::json& v);
nlohmann::json int_to_json(const Int& v);

}  // namespace lambdacoh
