#pragma once

// Family interchange format:
//   {"n": int, "k": int, "sets": [[1-based strictly increasing ints], ...]}
// Counts and rationals are carried as decimal strings ("184", "1/3") so
// payloads stay exact and byte-stable across runs.

#include <string>

#include <json.hpp>

#include "tic/bounds.hpp"
#include "tic/family.hpp"
#include "tic/hamming.hpp"
#include "tic/solver.hpp"

namespace tic {

nlohmann::json family_to_json(const SetFamily& f);

// Strict: inner arrays must be strictly increasing; duplicate sets rejected.
SetFamily family_from_json(const nlohmann::json& j);

SetFamily load_family(const std::string& path);
void save_family(const std::string& path, const SetFamily& f);

// Report payloads. wall-clock time is deliberately not serialized so that
// identical runs produce identical bytes.
nlohmann::json solve_result_to_json(const SolveResult& r);
SolveResult solve_result_from_json(const nlohmann::json& j);

nlohmann::json hypothesis_report_to_json(const HypothesisReport& h);
HypothesisReport hypothesis_report_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const ConstantWeightCode& c);
ConstantWeightCode code_from_json(const nlohmann::json& j);

nlohmann::json min_distance_to_json(const MinDistanceResult& r);
MinDistanceResult min_distance_from_json(const nlohmann::json& j);

}  // namespace tic
