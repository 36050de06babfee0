#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "unimod/density.hpp"
#include "unimod/experiments.hpp"
#include "unimod/normal_forms.hpp"

namespace unimod {

// Exact quantities (entries, counts, gcds, rationals, seeds) are emitted as
// decimal strings so no consumer truncates them to 53 bits.

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoxSpec& s);
nlohmann::json to_json(const EstimateReport& r);
nlohmann::json to_json(const ExhaustiveReport& r);
nlohmann::json to_json(const LocalDensityCheck& r);
nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const HnfResult& r);
nlohmann::json to_json(const SnfResult& r);

std::string rational_string(const Rational& q);

/// CSV header and rows: B,samples,hits,estimate,std_error,theory,z
std::string sweep_csv(std::span<const EstimateReport> reports);

} // namespace unimod
