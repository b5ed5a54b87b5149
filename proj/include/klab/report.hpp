#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klab/fukaya.hpp"
#include "klab/verify.hpp"

namespace klab {

enum class OutputFormat { json, csv, text };

std::string format_report(const IdentityReport& rep, OutputFormat fmt);
std::string format_reports(const std::vector<IdentityReport>& reps, OutputFormat fmt);

// `oracle_gap` is reported when the result was checked against polygon_oracle.
std::string format_composition(const CompositionResult& res, OutputFormat fmt,
                               std::optional<double> oracle_gap = std::nullopt);

}  // namespace klab
