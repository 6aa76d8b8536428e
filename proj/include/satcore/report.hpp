#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "satcore/experiment.hpp"

namespace satcore {

/// {experiment, params, trials, metrics: {name: {mean, var, ci, predicted,
/// scale, z}}, derived}. runtime_seconds is only present when given, so the
/// default output depends on the configuration alone.
nlohmann::ordered_json report_json(const ExperimentReport& report, std::optional<double> runtime_seconds = std::nullopt);

void write_report_json(const ExperimentReport& report, std::ostream& out,
                       std::optional<double> runtime_seconds = std::nullopt);

/// One row per metric: metric,count,mean,var,ci_lo,ci_hi,predicted,scale,z.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

}  // namespace satcore
