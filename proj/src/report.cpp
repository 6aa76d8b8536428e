#include "satcore/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace satcore {

namespace {

nlohmann::ordered_json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json report_json(const ExperimentReport& report, std::optional<double> runtime_seconds) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["params"] = report.params;
  j["trials"] = report.trials;
  auto& metrics = j["metrics"] = nlohmann::ordered_json::object();
  for (const auto& m : report.metrics) {
    nlohmann::ordered_json e;
    e["count"] = m.count;
    e["mean"] = m.mean;
    e["var"] = m.variance;
    e["ci"] = {m.ci_lo, m.ci_hi};
    e["interval"] = m.interval == IntervalKind::Wilson ? "wilson" : "normal";
    e["predicted"] = optional_json(m.predicted);
    e["scale"] = optional_json(m.scale);
    e["z"] = optional_json(m.z);
    metrics[m.name] = e;
  }
  j["derived"] = report.derived;
  if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
  return j;
}

void write_report_json(const ExperimentReport& report, std::ostream& out, std::optional<double> runtime_seconds) {
  out << report_json(report, runtime_seconds).dump(2) << '\n';
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  auto cell = [](const std::optional<double>& v) {
    std::ostringstream s;
    if (v) s << std::setprecision(17) << *v;
    return s.str();
  };
  out << "metric,count,mean,var,ci_lo,ci_hi,predicted,scale,z\n";
  for (const auto& m : report.metrics) {
    out << m.name << ',' << m.count << ',' << cell(m.mean) << ',' << cell(m.variance) << ',' << cell(m.ci_lo) << ','
        << cell(m.ci_hi) << ',' << cell(m.predicted) << ',' << cell(m.scale) << ',' << cell(m.z) << '\n';
  }
}

}  // namespace satcore
