#pragma once

// File formats: set JSON, R/V profile CSV, certificate and increment JSON,
// trajectory JSON/CSV. Rationals are written as "numerator/denominator".

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rothlab/iterate.hpp"

namespace rothlab::io {

using Json = nlohmann::ordered_json;

Json set_to_json(const DenseSet& a);
/// Throws InvalidArgument on schema violations.
DenseSet set_from_json(const Json& j);
DenseSet read_set_file(const std::string& path);
void write_set_file(const std::string& path, const DenseSet& a);

void write_r_csv(std::ostream& out, const CorrelationProfile& c);
void write_v_csv(std::ostream& out, const std::vector<Wide>& v);

Json report_to_json(const InequalityReport& r);
Json certificate_to_json(const CertificateReport& c);
Json increment_to_json(const IncrementResult& r);
Json trajectory_to_json(const Trajectory& t);
void write_trajectory_csv(std::ostream& out, const Trajectory& t);
Json bound_to_json(const BoundReport& b);

} // namespace rothlab::io
