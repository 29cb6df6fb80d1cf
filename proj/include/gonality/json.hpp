#pragma once

#include "gonality/dhar.hpp"
#include "gonality/rank.hpp"
#include "gonality/scan.hpp"
#include "gonality/search.hpp"

#include <json.hpp>

namespace gonality {

using Json = nlohmann::ordered_json;

// Divisors and scripts are plain integer arrays aligned with vertex indices;
// vertex sets are sorted index arrays.
void to_json(Json& j, const Divisor& d);
void from_json(const Json& j, Divisor& d);
void to_json(Json& j, const FiringScript& x);
void to_json(Json& j, const VertexSet& s);
void to_json(Json& j, const BurnResult& b);
void to_json(Json& j, const CertificateEntry& e);
void to_json(Json& j, const RankCertificate& c);
void to_json(Json& j, const DegreeStats& s);
void to_json(Json& j, const GonalityReport& r);
void to_json(Json& j, const BrillNoetherCheck& b);
void to_json(Json& j, const SweepResult& s);
void to_json(Json& j, const ScanRecord& r);
void from_json(const Json& j, ScanRecord& r);

} // namespace gonality
