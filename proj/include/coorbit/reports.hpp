#ifndef COORBIT_REPORTS_HPP
#define COORBIT_REPORTS_HPP

#include <string>

#include <json.hpp>

#include "coorbit/atoms.hpp"
#include "coorbit/convolve.hpp"
#include "coorbit/diagnostics.hpp"
#include "coorbit/discretize.hpp"

namespace coorbit {

using json = nlohmann::ordered_json;

inline constexpr const char* kArtifactName = "coorbit";
inline constexpr const char* kArtifactVersion = "0.1.0";

// every report embeds name/version so each number is regenerable from the
// report alone
json report_header(const std::string& kind);

json to_json(const YoungReport& r);
json to_json(const OscReport& r);
json to_json(const RoundtripReport& r);
json to_json(const InjectivityCertificate& c);
json to_json(const BoundReport& r);
json to_json(const MixedSmoothnessReport& r);

std::string osc_report_csv(const OscReport& r);

// serialize with a fixed layout (2-space indent, trailing newline) so
// identical content is byte-identical on disk
std::string serialize(const json& j);
void write_report(const json& j, const std::string& path);

} // namespace coorbit

#endif
