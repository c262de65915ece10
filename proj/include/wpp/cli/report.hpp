#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "wpp/asymptotics.hpp"
#include "wpp/nagata.hpp"

namespace wpp::cli {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("-1/3", "3") so no precision is lost.

Json certificate_json(const NegativeCurveCertificate& cert);
Json s_invariant_json(const SInvariantReport& report);
Json prop_nagata_json(const PropNagataReport& report);
Json vanishing_probe_json(const VanishingProbeReport& report);
Json orbit_json(const WeightedPlane& plane, const OrbitScheme& orbit);

/// "m,reg,floor_sm,sigma".
void write_sigma_csv(std::ostream& out, const SigmaSeries& series);
/// "m,reg".
void write_regularity_csv(std::ostream& out, const std::vector<int>& regs);
/// "m,downstream_reg,upstream_reg,shift,holds".
void write_basechange_csv(std::ostream& out, const std::vector<BasechangeRow>& rows);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream& out, const Json& value);

}  // namespace wpp::cli
