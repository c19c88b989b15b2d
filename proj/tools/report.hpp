#pragma once

#include <json.hpp>

#include <string>

#include "vcn/compose.hpp"
#include "vcn/minimality.hpp"

namespace vcn::cli {

/// Canonical JSON polynomial: [c, a, b] triples in canonical term order.
/// Coefficients that fit in 64 bits are numbers, larger ones decimal strings.
nlohmann::json poly_json(const LaurentPoly& p);
nlohmann::json poly_json(const TPoly& p);
nlohmann::json int_json(const Int& v);

/// The full analyze report for a parsed code (schema_version 1).
nlohmann::json make_report(const DiagramCode& parsed);

std::string human_report(const DiagramCode& parsed);

/// One-line certificate for the strongest certified side, e.g.
/// `MINIMAL k=1 via M-diagram (mdeg side): det T = t - 1, per M = 1`.
/// Empty string when neither side certifies.
std::string certificate_line(const std::vector<MinimalityCertificate>& certs);

std::string uncertified_line(const std::vector<MinimalityCertificate>& certs);

}  // namespace vcn::cli
