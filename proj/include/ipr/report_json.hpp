#pragma once

// JSON forms of the reports, the system sidecar, and colouring specs.
// Big integers and rationals are written as decimal strings; search values
// (64-bit by construction) as numbers. Key order is fixed.

#include <string>

#include "json.hpp"

#include "ipr/colouring.hpp"
#include "ipr/columns.hpp"
#include "ipr/search.hpp"
#include "ipr/systems.hpp"
#include "ipr/verify.hpp"

namespace ipr {

using Json = nlohmann::ordered_json;

Json to_json(const SearchOutcome& outcome);
SearchOutcome search_outcome_from_json(const Json& j);

Json to_json(const ObstructionReport& report);
ObstructionReport obstruction_report_from_json(const Json& j);

/// `{"satisfied": false}` for nullopt.
Json to_json(const std::optional<ColumnsCertificate>& cert);
std::optional<ColumnsCertificate> columns_certificate_from_json(const Json& j);

/// {kind, depth, coefficients, variable_labels, divisibility}
Json sidecar_json(const SystemInstance& system);
/// Rebuilds the system from its sidecar and checks the recorded labels and
/// moduli. Throws std::invalid_argument on mismatch.
SystemInstance system_from_sidecar(const Json& j);

/// {"modulus": M, "table": [...], "exceptions": [[value, colour], ...]} or {"type": "staged"}.
Json to_json(const ColouringSpec& spec);
/// Throws std::invalid_argument on malformed input.
ColouringSpec colouring_spec_from_json(const Json& j);
ColouringSpec read_colouring_spec_file(const std::string& path);

} // namespace ipr
