#pragma once

#include "fermimap/choi.hpp"
#include "fermimap/fock.hpp"
#include "fermimap/maps.hpp"
#include "fermimap/verify.hpp"

#include <json.hpp>

#include <string>

namespace fermimap {

// Shared matrix format: row-major nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json basis_to_json(const FockBasis& basis);

nlohmann::json domain_spec_to_json(const DomainSpec& spec);
DomainSpec domain_spec_from_json(const nlohmann::json& j);

nlohmann::json kraus_set_to_json(const KrausSet& ks);
KrausSet kraus_set_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& r);
nlohmann::json verification_report_to_json(const VerificationReport& r);

/// One VerificationReport per line.
std::string reports_to_jsonl(const std::vector<VerificationReport>& reports);

}  // namespace fermimap
