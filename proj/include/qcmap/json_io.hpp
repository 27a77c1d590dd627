#pragma once

#include <json.hpp>

#include "qcmap/maxacomm.hpp"
#include "qcmap/qca.hpp"
#include "qcmap/qubit_map.hpp"
#include "qcmap/verify.hpp"

namespace qcmap {

// External JSON formats. All indices (generators, edges, pivots, coordinates)
// are 1-based on the wire and 0-based in memory.

nlohmann::json spec_to_json(const QcaSpec& spec);
QcaSpec spec_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const QcaSpec& spec, const WedderburnDecomposition& dec);
WedderburnDecomposition decomposition_from_json(const nlohmann::json& j, QcaSpec* spec_out);

nlohmann::json mapping_to_json(const QcaSpec& spec, const QubitMapping& map);
QubitMapping mapping_from_json(const nlohmann::json& j, QcaSpec* spec_out);

nlohmann::json stariso_to_json(const StarIsomorphism& iso);
StarIsomorphism stariso_from_json(const nlohmann::json& j);

nlohmann::json maxacomm_to_json(const AnticommutingSet& set);
AnticommutingSet maxacomm_from_json(const nlohmann::json& j);

nlohmann::json blocks_to_json(std::span<const PauliString> images, const BlockCertificate& cert);

nlohmann::json report_to_json(const Report& report);

}  // namespace qcmap
