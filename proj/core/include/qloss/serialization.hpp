#pragma once

#include <nlohmann/json.hpp>

#include "qloss/audit.hpp"
#include "qloss/channels.hpp"
#include "qloss/lossmodels.hpp"
#include "qloss/matrix.hpp"
#include "qloss/states.hpp"

namespace qloss {

// {"re": [[...]], "im": [[...]]}, row-major.
nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// {"dims": [...], "re": [[...]], "im": [[...]]}.
nlohmann::json to_json(const DensityMatrix& rho);
// Validates the parsed matrix; throws ContractError if it is not a density matrix.
DensityMatrix density_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CptpReport& r);
// {"d_in", "d_out", "operators": [matrix...], "cptp": report}.
nlohmann::json to_json(const KrausChannel& c);

nlohmann::json to_json(const LinkBudgetPoint& p);

namespace audit {
nlohmann::json to_json(const Finding& f);
nlohmann::json to_json(const PipelineReport& r);
nlohmann::json to_json(const CorrectPipelineReport& r);
nlohmann::json to_json(const Comparison& c);
}  // namespace audit

}  // namespace qloss
