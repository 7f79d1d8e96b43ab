#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "pchi/eulercat.hpp"

namespace pchi {

using Json = nlohmann::ordered_json;

// Machine-readable document for one group/prime/scope computation. Rationals
// are rendered exactly ("num/den" or "num"); the layout is byte-stable for a
// fixed input. Timings are attached only on request since they vary run to
// run. Residuals (identity checks) are optional extra content.
Json report_document(const ClassTable& table, const ChiReport& report,
                     const std::map<std::string, Rat>& residuals = {},
                     const std::map<std::string, long>& timings_ms = {});

// Fixed-width text table of one report (kinds as rows).
std::string render_table(const ChiReport& report);

// CSV with header group,order,prime,scope,kind,chi; one row per kind.
std::string render_csv(const ChiReport& report, bool header = true);

}  // namespace pchi
