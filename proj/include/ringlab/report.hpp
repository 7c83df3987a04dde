#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "ringlab/classes.hpp"
#include "ringlab/laws.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/taxonomy.hpp"

namespace ringlab {

using json = nlohmann::json;

/// Record schema shared by `classify --json` and the survey JSONL stream:
///   { "expr": str, "order": int, "classes": {name: bool},
///     "witnesses": {class: {"element": label, "detail": str}},
///     "timings_ms": {stage: int} }
/// classify output omits timings_ms so reruns are byte-identical.
json profile_record(const std::string& expr, uint32_t order,
                    const RingProfile& profile,
                    const std::map<std::string, int64_t>* timings_ms = nullptr);

std::string render_profile_text(const FiniteRing& r, const RingProfile& profile);

/// One line per record, derived from the record fields only (timings are
/// ignored), so re-rendering a cache reproduces the original text output.
std::string render_record_line(const json& record);

json element_record(const FiniteRing& r, elem a, const ElementProfile& p);
std::string render_element_text(const FiniteRing& r, elem a,
                                const ElementProfile& p);

json law_report_record(const LawReport& report);
std::string render_law_report_text(const LawReport& report);

}  // namespace ringlab
