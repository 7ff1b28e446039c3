#pragma once

#include "entgeo/analysis.hpp"
#include "entgeo/curvature.hpp"
#include "entgeo/metric.hpp"
#include "entgeo/theorem.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace entgeo {

using Json = nlohmann::ordered_json;

/// All JSON documents carry a top-level "schema": 1 field.
inline constexpr int kSchemaVersion = 1;

Json to_json(const MetricTensor& metric);
Json to_json(const ChristoffelSymbols& gamma);
Json to_json(const GeometryReport& report);
Json to_json(const TheoremReport& report);
Json to_json(const CriReport& report);
Json to_json(const SofteningReport& report);

/// Table rows in JSON ("limit": true on the rendered limit row), CSV with
/// the fixed header t_ratio,q_soft,q_str (RFC-4180, '.' decimal separator),
/// or an aligned text table. paper_format switches the q columns to the
/// truncated rendering.
Json table1_json(const std::vector<Table1Row>& rows, bool paper_format);
std::string table1_csv(const std::vector<Table1Row>& rows, bool paper_format);
std::string table1_text(const std::vector<Table1Row>& rows, bool paper_format);

/// One CSV field, quoted per RFC 4180 when needed.
std::string csv_escape(const std::string& field);

/// Full-precision number rendering used everywhere outside paper format
/// (shortest round-trip representation).
std::string format_double(double v);

} // namespace entgeo
