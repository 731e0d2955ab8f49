#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hesse/bilinear_form.hpp"
#include "hesse/hesse.hpp"
#include "hesse/oracle.hpp"
#include "hesse/projective.hpp"

namespace hesse::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_document(std::string_view text, std::string_view source = "<input>");
json read_document(const std::string& path);

json to_json(const Scalar& s);
/// Accepts scalar strings and JSON integers. `path` prefixes diagnostics.
Scalar scalar_from_json(const Field& field, const json& j, const std::string& path);

enum class PointStyle {
  verbatim,    ///< the stored representative
  normalized,  ///< first nonzero coordinate scaled to 1
};

json to_json(const ProjectivePoint& p, PointStyle style = PointStyle::verbatim);
ProjectivePoint point_from_json(const Field& field, const json& j, const std::string& path);

json to_json(const ProjectiveLine& l, PointStyle style = PointStyle::verbatim);

json to_json(const BilinearForm& f);
BilinearForm form_from_json(const Field& field, const json& j, const std::string& path);

/// {"field": "rationals" | "gf:p", "dim": n, "points": [[...] x4], "form": [[...]]}
json to_json(const QuadrangleConfig& config);
QuadrangleConfig config_from_json(const json& j);

/// {"h": [3 scalars], "conjugate": [3 bools], "verdict": "...", "radical_sides": [...]}
json to_json(const HesseReport& report);

json to_json(const oracle::ScanReport& report);

/// Field from a document's "field" member.
Field field_from_json(const json& j, const std::string& path);

}  // namespace hesse::io
