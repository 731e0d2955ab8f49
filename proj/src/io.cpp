#include "hesse/io.hpp"

#include <fstream>
#include <sstream>

namespace hesse::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing member \"") + key + "\"");
  return *it;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

json parse_document(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": malformed JSON (" << e.what() << ")";
    throw ParseError(msg.str());
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path);
}

json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Field& field, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(field, j.dump());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a scalar string such as \"-2/3\", got " + j.dump());
}

json to_json(const ProjectivePoint& p, PointStyle style) {
  json out = json::array();
  if (style == PointStyle::normalized) {
    for (const auto& s : p.normalized()) out.push_back(to_json(s));
  } else {
    for (const auto& s : p.coords()) out.push_back(to_json(s));
  }
  return out;
}

ProjectivePoint point_from_json(const Field& field, const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of coordinates");
  Vector coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(scalar_from_json(field, j[i], index_path(path, i)));
  }
  try {
    return ProjectivePoint(std::move(coords));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

json to_json(const ProjectiveLine& l, PointStyle style) {
  return json::array({to_json(l.first(), style), to_json(l.second(), style)});
}

json to_json(const BilinearForm& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (const auto& s : f.matrix().row(i)) row.push_back(to_json(s));
    out.push_back(std::move(row));
  }
  return out;
}

BilinearForm form_from_json(const Field& field, const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto row_path = index_path(path, i);
    if (!j[i].is_array()) fail(row_path, "expected a row array");
    if (j[i].size() != j.size()) {
      throw ShapeError(row_path + ": row has " + std::to_string(j[i].size()) +
                       " entries but the matrix has " + std::to_string(j.size()) + " rows");
    }
    Vector row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      row.push_back(scalar_from_json(field, j[i][k], index_path(row_path, k)));
    }
    rows.push_back(std::move(row));
  }
  try {
    return BilinearForm(Matrix::from_rows(rows));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

Field field_from_json(const json& j, const std::string& path) {
  const json& f = member(j, "field", path);
  if (!f.is_string()) fail(path + ".field", "expected \"rationals\" or \"gf:p\"");
  try {
    return Field::parse(f.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ".field: " + e.what());
  }
}

json to_json(const QuadrangleConfig& config) {
  json points = json::array();
  for (const auto& p : config.points()) points.push_back(to_json(p));
  return {{"field", config.field().name()},
          {"dim", config.dim()},
          {"points", std::move(points)},
          {"form", to_json(config.form())}};
}

QuadrangleConfig config_from_json(const json& j) {
  const std::string root = "config";
  const Field field = field_from_json(j, root);

  const json& dim_json = member(j, "dim", root);
  if (!dim_json.is_number_integer() || dim_json.get<long long>() < 1) {
    fail(root + ".dim", "expected a positive integer");
  }
  const auto dim = dim_json.get<std::size_t>();

  const json& pts = member(j, "points", root);
  if (!pts.is_array() || pts.size() != 4) fail(root + ".points", "expected exactly 4 points");
  std::vector<ProjectivePoint> points;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto path = index_path(root + ".points", i);
    points.push_back(point_from_json(field, pts[i], path));
    if (points.back().dim() != dim) {
      throw ShapeError(path + ": point has " + std::to_string(points.back().coords().size()) +
                       " coordinates, dim " + std::to_string(dim) + " needs " +
                       std::to_string(dim + 1));
    }
  }
  auto form = form_from_json(field, member(j, "form", root), root + ".form");
  if (form.size() != dim + 1) {
    throw ShapeError(root + ".form: matrix is " + std::to_string(form.size()) + "x" +
                     std::to_string(form.size()) + ", dim " + std::to_string(dim) + " needs " +
                     std::to_string(dim + 1) + "x" + std::to_string(dim + 1));
  }
  try {
    return QuadrangleConfig({points[0], points[1], points[2], points[3]}, std::move(form));
  } catch (const Error& e) {
    throw Error(e.kind(), root + ".points: " + e.what());
  }
}

json to_json(const HesseReport& report) {
  json h = json::array(), conj = json::array(), radical = json::array();
  for (const auto& s : report.h) h.push_back(to_json(s));
  for (const bool b : report.conjugate) conj.push_back(b);
  for (std::size_t i = 0; i < report.radical_sides.size(); ++i) {
    if (report.radical_sides[i]) radical.push_back(kSideNames[i]);
  }
  return {{"h", std::move(h)},
          {"conjugate", std::move(conj)},
          {"verdict", to_string(report.verdict)},
          {"radical_sides", std::move(radical)}};
}

json to_json(const oracle::ScanReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"form", m.form_index},
                          {"tuple", m.tuple},
                          {"brute", m.brute},
                          {"determinant", m.determinant}});
  }
  return {{"field", report.field.name()},
          {"dim", report.dim},
          {"forms", report.forms},
          {"tuples_scanned", report.tuples_scanned},
          {"conjugate_count", report.conjugate_count},
          {"mismatches", std::move(mismatches)}};
}

}  // namespace hesse::io
