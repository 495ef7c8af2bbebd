#include "hilbert/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hilbert {

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number_float())
    fail(Errc::ParseError, "floating-point numbers are not accepted; use \"p/q\" strings");
  fail(Errc::ParseError, "expected a rational (\"p/q\" string or integer)");
}

Json rat_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(rat_to_string(r));
}

PointQ point_from_json_array(const Json& arr) {
  if (!arr.is_array() || arr.empty()) fail(Errc::ParseError, "expected a coordinate array");
  VecQ coords;
  coords.reserve(arr.size());
  for (const Json& c : arr) coords.push_back(rat_from_json(c));
  return PointQ(std::move(coords));
}

namespace {

MatQ matrix_from_json(const Json& arr) {
  if (!arr.is_array() || arr.empty()) fail(Errc::ParseError, "expected a matrix (array of rows)");
  int rows = static_cast<int>(arr.size());
  if (!arr[0].is_array() || arr[0].empty()) fail(Errc::ParseError, "expected a matrix row array");
  int cols = static_cast<int>(arr[0].size());
  MatQ m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!arr[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(arr[static_cast<size_t>(i)].size()) != cols)
      fail(Errc::ParseError, "ragged matrix rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat_from_json(arr[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json domain_to_json(const ConvexDomain& dom) {
  Json j;
  j["dim"] = dom.dim();
  if (dom.is_polytope()) {
    j["type"] = "polytope";
    Json verts = Json::array();
    for (const PointQ& v : dom.vertices()) {
      Json coords = Json::array();
      for (const Rat& c : v.coords) coords.push_back(rat_to_json(c));
      verts.push_back(std::move(coords));
    }
    j["vertices"] = std::move(verts);
  } else {
    j["type"] = "ellipsoid";
    j["form"] = matrix_to_json(dom.form());
  }
  return j;
}

ConvexDomain domain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("dim"))
    fail(Errc::ParseError, "domain file needs \"type\" and \"dim\"");
  if (!j["dim"].is_number_integer()) fail(Errc::ParseError, "\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1) fail(Errc::ParseError, "\"dim\" must be at least 1");
  std::string type = j["type"].get<std::string>();
  if (type == "polytope") {
    if (!j.contains("vertices")) fail(Errc::ParseError, "polytope needs \"vertices\"");
    std::vector<PointQ> verts;
    for (const Json& v : j["vertices"]) verts.push_back(point_from_json_array(v));
    return ConvexDomain::polytope(dim, std::move(verts));
  }
  if (type == "ellipsoid") {
    if (!j.contains("form")) fail(Errc::ParseError, "ellipsoid needs \"form\"");
    return ConvexDomain::ellipsoid(dim, matrix_from_json(j["form"]));
  }
  fail(Errc::ParseError, "unknown domain type '" + type + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

ConvexDomain load_domain(const std::string& path) { return domain_from_json(read_json_file(path)); }

void save_json(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::vector<PointQ> flat_vertices_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) fail(Errc::ParseError, "flat file needs \"vertices\"");
  std::vector<PointQ> verts;
  for (const Json& v : j["vertices"]) verts.push_back(point_from_json_array(v));
  return verts;
}

Json flat_to_json(const Flat& flat, const std::string& domain_ref) {
  Json j;
  j["domain"] = domain_ref;
  Json verts = Json::array();
  for (const PointQ& v : flat.vertices) {
    Json coords = Json::array();
    for (const Rat& c : v.coords) coords.push_back(rat_to_json(c));
    verts.push_back(std::move(coords));
  }
  j["vertices"] = std::move(verts);
  return j;
}

std::vector<PointQ> load_flat_vertices(const std::string& path) {
  return flat_vertices_from_json(read_json_file(path));
}

Json generators_to_json(const std::vector<ProjMapQ>& maps, const std::vector<std::string>& labels) {
  Json j;
  Json gens = Json::array();
  for (const ProjMapQ& m : maps) gens.push_back(matrix_to_json(m.matrix));
  j["generators"] = std::move(gens);
  j["labels"] = labels;
  return j;
}

std::pair<std::vector<ProjMapQ>, std::vector<std::string>> generators_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators"))
    fail(Errc::ParseError, "generator file needs \"generators\"");
  std::vector<ProjMapQ> maps;
  for (const Json& m : j["generators"]) maps.emplace_back(matrix_from_json(m));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const Json& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  while (labels.size() < maps.size()) labels.push_back("g" + std::to_string(labels.size()));
  return {std::move(maps), std::move(labels)};
}

std::pair<std::vector<ProjMapQ>, std::vector<std::string>> load_generators(const std::string& path) {
  return generators_from_json(read_json_file(path));
}

PointQ point_from_cli(const std::string& text, int dim) {
  std::vector<Rat> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t a = part.find_first_not_of(" \t");
    size_t b = part.find_last_not_of(" \t");
    if (a == std::string::npos) fail(Errc::ParseError, "empty coordinate in '" + text + "'");
    coords.push_back(rat_from_string(part.substr(a, b - a + 1)));
  }
  if (static_cast<int>(coords.size()) == dim + 1) return PointQ(std::move(coords));
  if (static_cast<int>(coords.size()) == dim) {
    coords.push_back(Rat(1));  // affine coordinates in the last-coordinate chart
    return PointQ(std::move(coords));
  }
  fail(Errc::ParseError, "point '" + text + "' needs " + std::to_string(dim) + " (affine) or " +
                             std::to_string(dim + 1) + " (homogeneous) coordinates");
}

}  // namespace hilbert
