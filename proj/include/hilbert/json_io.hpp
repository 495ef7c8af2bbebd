#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbert/domain.hpp"
#include "hilbert/flats.hpp"
#include "hilbert/group.hpp"

namespace hilbert {

using Json = nlohmann::json;

// Domain files: {"type":"polytope","dim":d,"vertices":[["1","0",...],...]}
// or {"type":"ellipsoid","dim":d,"form":[["1","0"],...]}. Rationals are
// "p/q" strings or JSON integers; floating-point numbers are a parse-time
// error so the combinatorics stay exact.
Json domain_to_json(const ConvexDomain& domain);
ConvexDomain domain_from_json(const Json& j);
ConvexDomain load_domain(const std::string& path);
void save_json(const Json& j, const std::string& path);

// Flat files: {"vertices":[[...]], "domain":"<reference>"}; the reference is
// informational.
std::vector<PointQ> flat_vertices_from_json(const Json& j);
Json flat_to_json(const Flat& flat, const std::string& domain_ref);
std::vector<PointQ> load_flat_vertices(const std::string& path);

// Generator files: {"generators":[[[...],[...]],...], "labels":["a","b"]}.
Json generators_to_json(const std::vector<ProjMapQ>& maps, const std::vector<std::string>& labels);
std::pair<std::vector<ProjMapQ>, std::vector<std::string>> generators_from_json(const Json& j);
std::pair<std::vector<ProjMapQ>, std::vector<std::string>> load_generators(const std::string& path);

// Rational scalars / points shared by the file formats and the CLI.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);
PointQ point_from_json_array(const Json& arr);

// "a,b,c" with d+1 entries is homogeneous; d entries are affine coordinates
// in the last-coordinate-1 chart.
PointQ point_from_cli(const std::string& text, int dim);

Json read_json_file(const std::string& path);

}  // namespace hilbert
