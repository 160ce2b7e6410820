#pragma once

#include <string>

#include "json.hpp"
#include "zonocut/construction.hpp"

namespace zono {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; floats appear only in SVG/OFF exports.

Json rat_to_json(const Rat& x);
Json vec_to_json(const RatVec& v);
RatVec vec_from_json(const Json& j);
Json mat_to_json(const RatMat& M);
RatMat mat_from_json(const Json& j);

Json arrangement_to_json(const ArrangementMatrix& A);
ArrangementMatrix arrangement_from_json(const Json& j);

Json rays_to_json(const std::vector<ArrangementRay>& rays);
Json affine_vertices_to_json(const std::vector<AffineVertex>& verts);
Json dual_vertices_to_json(const std::vector<DualVertex>& verts);
Json polygon_to_json(const Polygon2& P);
Json certificate_to_json(const SurvivalCertificate& cert, bool survives);
Json cycle_to_json(const std::vector<SignVector>& cycle);

std::string render_svg(const Polygon2& P, int digits = 17, const std::string& stroke = "black");

// OFF solids; 3-dimensional input only.
std::string render_off_dual(const DualZonotope& dz, int digits = 17);
std::string render_off_zonotope(const ArrangementMatrix& A, int digits = 17);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace zono
