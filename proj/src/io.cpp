#include "zonocut/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zono {

namespace {

std::string fmt_decimal(const Rat& x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x.to_double());
  return buf;
}

RatVec cross3(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Cyclic order of points around `center` in the plane with normal `axis`,
// counterclockwise seen from the axis tip. Exact: independent axis scalings
// preserve the cyclic order of directions.
std::vector<int> sort_cycle(const std::vector<RatVec>& pts, const RatVec& center, const RatVec& axis) {
  RatVec u = vec_sub(pts[0], center);
  RatVec w = cross3(axis, u);
  struct Polar {
    int idx;
    Rat a, b;
  };
  auto quadrant = [](const Rat& a, const Rat& b) {
    if (a.sign() > 0 && b.sign() >= 0) return 0;
    if (a.sign() <= 0 && b.sign() > 0) return 1;
    if (a.sign() < 0 && b.sign() <= 0) return 2;
    return 3;
  };
  std::vector<Polar> ps;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatVec p = vec_sub(pts[i], center);
    ps.push_back({static_cast<int>(i), dot(p, u), dot(p, w)});
  }
  std::sort(ps.begin(), ps.end(), [&](const Polar& p, const Polar& q) {
    int qp = quadrant(p.a, p.b), qq = quadrant(q.a, q.b);
    if (qp != qq) return qp < qq;
    return (p.a * q.b - p.b * q.a).sign() > 0;
  });
  std::vector<int> order;
  for (const Polar& p : ps) order.push_back(p.idx);
  return order;
}

std::string render_off(const std::vector<RatVec>& verts, const std::vector<std::vector<int>>& faces,
                       int digits) {
  size_t edge_total = 0;
  for (const auto& f : faces) edge_total += f.size();
  std::ostringstream os;
  os << "OFF\n" << verts.size() << ' ' << faces.size() << ' ' << edge_total / 2 << '\n';
  for (const RatVec& v : verts) {
    for (size_t c = 0; c < v.size(); ++c) os << (c ? " " : "") << fmt_decimal(v[c], digits);
    os << '\n';
  }
  for (const auto& f : faces) {
    os << f.size();
    for (int i : f) os << ' ' << i;
    os << '\n';
  }
  return os.str();
}

// faces given by (outward normal, member test over vertex indices)
std::vector<std::vector<int>> build_faces(const std::vector<RatVec>& verts,
                                          const std::vector<SignVector>& vert_signs,
                                          const std::vector<std::pair<RatVec, SignVector>>& facets) {
  std::vector<std::vector<int>> out;
  for (const auto& [normal, fsign] : facets) {
    std::vector<int> members;
    // vertex lies on the facet iff one sign label refines the other: the
    // zero-free label (dual facet / zonotope vertex) expands the other
    for (size_t i = 0; i < verts.size(); ++i)
      if (fsign.extends(vert_signs[i]) || vert_signs[i].extends(fsign))
        members.push_back(static_cast<int>(i));
    if (members.size() < 3) continue;  // not a 2-face (cannot happen for valid input)
    std::vector<RatVec> pts;
    RatVec center(verts[0].size());
    for (int i : members) {
      pts.push_back(verts[i]);
      center = vec_add(center, verts[i]);
    }
    center = vec_scale(Rat(1, static_cast<long>(members.size())), center);
    std::vector<int> order = sort_cycle(pts, center, normal);
    std::vector<int> face;
    for (int o : order) face.push_back(members[o]);
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& x) { return x.str(); }

Json vec_to_json(const RatVec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(x.str());
  return j;
}

RatVec vec_from_json(const Json& j) {
  RatVec v;
  for (const auto& e : j) v.push_back(Rat::from_string(e.get<std::string>()));
  return v;
}

Json mat_to_json(const RatMat& M) {
  Json rows = Json::array();
  for (int r = 0; r < M.rows(); ++r) rows.push_back(vec_to_json(M.row(r)));
  return rows;
}

RatMat mat_from_json(const Json& j) {
  std::vector<RatVec> rows;
  for (const auto& e : j) rows.push_back(vec_from_json(e));
  if (rows.empty()) throw std::invalid_argument("matrix JSON: no rows");
  return RatMat::from_rows(rows, static_cast<int>(rows[0].size()));
}

Json arrangement_to_json(const ArrangementMatrix& A) {
  Json j;
  j["type"] = "arrangement_matrix";
  j["m"] = A.zone_count();
  j["d"] = A.dim();
  j["rows"] = mat_to_json(A.matrix());
  return j;
}

ArrangementMatrix arrangement_from_json(const Json& j) {
  if (!j.contains("rows")) throw std::invalid_argument("matrix JSON: missing 'rows'");
  RatMat M = mat_from_json(j["rows"]);
  if (j.contains("m") && j["m"].get<int>() != M.rows())
    throw std::invalid_argument("matrix JSON: 'm' does not match row count");
  if (j.contains("d") && j["d"].get<int>() != M.cols())
    throw std::invalid_argument("matrix JSON: 'd' does not match column count");
  return ArrangementMatrix(std::move(M));
}

Json rays_to_json(const std::vector<ArrangementRay>& rays) {
  Json arr = Json::array();
  for (const ArrangementRay& r : rays) {
    Json j;
    j["direction"] = vec_to_json(r.direction);
    j["sign"] = r.sign.str();
    j["incident_rows"] = r.incident_rows;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json affine_vertices_to_json(const std::vector<AffineVertex>& verts) {
  Json arr = Json::array();
  for (const AffineVertex& v : verts) {
    Json j;
    j["coords"] = vec_to_json(v.coords);
    j["sign"] = v.sign.str();
    j["incident_rows"] = v.incident_rows;
    j["generic"] = v.generic;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json dual_vertices_to_json(const std::vector<DualVertex>& verts) {
  Json arr = Json::array();
  for (const DualVertex& v : verts) {
    Json j;
    j["point"] = vec_to_json(v.point);
    j["sign"] = v.sign.str();
    arr.push_back(std::move(j));
  }
  return arr;
}

Json polygon_to_json(const Polygon2& P) {
  Json j;
  j["count"] = P.points.size();
  Json pts = Json::array();
  for (const Vec2& p : P.points) pts.push_back(Json::array({p.x.str(), p.y.str()}));
  j["points"] = std::move(pts);
  return j;
}

Json certificate_to_json(const SurvivalCertificate& cert, bool survives) {
  Json j;
  j["face_sign"] = cert.face_sign.str();
  j["survives"] = survives;
  j["truncated_normals"] = mat_to_json(cert.truncated_normals);
  j["positive_combination"] = cert.positive_combination ? vec_to_json(*cert.positive_combination) : Json(nullptr);
  return j;
}

Json cycle_to_json(const std::vector<SignVector>& cycle) {
  Json arr = Json::array();
  for (const SignVector& s : cycle) arr.push_back(s.str());
  Json j;
  j["length"] = cycle.size();
  j["cycle"] = std::move(arr);
  return j;
}

std::string render_svg(const Polygon2& P, int digits, const std::string& stroke) {
  if (P.points.empty()) throw std::invalid_argument("render_svg: empty polygon");
  Rat min_x = P.points[0].x, max_x = min_x, min_y = -P.points[0].y, max_y = min_y;
  for (const Vec2& p : P.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, -p.y);  // y grows downward in SVG
    max_y = std::max(max_y, -p.y);
  }
  double w = (max_x - min_x).to_double(), h = (max_y - min_y).to_double();
  double margin = 0.05 * std::max({w, h, 1e-12});
  char box[160];
  std::snprintf(box, sizeof box, "%.6g %.6g %.6g %.6g", min_x.to_double() - margin,
                min_y.to_double() - margin, w + 2 * margin, h + 2 * margin);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box << "\">\n";
  os << "  <polygon fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
     << fmt_decimal(Rat(1, 200) * (max_x - min_x + max_y - min_y + Rat(1, 1000000)), 6) << "\" points=\"";
  for (size_t i = 0; i < P.points.size(); ++i) {
    if (i) os << ' ';
    os << fmt_decimal(P.points[i].x, digits) << ',' << fmt_decimal(-P.points[i].y, digits);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string render_off_dual(const DualZonotope& dz, int digits) {
  if (dz.dim() != 3) throw std::invalid_argument("OFF export: require d = 3");
  std::vector<RatVec> verts;
  std::vector<SignVector> signs;
  for (const DualVertex& v : dz.vertices()) {
    verts.push_back(v.point);
    signs.push_back(v.sign);
  }
  std::vector<std::pair<RatVec, SignVector>> facets;
  for (const FacetInequality& f : facet_inequalities(dz)) facets.emplace_back(f.normal, f.region);
  return render_off(verts, build_faces(verts, signs, facets), digits);
}

std::string render_off_zonotope(const ArrangementMatrix& A, int digits) {
  if (A.dim() != 3) throw std::invalid_argument("OFF export: require d = 3");
  DualZonotope dz(A);
  std::vector<RatVec> verts;
  std::vector<SignVector> signs;
  for (const ZonotopeVertex& v : zonotope_vertices(A).vertices) {
    verts.push_back(v.point);
    signs.push_back(v.region_sign);
  }
  // facets of the zonotope pair with dual-zonotope vertices
  std::vector<std::pair<RatVec, SignVector>> facets;
  for (const DualVertex& v : dz.vertices()) facets.emplace_back(v.point, v.sign);
  return render_off(verts, build_faces(verts, signs, facets), digits);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace zono
