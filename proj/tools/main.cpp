#include <chrono>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "zonocut/verify.hpp"

namespace {

using namespace zono;

// exit codes: 0 success, 1 verification failure, 2 usage/validation error
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << ms.count() << " ms\n";  // stderr: never part of the canonical payload
  }
};

ArrangementMatrix load_matrix(const std::string& matrix_file, std::optional<int> d, std::optional<int> k) {
  if (!matrix_file.empty()) return arrangement_from_json(Json::parse(read_file(matrix_file)));
  if (d && k) return easteregg_matrix(EasterEggParams(*d, *k));
  throw std::invalid_argument("provide either --matrix or both --d and --k");
}

void emit(const Json& payload, const std::string& out) {
  std::string text = payload.dump(2) + "\n";
  if (!out.empty()) write_file(out, text);
  std::cout << text;
}

int cmd_build(int d, int k, const std::string& out, const std::string& geometry_out) {
  EasterEggParams params(d, k);
  ArrangementMatrix A = easteregg_matrix(params);
  if (!out.empty()) write_file(out, arrangement_to_json(A).dump(2) + "\n");
  if (!geometry_out.empty()) {
    Json g;
    g["rays"] = rays_to_json(enumerate_rays(A));
    g["affine_vertices"] = affine_vertices_to_json(enumerate_affine_vertices(A));
    DualZonotope dz(std::move(A));
    g["dual_vertices"] = dual_vertices_to_json(dz.vertices());
    write_file(geometry_out, g.dump(2) + "\n");
  }
  Json j;
  j["m"] = params.zone_count();
  j["n"] = params.n();
  j["alpha"] = params.alpha().str();
  j["d"] = d;
  j["k"] = k;
  if (!out.empty()) j["matrix_file"] = out;
  if (!geometry_out.empty()) j["geometry_file"] = geometry_out;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_shadow(const std::string& matrix_file, std::optional<int> d, std::optional<int> k,
               const std::string& format, const std::string& out, int digits,
               const std::string& stroke, bool section) {
  ArrangementMatrix A = load_matrix(matrix_file, d, k);
  DualZonotope dz(A);
  Polygon2 shadow = shadow_polygon(dz);
  Polygon2 poly = section ? polar_polygon(shadow) : shadow;

  if (format == "svg") {
    std::string svg = render_svg(poly, digits, stroke);
    if (!out.empty())
      write_file(out, svg);
    else
      std::cout << svg;
    return 0;
  }

  Json j;
  j["object"] = section ? "section" : "shadow";
  j["m"] = A.zone_count();
  j["d"] = A.dim();
  j["count"] = poly.size();
  if (d && k) {
    EasterEggParams params(*d, *k);
    j["predicted"] = predicted_shadow_vertices(*d, params.n());
    if (*d == 2)
      j["d2_caveat"] = "for d=2 the prediction formula overshoots (the dual is a 2n-gon); "
                       "the predicted value is informational only";
  } else {
    j["predicted"] = nullptr;
  }
  j["upper_bound"] = facet_upper_bound(A.zone_count(), A.dim());
  j["polygon"] = polygon_to_json(poly);
  emit(j, out);
  return 0;
}

int cmd_verify(const std::string& lemma, int d, int k, int trials, unsigned seed, int jobs,
               const std::string& out) {
  CheckResult res;
  if (lemma == "4.2")
    res = verify_selected_vertices(d, k);
  else if (lemma == "4.3")
    res = verify_surviving_edges(d, k, jobs);
  else if (lemma == "walk")
    res = verify_boundary_walk(d, k);
  else if (lemma == "3.3")
    res = verify_facet_embedding();
  else if (lemma == "3.4")
    res = verify_symmetric_projection(k, seed);
  else if (lemma == "2.2-oracle")
    res = verify_survival_oracle(trials, seed, jobs);
  else
    throw CLI::ValidationError("--lemma", "unknown check '" + lemma + "'");

  Json j;
  j["lemma"] = res.name;
  j["pass"] = res.pass;
  j["details"] = res.details;
  emit(j, out);
  return res.pass ? 0 : kExitVerifyFail;
}

int cmd_export(const std::string& object, const std::string& format, const std::string& matrix_file,
               std::optional<int> d, std::optional<int> k, const std::string& out, int digits,
               const std::string& stroke) {
  ArrangementMatrix A = load_matrix(matrix_file, d, k);
  std::string payload;
  if (object == "zonotope" || object == "dual") {
    if (format != "off") throw std::invalid_argument("solid export supports --format off only");
    if (A.dim() != 3) throw std::invalid_argument("OFF export requires d = 3");
    if (object == "dual") {
      DualZonotope dz(std::move(A));
      payload = render_off_dual(dz, digits);
    } else {
      payload = render_off_zonotope(A, digits);
    }
  } else if (object == "shadow" || object == "section") {
    if (format != "svg") throw std::invalid_argument("polygon export supports --format svg only");
    DualZonotope dz(std::move(A));
    Polygon2 poly = shadow_polygon(dz);
    if (object == "section") poly = polar_polygon(poly);
    payload = render_svg(poly, digits, stroke);
  } else {
    throw std::invalid_argument("unknown object '" + object + "'");
  }
  if (!out.empty())
    write_file(out, payload);
  else
    std::cout << payload;
  return 0;
}

int cmd_report(int d, int k, int jobs, const std::string& out) {
  Json report = run_report(d, k, jobs);
  emit(report, out);
  bool all_pass = true;
  for (const auto& [name, v] : report["verifications"].items()) all_pass = all_pass && v["pass"].get<bool>();
  return all_pass ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dual-zonotope shadows, sections, and machine checks"};
  app.require_subcommand(1);

  int d = 3, k = 1, trials = 20, jobs = 1, digits = 17;
  unsigned seed = 1;
  std::string out, matrix_file, format = "json", lemma, object = "dual";
  std::string stroke = "black", geometry_out;

  auto* build = app.add_subcommand("build", "construct the easter-egg arrangement matrix");
  build->add_option("--d", d, "ambient dimension")->required();
  build->add_option("--k", k, "block parameter (n = 4k+1)")->required();
  build->add_option("--out", out, "matrix JSON file");
  build->add_option("--geometry", geometry_out, "also write rays/vertices JSON here");

  auto* shadow = app.add_subcommand("shadow", "2D shadow of the dual zonotope");
  shadow->add_option("--matrix", matrix_file, "matrix JSON file");
  shadow->add_option("--d", d, "easter-egg dimension");
  shadow->add_option("--k", k, "easter-egg block parameter");
  shadow->add_option("--format", format, "json|svg");
  shadow->add_option("--out", out, "output file");
  shadow->add_option("--digits", digits, "decimal digits in svg export");
  shadow->add_option("--stroke", stroke, "svg stroke color");

  auto* section = app.add_subcommand("section", "central 2D cut of the primal zonotope");
  section->add_option("--matrix", matrix_file, "matrix JSON file");
  section->add_option("--d", d, "easter-egg dimension");
  section->add_option("--k", k, "easter-egg block parameter");
  section->add_option("--format", format, "json|svg");
  section->add_option("--out", out, "output file");
  section->add_option("--digits", digits, "decimal digits in svg export");
  section->add_option("--stroke", stroke, "svg stroke color");

  auto* verify = app.add_subcommand("verify", "machine-check one of the documented claims");
  verify->add_option("--lemma", lemma, "4.2|4.3|walk|3.3|3.4|2.2-oracle")->required();
  verify->add_option("--d", d, "dimension");
  verify->add_option("--k", k, "block parameter");
  verify->add_option("--trials", trials, "instances for 2.2-oracle");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out, "report JSON file");

  auto* exp = app.add_subcommand("export", "OFF/SVG figure export");
  exp->add_option("--object", object, "zonotope|dual|shadow|section")->required();
  exp->add_option("--format", format, "off|svg")->required();
  exp->add_option("--matrix", matrix_file, "matrix JSON file");
  exp->add_option("--d", d, "easter-egg dimension");
  exp->add_option("--k", k, "easter-egg block parameter");
  exp->add_option("--out", out, "output file");
  exp->add_option("--digits", digits, "decimal digits for coordinates");
  exp->add_option("--stroke", stroke, "svg stroke color");

  auto* report = app.add_subcommand("report", "full counts and verification report");
  report->add_option("--d", d, "dimension")->required();
  report->add_option("--k", k, "block parameter")->required();
  report->add_option("--jobs", jobs, "worker threads");
  report->add_option("--out", out, "report JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/message
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    Timer timer;
    if (app.got_subcommand(build)) return cmd_build(d, k, out, geometry_out);
    if (app.got_subcommand(shadow))
      return cmd_shadow(matrix_file, matrix_file.empty() ? std::optional<int>(d) : std::nullopt,
                        matrix_file.empty() ? std::optional<int>(k) : std::nullopt, format, out, digits,
                        stroke, false);
    if (app.got_subcommand(section))
      return cmd_shadow(matrix_file, matrix_file.empty() ? std::optional<int>(d) : std::nullopt,
                        matrix_file.empty() ? std::optional<int>(k) : std::nullopt, format, out, digits,
                        stroke, true);
    if (app.got_subcommand(verify)) return cmd_verify(lemma, d, k, trials, seed, jobs, out);
    if (app.got_subcommand(exp))
      return cmd_export(object, format, matrix_file, matrix_file.empty() ? std::optional<int>(d) : std::nullopt,
                        matrix_file.empty() ? std::optional<int>(k) : std::nullopt, out, digits, stroke);
    if (app.got_subcommand(report)) return cmd_report(d, k, jobs, out);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
