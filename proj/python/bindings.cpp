// Python bindings for the main operations. Values cross the boundary as
// JSON strings in the same schemas the CLI speaks, so nothing exact is ever
// squeezed through a double.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polystab/io.hpp"

namespace py = pybind11;
namespace ps = polystab;
using ps::io::json;

namespace {

json parse(const std::string& text) { return json::parse(text); }

std::vector<ps::TorusFrame> frames_or_default(const std::string& frames_json, int dim,
                                              uint64_t seed, int count) {
  if (frames_json.empty()) return ps::default_frames(dim, count, seed);
  return ps::io::frames_from_json(parse(frames_json), dim);
}

std::string hull(const std::string& points_json) {
  json j = parse(points_json);
  const json& arr = j.is_object() ? j.at("points") : j;
  std::vector<ps::QVec> pts;
  for (const auto& p : arr) pts.push_back(ps::io::qvec_from_json(p));
  return ps::io::polytope_to_json(ps::convex_hull(pts)).dump(2);
}

std::string pair_check(const std::string& v_json, const std::string& w_json,
                       const std::string& frames_json, uint64_t seed, int frame_count) {
  ps::Pair p(ps::io::form_from_json(parse(v_json)), ps::io::form_from_json(parse(w_json)));
  auto frames = frames_or_default(frames_json, p.v.acting_dim(), seed, frame_count);
  return ps::io::verdict_to_json(ps::check_pair_numerical(p, frames)).dump(2);
}

std::string hm_check(const std::string& w_json, const std::string& frames_json, uint64_t seed,
                     int frame_count) {
  ps::SparseForm w = ps::io::form_from_json(parse(w_json));
  auto frames = frames_or_default(frames_json, w.acting_dim(), seed, frame_count);
  return ps::io::verdict_to_json(ps::hilbert_mumford_check(w, frames)).dump(2);
}

std::string slope(const std::string& v_json, const std::string& w_json,
                  const std::vector<long long>& u) {
  ps::SparseForm v = ps::io::form_from_json(parse(v_json));
  ps::SparseForm w = ps::io::form_from_json(parse(w_json));
  ps::HermitianFrame frame;
  ps::SlopeReport rep =
      ps::energy_along_psg(v, w, ps::OnePSG::from(u), frame, ps::default_alpha_grid());
  return ps::io::slope_report_to_json(rep).dump(2);
}

std::string exact_slope(const std::string& v_json, const std::string& w_json,
                        const std::vector<long long>& u) {
  ps::Pair p(ps::io::form_from_json(parse(v_json)), ps::io::form_from_json(parse(w_json)));
  ps::TorusFrame id = ps::TorusFrame::identity(p.v.acting_dim());
  return ps::rat_to_string(ps::destabilizing_slope(p, id, ps::OnePSG::from(u)));
}

std::string energy(const std::string& v_json, const std::string& w_json,
                   const std::string& sigma_json) {
  ps::SparseForm v = ps::io::form_from_json(parse(v_json));
  ps::SparseForm w = ps::io::form_from_json(parse(w_json));
  ps::GMat sigma = ps::io::matrix_from_json(parse(sigma_json));
  ps::HermitianFrame frame;
  return ps::io::energy_sample_to_json(ps::energy(v, w, sigma, frame)).dump(2);
}

double identity_residual(const std::string& v_json, const std::string& w_json,
                         const std::string& sigma_json) {
  ps::SparseForm v = ps::io::form_from_json(parse(v_json));
  ps::SparseForm w = ps::io::form_from_json(parse(w_json));
  ps::GMat sigma = ps::io::matrix_from_json(parse(sigma_json));
  ps::HermitianFrame frame;
  return ps::distance_identity_residual(v, w, sigma, frame);
}

std::string binary_pair(const std::string& f, const std::string& g) {
  ps::OracleReport rep = ps::oracle_equivalence(ps::parse_factored(f), ps::parse_factored(g));
  return ps::io::oracle_report_to_json(rep).dump(2);
}

py::tuple binary_enumerate(int max_e, int max_d) {
  auto roots = ps::standard_root_set();
  long long pairs = 0, mismatches = 0;
  for (int e = 0; e <= max_e; ++e)
    for (const auto& f : ps::enumerate_factored_forms(roots, e))
      for (int d = 0; d <= max_d; ++d)
        for (const auto& g : ps::enumerate_factored_forms(roots, d)) {
          ++pairs;
          if (!ps::oracle_equivalence(f, g).agree) ++mismatches;
        }
  return py::make_tuple(pairs, mismatches);
}

std::string curve_check(const std::string& form_json, uint64_t seed, int frame_count) {
  ps::PlaneCurve c = ps::PlaneCurve::of(ps::io::form_from_json(parse(form_json)));
  auto frames = ps::default_frames(3, frame_count, seed);
  return ps::io::curve_report_to_json(ps::mabuchi_bound_report(c, frames)).dump(2);
}

std::string x_resultant_json(const std::string& form_json) {
  ps::PlaneCurve c = ps::PlaneCurve::of(ps::io::form_from_json(parse(form_json)));
  return ps::io::form_to_json(ps::x_resultant(c)).dump(2);
}

std::string hyperdiscriminant_json(const std::string& form_json) {
  ps::PlaneCurve c = ps::PlaneCurve::of(ps::io::form_from_json(parse(form_json)));
  return ps::io::form_to_json(ps::hyperdiscriminant(c)).dump(2);
}

py::dict degrees(int d) {
  ps::CurveStabilityData data = ps::degrees_and_mu(d);
  py::dict out;
  out["d"] = data.d;
  out["deg_resultant"] = data.deg_resultant;
  out["deg_hyperdiscriminant"] = data.deg_hyperdiscriminant;
  out["mu"] = data.mu;
  out["normalized_degree"] = data.normalized_degree;
  return out;
}

std::vector<std::string> project(const std::vector<std::string>& coords) {
  ps::QVec x;
  for (const auto& c : coords) x.push_back(ps::rat_from_string(c));
  ps::QVec p = ps::quotient_project(x);
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(ps::rat_to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semistability of pairs via weight polytopes: exact geometry kernel, "
            "torus weights, pair checks, energies, binary forms, plane curves.";

  py::register_exception<ps::ParseError>(m, "SchemaError", PyExc_ValueError);

  m.def("hull", &hull, py::arg("points_json"),
        "Convex hull of exact rational points; returns the polytope as JSON.");
  m.def("pair_check", &pair_check, py::arg("v_json"), py::arg("w_json"),
        py::arg("frames_json") = std::string(), py::arg("seed") = 424242ull,
        py::arg("frame_count") = 6, "Weight-polytope semistability verdict for a pair.");
  m.def("hm_check", &hm_check, py::arg("w_json"), py::arg("frames_json") = std::string(),
        py::arg("seed") = 424242ull, py::arg("frame_count") = 6,
        "Classical Hilbert-Mumford check as the pair (1, w).");
  m.def("slope", &slope, py::arg("v_json"), py::arg("w_json"), py::arg("u"),
        "Energy along diag(alpha^u) over the default grid; returns the slope report.");
  m.def("exact_slope", &exact_slope, py::arg("v_json"), py::arg("w_json"), py::arg("u"),
        "w_u(w) - w_u(v) as an exact rational string.");
  m.def("energy", &energy, py::arg("v_json"), py::arg("w_json"), py::arg("sigma_json"),
        "One energy sample: exact norms squared plus the float log ratio.");
  m.def("distance_identity_residual", &identity_residual, py::arg("v_json"), py::arg("w_json"),
        py::arg("sigma_json"));
  m.def(
      "closed_form_check",
      [](const std::string& f, const std::string& g) {
        return ps::closed_form_check(ps::parse_factored(f), ps::parse_factored(g));
      },
      py::arg("f"), py::arg("g"),
      "Root-multiplicity criterion for pairs of factored binary forms.");
  m.def("binary_pair", &binary_pair, py::arg("f"), py::arg("g"),
        "Closed form against the polytope pipeline on root-adapted frames.");
  m.def("binary_enumerate", &binary_enumerate, py::arg("max_e"), py::arg("max_d"),
        "Exhaustive oracle comparison; returns (pairs, mismatches).");
  m.def("curve_check", &curve_check, py::arg("form_json"), py::arg("seed") = 424242ull,
        py::arg("frame_count") = 6,
        "Plane-curve polytope test with normalized degrees; returns the full report.");
  m.def("x_resultant", &x_resultant_json, py::arg("form_json"));
  m.def("hyperdiscriminant", &hyperdiscriminant_json, py::arg("form_json"));
  m.def("degrees_and_mu", &degrees, py::arg("d"));
  m.def("quotient_project", &project, py::arg("coords"),
        "Sum-zero projection of a rational vector, entries as strings.");
}
