#include "polystab/io.hpp"

namespace polystab::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("schema: " + what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  bad("expected rational as \"p/q\" string or integer");
}

json gq_to_json(const GQ& z) { return json{{"re", rat_to_json(z.re)}, {"im", rat_to_json(z.im)}}; }

GQ gq_from_json(const json& j) {
  if (j.is_object()) {
    GQ z;
    if (j.contains("re")) z.re = rat_from_json(j.at("re"));
    if (j.contains("im")) z.im = rat_from_json(j.at("im"));
    if (!j.contains("re") && !j.contains("im")) bad("Gaussian rational needs re or im");
    return z;
  }
  return GQ(rat_from_json(j));  // plain rationals are real
}

json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

QVec qvec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected nonempty array of rationals");
  QVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json llvec_to_json(const std::vector<long long>& v) {
  json a = json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

std::vector<long long> llvec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected nonempty integer array");
  std::vector<long long> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("expected integer entries");
    v.push_back(x.get<long long>());
  }
  return v;
}

json matrix_to_json(const GMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(gq_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected square matrix as array of rows");
  int n = static_cast<int>(j.size());
  GMat m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix rows must have equal size");
    for (int k = 0; k < n; ++k) m.at(i, k) = gq_from_json(row.at(static_cast<size_t>(k)));
  }
  return m;
}

json polytope_to_json(const LatticePolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim;
  j["affine_dim"] = p.affine_dim;
  json vs = json::array();
  for (const auto& v : p.vertices) vs.push_back(qvec_to_json(v));
  j["vertices"] = std::move(vs);
  json hs = json::array();
  for (const auto& h : p.halfspaces)
    hs.push_back(json{{"normal", llvec_to_json(h.normal)}, {"offset", rat_to_json(h.offset)}});
  j["halfspaces"] = std::move(hs);
  json es = json::array();
  for (const auto& e : p.equalities)
    es.push_back(json{{"normal", llvec_to_json(e.normal)}, {"offset", rat_to_json(e.offset)}});
  j["equalities"] = std::move(es);
  return j;
}

json form_to_json(const SparseForm& f) {
  json j;
  j["vars"] = f.num_vars;
  j["variance"] = f.variance == Variance::Covariant ? "co" : "contra";
  j["blocks"] = f.blocks;
  json terms = json::array();
  for (const auto& [e, c] : f.terms) {
    json t;
    t["exps"] = e;
    t["re"] = rat_to_json(c.re);
    t["im"] = rat_to_json(c.im);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

SparseForm form_from_json(const json& j) {
  int vars = field(j, "vars").get<int>();
  std::string var = field(j, "variance").get<std::string>();
  Variance variance;
  if (var == "co")
    variance = Variance::Covariant;
  else if (var == "contra")
    variance = Variance::Contravariant;
  else
    bad("variance must be \"co\" or \"contra\"");
  std::vector<int> blocks;
  if (j.contains("blocks")) blocks = j.at("blocks").get<std::vector<int>>();
  SparseForm f = SparseForm::zero(vars, variance, blocks);
  for (const auto& t : field(j, "terms")) {
    Exps e = field(t, "exps").get<Exps>();
    GQ c;
    if (t.contains("re")) c.re = rat_from_json(t.at("re"));
    if (t.contains("im")) c.im = rat_from_json(t.at("im"));
    f.add_term(e, c);
  }
  f.validate();
  return f;
}

json frame_to_json(const TorusFrame& f) {
  return json{{"conjugator", matrix_to_json(f.conjugator)}, {"description", f.description}};
}

TorusFrame frame_from_json(const json& j) {
  GMat c = matrix_from_json(field(j, "conjugator"));
  std::string desc;
  if (j.contains("description")) desc = j.at("description").get<std::string>();
  try {
    return TorusFrame(std::move(c), std::move(desc));
  } catch (const DomainError&) {
    throw DomainError("torus frame conjugator is singular");
  }
}

std::vector<TorusFrame> frames_from_json(const json& j, int dim) {
  std::vector<TorusFrame> frames;
  if (!j.is_array() || j.empty()) bad("frames must be a nonempty array");
  for (const auto& fj : j) {
    TorusFrame f = frame_from_json(fj);
    if (f.conjugator.n != dim) throw DomainError("frame size does not match the acted block");
    frames.push_back(std::move(f));
  }
  return frames;
}

json verdict_to_json(const PairVerdict& v) {
  json j;
  j["status"] = v.status == PairStatus::Destabilized ? "DESTABILIZED" : "SEMISTABLE_FOR_TESTED_TORI";
  j["tested_frames"] = v.tested_frames;
  if (v.certificate) {
    json c;
    c["frame"] = frame_to_json(v.certificate->frame);
    c["u"] = llvec_to_json(v.certificate->u.u);
    c["margin"] = rat_to_json(v.certificate->margin);
    j["certificate"] = std::move(c);
  }
  return j;
}

json hermitian_frame_to_json(const HermitianFrame& f) {
  json entries = json::array();
  for (const auto& [e, w] : f.weights)
    entries.push_back(json{{"exps", e}, {"weight", rat_to_json(w)}});
  return json{{"weights", std::move(entries)}};
}

HermitianFrame hermitian_frame_from_json(const json& j, int nvars) {
  HermitianFrame f;
  if (j.is_null()) return f;
  for (const auto& e : field(j, "weights")) {
    Exps exps = field(e, "exps").get<Exps>();
    if (static_cast<int>(exps.size()) != nvars) bad("hermitian weight exponent size mismatch");
    Rat w = rat_from_json(field(e, "weight"));
    if (w <= 0) throw DomainError("hermitian weights must be positive");
    f.weights[exps] = w;
  }
  return f;
}

json energy_sample_to_json(const EnergySample& s) {
  json j;
  j["sigma"] = matrix_to_json(s.sigma);
  j["norm_v_sq"] = rat_to_json(s.norm_v_sq);
  j["norm_w_sq"] = rat_to_json(s.norm_w_sq);
  j["p"] = s.p;
  return j;
}

json slope_report_to_json(const SlopeReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"alpha", rat_to_json(row.alpha)},
                        {"norm_v_sq", rat_to_json(row.norm_v_sq)},
                        {"norm_w_sq", rat_to_json(row.norm_w_sq)},
                        {"p", row.p}});
  }
  json j;
  j["rows"] = std::move(rows);
  j["slope_lsq"] = r.slope_lsq;
  j["slope_finest"] = r.slope_finest;
  j["slope_rounded"] = r.slope_rounded;
  j["drift_bound"] = r.drift_bound;
  return j;
}

json scan_report_to_json(const ScanReport& r) {
  json j;
  j["seed"] = r.config.seed;
  j["samples"] = r.config.samples;
  j["evaluated"] = r.evaluated;
  j["min_p"] = r.min_p;
  j["argmin"] = matrix_to_json(r.argmin);
  j["argmin_norm_v_sq"] = rat_to_json(r.argmin_norm_v_sq);
  j["argmin_norm_w_sq"] = rat_to_json(r.argmin_norm_w_sq);
  return j;
}

json oracle_report_to_json(const OracleReport& r) {
  json j;
  j["closed_form_semistable"] = r.closed_form;
  j["polytope"] = verdict_to_json(r.polytope);
  j["agree"] = r.agree;
  return j;
}

json curve_data_to_json(const CurveStabilityData& d) {
  json j;
  j["d"] = d.d;
  j["deg_resultant"] = d.deg_resultant;
  j["deg_hyperdiscriminant"] = d.deg_hyperdiscriminant;
  j["mu"] = d.mu;
  j["normalized_degree"] = d.normalized_degree;
  return j;
}

json curve_report_to_json(const CurveCheckReport& r) {
  json j;
  j["data"] = curve_data_to_json(r.data);
  json frames = json::array();
  for (const auto& fr : r.frames) {
    json f;
    f["frame"] = frame_to_json(fr.frame);
    f["contained"] = fr.contained;
    if (fr.certificate) {
      f["certificate"] = json{{"u", llvec_to_json(fr.certificate->u.u)},
                              {"margin", rat_to_json(fr.certificate->margin)}};
    }
    frames.push_back(std::move(f));
  }
  j["frames"] = std::move(frames);
  j["verdict"] = verdict_to_json(r.verdict);
  return j;
}

}  // namespace polystab::io
