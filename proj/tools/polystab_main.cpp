// polystab: batch CLI over the stability toolkit. Subcommands parse JSON
// (file, inline, or stdin), dispatch, and emit deterministic JSON with
// replayable certificates. Exit 0 covers every computed verdict including
// DESTABILIZED; 2 means malformed input, 3 a violated precondition.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polystab/io.hpp"

namespace ps = polystab;
using ps::io::json;

namespace {

constexpr uint64_t kDefaultSeed = 424242;
constexpr int kDefaultFrameCount = 6;

json run_command(const std::string& cmd, json input);

std::vector<ps::TorusFrame> materialize_frames(json& input, int dim) {
  if (input.contains("frames")) return ps::io::frames_from_json(input.at("frames"), dim);
  uint64_t seed = input.value("seed", kDefaultSeed);
  int count = input.value("frame_count", kDefaultFrameCount);
  input["seed"] = seed;
  input["frame_count"] = count;
  auto frames = ps::default_frames(dim, count, seed);
  json fj = json::array();
  for (const auto& f : frames) fj.push_back(ps::io::frame_to_json(f));
  input["frames"] = std::move(fj);
  return frames;
}

json cmd_hull(json& input) {
  std::vector<ps::QVec> pts;
  const json& pj = input.at("points");
  if (!pj.is_array() || pj.empty()) throw ps::ParseError("hull: expected nonempty points array");
  for (const auto& p : pj) pts.push_back(ps::io::qvec_from_json(p));
  return json{{"polytope", ps::io::polytope_to_json(ps::convex_hull(pts))}};
}

json cmd_pair_check(json& input) {
  ps::Pair pair(ps::io::form_from_json(input.at("v")), ps::io::form_from_json(input.at("w")));
  auto frames = materialize_frames(input, pair.v.acting_dim());
  return json{{"verdict", ps::io::verdict_to_json(ps::check_pair_numerical(pair, frames))}};
}

json cmd_hm_check(json& input) {
  ps::SparseForm w = ps::io::form_from_json(input.at("w"));
  auto frames = materialize_frames(input, w.acting_dim());
  return json{{"verdict", ps::io::verdict_to_json(ps::hilbert_mumford_check(w, frames))}};
}

json cmd_slope(json& input) {
  ps::SparseForm v = ps::io::form_from_json(input.at("v"));
  ps::SparseForm w = ps::io::form_from_json(input.at("w"));
  ps::OnePSG u = ps::OnePSG::from(ps::io::llvec_from_json(input.at("u")));
  std::vector<ps::Rat> alphas;
  if (input.contains("alphas"))
    for (const auto& a : input.at("alphas")) alphas.push_back(ps::io::rat_from_json(a));
  else
    alphas = ps::default_alpha_grid();
  ps::HermitianFrame herm = ps::io::hermitian_frame_from_json(
      input.contains("hermitian") ? input.at("hermitian") : json(), v.num_vars);
  ps::SlopeReport rep = ps::energy_along_psg(v, w, u, herm, alphas);
  json out = ps::io::slope_report_to_json(rep);
  ps::TorusFrame id = ps::TorusFrame::identity(v.acting_dim());
  out["exact_slope"] =
      ps::io::rat_to_json(ps::destabilizing_slope(ps::Pair(v, w), id, u));
  return json{{"slope", std::move(out)}};
}

json cmd_energy(json& input) {
  ps::SparseForm v = ps::io::form_from_json(input.at("v"));
  ps::SparseForm w = ps::io::form_from_json(input.at("w"));
  ps::HermitianFrame herm = ps::io::hermitian_frame_from_json(
      input.contains("hermitian") ? input.at("hermitian") : json(), v.num_vars);
  if (input.contains("scan")) {
    ps::ScanConfig cfg;
    const json& sj = input.at("scan");
    cfg.seed = sj.value("seed", cfg.seed);
    cfg.samples = sj.value("samples", cfg.samples);
    cfg.rotation_factors = sj.value("rotation_factors", cfg.rotation_factors);
    cfg.max_diag_exp = sj.value("max_diag_exp", cfg.max_diag_exp);
    input["scan"] = json{{"seed", cfg.seed},
                         {"samples", cfg.samples},
                         {"rotation_factors", cfg.rotation_factors},
                         {"max_diag_exp", cfg.max_diag_exp}};
    return json{{"scan", ps::io::scan_report_to_json(ps::energy_scan(v, w, herm, cfg))}};
  }
  ps::GMat sigma = ps::io::matrix_from_json(input.at("sigma"));
  return json{{"energy", ps::io::energy_sample_to_json(ps::energy(v, w, sigma, herm))}};
}

json cmd_binary(json& input) {
  if (input.contains("enumerate")) {
    const json& ej = input.at("enumerate");
    int max_e = ej.at("max_e").get<int>();
    int max_d = ej.at("max_d").get<int>();
    if (max_e < 0 || max_d < 0) throw ps::DomainError("binary enumerate: degrees must be >= 0");
    auto roots = ps::standard_root_set();
    json rows = json::array();
    long long mismatches = 0, pairs = 0;
    for (int e = 0; e <= max_e; ++e) {
      auto fs = ps::enumerate_factored_forms(roots, e);
      for (int d = 0; d <= max_d; ++d) {
        auto gs = ps::enumerate_factored_forms(roots, d);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            ps::OracleReport rep = ps::oracle_equivalence(f, g);
            ++pairs;
            if (!rep.agree) ++mismatches;
            rows.push_back(json{{"f", ps::factored_to_string(f)},
                                {"g", ps::factored_to_string(g)},
                                {"closed_form_semistable", rep.closed_form},
                                {"polytope_status",
                                 rep.polytope.status == ps::PairStatus::Destabilized
                                     ? "DESTABILIZED"
                                     : "SEMISTABLE_FOR_TESTED_TORI"},
                                {"agree", rep.agree}});
          }
      }
    }
    return json{{"pairs", pairs}, {"mismatches", mismatches}, {"rows", std::move(rows)}};
  }
  ps::FactoredBinaryForm f = ps::parse_factored(input.at("f").get<std::string>());
  ps::FactoredBinaryForm g = ps::parse_factored(input.at("g").get<std::string>());
  return json{{"report", ps::io::oracle_report_to_json(ps::oracle_equivalence(f, g))}};
}

json cmd_curve(json& input) {
  ps::PlaneCurve c = ps::PlaneCurve::of(ps::io::form_from_json(input.at("F")));
  auto frames = materialize_frames(input, 3);
  return json{{"curve", ps::io::curve_report_to_json(ps::mabuchi_bound_report(c, frames))}};
}

json run_command(const std::string& cmd, json input) {
  json result;
  if (cmd == "hull")
    result = cmd_hull(input);
  else if (cmd == "pair-check")
    result = cmd_pair_check(input);
  else if (cmd == "hm-check")
    result = cmd_hm_check(input);
  else if (cmd == "slope")
    result = cmd_slope(input);
  else if (cmd == "energy")
    result = cmd_energy(input);
  else if (cmd == "binary")
    result = cmd_binary(input);
  else if (cmd == "curve")
    result = cmd_curve(input);
  else
    throw ps::ParseError("unknown command: " + cmd);

  json out;
  out["command"] = cmd;
  out["input"] = std::move(input);
  for (auto& [k, v] : result.items()) out[k] = std::move(v);
  return out;
}

// Re-verify an emitted JSON document: re-run the embedded command on the
// embedded input, demand byte-identical output, and replay any destabilizer
// margins through one_psg_weight directly.
json replay_output(const json& doc) {
  std::string cmd = doc.at("command").get<std::string>();
  json again = run_command(cmd, doc.at("input"));
  if (again.dump(2) != doc.dump(2))
    throw ps::DomainError("replay mismatch: recomputed output differs");

  int certificates = 0;
  auto canonical_psg = [](const std::vector<long long>& raw) {
    ps::OnePSG u = ps::OnePSG::from(raw);
    if (u.u != raw)
      throw ps::DomainError("replay mismatch: certificate u is not a primitive sum-zero 1-PSG");
    return u;
  };
  auto replay_cert = [&](const json& vj, const ps::SparseForm& v, const ps::SparseForm& w) {
    if (!vj.contains("certificate")) return;
    const json& c = vj.at("certificate");
    ps::TorusFrame frame = ps::io::frame_from_json(c.at("frame"));
    ps::OnePSG u = canonical_psg(ps::io::llvec_from_json(c.at("u")));
    ps::Rat margin = ps::io::rat_from_json(c.at("margin"));
    ps::Rat replayed = ps::one_psg_weight(w, frame, u) - ps::one_psg_weight(v, frame, u);
    if (!(replayed == margin && margin > 0))
      throw ps::DomainError("replay mismatch: certificate margin does not re-verify");
    ++certificates;
  };
  if (doc.contains("verdict")) {
    ps::SparseForm w = ps::io::form_from_json(doc.at("input").at("w"));
    ps::SparseForm v = doc.at("input").contains("v")
                           ? ps::io::form_from_json(doc.at("input").at("v"))
                           : ps::SparseForm::constant_one(w.acting_dim());
    replay_cert(doc.at("verdict"), v, w);
  }
  if (doc.contains("curve")) {
    ps::PlaneCurve c = ps::PlaneCurve::of(ps::io::form_from_json(doc.at("input").at("F")));
    ps::CurveStabilityData data = ps::degrees_and_mu(c.degree);
    ps::SparseForm r = ps::x_resultant(c);
    ps::SparseForm delta = ps::hyperdiscriminant(c);
    for (const auto& fj : doc.at("curve").at("frames")) {
      if (!fj.contains("certificate")) continue;
      ps::TorusFrame frame = ps::io::frame_from_json(fj.at("frame"));
      ps::OnePSG u = canonical_psg(ps::io::llvec_from_json(fj.at("certificate").at("u")));
      ps::Rat margin = ps::io::rat_from_json(fj.at("certificate").at("margin"));
      ps::Rat replayed = ps::Rat(data.deg_resultant) * ps::one_psg_weight(delta, frame, u) -
                         ps::Rat(data.deg_hyperdiscriminant) * ps::one_psg_weight(r, frame, u);
      if (!(replayed == margin && margin > 0))
        throw ps::DomainError("replay mismatch: curve certificate does not re-verify");
      ++certificates;
    }
  }
  return json{{"replay", "ok"}, {"command", cmd}, {"certificates_verified", certificates}};
}

std::string read_source(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return inline_json;
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ps::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polystab: semistability of pairs via weight polytopes"};
  app.require_subcommand(0, 1);

  std::string input_path, inline_json, output_path, replay_path;
  app.add_option("--replay", replay_path, "re-verify a previously emitted JSON output file");
  app.add_option("-o,--output", output_path, "write JSON here instead of stdout");

  struct SubSpec {
    CLI::App* sub;
    std::string name;
  };
  std::vector<SubSpec> subs;
  for (const char* name : {"hull", "pair-check", "hm-check", "slope", "energy", "curve"}) {
    CLI::App* s = app.add_subcommand(name);
    s->fallthrough();
    s->add_option("-i,--input", input_path, "input JSON file, or '-' for stdin");
    s->add_option("--json", inline_json, "inline input JSON");
    subs.push_back({s, name});
  }
  CLI::App* bin = app.add_subcommand("binary");
  bin->fallthrough();
  bin->add_option("-i,--input", input_path, "input JSON file, or '-' for stdin");
  bin->add_option("--json", inline_json, "inline input JSON");
  std::string f_str, g_str;
  int max_e = -1, max_d = -1;
  bool do_enum = false;
  bin->add_option("--f", f_str, "first factored form, e.g. \"[0:1]^2\"");
  bin->add_option("--g", g_str, "second factored form");
  bin->add_flag("--enumerate", do_enum, "exhaustive table over the standard root set");
  bin->add_option("--max-e", max_e, "enumeration bound for deg(f)");
  bin->add_option("--max-d", max_d, "enumeration bound for deg(g)");
  subs.push_back({bin, "binary"});

  CLI11_PARSE(app, argc, argv);

  try {
    json out;
    if (!replay_path.empty()) {
      std::ifstream in(replay_path);
      if (!in) throw ps::ParseError("cannot open replay file: " + replay_path);
      out = replay_output(json::parse(in));
    } else {
      std::string cmd;
      for (const auto& s : subs)
        if (s.sub->parsed()) cmd = s.name;
      if (cmd.empty()) {
        std::cerr << app.help() << std::endl;
        return 2;
      }
      json input;
      if (cmd == "binary" && (do_enum || !f_str.empty())) {
        if (do_enum) {
          if (max_e < 0 || max_d < 0)
            throw ps::ParseError("binary --enumerate needs --max-e and --max-d");
          input = json{{"enumerate", json{{"max_e", max_e}, {"max_d", max_d}}}};
        } else {
          if (g_str.empty()) throw ps::ParseError("binary needs both --f and --g");
          input = json{{"f", f_str}, {"g", g_str}};
        }
      } else {
        input = json::parse(read_source(input_path, inline_json));
      }
      out = run_command(cmd, std::move(input));
    }
    std::string text = out.dump(2) + "\n";
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream of(output_path);
      of << text;
    }
    return 0;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const ps::ParseError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const ps::DomainError& e) {
    std::cerr << "precondition violated: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
