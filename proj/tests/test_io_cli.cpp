#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>

#include "polystab/io.hpp"

using namespace polystab;
using io::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("POLYSTAB_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("POLYSTAB_FIXTURES");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

SparseForm random_form(std::mt19937_64& rng, int vars, int degree, Variance var,
                       std::vector<int> blocks = {}) {
  std::uniform_int_distribution<long> cpick(-6, 6);
  std::uniform_int_distribution<long> dpick(1, 5);
  SparseForm f = SparseForm::zero(vars, var, blocks);
  int block_size = f.acting_dim();
  while (f.is_zero()) {
    for (int t = 0; t < 4; ++t) {
      Exps e(static_cast<size_t>(vars), 0);
      size_t off = 0;
      for (size_t b = 0; b < f.blocks.size(); ++b) {
        int rest = degree;
        for (int i = 0; i + 1 < block_size; ++i) {
          std::uniform_int_distribution<int> epick(0, rest);
          e[off + static_cast<size_t>(i)] = epick(rng);
          rest -= e[off + static_cast<size_t>(i)];
        }
        e[off + static_cast<size_t>(block_size - 1)] = rest;
        off += static_cast<size_t>(block_size);
      }
      f.add_term(e, GQ(make_rat(cpick(rng), dpick(rng)), make_rat(cpick(rng), dpick(rng))));
    }
  }
  return f;
}

}  // namespace

TEST_CASE("rational json forms") {
  CHECK(io::rat_from_json(json("3/4")) == make_rat(3, 4));
  CHECK(io::rat_from_json(json("-2")) == Rat(-2));
  CHECK(io::rat_from_json(json(5)) == Rat(5));
  CHECK(io::rat_to_json(make_rat(6, 4)) == json("3/2"));
  CHECK(io::rat_to_json(Rat(7)) == json("7"));
  CHECK_THROWS_AS(io::rat_from_json(json("1/0")), ParseError);
  CHECK_THROWS_AS(io::rat_from_json(json("x")), ParseError);
  CHECK_THROWS_AS(io::rat_from_json(json(1.5)), ParseError);
}

TEST_CASE("forms round-trip through json") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    Variance var = trial % 2 ? Variance::Covariant : Variance::Contravariant;
    SparseForm f = trial % 3 == 0 ? random_form(rng, 6, 2, var, {3, 3})
                                  : random_form(rng, 3, 1 + trial % 4, var);
    json j = io::form_to_json(f);
    CHECK(io::form_from_json(j) == f);
    CHECK(json::parse(j.dump()) == j);
  }
  CHECK_THROWS_AS(io::form_from_json(json::parse(R"({"vars":2,"terms":[]})")), ParseError);
  CHECK_THROWS_AS(
      io::form_from_json(json::parse(R"({"vars":2,"variance":"up","terms":[]})")), ParseError);
}

TEST_CASE("matrices and frames round-trip") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> pick(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    GMat m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = GQ(Rat(pick(rng)), Rat(pick(rng)));
    if (m.det().is_zero()) continue;
    TorusFrame f(m, "t" + std::to_string(trial));
    json j = io::frame_to_json(f);
    TorusFrame g = io::frame_from_json(j);
    CHECK(g.conjugator == f.conjugator);
    CHECK(g.description == f.description);
  }
  json singular = json{{"conjugator", json::array({json::array({"1", "1"}),
                                                   json::array({"1", "1"})})}};
  CHECK_THROWS_AS(io::frame_from_json(singular), DomainError);
}

TEST_CASE("verdict serialization carries the certificate") {
  SparseForm v = SparseForm::monomial(2, {2, 0});
  SparseForm w = SparseForm::monomial(2, {4, 0});
  PairVerdict verdict = check_pair_numerical(Pair(v, w), {TorusFrame::identity(2)});
  json j = io::verdict_to_json(verdict);
  CHECK(j.at("status") == "DESTABILIZED");
  CHECK(j.at("certificate").at("u") == json::array({1, -1}));
  CHECK(j.at("certificate").at("margin") == "2");
}

TEST_CASE("cli: hull fixture") {
  auto r = run_cli("hull -i " + fixture("hull_collinear.json"));
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out.at("polytope").at("vertices") ==
        json::array({json::array({"0", "0"}), json::array({"2", "2"})}));
  CHECK(out.at("polytope").at("affine_dim") == 1);
}

TEST_CASE("cli: deterministic output") {
  for (std::string args :
       {std::string("hull -i ") + fixture("hull_collinear.json"),
        std::string("pair-check -i ") + fixture("pair_x2_x4.json"),
        std::string("slope -i ") + fixture("slope_x2_x4.json")}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: pair-check fixture is destabilized with an exact certificate") {
  auto r = run_cli("pair-check -i " + fixture("pair_x2_x4.json"));
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out.at("verdict").at("status") == "DESTABILIZED");
  CHECK(out.at("verdict").at("certificate").at("u") == json::array({1, -1}));
  CHECK(out.at("verdict").at("certificate").at("margin") == "2");
}

TEST_CASE("cli: replay accepts every emitted output") {
  for (std::string spec :
       {std::string("pair-check -i ") + fixture("pair_x2_x4.json"),
        std::string("hm-check -i ") + fixture("hm_x3y.json"),
        std::string("hull -i ") + fixture("hull_collinear.json"),
        std::string("binary --f [0:1]^2 --g [0:1]^4")}) {
    std::string tmp = "replay_tmp.json";
    auto first = run_cli(spec + " -o " + tmp);
    REQUIRE(first.exit_code == 0);
    auto second = run_cli("--replay " + tmp);
    REQUIRE(second.exit_code == 0);
    json out = json::parse(second.out);
    CHECK(out.at("replay") == "ok");
  }
  std::remove("replay_tmp.json");
}

TEST_CASE("cli: tampered certificates fail replay") {
  std::string tmp = "tamper_tmp.json";
  auto first = run_cli("pair-check -i " + fixture("pair_x2_x4.json") + " -o " + tmp);
  REQUIRE(first.exit_code == 0);
  std::ifstream in(tmp);
  json doc = json::parse(in);
  doc["verdict"]["certificate"]["margin"] = "3";
  std::ofstream(tmp) << doc.dump(2) << "\n";
  auto replay = run_cli("--replay " + tmp);
  CHECK(replay.exit_code == 3);
  std::remove(tmp.c_str());
}

TEST_CASE("cli: exit codes") {
  auto bad = run_cli("hull -i " + fixture("bad.json.txt"));
  CHECK(bad.exit_code == 2);
  auto missing = run_cli("hull --json {}");
  CHECK(missing.exit_code == 2);
  auto zero = run_cli("pair-check -i " + fixture("pair_zero_form.json"));
  CHECK(zero.exit_code == 3);
  auto singular = run_cli("energy -i " + fixture("energy_singular.json"));
  CHECK(singular.exit_code == 3);
}

TEST_CASE("cli: binary verdict via flags") {
  auto r = run_cli("binary --f [0:1]^2 --g [0:1]^4");
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out.at("report").at("agree") == true);
  CHECK(out.at("report").at("polytope").at("status") == "DESTABILIZED");
  auto enumr = run_cli("binary --enumerate --max-e 1 --max-d 2");
  REQUIRE(enumr.exit_code == 0);
  json table = json::parse(enumr.out);
  CHECK(table.at("mismatches") == 0);
  CHECK(table.at("pairs") == 6 * 21);
}

TEST_CASE("cli: hilbert-mumford fixture") {
  auto r = run_cli("hm-check -i " + fixture("hm_x3y.json"));
  REQUIRE(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out.at("verdict").at("status") == "DESTABILIZED");
  CHECK(out.at("input").at("seed") == 424242);  // default seed echoed
}
