#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "zariski/cli.hpp"

using namespace zariski;
using namespace zariski::cli;
using exactalg::RatVector;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

const char* kBlowup = R"({
  "curves": [{"name": "H"}, {"name": "E"}],
  "intersections": [["1", "0"], ["0", "-1"]],
  "divisors": {"D": {"H": "1", "E": "2"}, "minusH": {"H": "-1"}},
  "cycles": {"G": ["E"], "all": ["H", "E"]}
})";

const char* kThree = R"({
  "curves": [{"name": "H"}, {"name": "C1"}, {"name": "C2"}],
  "intersections": [["1", "0", "0"], ["0", "-2", "1"], ["0", "1", "-2"]],
  "divisors": {"D": {"H": "1", "C1": "1", "C2": "1/4"}},
  "cycles": {"G": ["C1", "C2"]}
})";

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() /
          ("zariski_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zariski");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorKind parse_kind(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInvariant;
}

}  // namespace

TEST_CASE("config files round-trip") {
  const auto cfg = parse_config(kBlowup);
  CHECK(cfg.config->names() == std::vector<std::string>{"H", "E"});
  REQUIRE(cfg.divisor("D") != nullptr);
  CHECK(cfg.divisor("D")->coeffs() == RatVector{1, 2});
  CHECK(cfg.divisor("nope") == nullptr);
  REQUIRE(cfg.cycle("G") != nullptr);
  CHECK(cfg.cycle("G")->members() == std::vector<std::size_t>{1});
  const auto text = serialize_config(cfg);
  CHECK(parse_config(text) == cfg);
  CHECK(serialize_config(parse_config(text)) == text);
}

TEST_CASE("config hash ignores divisors and cycles") {
  const auto a = parse_config(kBlowup);
  json j = json::parse(kBlowup);
  j["divisors"] = json::object();
  j["cycles"] = json::object();
  const auto b = parse_config(j.dump());
  CHECK(config_hash(*a.config) == config_hash(*b.config));
  j["intersections"][1][1] = "-2";
  CHECK(config_hash(*a.config) != config_hash(*parse_config(j.dump()).config));
  j = json::parse(kBlowup);
  j["curves"][1]["name"] = "F";
  j["divisors"] = json::object();
  j["cycles"] = json::object();
  CHECK(config_hash(*a.config) != config_hash(*parse_config(j.dump()).config));
}

TEST_CASE("config parse errors") {
  CHECK(parse_kind("{") == ErrorKind::Parse);
  CHECK(parse_kind("[]") == ErrorKind::Parse);
  json j = json::parse(kBlowup);
  auto with = [&](auto edit) {
    json k = j;
    edit(k);
    return parse_kind(k.dump());
  };
  CHECK(with([](json& k) { k.erase("curves"); }) == ErrorKind::Parse);
  CHECK(with([](json& k) { k["extra"] = 1; }) == ErrorKind::Parse);
  CHECK(with([](json& k) { k["intersections"][0][0] = "1/0"; }) == ErrorKind::Parse);
  CHECK(with([](json& k) { k["intersections"][0][0] = 1; }) == ErrorKind::Parse);
  CHECK(with([](json& k) { k["intersections"][0][1] = "1"; }) != ErrorKind::InternalInvariant);
  CHECK(with([](json& k) { k["intersections"][0].push_back("0"); }) !=
        ErrorKind::InternalInvariant);
  CHECK(with([](json& k) { k["curves"][1]["name"] = "H"; }) != ErrorKind::InternalInvariant);
  CHECK(with([](json& k) { k["divisors"]["D"]["X"] = "1"; }) != ErrorKind::InternalInvariant);
  CHECK(with([](json& k) { k["cycles"]["G"].push_back("E"); }) != ErrorKind::InternalInvariant);
  CHECK(with([](json& k) { k["cycles"]["G"] = json::array({"X"}); }) !=
        ErrorKind::InternalInvariant);
}

TEST_CASE("decompose writes a verified result") {
  Workspace ws;
  const auto cfg = ws.write("blowup.json", kBlowup);
  const auto r = invoke({"decompose", cfg, "D", "--fujita"});
  CHECK(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["variant"] == "fujita");
  CHECK(j["P"] == json{{"H", "1"}});
  CHECK(j["N"] == json{{"E", "2"}});
  CHECK(j["verification"]["passed"] == true);

  const auto s = invoke({"decompose", cfg, "D", "--support", "G"});
  CHECK(s.code == kExitOk);
  CHECK(json::parse(s.out)["variant"] == "effective_support");

  const auto t = ws.write("three.json", kThree);
  const auto any = invoke({"decompose", t, "D", "--support-any", "G"});
  CHECK(any.code == kExitOk);
  const auto aj = json::parse(any.out);
  CHECK(aj["N"] == json{{"C1", "1"}, {"C2", "1/4"}});
  CHECK(aj["support_trace"] == json::parse(R"([["C1"], ["C1", "C2"]])"));

  // byte-identical on rerun
  CHECK(invoke({"decompose", t, "D", "--support-any", "G"}).out == any.out);
}

TEST_CASE("decompose exit codes") {
  Workspace ws;
  const auto cfg = ws.write("blowup.json", kBlowup);
  CHECK(invoke({"decompose", cfg, "D"}).code == kExitInput);
  CHECK(invoke({"decompose", cfg, "D", "--fujita", "--support", "G"}).code == kExitInput);
  CHECK(invoke({"decompose", cfg, "D", "--support", "G", "--assert-pseff"}).code == kExitInput);
  CHECK(invoke({"decompose", cfg, "nope", "--fujita"}).code == kExitInput);
  CHECK(invoke({"decompose", cfg, "D", "--support", "nope"}).code == kExitInput);
  CHECK(invoke({"decompose", (ws.dir / "missing.json").string(), "D", "--fujita"}).code ==
        kExitInput);
  CHECK(invoke({"bogus"}).code == kExitInput);
  CHECK(invoke({}).code == kExitInput);

  const auto pseff = invoke({"decompose", cfg, "minusH", "--fujita"});
  CHECK(pseff.code == kExitObstruction);
  CHECK(json::parse(pseff.out)["error"] == "NotPseudoEffective");

  const auto negdef = invoke({"decompose", cfg, "D", "--support", "all"});
  CHECK(negdef.code == kExitObstruction);
  const auto nj = json::parse(negdef.out);
  CHECK(nj["error"] == "NotNegativeDefinite");
  CHECK(nj["witness"]["order"] == 1);
  CHECK(nj["witness"]["minor"] == "1");
}

TEST_CASE("verify accepts results and rejects edits") {
  Workspace ws;
  const auto cfg = ws.write("three.json", kThree);
  const auto res = ws.dir / "r.json";
  REQUIRE(invoke({"decompose", cfg, "D", "--fujita", "--out", res.string()}).code == kExitOk);
  CHECK(invoke({"verify", cfg, res.string()}).code == kExitOk);

  json j = json::parse(ws.read("r.json"));
  j["N"]["C2"] = "1/3";
  const auto edited = ws.write("edited.json", j.dump(2));
  const auto r = invoke({"verify", cfg, edited});
  CHECK(r.code == kExitObstruction);
  CHECK(json::parse(r.out)["passed"] == false);

  json other = json::parse(kThree);
  other["intersections"][0][0] = "2";
  const auto ocfg = ws.write("other.json", other.dump());
  CHECK(invoke({"verify", ocfg, res.string()}).code == kExitInput);

  json d = json::parse(kThree);
  d["divisors"]["D"]["H"] = "2";
  CHECK(invoke({"verify", ws.write("d.json", d.dump()), res.string()}).code == kExitObstruction);

  CHECK(invoke({"verify", cfg, ws.write("junk.json", "{\"x\": 1}")}).code == kExitInput);
}

TEST_CASE("result files round-trip") {
  const auto cfg = parse_config(kThree);
  const auto& d = *cfg.divisor("D");
  const auto dec = decomp::decompose_fujita(d, std::nullopt);
  ResultFile r{config_hash(*cfg.config), "D", std::nullopt, dec,
               oracle::verify_decomposition(d, std::nullopt, dec)};
  const auto text = serialize_result(r);
  const auto back = parse_result(text, cfg);
  CHECK(back.decomposition.P == dec.P);
  CHECK(back.decomposition.N == dec.N);
  CHECK(back.decomposition.variant == dec.variant);
  CHECK(back.decomposition.support_trace.size() == dec.support_trace.size());
  CHECK(serialize_result(back) == text);
}

TEST_CASE("check subcommand") {
  Workspace ws;
  const auto cfg = ws.write("blowup.json", kBlowup);
  CHECK(invoke({"check", cfg, "negdef", "G"}).code == kExitOk);
  const auto bad = invoke({"check", cfg, "negdef", "all"});
  CHECK(bad.code == kExitObstruction);
  CHECK(json::parse(bad.out)["holds"] == false);
  CHECK(invoke({"check", cfg, "nef", "D"}).code == kExitObstruction);
  CHECK(invoke({"check", cfg, "effective", "D"}).code == kExitOk);
  CHECK(invoke({"check", cfg, "effective", "minusH"}).code == kExitObstruction);
  const auto ps = invoke({"check", cfg, "pseff", "D"});
  CHECK(ps.code == kExitOk);
  CHECK(json::parse(ps.out)["certificate"]["witness"] == json{{"H", "1"}, {"E", "2"}});
  CHECK(invoke({"check", cfg, "pseff", "minusH"}).code == kExitObstruction);
  CHECK(invoke({"check", cfg, "ample", "D"}).code == kExitInput);
}

TEST_CASE("gen is deterministic and parseable") {
  const auto a = invoke({"gen", "--seed", "7", "--n", "5"});
  CHECK(a.code == kExitOk);
  CHECK(invoke({"gen", "--seed", "7", "--n", "5"}).out == a.out);
  CHECK(invoke({"gen", "--seed", "8", "--n", "5"}).out != a.out);
  const auto cfg = parse_config(a.out);
  CHECK(cfg.config->size() == 5);
  CHECK(cfg.divisor("D") != nullptr);
  CHECK(cfg.cycle("G") != nullptr);
  CHECK(cfg.cycle("block") != nullptr);

  const auto chain = parse_config(invoke({"gen", "--template", "a-chain", "--n", "2"}).out);
  CHECK(chain.config->mu() == exactalg::RatMatrix{{-2, 1}, {1, -2}});
  CHECK(invoke({"gen", "--template", "cubic"}).code == kExitInput);
  CHECK(invoke({"gen", "--coeff-bound", "x"}).code == kExitInput);
}
