#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zariski/cli.hpp"

namespace zariski::cli {

using json = nlohmann::ordered_json;
using exactalg::to_string;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + path);
}

bool is_obstruction(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotNegativeDefinite:
    case ErrorKind::NotPseudoEffective:
    case ErrorKind::InternalNegdefViolation:
    case ErrorKind::NotEffective:
    case ErrorKind::GenerationExhausted:
    case ErrorKind::InternalInvariant:
      return true;
    default:
      return false;
  }
}

const surface::QDivisor& lookup_divisor(const ConfigFile& cfg, const std::string& name) {
  const auto* d = cfg.divisor(name);
  if (!d) throw Error(ErrorKind::Parse, "divisors: no divisor named \"" + name + "\"");
  return *d;
}

const surface::Cycle& lookup_cycle(const ConfigFile& cfg, const std::string& name) {
  const auto* c = cfg.cycle(name);
  if (!c) throw Error(ErrorKind::Parse, "cycles: no cycle named \"" + name + "\"");
  return *c;
}

json minors_json(const std::vector<exactalg::Rational>& minors) {
  json arr = json::array();
  for (const auto& m : minors) arr.push_back(to_string(m));
  return arr;
}

json report_json(const oracle::VerificationReport& report) {
  json r;
  r["passed"] = report.passed();
  r["checks"] = json::array();
  for (const auto& c : report.checks) {
    json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.witness.empty()) j["witness"] = c.witness;
    r["checks"].push_back(std::move(j));
  }
  return r;
}

int cmd_check(const std::string& config_path, const std::string& what, const std::string& name,
              std::ostream& out) {
  const ConfigFile cfg = parse_config(read_file(config_path));
  const auto& config = *cfg.config;
  json report;
  report["property"] = what;
  report["target"] = name;
  bool holds = false;

  if (what == "negdef") {
    const auto& cycle = lookup_cycle(cfg, name);
    try {
      const auto certified = surface::certify_negdef(cycle);
      holds = true;
      report["minors"] = minors_json(*certified.negdef_certificate());
    } catch (const surface::NotNegativeDefiniteError& e) {
      report["minors"] = minors_json(e.minors());
      report["witness"] = {{"order", e.order()}, {"minor", to_string(e.minor())}};
    }
  } else if (what == "nef") {
    const auto& d = lookup_divisor(cfg, name);
    holds = true;
    json pairings = json::object();
    for (std::size_t i = 0; i < config.size(); ++i) {
      const auto v = surface::pair_with_curve(d, i);
      pairings[config.name(i)] = to_string(v);
      if (holds && sgn(v) < 0) {
        holds = false;
        report["witness"] = {{"curve", config.name(i)}, {"intersection", to_string(v)}};
      }
    }
    report["intersections"] = std::move(pairings);
  } else if (what == "effective") {
    const auto& d = lookup_divisor(cfg, name);
    holds = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (sgn(d[i]) < 0) {
        holds = false;
        report["witness"] = {{"curve", config.name(i)}, {"coefficient", to_string(d[i])}};
        break;
      }
    }
  } else {
    const auto& d = lookup_divisor(cfg, name);
    try {
      const auto cert = decomp::is_pseff_closed_world(d);
      holds = true;
      json w = json::object();
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (sgn((*cert.witness)[i]) != 0) w[config.name(i)] = to_string((*cert.witness)[i]);
      }
      report["certificate"] = {{"kind", std::string(decomp::to_string(cert.kind))},
                               {"witness", std::move(w)}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPseudoEffective) throw;
      report["witness"] = e.what();
    }
  }
  report["holds"] = holds;
  out << report.dump(2) << "\n";
  return holds ? kExitOk : kExitObstruction;
}

struct DecomposeOptions {
  std::string config_path;
  std::string divisor;
  std::string support;
  std::string support_any;
  bool fujita = false;
  bool assert_pseff = false;
  std::string out_path = "-";
};

int cmd_decompose(const DecomposeOptions& o, std::ostream& out, std::ostream& err) {
  const int chosen = int(!o.support.empty()) + int(!o.support_any.empty()) + int(o.fujita);
  if (chosen != 1) {
    throw Error(ErrorKind::Parse, "exactly one of --support, --support-any, --fujita is required");
  }
  if (o.assert_pseff && !o.support.empty()) {
    throw Error(ErrorKind::Parse, "--assert-pseff only applies to --support-any and --fujita");
  }
  const ConfigFile cfg = parse_config(read_file(o.config_path));
  const auto& d = lookup_divisor(cfg, o.divisor);
  std::optional<std::string> cycle_name;
  if (!o.support.empty()) cycle_name = o.support;
  if (!o.support_any.empty()) cycle_name = o.support_any;
  std::optional<surface::Cycle> cycle;
  if (cycle_name) cycle = lookup_cycle(cfg, *cycle_name);

  std::optional<decomp::PseffCertificate> cert;
  if (o.assert_pseff) cert = decomp::PseffCertificate::asserted_by_caller("--assert-pseff");

  std::optional<decomp::Decomposition> dec;
  try {
    if (!o.support.empty()) {
      dec = surface::is_effective(d) ? decomp::decompose_effective_support(d, *cycle)
                                     : decomp::decompose_support(d, *cycle);
    } else if (!o.support_any.empty()) {
      dec = decomp::decompose_pseff_any_cycle(d, cert, *cycle);
    } else {
      dec = decomp::decompose_fujita(d, cert);
    }
  } catch (const Error& e) {
    if (!is_obstruction(e.kind())) throw;
    json payload;
    payload["error"] = std::string(to_string(e.kind()));
    payload["message"] = e.what();
    if (const auto* nnd = dynamic_cast<const surface::NotNegativeDefiniteError*>(&e)) {
      payload["witness"] = {{"order", nnd->order()}, {"minor", to_string(nnd->minor())}};
    }
    write_output(o.out_path, payload.dump(2) + "\n", out);
    err << "no decomposition: " << e.what() << "\n";
    return kExitObstruction;
  }

  ResultFile result{config_hash(*cfg.config), o.divisor, cycle_name, *dec,
                    oracle::verify_decomposition(d, cycle, *dec)};
  write_output(o.out_path, serialize_result(result), out);
  if (!result.verification.passed()) {
    err << "decomposition failed verification\n";
    return kExitObstruction;
  }
  return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& result_path,
               std::ostream& out, std::ostream& err) {
  const ConfigFile cfg = parse_config(read_file(config_path));
  const ResultFile result = parse_result(read_file(result_path), cfg);
  if (result.config_hash != config_hash(*cfg.config)) {
    err << "result was produced for a different configuration (" << result.config_hash
        << " vs " << config_hash(*cfg.config) << ")\n";
    return kExitInput;
  }
  const auto& d = lookup_divisor(cfg, result.divisor_name);
  std::optional<surface::Cycle> cycle;
  if (result.cycle_name) cycle = lookup_cycle(cfg, *result.cycle_name);

  auto report = oracle::verify_decomposition(d, cycle, result.decomposition);
  const bool same_input = result.decomposition.D == d;
  report.add("input_divisor", same_input,
             same_input ? "" : "stored D differs from divisor \"" + result.divisor_name + "\"");
  out << report_json(report).dump(2) << "\n";
  for (const auto& c : report.checks) {
    if (!c.passed) err << "check failed: " << c.name << ": " << c.witness << "\n";
  }
  return report.passed() ? kExitOk : kExitObstruction;
}

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t n = 4;
  std::string shape = "random";
  std::string coeff_bound = "10";
  std::string out_path = "-";
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  oracle::InstanceSpec spec;
  spec.seed = o.seed;
  spec.n_curves = o.n;
  spec.coeff_bound = exactalg::parse_rational(o.coeff_bound);
  spec.shape = o.shape == "a-chain" ? oracle::Template::a_chain : oracle::Template::random;
  const auto inst = oracle::generate_instance(spec);
  ConfigFile file{inst.config, {{"D", inst.divisor}}, {{"G", inst.cycle}, {"block", inst.block}}};
  write_output(o.out_path, serialize_config(file), out);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Zariski decompositions on finite curve configurations", "zariski"};
  app.require_subcommand(1);

  std::string check_config, check_what, check_name;
  auto* check = app.add_subcommand("check", "Test a property: negdef <cycle>, nef|effective|pseff <divisor>");
  check->add_option("config", check_config, "Configuration JSON")->required();
  check->add_option("property", check_what, "negdef, nef, effective or pseff")
      ->required()
      ->check(CLI::IsMember({"negdef", "nef", "effective", "pseff"}));
  check->add_option("name", check_name, "Cycle or divisor name")->required();

  DecomposeOptions dopt;
  auto* decompose = app.add_subcommand("decompose", "Compute and verify a Zariski decomposition");
  decompose->add_option("config", dopt.config_path, "Configuration JSON")->required();
  decompose->add_option("divisor", dopt.divisor, "Divisor name")->required();
  decompose->add_option("--support", dopt.support, "Support in a negative definite cycle");
  decompose->add_option("--support-any", dopt.support_any,
                        "Support in an arbitrary cycle (pseudo-effective divisor)");
  decompose->add_flag("--fujita", dopt.fujita, "Full nef/negative decomposition");
  decompose->add_flag("--assert-pseff", dopt.assert_pseff,
                      "Treat the divisor as pseudo-effective without a cone witness");
  decompose->add_option("--out", dopt.out_path, "Result path, - for stdout");

  std::string verify_config, verify_result;
  auto* verify = app.add_subcommand("verify", "Re-check a stored result against its configuration");
  verify->add_option("config", verify_config, "Configuration JSON")->required();
  verify->add_option("result", verify_result, "Result JSON")->required();

  GenOptions gopt;
  auto* gen = app.add_subcommand("gen", "Generate a deterministic random instance");
  gen->add_option("--seed", gopt.seed, "Random seed");
  gen->add_option("--n", gopt.n, "Number of curves");
  gen->add_option("--template", gopt.shape, "random or a-chain")
      ->check(CLI::IsMember({"random", "a-chain"}));
  gen->add_option("--coeff-bound", gopt.coeff_bound, "Bound on divisor coefficients");
  gen->add_option("--out", gopt.out_path, "Output path, - for stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(check_config, check_what, check_name, out);
    if (*decompose) return cmd_decompose(dopt, out, err);
    if (*verify) return cmd_verify(verify_config, verify_result, out, err);
    if (*gen) return cmd_gen(gopt, out);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_obstruction(e.kind()) ? kExitObstruction : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace zariski::cli
