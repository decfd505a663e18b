#include <cstdint>
#include <cstdio>

#include "json.hpp"
#include "zariski/cli.hpp"

namespace zariski::cli {

using json = nlohmann::ordered_json;
using exactalg::Rational;
using exactalg::RatVector;
using surface::Cycle;
using surface::QDivisor;

const QDivisor* ConfigFile::divisor(std::string_view name) const {
  for (const auto& [n, d] : divisors) {
    if (n == name) return &d;
  }
  return nullptr;
}

const Cycle* ConfigFile::cycle(std::string_view name) const {
  for (const auto& [n, c] : cycles) {
    if (n == name) return &c;
  }
  return nullptr;
}

bool operator==(const ConfigFile& a, const ConfigFile& b) {
  return surface::same_configuration(a.config, b.config) && a.divisors == b.divisors &&
         a.cycles == b.cycles;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, field + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& field) {
  if (!obj.is_object()) fail(field, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(field + "." + key, "missing");
  return *it;
}

const std::string& as_string(const json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get_ref<const std::string&>();
}

Rational as_rational(const json& v, const std::string& field) {
  const auto& s = as_string(v, field);
  if (!exactalg::is_rational_literal(s)) fail(field, "\"" + s + "\" is not a rational literal");
  return exactalg::parse_rational(s);
}

std::size_t curve_index(const surface::CurveConfiguration& config, const std::string& name,
                        const std::string& field) {
  const auto i = config.index_of(name);
  if (!i) fail(field, "unknown curve \"" + name + "\"");
  return *i;
}

QDivisor parse_coefficients(const json& v, const surface::ConfigPtr& config,
                            const std::string& field) {
  if (!v.is_object()) fail(field, "expected an object of curve coefficients");
  RatVector c = exactalg::zeros(config->size());
  std::vector<bool> seen(config->size(), false);
  for (const auto& [name, value] : v.items()) {
    const auto i = curve_index(*config, name, field);
    if (seen[i]) fail(field + "." + name, "duplicate curve");
    seen[i] = true;
    c[i] = as_rational(value, field + "." + name);
  }
  return QDivisor(config, std::move(c));
}

json coefficients_json(const QDivisor& d) {
  json obj = json::object();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) != 0) obj[d.config()->name(i)] = exactalg::to_string(d[i]);
  }
  return obj;
}

Cycle parse_cycle(const json& v, const surface::ConfigPtr& config, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of curve names");
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto f = field + "[" + std::to_string(k) + "]";
    const auto i = curve_index(*config, as_string(v[k], f), f);
    for (auto m : members) {
      if (m == i) fail(f, "curve repeated; cycles must be reduced");
    }
    members.push_back(i);
  }
  return Cycle(config, std::move(members));
}

json cycle_json(const Cycle& c) {
  json arr = json::array();
  for (auto m : c.members()) arr.push_back(c.config()->name(m));
  return arr;
}

}  // namespace

ConfigFile parse_config(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) fail("config", "expected a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "curves" && key != "intersections" && key != "divisors" && key != "cycles") {
      fail(key, "unknown field");
    }
  }

  const json& curves = member(root, "curves", "config");
  if (!curves.is_array()) fail("curves", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto f = "curves[" + std::to_string(i) + "]";
    names.push_back(as_string(member(curves[i], "name", f), f + ".name"));
  }

  const json& rows = member(root, "intersections", "config");
  if (!rows.is_array() || rows.size() != names.size()) {
    fail("intersections", "expected " + std::to_string(names.size()) + " rows");
  }
  exactalg::RatMatrix mu(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto f = "intersections[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != names.size()) {
      fail(f, "expected " + std::to_string(names.size()) + " entries");
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      mu(i, j) = as_rational(rows[i][j], f + "[" + std::to_string(j) + "]");
    }
  }

  ConfigFile file;
  file.config = surface::make_configuration(std::move(names), std::move(mu));

  if (const auto it = root.find("divisors"); it != root.end()) {
    if (!it->is_object()) fail("divisors", "expected an object");
    for (const auto& [name, value] : it->items()) {
      file.divisors.emplace_back(name, parse_coefficients(value, file.config, "divisors." + name));
    }
  }
  if (const auto it = root.find("cycles"); it != root.end()) {
    if (!it->is_object()) fail("cycles", "expected an object");
    for (const auto& [name, value] : it->items()) {
      file.cycles.emplace_back(name, parse_cycle(value, file.config, "cycles." + name));
    }
  }
  return file;
}

std::string serialize_config(const ConfigFile& file) {
  const auto& config = *file.config;
  json root;
  root["curves"] = json::array();
  for (const auto& n : config.names()) root["curves"].push_back({{"name", n}});
  root["intersections"] = json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < config.size(); ++j) {
      row.push_back(exactalg::to_string(config.intersection(i, j)));
    }
    root["intersections"].push_back(std::move(row));
  }
  root["divisors"] = json::object();
  for (const auto& [name, d] : file.divisors) root["divisors"][name] = coefficients_json(d);
  root["cycles"] = json::object();
  for (const auto& [name, c] : file.cycles) root["cycles"][name] = cycle_json(c);
  return root.dump(2) + "\n";
}

std::string config_hash(const surface::CurveConfiguration& config) {
  // FNV-1a over a length-prefixed canonical rendering.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](std::string_view s) {
    for (char c : std::to_string(s.size()) + ":") h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  };
  feed(std::to_string(config.size()));
  for (const auto& n : config.names()) feed(n);
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = 0; j < config.size(); ++j) {
      feed(exactalg::to_string(config.intersection(i, j)));
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_result(const ResultFile& result) {
  const auto& dec = result.decomposition;
  json root;
  root["config_hash"] = result.config_hash;
  root["variant"] = std::string(decomp::to_string(dec.variant));
  root["divisor"] = result.divisor_name;
  root["cycle"] = result.cycle_name ? json(*result.cycle_name) : json(nullptr);
  root["D"] = coefficients_json(dec.D);
  root["P"] = coefficients_json(dec.P);
  root["N"] = coefficients_json(dec.N);
  root["support_trace"] = json::array();
  for (const auto& c : dec.support_trace) root["support_trace"].push_back(cycle_json(c));
  if (!dec.pseff_chain.empty()) {
    const auto& cert = dec.pseff_chain.front();
    json c;
    c["kind"] = std::string(decomp::to_string(cert.kind));
    c["provenance"] = cert.provenance;
    if (cert.witness) {
      c["witness"] = coefficients_json(QDivisor(dec.D.config(), *cert.witness));
    }
    root["pseff_certificate"] = std::move(c);
  }
  json report;
  report["passed"] = result.verification.passed();
  report["checks"] = json::array();
  for (const auto& check : result.verification.checks) {
    json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    if (!check.witness.empty()) c["witness"] = check.witness;
    report["checks"].push_back(std::move(c));
  }
  root["verification"] = std::move(report);
  return root.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text, const ConfigFile& config) {
  const json root = parse_json(text);
  if (!root.is_object()) fail("result", "expected a JSON object");

  ResultFile r{
      as_string(member(root, "config_hash", "result"), "config_hash"),
      as_string(member(root, "divisor", "result"), "divisor"),
      std::nullopt,
      {decomp::Variant::fujita, QDivisor::zero(config.config), QDivisor::zero(config.config),
       QDivisor::zero(config.config), {}, {}, {}},
      {}};
  auto& dec = r.decomposition;

  const auto variant = decomp::variant_from_string(
      as_string(member(root, "variant", "result"), "variant"));
  if (!variant) fail("variant", "unknown variant");
  dec.variant = *variant;

  const json& cycle = member(root, "cycle", "result");
  if (!cycle.is_null()) r.cycle_name = as_string(cycle, "cycle");

  dec.D = parse_coefficients(member(root, "D", "result"), config.config, "D");
  dec.P = parse_coefficients(member(root, "P", "result"), config.config, "P");
  dec.N = parse_coefficients(member(root, "N", "result"), config.config, "N");

  const json& trace = member(root, "support_trace", "result");
  if (!trace.is_array()) fail("support_trace", "expected an array");
  for (std::size_t k = 0; k < trace.size(); ++k) {
    dec.support_trace.push_back(
        parse_cycle(trace[k], config.config, "support_trace[" + std::to_string(k) + "]"));
  }

  if (const auto it = root.find("pseff_certificate"); it != root.end()) {
    const auto& kind = as_string(member(*it, "kind", "pseff_certificate"),
                                 "pseff_certificate.kind");
    decomp::PseffCertificate cert;
    if (kind == "effective_combination") {
      cert.kind = decomp::PseffCertificate::Kind::effective_combination;
    } else if (kind == "asserted") {
      cert.kind = decomp::PseffCertificate::Kind::asserted;
    } else if (kind == "propagated") {
      cert.kind = decomp::PseffCertificate::Kind::propagated;
    } else {
      fail("pseff_certificate.kind", "unknown kind \"" + kind + "\"");
    }
    if (const auto p = it->find("provenance"); p != it->end()) {
      cert.provenance = as_string(*p, "pseff_certificate.provenance");
    }
    if (const auto w = it->find("witness"); w != it->end()) {
      cert.witness = parse_coefficients(*w, config.config, "pseff_certificate.witness").coeffs();
    }
    dec.pseff_chain.push_back(std::move(cert));
  }

  if (const auto it = root.find("verification"); it != root.end()) {
    const json& checks = member(*it, "checks", "verification");
    if (!checks.is_array()) fail("verification.checks", "expected an array");
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const auto f = "verification.checks[" + std::to_string(k) + "]";
      oracle::Check c;
      c.name = as_string(member(checks[k], "name", f), f + ".name");
      const json& passed = member(checks[k], "passed", f);
      if (!passed.is_boolean()) fail(f + ".passed", "expected a boolean");
      c.passed = passed.get<bool>();
      if (const auto w = checks[k].find("witness"); w != checks[k].end()) {
        c.witness = as_string(*w, f + ".witness");
      }
      r.verification.checks.push_back(std::move(c));
    }
    r.verification.variant = dec.variant;
  }
  return r;
}

}  // namespace zariski::cli
