#include <algorithm>
#include <sstream>

#include "zariski/oracle.hpp"

namespace zariski::oracle {

using exactalg::to_string;
using namespace exactalg;

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
}

namespace {

std::string format(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

// Intersection numbers are recomputed here from the raw matrix so that the
// verifier does not lean on surface::pair.
Rational intersect(const RatMatrix& mu, const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * mu(i, j) * b[j];
  }
  return s;
}

Rational intersect_curve(const RatMatrix& mu, const RatVector& a, std::size_t c) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * mu(i, c);
  return s;
}

// G-nef subdivisors of D: 0 <= x <= d, sum_i x_i (C_i . G_j) >= 0.
LinearProgram subdivisor_program(const RatMatrix& mu, const RatVector& d,
                                 const std::vector<std::size_t>& members) {
  const std::size_t n = d.size();
  LinearProgram lp;
  lp.direction = Direction::maximize;
  lp.objective = zeros(n);
  for (auto g : members) {
    LinearConstraint row{zeros(n), Relation::greater_equal, 0};
    for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = mu(i, g);
    lp.constraints.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) lp.bounds.push_back(VariableBounds::between(0, d[i]));
  return lp;
}

std::optional<RatVector> least_element_lp(const RatMatrix& mu_g, const RatVector& b) {
  const std::size_t n = b.size();
  LinearProgram lp;
  lp.direction = Direction::minimize;
  lp.objective = RatVector(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint row{zeros(n), Relation::less_equal, b[j]};
    for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = mu_g(j, i);
    lp.constraints.push_back(std::move(row));
  }
  auto r = lp_optimize(lp);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.point;
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::all_of(a.begin(), a.end(), [&](std::size_t x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

}  // namespace

bool negdef_by_elimination(const RatMatrix& m) {
  if (!m.is_symmetric()) return false;
  RatMatrix a = -m;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

RatVector least_element_bruteforce(const Cycle& g, const RatVector& b) {
  const Cycle certified = surface::certify_negdef(g);
  if (b.size() != certified.size()) {
    throw Error(ErrorKind::DimensionMismatch, "least_element_bruteforce: rhs length mismatch");
  }
  auto x = least_element_lp(surface::submatrix(certified), b);
  if (!x) throw Error(ErrorKind::InternalInvariant, "least-element LP is infeasible");
  return *x;
}

QDivisor bauer_max_subdivisor(const QDivisor& d, const Cycle& g) {
  if (!surface::same_configuration(d.config(), g.config())) {
    throw Error(ErrorKind::ConfigMismatch, "divisor and cycle differ in configuration");
  }
  if (!surface::is_effective(d)) throw Error(ErrorKind::NotEffective, "divisor is not effective");
  surface::certify_negdef(g);

  const auto& mu = d.config()->mu();
  const std::size_t n = d.size();
  LinearProgram lp = subdivisor_program(mu, d.coeffs(), g.members());

  lp.objective = RatVector(n, Rational(1));
  const auto sweep = lp_optimize(lp);
  if (sweep.status != LpStatus::optimal) {
    throw Error(ErrorKind::InternalInvariant, "subdivisor LP is not optimal");
  }

  // Coordinatewise maxima, merged with max_divisor; the merge is again a
  // G-nef subdivisor and must coincide with the sweep vertex.
  QDivisor merged = QDivisor::zero(d.config());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(d[i]) == 0) continue;
    lp.objective = zeros(n);
    lp.objective[i] = 1;
    const auto r = lp_optimize(lp);
    if (r.status != LpStatus::optimal) {
      throw Error(ErrorKind::InternalInvariant, "coordinate LP is not optimal");
    }
    merged = surface::max_divisor(merged, QDivisor(d.config(), r.point));
  }
  for (auto j : g.members()) {
    if (sgn(intersect_curve(mu, merged.coeffs(), j)) < 0) {
      throw Error(ErrorKind::InternalInvariant, "max of G-nef subdivisors is not G-nef");
    }
  }
  if (merged.coeffs() != sweep.point) {
    throw Error(ErrorKind::InternalInvariant,
                "sweep vertex " + format(sweep.point) + " differs from coordinatewise maximum " +
                    format(merged.coeffs()));
  }
  return merged;
}

VerificationReport verify_decomposition(const QDivisor& d, const std::optional<Cycle>& g,
                                        const decomp::Decomposition& dec) {
  using decomp::Variant;
  VerificationReport report;
  report.variant = dec.variant;

  const bool same = surface::same_configuration(d.config(), dec.D.config()) &&
                    surface::same_configuration(d.config(), dec.P.config()) &&
                    surface::same_configuration(d.config(), dec.N.config()) &&
                    (!g || surface::same_configuration(d.config(), g->config()));
  report.add("configuration", same, same ? "" : "inputs live on different configurations");
  if (!same) return report;

  const auto& config = *d.config();
  const auto& mu = config.mu();
  const std::size_t n = d.size();
  const auto& dv = d.coeffs();
  const auto& pv = dec.P.coeffs();
  const auto& nv = dec.N.coeffs();

  std::vector<std::size_t> members;
  if (dec.variant == Variant::fujita) {
    for (std::size_t i = 0; i < n; ++i) members.push_back(i);
  } else if (g) {
    members = g->members();
  } else {
    report.add("cycle", false, "support variant verified without a cycle");
    return report;
  }

  {
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      if (pv[i] + nv[i] != dv[i]) {
        w = config.name(i) + ": P + N = " + to_string(Rational(pv[i] + nv[i])) + " but D = " +
            to_string(dv[i]);
      }
    }
    report.add("reconstruction", w.empty(), w);
  }

  auto effectivity = [&](const RatVector& v, const char* label) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(v[i]) < 0) return std::string(label) + " has coefficient " + to_string(v[i]) +
                                " on " + config.name(i);
    }
    return std::string();
  };
  {
    auto w = effectivity(nv, "N");
    report.add("n_effective", w.empty(), w);
  }
  if (dec.variant == Variant::effective_support) {
    auto w = effectivity(pv, "P");
    report.add("p_effective", w.empty(), w);
  }

  std::vector<std::size_t> supp_n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(nv[i]) != 0) supp_n.push_back(i);
  }
  {
    std::string w;
    for (auto i : supp_n) {
      if (std::find(members.begin(), members.end(), i) == members.end()) {
        w = "N involves " + config.name(i) + " outside the cycle";
        break;
      }
    }
    report.add("support", w.empty(), w);
  }

  {
    std::string w;
    const auto& trace = dec.support_trace;
    for (std::size_t k = 0; k < trace.size() && w.empty(); ++k) {
      if (!is_subset(trace[k].members(), members)) {
        w = "trace cycle " + std::to_string(k + 1) + " leaves the cycle";
      } else if (k > 0 && (trace[k].size() <= trace[k - 1].size() ||
                           !is_subset(trace[k - 1].members(), trace[k].members()))) {
        w = "trace cycle " + std::to_string(k + 1) + " does not strictly contain its predecessor";
      }
    }
    const bool iterated =
        dec.variant == Variant::pseff_any_cycle || dec.variant == Variant::fujita;
    if (w.empty() && iterated) {
      if (trace.empty() && !supp_n.empty()) w = "nonzero N with an empty trace";
      if (!trace.empty() && !is_subset(supp_n, trace.back().members())) {
        w = "N leaves the last trace cycle";
      }
      if (trace.size() > members.size()) w = "trace longer than the cycle";
    }
    report.add("trace", w.empty(), w);
  }

  {
    std::string w;
    for (auto j : members) {
      const Rational v = intersect_curve(mu, pv, j);
      if (sgn(v) < 0) {
        w = "P." + config.name(j) + " = " + to_string(v);
        break;
      }
    }
    report.add(dec.variant == Variant::fujita ? "nef" : "g_nef", w.empty(), w);
  }

  {
    const Rational pn = intersect(mu, pv, nv);
    std::string w;
    if (sgn(pn) != 0) w = "P.N = " + to_string(pn);
    for (auto i : supp_n) {
      if (!w.empty()) break;
      const Rational v = intersect_curve(mu, pv, i);
      if (sgn(v) != 0) w = "P." + config.name(i) + " = " + to_string(v) + " on supp N";
    }
    report.add("orthogonality", w.empty(), w);
  }

  {
    const Rational d2 = intersect(mu, dv, dv);
    const Rational p2 = intersect(mu, pv, pv);
    const Rational n2 = intersect(mu, nv, nv);
    const bool ok = d2 == p2 + n2;
    report.add("square_split", ok,
               ok ? "" : "D^2 = " + to_string(d2) + ", P^2 + N^2 = " + to_string(Rational(p2 + n2)));
  }

  {
    const bool ok = negdef_by_elimination(mu.principal(supp_n));
    report.add("negdef_support", ok, ok ? "" : "matrix of supp N is not negative definite");
  }

  {
    RatVector b(members.size());
    RatVector x(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      b[k] = intersect_curve(mu, dv, members[k]);
      x[k] = nv[members[k]];
    }
    const auto least = least_element_lp(mu.principal(members), b);
    std::string w;
    if (!least) {
      w = "feasible set {x >= 0 : mu x <= b} is empty";
    } else if (*least != x) {
      w = "N on the cycle is " + format(x) + ", least element is " + format(*least);
    }
    report.add("least_element", w.empty(), w);
  }

  if (surface::is_effective(d)) {
    LinearProgram lp = subdivisor_program(mu, dv, members);
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i) {
      lp.objective = zeros(n);
      lp.objective[i] = 1;
      const auto r = lp_optimize(lp);
      if (r.status != LpStatus::optimal) {
        w = "no nef subdivisor found for coordinate " + config.name(i);
      } else if (r.value != pv[i]) {
        w = "largest nef subdivisor has " + to_string(r.value) + " " + config.name(i) +
            ", P has " + to_string(pv[i]);
      }
    }
    report.add("maximality", w.empty(), w);
  }

  return report;
}

}  // namespace zariski::oracle
