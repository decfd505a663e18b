#include "zariski/decomp.hpp"

#include <algorithm>
#include <utility>

namespace zariski::decomp {

using exactalg::to_string;
using surface::pair;
using surface::pair_with_curve;

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::effective_support: return "effective_support";
    case Variant::general_support: return "general_support";
    case Variant::pseff_any_cycle: return "pseff_any_cycle";
    case Variant::fujita: return "fujita";
  }
  return "unknown";
}

std::optional<Variant> variant_from_string(std::string_view s) noexcept {
  for (auto v : {Variant::effective_support, Variant::general_support,
                 Variant::pseff_any_cycle, Variant::fujita}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view to_string(PseffCertificate::Kind k) noexcept {
  switch (k) {
    case PseffCertificate::Kind::effective_combination: return "effective_combination";
    case PseffCertificate::Kind::asserted: return "asserted";
    case PseffCertificate::Kind::propagated: return "propagated";
  }
  return "unknown";
}

namespace {

[[noreturn]] void invariant_failed(const std::string& what) {
  throw Error(ErrorKind::InternalInvariant, what);
}

void require(bool ok, const std::string& what) {
  if (!ok) invariant_failed(what);
}

// Checks shared by every variant. `nef_on` lists the curves on which P must
// be nonnegative.
void certify_common(Decomposition& dec, const std::vector<std::size_t>& nef_on,
                    const std::vector<std::size_t>& allowed_support) {
  require(dec.P + dec.N == dec.D, "P + N != D");
  dec.certified.emplace_back("reconstruction");

  require(surface::is_effective(dec.N), "N is not effective");
  dec.certified.emplace_back("n_effective");

  for (auto i : dec.N.support()) {
    require(std::find(allowed_support.begin(), allowed_support.end(), i) !=
                allowed_support.end(),
            "N is supported on " + dec.D.config()->name(i) + " outside the cycle");
  }
  dec.certified.emplace_back("support");

  for (auto i : nef_on) {
    require(sgn(pair_with_curve(dec.P, i)) >= 0,
            "P is negative on " + dec.D.config()->name(i));
  }
  dec.certified.emplace_back("g_nef");

  require(sgn(pair(dec.P, dec.N)) == 0, "P . N != 0");
  for (auto i : dec.N.support()) {
    require(sgn(pair_with_curve(dec.P, i)) == 0,
            "P is not numerically trivial on " + dec.D.config()->name(i));
  }
  dec.certified.emplace_back("orthogonality");

  require(pair(dec.D, dec.D) == pair(dec.P, dec.P) + pair(dec.N, dec.N),
          "D^2 != P^2 + N^2");
  dec.certified.emplace_back("square_split");
}

// Single pass with support in a certified negative definite cycle.
Decomposition support_pass(const QDivisor& d, const Cycle& certified, Variant variant) {
  Decomposition dec{variant, d, d, QDivisor::zero(d.config()), {}, {}, {}};
  if (certified.size() > 0 && !d.is_zero()) {
    RatVector b(certified.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      b[k] = pair_with_curve(d, certified.members()[k]);
    }
    const RatVector x = least_nonneg_solution(certified, b);
    dec.N = surface::divisor_on(certified, x);
    dec.P = d - dec.N;
  }
  certify_common(dec, certified.members(), certified.members());
  // With G negative definite, G-nefness of P plus P . G_i = 0 on supp N
  // makes P the largest G-nef subdivisor (N the least element).
  dec.certified.emplace_back("least_element");
  return dec;
}

Cycle require_certified(const Cycle& g) { return surface::certify_negdef(g); }

void validate_certificate(const QDivisor& d, const PseffCertificate& cert) {
  if (cert.kind != PseffCertificate::Kind::effective_combination) return;
  if (!cert.witness || cert.witness->size() != d.size()) {
    throw Error(ErrorKind::NotPseudoEffective,
                "effective-combination certificate has no usable witness");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& a = (*cert.witness)[i];
    if (sgn(a) < 0 || a != d[i]) {
      throw Error(ErrorKind::NotPseudoEffective,
                  "certificate witness does not reproduce the divisor at " +
                      d.config()->name(i));
    }
  }
}

// Iterated decomposition: each round adds the candidate curves on which the
// current nef part is strictly negative and re-decomposes with support in the
// accumulated cycle.
Decomposition iterate(const QDivisor& d, PseffCertificate cert,
                      const std::vector<std::size_t>& candidates, Variant variant) {
  const bool fujita = variant == Variant::fujita;
  Decomposition dec{variant, d, d, QDivisor::zero(d.config()), {}, {std::move(cert)}, {}};
  std::vector<std::size_t> accumulated;
  QDivisor current = d;

  for (;;) {
    std::vector<std::size_t> negative;
    for (auto c : candidates) {
      if (sgn(pair_with_curve(current, c)) < 0) negative.push_back(c);
    }
    if (negative.empty()) break;
    for (auto c : negative) {
      require(std::find(accumulated.begin(), accumulated.end(), c) == accumulated.end(),
              "nef part is negative on an already accumulated curve " +
                  d.config()->name(c));
    }

    std::vector<std::size_t> next = accumulated;
    next.insert(next.end(), negative.begin(), negative.end());
    // Keep the candidate order so traces are canonical.
    std::vector<std::size_t> ordered;
    for (auto c : candidates) {
      if (std::find(next.begin(), next.end(), c) != next.end()) ordered.push_back(c);
    }
    accumulated = std::move(ordered);

    Cycle step_cycle(d.config(), accumulated);
    try {
      step_cycle = surface::certify_negdef(step_cycle);
    } catch (const surface::NotNegativeDefiniteError& e) {
      throw Error(ErrorKind::InternalNegdefViolation,
                  "accumulated cycle is not negative definite (" + std::string(e.what()) +
                      "); the pseudo-effectivity certificate is invalid");
    }

    const Decomposition step = support_pass(current, step_cycle, Variant::general_support);
    if (fujita) {
      for (auto c : negative) {
        require(sgn(step.N[c]) > 0, "negative curve " + d.config()->name(c) +
                                        " is missing from the negative part");
      }
      for (auto c : accumulated) {
        require(pair_with_curve(step.N, c) == pair_with_curve(current, c),
                "N_G . G_i != D . G_i on " + d.config()->name(c));
      }
    }

    dec.N = dec.N + step.N;
    current = step.P;
    dec.support_trace.push_back(std::move(step_cycle));
    dec.pseff_chain.push_back({PseffCertificate::Kind::propagated, std::nullopt,
                               "nef part after step " +
                                   std::to_string(dec.support_trace.size()) +
                                   " (D - E with (D - E) . C_i <= 0 on the cycle)"});
  }
  dec.P = current;

  certify_common(dec, candidates, candidates);
  if (!dec.support_trace.empty()) {
    const auto& last = dec.support_trace.back();
    for (auto i : dec.N.support()) {
      require(last.contains(i), "N leaves the last trace cycle");
    }
    for (auto c : last.members()) {
      require(pair_with_curve(dec.N, c) == pair_with_curve(dec.D, c),
              "N . G_i != D . G_i on " + d.config()->name(c));
    }
  }
  // supp N sits inside the last (certified) cycle, hence is negative definite.
  dec.certified.emplace_back("negdef_support");
  dec.certified.emplace_back("least_element");
  return dec;
}

PseffCertificate resolve_certificate(const QDivisor& d,
                                     const std::optional<PseffCertificate>& cert) {
  if (!cert) return is_pseff_closed_world(d);
  validate_certificate(d, *cert);
  return *cert;
}

}  // namespace

bool is_g_nef(const QDivisor& d, const Cycle& g) {
  if (!surface::same_configuration(d.config(), g.config())) {
    throw Error(ErrorKind::ConfigMismatch, "is_g_nef: divisor and cycle differ in configuration");
  }
  return std::all_of(g.members().begin(), g.members().end(),
                     [&](std::size_t i) { return sgn(pair_with_curve(d, i)) >= 0; });
}

bool is_nef_closed_world(const QDivisor& d) {
  return is_g_nef(d, Cycle::all(d.config()));
}

PseffCertificate is_pseff_closed_world(const QDivisor& d) {
  using namespace exactalg;
  const std::size_t n = d.size();
  LinearProgram lp;
  lp.objective = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint row{zeros(n), Relation::equal, d[i]};
    row.coeffs[i] = 1;
    lp.constraints.push_back(std::move(row));
  }
  const auto result = lp_optimize(lp);
  if (result.status != LpStatus::optimal) {
    throw Error(ErrorKind::NotPseudoEffective,
                "no nonnegative combination of configuration curves equals the divisor");
  }
  return {PseffCertificate::Kind::effective_combination, result.point,
          "exact LP over the cone of configuration curves"};
}

RatVector least_nonneg_solution(const Cycle& g, const RatVector& b) {
  const Cycle certified = require_certified(g);
  const std::size_t n = certified.size();
  if (b.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "least_nonneg_solution: rhs length mismatch");
  }
  const auto mu = surface::submatrix(certified);

  RatVector x = exactalg::zeros(n);
  std::vector<bool> in_support(n, false);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(b[j]) < 0) in_support[j] = any = true;
  }
  if (!any) return x;

  // Each round the support strictly grows, so at most n rounds.
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::size_t> idx;
    RatVector rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_support[j]) {
        idx.push_back(j);
        rhs.push_back(b[j]);
      }
    }
    const RatVector xs = exactalg::solve_linear(mu.principal(idx), rhs);
    RatVector next = exactalg::zeros(n);
    for (std::size_t k = 0; k < idx.size(); ++k) next[idx[k]] = xs[k];
    for (std::size_t j = 0; j < n; ++j) {
      require(sgn(next[j]) >= 0, "support-growing iterate has a negative component");
      require(next[j] >= x[j], "support-growing iterate decreased");
    }
    x = std::move(next);

    const RatVector lhs = mu * x;
    bool grew = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (lhs[j] > b[j]) {
        require(!in_support[j], "equality violated on the current support");
        in_support[j] = grew = true;
      }
    }
    if (!grew) return x;
  }
  invariant_failed("support-growing iteration did not terminate");
}

Decomposition decompose_effective_support(const QDivisor& d, const Cycle& g) {
  if (!surface::same_configuration(d.config(), g.config())) {
    throw Error(ErrorKind::ConfigMismatch, "divisor and cycle differ in configuration");
  }
  if (!surface::is_effective(d)) {
    throw Error(ErrorKind::NotEffective, "divisor is not effective");
  }
  auto dec = support_pass(d, require_certified(g), Variant::effective_support);
  require(surface::is_effective(dec.P), "nef part of an effective divisor is not effective");
  dec.certified.emplace_back("p_effective");
  return dec;
}

Decomposition decompose_support(const QDivisor& d, const Cycle& g) {
  if (!surface::same_configuration(d.config(), g.config())) {
    throw Error(ErrorKind::ConfigMismatch, "divisor and cycle differ in configuration");
  }
  return support_pass(d, require_certified(g), Variant::general_support);
}

Decomposition decompose_pseff_any_cycle(const QDivisor& d,
                                        const std::optional<PseffCertificate>& cert,
                                        const Cycle& g) {
  if (!surface::same_configuration(d.config(), g.config())) {
    throw Error(ErrorKind::ConfigMismatch, "divisor and cycle differ in configuration");
  }
  return iterate(d, resolve_certificate(d, cert), g.members(), Variant::pseff_any_cycle);
}

Decomposition decompose_fujita(const QDivisor& d, const std::optional<PseffCertificate>& cert) {
  return iterate(d, resolve_certificate(d, cert), Cycle::all(d.config()).members(),
                 Variant::fujita);
}

}  // namespace zariski::decomp
