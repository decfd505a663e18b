#pragma once

// Zariski decompositions D = P + N over a closed-world curve configuration:
//
//  * with support in a negative definite cycle, for effective D and for
//    arbitrary D;
//  * with support in an arbitrary cycle, for pseudo-effective D (iterated);
//  * the full nef/negative decomposition of a pseudo-effective D (iterated
//    over every curve of the configuration).
//
// Every routine checks the defining properties of its output exactly before
// returning it and throws Error(InternalInvariant) if one fails.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/surface.hpp"

namespace zariski::decomp {

using exactalg::Rational;
using exactalg::RatVector;
using surface::Cycle;
using surface::QDivisor;

enum class Variant { effective_support, general_support, pseff_any_cycle, fujita };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> variant_from_string(std::string_view s) noexcept;

/// Evidence that a divisor is pseudo-effective in the closed-world model.
struct PseffCertificate {
  enum class Kind { effective_combination, asserted, propagated };

  Kind kind = Kind::asserted;
  /// Nonnegative cone coefficients reproducing D (effective_combination only).
  std::optional<RatVector> witness;
  std::string provenance;

  static PseffCertificate asserted_by_caller(std::string note = "asserted by caller") {
    return {Kind::asserted, std::nullopt, std::move(note)};
  }
};

std::string_view to_string(PseffCertificate::Kind k) noexcept;

struct Decomposition {
  Variant variant;
  QDivisor D;
  QDivisor P;
  QDivisor N;
  /// Accumulated cycles G(1) < G(2) < ... of the iterated variants.
  std::vector<Cycle> support_trace;
  /// Certificate of D followed by one propagated certificate per trace step.
  std::vector<PseffCertificate> pseff_chain;
  /// Names of the properties checked before the decomposition was returned.
  std::vector<std::string> certified;
};

/// D . G_i >= 0 for every member of G.
bool is_g_nef(const QDivisor& d, const Cycle& g);

/// D . C >= 0 for every curve of the configuration.
bool is_nef_closed_world(const QDivisor& d);

/// Finds an effective-combination witness by exact LP, or throws
/// Error(NotPseudoEffective).
PseffCertificate is_pseff_closed_world(const QDivisor& d);

/// Least element of {x >= 0 : mu_G x <= b}. Certifies G if it is not
/// certified yet (throws surface::NotNegativeDefiniteError).
RatVector least_nonneg_solution(const Cycle& g, const RatVector& b);

Decomposition decompose_effective_support(const QDivisor& d, const Cycle& g);

Decomposition decompose_support(const QDivisor& d, const Cycle& g);

/// When `cert` is empty one is computed with is_pseff_closed_world.
Decomposition decompose_pseff_any_cycle(const QDivisor& d,
                                        const std::optional<PseffCertificate>& cert,
                                        const Cycle& g);

Decomposition decompose_fujita(const QDivisor& d, const std::optional<PseffCertificate>& cert);

}  // namespace zariski::decomp
