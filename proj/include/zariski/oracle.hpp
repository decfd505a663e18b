#pragma once

// Independent verifiers for the decomposition routines. Nothing here calls
// into decomp's solvers: maximality and least-element properties are checked
// with exact LPs, negative definiteness by symmetric elimination rather than
// minors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zariski/decomp.hpp"

namespace zariski::oracle {

using exactalg::RatMatrix;
using exactalg::Rational;
using exactalg::RatVector;
using surface::ConfigPtr;
using surface::Cycle;
using surface::QDivisor;

struct Check {
  std::string name;
  bool passed = false;
  /// Exact counterexample when the check fails; free-form note otherwise.
  std::string witness;
};

struct VerificationReport {
  std::optional<decomp::Variant> variant;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
  void add(std::string name, bool passed, std::string witness = {});
};

/// Largest G-nef subdivisor 0 <= P <= D via the sum-maximizing LP, confirmed
/// against per-coordinate maxima.
QDivisor bauer_max_subdivisor(const QDivisor& d, const Cycle& g);

/// Re-checks every defining property of `dec` from scratch. `g` is the
/// support cycle for the support variants; ignored for fujita.
VerificationReport verify_decomposition(const QDivisor& d, const std::optional<Cycle>& g,
                                        const decomp::Decomposition& dec);

/// LP minimizing sum(x) over {x >= 0, mu_G x <= b}.
RatVector least_element_bruteforce(const Cycle& g, const RatVector& b);

/// Negative definiteness by LDL^T-style elimination on -M (all pivots > 0).
bool negdef_by_elimination(const RatMatrix& m);

struct KaramardianReport {
  VerificationReport report;
  bool minors_nonnegative = false;
  bool minors_positive = false;
  /// Primitive integer vectors.
  std::optional<RatVector> nonneg_solution;   // x >= 0, x != 0, Mx >= 0
  std::optional<RatVector> strict_solution;   // x >= 0, Mx > 0
  std::optional<RatVector> positive_solution; // x > 0, Mx > 0
  /// Minors are nonnegative but x = 0 is the only solution.
  bool trivial_only = false;
};

KaramardianReport karamardian_check(const RatMatrix& m,
                                    std::size_t limit = exactalg::kDefaultMinorLimit);

enum class Template { random, a_chain };

struct InstanceSpec {
  std::uint64_t seed = 1;
  std::size_t n_curves = 4;
  Rational coeff_bound = 10;
  /// Share of the curves placed in the negative definite block.
  Rational negdef_fraction = Rational(3, 4);
  Template shape = Template::random;
};

struct Instance {
  ConfigPtr config;
  QDivisor divisor;
  Cycle cycle;
  /// Curves of the negative definite block (the cycle is a subset).
  Cycle block;
};

/// Deterministic in spec.seed. Throws Error(GenerationExhausted).
Instance generate_instance(const InstanceSpec& spec);

}  // namespace zariski::oracle
