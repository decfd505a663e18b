#pragma once

// Closed-world surface model: a finite list of integral curves with their
// exact intersection matrix, Q-divisors over those curves, and cycles.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/error.hpp"
#include "zariski/exactalg.hpp"

namespace zariski::surface {

using exactalg::RatMatrix;
using exactalg::Rational;
using exactalg::RatVector;

/// Named curves plus their symmetric intersection matrix. Distinct curves
/// meet nonnegatively, so every off-diagonal entry is >= 0.
class CurveConfiguration {
 public:
  /// Throws Error(InvalidConfiguration) if names are empty/duplicated, the
  /// matrix has the wrong size, is not symmetric, or has a negative
  /// off-diagonal entry.
  CurveConfiguration(std::vector<std::string> names, RatMatrix mu);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const RatMatrix& mu() const noexcept { return mu_; }
  const Rational& intersection(std::size_t i, std::size_t j) const { return mu_(i, j); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const CurveConfiguration&, const CurveConfiguration&) = default;

 private:
  std::vector<std::string> names_;
  RatMatrix mu_;
};

using ConfigPtr = std::shared_ptr<const CurveConfiguration>;

ConfigPtr make_configuration(std::vector<std::string> names, RatMatrix mu);

/// Same configuration by identity or by content.
bool same_configuration(const ConfigPtr& a, const ConfigPtr& b);

class QDivisor {
 public:
  /// Throws Error(DimensionMismatch) if coeffs does not match the curve count.
  QDivisor(ConfigPtr config, RatVector coeffs);

  static QDivisor zero(ConfigPtr config);
  static QDivisor curve(ConfigPtr config, std::size_t index);

  const ConfigPtr& config() const noexcept { return config_; }
  const RatVector& coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const { return exactalg::is_zero(coeffs_); }
  /// Indices with a nonzero coefficient, ascending.
  std::vector<std::size_t> support() const;

  QDivisor operator-() const;
  friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
  friend QDivisor operator-(const QDivisor& a, const QDivisor& b);
  friend QDivisor operator*(const Rational& s, const QDivisor& d);
  friend bool operator==(const QDivisor& a, const QDivisor& b);

 private:
  ConfigPtr config_;
  RatVector coeffs_;
};

/// A reduced set of configuration curves, optionally carrying the leading
/// principal minors that certify its matrix negative definite.
class Cycle {
 public:
  /// Throws Error(InvalidConfiguration) on repeated or out-of-range members.
  Cycle(ConfigPtr config, std::vector<std::size_t> members);

  static Cycle all(ConfigPtr config);
  static Cycle empty(ConfigPtr config) { return Cycle(std::move(config), {}); }

  const ConfigPtr& config() const noexcept { return config_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t curve) const;

  bool is_certified() const noexcept { return certificate_.has_value(); }
  const std::optional<std::vector<Rational>>& negdef_certificate() const noexcept {
    return certificate_;
  }

  /// Member-list equality (certificates are derived data).
  friend bool operator==(const Cycle& a, const Cycle& b);

 private:
  friend Cycle certify_negdef(const Cycle& cycle);

  ConfigPtr config_;
  std::vector<std::size_t> members_;
  std::optional<std::vector<Rational>> certificate_;
};

/// Raised by certify_negdef; carries the first leading minor with the wrong
/// sign (order is 1-based).
class NotNegativeDefiniteError : public Error {
 public:
  NotNegativeDefiniteError(std::size_t order, Rational minor, std::vector<Rational> minors);

  std::size_t order() const noexcept { return order_; }
  const Rational& minor() const noexcept { return minor_; }
  const std::vector<Rational>& minors() const noexcept { return minors_; }

 private:
  std::size_t order_;
  Rational minor_;
  std::vector<Rational> minors_;
};

/// coeffs(a)^T mu coeffs(b). Throws Error(ConfigMismatch).
Rational pair(const QDivisor& a, const QDivisor& b);

/// D . C_i for the configuration curve with index i.
Rational pair_with_curve(const QDivisor& d, std::size_t curve);

/// Sum of y_i G_i as a divisor on the cycle's configuration.
QDivisor divisor_on(const Cycle& cycle, const RatVector& y);

/// y^T mu_G y. Throws Error(DimensionMismatch).
Rational phi(const Cycle& cycle, const RatVector& y);

RatMatrix submatrix(const Cycle& cycle);

/// Returns a copy with its certificate populated, or throws
/// NotNegativeDefiniteError. The empty cycle is vacuously certified.
Cycle certify_negdef(const Cycle& cycle);

bool leq_divisor(const QDivisor& c, const QDivisor& d);
bool is_effective(const QDivisor& d);
QDivisor max_divisor(const QDivisor& a, const QDivisor& b);

/// D^2 for D supported on a negative definite cycle; checks D^2 <= 0 with
/// equality only for D = 0. Throws Error(SupportViolation) when D leaves G.
Rational check_supported_negsquare(const QDivisor& d, const Cycle& cycle);

}  // namespace zariski::surface
