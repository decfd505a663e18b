#include "zariski/surface.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace zariski::surface {

namespace {

void require_same(const ConfigPtr& a, const ConfigPtr& b, const char* where) {
  if (!same_configuration(a, b)) {
    throw Error(ErrorKind::ConfigMismatch,
                std::string(where) + ": divisors live on different configurations");
  }
}

}  // namespace

CurveConfiguration::CurveConfiguration(std::vector<std::string> names, RatMatrix mu)
    : names_(std::move(names)), mu_(std::move(mu)) {
  if (mu_.size() != names_.size()) {
    throw Error(ErrorKind::InvalidConfiguration,
                "intersection matrix is " + std::to_string(mu_.size()) + "x" +
                    std::to_string(mu_.size()) + " but there are " +
                    std::to_string(names_.size()) + " curves");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidConfiguration, "curve name is empty");
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::InvalidConfiguration, "duplicate curve name \"" + n + "\"");
    }
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (mu_(i, j) != mu_(j, i)) {
        throw Error(ErrorKind::InvalidConfiguration,
                    "intersection matrix is not symmetric at (" + names_[i] + ", " +
                        names_[j] + ")");
      }
      if (sgn(mu_(i, j)) < 0) {
        throw Error(ErrorKind::InvalidConfiguration,
                    "distinct curves " + names_[i] + ", " + names_[j] +
                        " have negative intersection");
      }
    }
  }
}

std::optional<std::size_t> CurveConfiguration::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ConfigPtr make_configuration(std::vector<std::string> names, RatMatrix mu) {
  return std::make_shared<const CurveConfiguration>(std::move(names), std::move(mu));
}

bool same_configuration(const ConfigPtr& a, const ConfigPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

// ---------------------------------------------------------------------------

QDivisor::QDivisor(ConfigPtr config, RatVector coeffs)
    : config_(std::move(config)), coeffs_(std::move(coeffs)) {
  if (!config_) throw Error(ErrorKind::InvalidConfiguration, "divisor without configuration");
  if (coeffs_.size() != config_->size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "divisor has " + std::to_string(coeffs_.size()) + " coefficients, expected " +
                    std::to_string(config_->size()));
  }
}

QDivisor QDivisor::zero(ConfigPtr config) {
  const auto n = config->size();
  return QDivisor(std::move(config), exactalg::zeros(n));
}

QDivisor QDivisor::curve(ConfigPtr config, std::size_t index) {
  auto c = exactalg::zeros(config->size());
  c.at(index) = 1;
  return QDivisor(std::move(config), std::move(c));
}

std::vector<std::size_t> QDivisor::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) s.push_back(i);
  }
  return s;
}

QDivisor QDivisor::operator-() const {
  QDivisor d(*this);
  for (auto& c : d.coeffs_) c = -c;
  return d;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  require_same(a.config_, b.config_, "operator+");
  QDivisor d(a);
  for (std::size_t i = 0; i < d.coeffs_.size(); ++i) d.coeffs_[i] += b.coeffs_[i];
  return d;
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) {
  require_same(a.config_, b.config_, "operator-");
  QDivisor d(a);
  for (std::size_t i = 0; i < d.coeffs_.size(); ++i) d.coeffs_[i] -= b.coeffs_[i];
  return d;
}

QDivisor operator*(const Rational& s, const QDivisor& d) {
  QDivisor r(d);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

bool operator==(const QDivisor& a, const QDivisor& b) {
  return same_configuration(a.config_, b.config_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

Cycle::Cycle(ConfigPtr config, std::vector<std::size_t> members)
    : config_(std::move(config)), members_(std::move(members)) {
  if (!config_) throw Error(ErrorKind::InvalidConfiguration, "cycle without configuration");
  std::vector<bool> seen(config_->size(), false);
  for (auto m : members_) {
    if (m >= config_->size()) {
      throw Error(ErrorKind::InvalidConfiguration,
                  "cycle member index " + std::to_string(m) + " out of range");
    }
    if (seen[m]) {
      throw Error(ErrorKind::InvalidConfiguration,
                  "cycle is not reduced: curve " + config_->name(m) + " repeated");
    }
    seen[m] = true;
  }
}

Cycle Cycle::all(ConfigPtr config) {
  std::vector<std::size_t> m(config->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
  return Cycle(std::move(config), std::move(m));
}

bool Cycle::contains(std::size_t curve) const {
  return std::find(members_.begin(), members_.end(), curve) != members_.end();
}

bool operator==(const Cycle& a, const Cycle& b) {
  return same_configuration(a.config_, b.config_) && a.members_ == b.members_;
}

NotNegativeDefiniteError::NotNegativeDefiniteError(std::size_t order, Rational minor,
                                                   std::vector<Rational> minors)
    : Error(ErrorKind::NotNegativeDefinite,
            "intersection matrix is not negative definite: leading minor of order " +
                std::to_string(order) + " is " + exactalg::to_string(minor)),
      order_(order),
      minor_(std::move(minor)),
      minors_(std::move(minors)) {}

// ---------------------------------------------------------------------------

Rational pair(const QDivisor& a, const QDivisor& b) {
  require_same(a.config(), b.config(), "pair");
  const auto& mu = a.config()->mu();
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) s += a[i] * mu(i, j) * b[j];
    }
  }
  return s;
}

Rational pair_with_curve(const QDivisor& d, std::size_t curve) {
  const auto& mu = d.config()->mu();
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (sgn(d[i]) != 0) s += d[i] * mu(i, curve);
  }
  return s;
}

QDivisor divisor_on(const Cycle& cycle, const RatVector& y) {
  if (y.size() != cycle.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match cycle size");
  }
  auto c = exactalg::zeros(cycle.config()->size());
  for (std::size_t k = 0; k < y.size(); ++k) c[cycle.members()[k]] = y[k];
  return QDivisor(cycle.config(), std::move(c));
}

Rational phi(const Cycle& cycle, const RatVector& y) {
  if (y.size() != cycle.size()) {
    throw Error(ErrorKind::DimensionMismatch, "phi: vector length does not match cycle size");
  }
  const auto m = submatrix(cycle);
  return exactalg::dot(y, m * y);
}

RatMatrix submatrix(const Cycle& cycle) {
  return cycle.config()->mu().principal(cycle.members());
}

Cycle certify_negdef(const Cycle& cycle) {
  if (cycle.is_certified()) return cycle;
  auto minors = exactalg::leading_principal_minors(submatrix(cycle));
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected) {
      Rational offending = minors[k];
      throw NotNegativeDefiniteError(k + 1, std::move(offending), std::move(minors));
    }
  }
  Cycle certified(cycle);
  certified.certificate_ = std::move(minors);
  return certified;
}

bool leq_divisor(const QDivisor& c, const QDivisor& d) {
  require_same(c.config(), d.config(), "leq_divisor");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > d[i]) return false;
  }
  return true;
}

bool is_effective(const QDivisor& d) {
  return std::all_of(d.coeffs().begin(), d.coeffs().end(),
                     [](const Rational& c) { return sgn(c) >= 0; });
}

QDivisor max_divisor(const QDivisor& a, const QDivisor& b) {
  require_same(a.config(), b.config(), "max_divisor");
  RatVector c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (b[i] > c[i]) c[i] = b[i];
  }
  return QDivisor(a.config(), std::move(c));
}

Rational check_supported_negsquare(const QDivisor& d, const Cycle& cycle) {
  require_same(d.config(), cycle.config(), "check_supported_negsquare");
  for (auto i : d.support()) {
    if (!cycle.contains(i)) {
      throw Error(ErrorKind::SupportViolation,
                  "curve " + d.config()->name(i) + " is in the support but not in the cycle");
    }
  }
  certify_negdef(cycle);
  Rational sq = pair(d, d);
  if (sgn(sq) > 0 || (sgn(sq) == 0 && !d.is_zero())) {
    throw Error(ErrorKind::InternalInvariant,
                "divisor on a negative definite cycle has square " + exactalg::to_string(sq));
  }
  return sq;
}

}  // namespace zariski::surface
