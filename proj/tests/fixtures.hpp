#pragma once

#include <random>
#include <string>
#include <vector>

#include "zariski/surface.hpp"

namespace zariski::testing {

using exactalg::RatMatrix;
using exactalg::Rational;
using exactalg::RatVector;
using surface::ConfigPtr;
using surface::Cycle;
using surface::QDivisor;

inline Rational q(long num, long den = 1) { return exactalg::make_rational(num, den); }

/// P^2 blown up in a point: H^2 = 1, E^2 = -1, H.E = 0.
inline ConfigPtr blowup() {
  return surface::make_configuration({"H", "E"}, RatMatrix{{1, 0}, {0, -1}});
}

/// Two (-2)-curves meeting once.
inline ConfigPtr a2() {
  return surface::make_configuration({"C1", "C2"}, RatMatrix{{-2, 1}, {1, -2}});
}

/// Hyperplane class on P^2.
inline ConfigPtr plane() { return surface::make_configuration({"H"}, RatMatrix{{1}}); }

/// H plus an A2 chain disjoint from it.
inline ConfigPtr h_plus_a2() {
  return surface::make_configuration({"H", "C1", "C2"},
                                     RatMatrix{{1, 0, 0}, {0, -2, 1}, {0, 1, -2}});
}

inline QDivisor divisor(const ConfigPtr& c, RatVector coeffs) {
  return QDivisor(c, std::move(coeffs));
}

/// Uniform rational with |num| <= bound and den in [1, max_den].
inline Rational random_rational(std::mt19937_64& rng, long bound, long max_den = 4) {
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound * den + 1)) -
                   bound * den;
  return q(num, den);
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng, bound);
  return v;
}

inline RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, bound, 2);
  }
  return m;
}

}  // namespace zariski::testing
