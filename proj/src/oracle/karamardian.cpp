#include <gmpxx.h>

#include "zariski/oracle.hpp"

namespace zariski::oracle {

using namespace exactalg;

namespace {

// Scales a nonzero nonnegative rational vector to the primitive integer
// vector on the same ray.
RatVector primitive(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational q(mpz_class(x.get_num() * (l / x.get_den()) / g));
    out.push_back(q);
  }
  return out;
}

bool all_sign_at_least(const RatVector& v, int s) {
  for (const auto& x : v) {
    if (sgn(x) < s) return false;
  }
  return true;
}

}  // namespace

KaramardianReport karamardian_check(const RatMatrix& m, std::size_t limit) {
  KaramardianReport out;
  const std::size_t n = m.size();
  out.minors_nonnegative = all_principal_minors_nonneg(m, limit);
  out.minors_positive = out.minors_nonnegative && all_principal_minors_positive(m, limit);

  auto& report = out.report;
  if (!out.minors_nonnegative) {
    report.add("hypothesis", true, "some principal minor is negative; no claim to check");
    return out;
  }
  if (n == 0) {
    report.add("nonzero_solution", true, "empty matrix");
    return out;
  }

  // max sum(x) over {x >= 0, Mx >= 0, sum(x) <= 1}: positive iff the cone
  // {x >= 0, Mx >= 0} contains a nonzero point.
  LinearProgram lp;
  lp.objective = RatVector(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint row{zeros(n), Relation::greater_equal, 0};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = m(i, j);
    lp.constraints.push_back(std::move(row));
  }
  lp.constraints.push_back({RatVector(n, Rational(1)), Relation::less_equal, 1});
  const auto cone = lp_optimize(lp);
  if (cone.status == LpStatus::optimal && sgn(cone.value) > 0) {
    RatVector x = primitive(cone.point);
    const bool ok = all_sign_at_least(x, 0) && all_sign_at_least(m * x, 0);
    out.nonneg_solution = x;
    report.add("nonzero_solution", ok, "x = " + [&] {
      std::string s;
      for (const auto& c : x) s += (s.empty() ? "" : " ") + to_string(c);
      return s;
    }());
  } else {
    out.trivial_only = true;
    report.add("nonzero_solution", false,
               "minors are nonnegative but only x = 0 solves x >= 0, Mx >= 0");
  }

  if (!out.minors_positive) return out;

  // max s over {x >= 0, Mx >= s 1, sum(x) <= 1, s <= 1}.
  LinearProgram strict;
  strict.objective = zeros(n + 1);
  strict.objective[n] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint row{zeros(n + 1), Relation::greater_equal, 0};
    for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = m(i, j);
    row.coeffs[n] = -1;
    strict.constraints.push_back(std::move(row));
  }
  {
    LinearConstraint row{RatVector(n + 1, Rational(1)), Relation::less_equal, 1};
    row.coeffs[n] = 0;
    strict.constraints.push_back(std::move(row));
  }
  strict.bounds.assign(n + 1, VariableBounds{});
  strict.bounds[n] = {std::nullopt, Rational(1)};
  const auto r = lp_optimize(strict);
  if (r.status != LpStatus::optimal || sgn(r.value) <= 0) {
    report.add("strict_solution", false, "no x >= 0 with Mx > 0 despite positive minors");
    return out;
  }
  RatVector x(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(n));
  x = primitive(x);
  const RatVector mx = m * x;
  out.strict_solution = x;
  report.add("strict_solution", all_sign_at_least(x, 0) && all_sign_at_least(mx, 1));

  // Push x into the open orthant: x + eps 1 keeps Mx > 0 once
  // eps * sum_j |M_ij| < (Mx)_i for every row.
  Rational bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row_abs = 0;
    for (std::size_t j = 0; j < n; ++j) row_abs += abs(m(i, j));
    if (sgn(row_abs) > 0) {
      Rational cap = mx[i] / (2 * row_abs);
      if (cap < bound) bound = cap;
    }
  }
  RatVector y(x);
  for (auto& c : y) c += bound;
  y = primitive(y);
  out.positive_solution = y;
  const bool positive_ok = all_sign_at_least(y, 1) && all_sign_at_least(m * y, 1);
  report.add("positive_solution", positive_ok);
  report.add("positive_equivalence", positive_ok,
             "x >= 0, Mx > 0 solvable and x > 0, Mx > 0 solvable");
  return out;
}

}  // namespace zariski::oracle
