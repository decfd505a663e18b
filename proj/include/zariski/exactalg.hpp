#pragma once

// Exact rational arithmetic and small dense linear algebra over Q.
// Nothing in here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zariski::exactalg {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Builds num/den in canonical form. Throws Error(Parse) when den == 0.
Rational make_rational(long num, long den = 1);

/// True iff `text` matches -?[0-9]+(/[0-9]+)? with a nonzero denominator.
bool is_rational_literal(std::string_view text) noexcept;

/// Parses "p/q" or an integer string. Throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text: "3/2", "-7", "0".
std::string to_string(const Rational& value);

RatVector zeros(std::size_t n);
bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  bool is_symmetric() const;

  /// Submatrix on the given (ordered) index set.
  RatMatrix principal(std::span<const std::size_t> indices) const;
  /// Top-left k x k block.
  RatMatrix leading(std::size_t k) const;

  RatMatrix operator-() const;
  RatVector operator*(const RatVector& x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

inline constexpr std::size_t kDefaultMinorLimit = 15;

Rational determinant(const RatMatrix& m);

/// det of the top-left k x k blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const RatMatrix& m);

/// Sylvester criterion applied to -M. Throws Error(NonSymmetric).
bool is_negative_definite(const RatMatrix& m);

/// Enumerates all 2^n - 1 principal minors, smallest subsets first, and stops
/// at the first negative one. Throws Error(DimensionTooLarge) above `limit`.
bool all_principal_minors_nonneg(const RatMatrix& m,
                                 std::size_t limit = kDefaultMinorLimit);

/// Same enumeration, strict inequality.
bool all_principal_minors_positive(const RatMatrix& m,
                                   std::size_t limit = kDefaultMinorLimit);

/// Exact solution of M x = b. Throws Error(Singular) when det(M) = 0.
RatVector solve_linear(const RatMatrix& m, const RatVector& b);

// ---------------------------------------------------------------------------
// Linear programming
// ---------------------------------------------------------------------------

enum class Direction { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };
enum class LpStatus { optimal, infeasible, unbounded };

struct LinearConstraint {
  RatVector coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

/// Defaults to x >= 0.
struct VariableBounds {
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  static VariableBounds free() { return {std::nullopt, std::nullopt}; }
  static VariableBounds between(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi)};
  }
};

struct LinearProgram {
  RatVector objective;
  Direction direction = Direction::maximize;
  std::vector<LinearConstraint> constraints;
  /// Empty means every variable has the default bounds.
  std::vector<VariableBounds> bounds;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector point;
  Rational value;
};

/// Two-phase dense simplex with Bland's rule. Deterministic: the same program
/// always yields the same vertex. Throws Error(DimensionMismatch) only on
/// malformed input; infeasibility and unboundedness are statuses.
LpResult lp_optimize(const LinearProgram& lp);

}  // namespace zariski::exactalg
