#include <bit>
#include <cstdint>
#include <utility>

#include "zariski/error.hpp"
#include "zariski/exactalg.hpp"

namespace zariski::exactalg {

RatMatrix::RatMatrix(std::size_t n) : n_(n), a_(n * n, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    }
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::principal(std::span<const std::size_t> indices) const {
  RatMatrix m(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      m(i, j) = (*this)(indices[i], indices[j]);
    }
  }
  return m;
}

RatMatrix RatMatrix::leading(std::size_t k) const {
  RatMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m(*this);
  for (auto& x : m.a_) x = -x;
  return m;
}

RatVector RatMatrix::operator*(const RatVector& x) const {
  if (x.size() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector length mismatch");
  }
  RatVector y(n_, Rational(0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

// Bareiss elimination with row exchanges. Every division is exact over Z
// and trivially exact over Q.
Rational determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  RatMatrix a(m);
  Rational prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  Rational d = a(n - 1, n - 1);
  if (negate) d = -d;
  return d;
}

std::vector<Rational> leading_principal_minors(const RatMatrix& m) {
  std::vector<Rational> minors;
  minors.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) {
    minors.push_back(determinant(m.leading(k)));
  }
  return minors;
}

bool is_negative_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) {
    throw Error(ErrorKind::NonSymmetric, "is_negative_definite: matrix is not symmetric");
  }
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) det(M_{k+1}) > 0
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != expected) return false;
  }
  return true;
}

namespace {

// Returns false as soon as some principal minor has sign < min_sign.
bool principal_minor_scan(const RatMatrix& m, std::size_t limit, int min_sign) {
  const std::size_t n = m.size();
  if (n > limit) {
    throw Error(ErrorKind::DimensionTooLarge,
                "principal minor enumeration capped at dimension " +
                    std::to_string(limit) + ", got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(m(i, i)) < min_sign) return false;
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::size_t> idx;
  for (unsigned size = 2; size <= n; ++size) {
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != size) continue;
      idx.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
      }
      if (sgn(determinant(m.principal(idx))) < min_sign) return false;
    }
  }
  return true;
}

}  // namespace

bool all_principal_minors_nonneg(const RatMatrix& m, std::size_t limit) {
  return principal_minor_scan(m, limit, 0);
}

bool all_principal_minors_positive(const RatMatrix& m, std::size_t limit) {
  return principal_minor_scan(m, limit, 1);
}

RatVector solve_linear(const RatMatrix& m, const RatVector& b) {
  const std::size_t n = m.size();
  if (b.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "solve_linear: rhs length mismatch");
  }
  RatMatrix a(m);
  RatVector x(b);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && sgn(a(r, k)) == 0) ++r;
    if (r == n) throw Error(ErrorKind::Singular, "solve_linear: matrix is singular");
    if (r != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      std::swap(x[k], x[r]);
    }
    const Rational pivot = a(k, k);
    for (std::size_t j = k; j < n; ++j) a(k, j) /= pivot;
    x[k] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      x[i] -= f * x[k];
    }
  }
  return x;
}

}  // namespace zariski::exactalg
