// Dense two-phase simplex over Q with Bland's anti-cycling rule.
//
// The program is brought into the form  A y (<=,>=,=) b,  b >= 0,  y >= 0
// by shifting bounded variables and splitting free ones. Upper bounds become
// ordinary <= rows.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "zariski/error.hpp"
#include "zariski/exactalg.hpp"

namespace zariski::exactalg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// x = offset + sign * y[plus] - y[minus]
struct VariableMap {
  Rational offset;
  std::size_t plus = kNone;
  std::size_t minus = kNone;
  bool reflected = false;  // x = offset - y[plus]
};

struct Row {
  RatVector coeffs;  // over y
  Relation relation;
  Rational rhs;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, RatVector(cols + 1, Rational(0))), basis_(rows, kNone), cols_(cols) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  const Rational& rhs(std::size_t r) const { return t_[r][cols_]; }

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Maximizes cost . z over columns flagged in `allowed`. Returns false when
  // unbounded.
  bool maximize(const RatVector& cost, const std::vector<bool>& allowed) {
    std::vector<bool> in_basis(cols_, false);
    for (;;) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (auto b : basis_) in_basis[b] = true;

      std::size_t entering = kNone;
      for (std::size_t j = 0; j < cols_ && entering == kNone; ++j) {
        if (!allowed[j] || in_basis[j]) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
          if (sgn(t_[i][j]) != 0) reduced -= cost[basis_[i]] * t_[i][j];
        }
        if (sgn(reduced) > 0) entering = j;
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (sgn(t_[i][entering]) <= 0) continue;
        Rational ratio = rhs(i) / t_[i][entering];
        if (leaving == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

 private:
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpResult lp_optimize(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (!lp.bounds.empty() && lp.bounds.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "lp_optimize: bounds length mismatch");
  }
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "lp_optimize: constraint length mismatch");
    }
  }

  LpResult infeasible;
  infeasible.status = LpStatus::infeasible;

  // Variable substitution.
  std::vector<VariableMap> vars(n);
  std::vector<Row> rows;
  std::size_t ny = 0;
  std::vector<std::pair<std::size_t, Rational>> upper_rows;  // y[k] <= value
  for (std::size_t j = 0; j < n; ++j) {
    const VariableBounds bounds = lp.bounds.empty() ? VariableBounds{} : lp.bounds[j];
    auto& v = vars[j];
    if (bounds.lower) {
      v.offset = *bounds.lower;
      v.plus = ny++;
      if (bounds.upper) {
        if (*bounds.upper < *bounds.lower) return infeasible;
        upper_rows.emplace_back(v.plus, *bounds.upper - *bounds.lower);
      }
    } else if (bounds.upper) {
      v.offset = *bounds.upper;
      v.plus = ny++;
      v.reflected = true;
    } else {
      v.offset = 0;
      v.plus = ny++;
      v.minus = ny++;
    }
  }

  auto lift = [&](const RatVector& coeffs, Rational& constant) {
    RatVector out(ny, Rational(0));
    constant = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(coeffs[j]) == 0) continue;
      const auto& v = vars[j];
      constant += coeffs[j] * v.offset;
      out[v.plus] += v.reflected ? Rational(-coeffs[j]) : coeffs[j];
      if (v.minus != kNone) out[v.minus] -= coeffs[j];
    }
    return out;
  };

  for (const auto& c : lp.constraints) {
    Rational constant;
    Row row{lift(c.coeffs, constant), c.relation, c.rhs};
    row.rhs -= constant;
    rows.push_back(std::move(row));
  }
  for (const auto& [k, value] : upper_rows) {
    Row row{RatVector(ny, Rational(0)), Relation::less_equal, value};
    row.coeffs[k] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (sgn(row.rhs) < 0) {
      for (auto& x : row.coeffs) x = -x;
      row.rhs = -row.rhs;
      if (row.relation == Relation::less_equal) {
        row.relation = Relation::greater_equal;
      } else if (row.relation == Relation::greater_equal) {
        row.relation = Relation::less_equal;
      }
    }
  }

  // Column layout: y | slack/surplus | artificial.
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (const auto& row : rows) {
    if (row.relation != Relation::equal) ++n_slack;
    if (row.relation != Relation::less_equal) ++n_art;
  }
  const std::size_t art_begin = ny + n_slack;
  const std::size_t total = art_begin + n_art;

  Tableau tab(rows.size(), total);
  {
    std::size_t s = ny;
    std::size_t a = art_begin;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < ny; ++j) tab.at(i, j) = rows[i].coeffs[j];
      tab.rhs(i) = rows[i].rhs;
      switch (rows[i].relation) {
        case Relation::less_equal:
          tab.at(i, s) = 1;
          tab.basis()[i] = s++;
          break;
        case Relation::greater_equal:
          tab.at(i, s++) = -1;
          tab.at(i, a) = 1;
          tab.basis()[i] = a++;
          break;
        case Relation::equal:
          tab.at(i, a) = 1;
          tab.basis()[i] = a++;
          break;
      }
    }
  }

  // Phase 1.
  if (n_art > 0) {
    RatVector cost(total, Rational(0));
    for (std::size_t j = art_begin; j < total; ++j) cost[j] = -1;
    tab.maximize(cost, std::vector<bool>(total, true));
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (tab.basis()[i] >= art_begin && sgn(tab.rhs(i)) != 0) return infeasible;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < art_begin && sgn(tab.at(i, c)) == 0) ++c;
      if (c < art_begin) {
        tab.pivot(i, c);
        ++i;
      } else {
        tab.erase_row(i);
      }
    }
  }

  // Phase 2.
  RatVector cost(total, Rational(0));
  {
    Rational constant;
    RatVector lifted = lift(lp.objective, constant);
    for (std::size_t j = 0; j < ny; ++j) {
      cost[j] = lp.direction == Direction::maximize ? lifted[j] : Rational(-lifted[j]);
    }
  }
  std::vector<bool> allowed(total, true);
  for (std::size_t j = art_begin; j < total; ++j) allowed[j] = false;
  if (!tab.maximize(cost, allowed)) {
    LpResult r;
    r.status = LpStatus::unbounded;
    return r;
  }

  RatVector y(ny, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis()[i] < ny) y[tab.basis()[i]] = tab.rhs(i);
  }
  LpResult result;
  result.status = LpStatus::optimal;
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = vars[j];
    Rational x = v.reflected ? Rational(v.offset - y[v.plus]) : Rational(v.offset + y[v.plus]);
    if (v.minus != kNone) x -= y[v.minus];
    result.point[j] = x;
  }
  result.value = dot(lp.objective, result.point);
  return result;
}

}  // namespace zariski::exactalg
