#include <cctype>

#include "zariski/error.hpp"
#include "zariski/exactalg.hpp"

namespace zariski::exactalg {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_rational_literal(std::string_view text) noexcept {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return all_digits(body);
  const auto num = body.substr(0, slash);
  const auto den = body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  return den.find_first_not_of('0') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw Error(ErrorKind::Parse,
                "not a rational literal: \"" + std::string(text) + "\"");
  }
  Rational q;
  // set_str accepts exactly the grammar checked above (base 10).
  if (q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorKind::Parse, "not a rational literal: \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

RatVector zeros(std::size_t n) { return RatVector(n, Rational(0)); }

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot: length mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace zariski::exactalg
