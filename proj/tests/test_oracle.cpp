#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "zariski/oracle.hpp"

using namespace zariski;
using namespace zariski::oracle;
using namespace zariski::testing;
using decomp::Decomposition;

namespace {

bool failed(const VerificationReport& r, std::string_view name) {
  const Check* c = r.find(name);
  return c != nullptr && !c->passed;
}

// Nonnegative and satisfying M x >= 0 (or > 0 when strict), checked directly.
bool solves(const RatMatrix& m, const RatVector& x, bool strict) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j) * x[j];
    if (sgn(x[i]) < 0 || sgn(s) < (strict ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("bauer_max_subdivisor examples") {
  const auto b = blowup();
  CHECK(bauer_max_subdivisor(divisor(b, {1, 2}), Cycle(b, {1})) == divisor(b, {1, 0}));
  const auto a = a2();
  CHECK(bauer_max_subdivisor(divisor(a, {1, 0}), Cycle::all(a)).is_zero());
  // 2C1 + C2 on A2: P = a C1 + b C2 maximal with -2a + b >= 0, a - 2b >= 0 forces 0
  CHECK(bauer_max_subdivisor(divisor(a, {2, 1}), Cycle::all(a)).is_zero());
  const auto c = h_plus_a2();
  CHECK(bauer_max_subdivisor(divisor(c, {1, 1, q(1, 4)}), Cycle(c, {1, 2})) ==
        divisor(c, {1, 0, 0}));
  CHECK(bauer_max_subdivisor(QDivisor::zero(c), Cycle::empty(c)).is_zero());
}

TEST_CASE("negdef_by_elimination agrees with Sylvester") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto m = random_symmetric(rng, 1 + t % 5, 3);
    CHECK(negdef_by_elimination(m) == exactalg::is_negative_definite(m));
  }
  CHECK(negdef_by_elimination(RatMatrix{{-2, 1}, {1, -2}}));
  CHECK_FALSE(negdef_by_elimination(RatMatrix{{0, 0}, {0, -1}}));
  CHECK(negdef_by_elimination(RatMatrix(0)));
}

TEST_CASE("least_element_bruteforce examples") {
  CHECK(least_element_bruteforce(Cycle(blowup(), {1}), {-2}) == RatVector{2});
  CHECK(least_element_bruteforce(Cycle::all(a2()), {-3, 3}) == RatVector{q(3, 2), 0});
  CHECK(least_element_bruteforce(Cycle::all(a2()), {1, 1}) == RatVector{0, 0});
}

TEST_CASE("verified decompositions pass every check") {
  const auto b = blowup();
  const auto d = divisor(b, {1, 2});
  const Cycle e(b, {1});
  const auto rep = verify_decomposition(d, e, decomp::decompose_effective_support(d, e));
  CHECK(rep.passed());
  for (const char* name : {"reconstruction", "n_effective", "p_effective", "support", "g_nef",
                           "orthogonality", "square_split", "negdef_support", "least_element",
                           "maximality"}) {
    CAPTURE(name);
    REQUIRE(rep.find(name) != nullptr);
  }
  const auto f = verify_decomposition(d, std::nullopt, decomp::decompose_fujita(d, std::nullopt));
  CHECK(f.passed());
  CHECK(f.find("nef") != nullptr);

  const auto a = a2();
  const auto g = divisor(a, {1, -1});
  const auto gen = verify_decomposition(g, Cycle::all(a), decomp::decompose_support(g, Cycle::all(a)));
  CHECK(gen.passed());
  CHECK(gen.find("maximality") == nullptr);
}

TEST_CASE("tampered decompositions are rejected") {
  const auto b = blowup();
  const auto d = divisor(b, {1, 2});
  const Cycle e(b, {1});
  const Decomposition good = decomp::decompose_effective_support(d, e);

  SUBCASE("N picks up a curve outside the cycle") {
    Decomposition bad = good;
    bad.N = divisor(b, {1, 2});
    bad.P = divisor(b, {0, 0});
    const auto r = verify_decomposition(d, e, bad);
    CHECK_FALSE(r.passed());
    CHECK(failed(r, "support"));
  }
  SUBCASE("P fails to be G-nef") {
    Decomposition bad = good;
    bad.P = divisor(b, {1, 1});
    bad.N = divisor(b, {0, 1});
    const auto r = verify_decomposition(d, e, bad);
    CHECK(failed(r, "g_nef"));
  }
  SUBCASE("P.N nonzero through a shifted H") {
    Decomposition bad = good;
    bad.N = divisor(b, {0, 1});
    bad.P = divisor(b, {1, 1});
    CHECK_FALSE(verify_decomposition(d, e, bad).passed());
  }
  SUBCASE("single-coefficient perturbations") {
    const auto c = h_plus_a2();
    const auto dd = divisor(c, {1, 1, q(1, 4)});
    const Cycle g(c, {1, 2});
    for (const auto& dec : {decomp::decompose_effective_support(dd, g),
                            decomp::decompose_pseff_any_cycle(dd, std::nullopt, g),
                            decomp::decompose_fujita(dd, std::nullopt)}) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (const Rational& delta : {q(1, 3), q(-1, 7), Rational(2)}) {
          RatVector p = dec.P.coeffs();
          p[i] += delta;
          Decomposition bad = dec;
          bad.P = divisor(c, p);
          CHECK_FALSE(verify_decomposition(dd, g, bad).passed());
          RatVector n = dec.N.coeffs();
          n[i] += delta;
          bad = dec;
          bad.N = divisor(c, n);
          CHECK_FALSE(verify_decomposition(dd, g, bad).passed());
        }
      }
    }
  }
  SUBCASE("mismatched configuration") {
    Decomposition bad = good;
    bad.D = divisor(blowup(), {1, 2});
    // equal content counts as the same configuration
    CHECK(verify_decomposition(d, e, bad).passed());
    bad.D = QDivisor::zero(a2());
    CHECK(failed(verify_decomposition(d, e, bad), "configuration"));
  }
}

TEST_CASE("karamardian examples") {
  const RatMatrix a2m{{2, -1}, {-1, 2}};
  const auto r = karamardian_check(a2m);
  CHECK(r.minors_positive);
  CHECK(r.report.passed());
  REQUIRE(r.positive_solution);
  CHECK(*r.positive_solution == RatVector{1, 1});
  REQUIRE(r.nonneg_solution);
  CHECK(solves(a2m, *r.nonneg_solution, false));

  const auto id = karamardian_check(RatMatrix::identity(4));
  REQUIRE(id.positive_solution);
  CHECK(*id.positive_solution == RatVector(4, Rational(1)));

  const auto zero = karamardian_check(RatMatrix{{0}});
  CHECK(zero.minors_nonnegative);
  CHECK_FALSE(zero.minors_positive);
  REQUIRE(zero.nonneg_solution);
  CHECK(*zero.nonneg_solution == RatVector{1});
  CHECK(zero.report.passed());

  const auto neg = karamardian_check(RatMatrix{{-1}});
  CHECK_FALSE(neg.minors_nonnegative);
  CHECK(neg.report.passed());
  CHECK(neg.report.find("hypothesis") != nullptr);

  // skew 2x2: minors 0, 0, 1
  const RatMatrix skew{{0, -1}, {1, 0}};
  const auto s = karamardian_check(skew);
  REQUIRE(s.nonneg_solution);
  CHECK(solves(skew, *s.nonneg_solution, false));
}

TEST_CASE("karamardian solutions on random P-matrices") {
  std::mt19937_64 rng(11);
  int positives = 0;
  for (int t = 0; t < 300; ++t) {
    RatMatrix m(1 + t % 4);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = random_rational(rng, 3, 2);
    }
    const auto r = karamardian_check(m);
    CHECK(r.report.passed());
    if (r.nonneg_solution) CHECK(solves(m, *r.nonneg_solution, false));
    if (r.positive_solution) {
      ++positives;
      CHECK(solves(m, *r.positive_solution, true));
      for (const auto& x : *r.positive_solution) CHECK(sgn(x) > 0);
    }
  }
  CHECK(positives > 10);
}

TEST_CASE("instance generator") {
  InstanceSpec spec;
  spec.seed = 42;
  spec.n_curves = 6;
  const auto a = generate_instance(spec);
  const auto b = generate_instance(spec);
  CHECK(a.config->mu() == b.config->mu());
  CHECK(a.divisor.coeffs() == b.divisor.coeffs());
  CHECK(a.cycle == b.cycle);
  spec.seed = 43;
  const auto c = generate_instance(spec);
  CHECK_FALSE((c.config->mu() == a.config->mu() && c.divisor.coeffs() == a.divisor.coeffs()));

  spec.n_curves = 0;
  CHECK(generate_instance(spec).config->size() == 0);

  spec.n_curves = 2;
  spec.seed = 1;
  spec.shape = Template::a_chain;
  const auto chain = generate_instance(spec);
  CHECK(chain.config->mu() == RatMatrix{{-2, 1}, {1, -2}});
  CHECK(chain.config->names() == std::vector<std::string>{"C1", "C2"});

  spec.shape = Template::random;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    spec.seed = seed;
    spec.n_curves = 1 + seed % 8;
    const auto inst = generate_instance(spec);
    CHECK(negdef_by_elimination(surface::submatrix(inst.block)));
    CHECK(surface::is_effective(inst.divisor));
    CHECK_FALSE(inst.cycle.members().empty());
    for (auto i : inst.cycle.members()) CHECK(inst.block.contains(i));
    for (const auto& x : inst.divisor.coeffs()) CHECK(x <= spec.coeff_bound);
  }
}

TEST_CASE("verification over generated instances") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.n_curves = 1 + seed % 6;
    const auto inst = generate_instance(spec);
    CAPTURE(seed);
    const auto eff = decomp::decompose_effective_support(inst.divisor, inst.cycle);
    CHECK(verify_decomposition(inst.divisor, inst.cycle, eff).passed());
    CHECK(bauer_max_subdivisor(inst.divisor, inst.cycle) == eff.P);
    const auto any = decomp::decompose_pseff_any_cycle(inst.divisor, std::nullopt, inst.block);
    CHECK(verify_decomposition(inst.divisor, inst.block, any).passed());
    const auto fuj = decomp::decompose_fujita(inst.divisor, std::nullopt);
    CHECK(verify_decomposition(inst.divisor, std::nullopt, fuj).passed());
  }
}
