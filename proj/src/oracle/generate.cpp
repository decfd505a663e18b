#include <algorithm>
#include <random>

#include "zariski/oracle.hpp"

namespace zariski::oracle {

using namespace exactalg;

namespace {

constexpr int kMaxRejections = 1000;

// Portable across standard libraries, unlike std::uniform_int_distribution.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

RatMatrix a_chain(std::size_t k) {
  RatMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = -2;
    if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

RatMatrix random_negdef_block(std::mt19937_64& rng, std::size_t k) {
  if (draw(rng, 0, 3) == 0) return a_chain(k);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    RatMatrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
      m(i, i) = draw(rng, -4, -1);
      for (std::size_t j = i + 1; j < k; ++j) {
        m(i, j) = m(j, i) = draw(rng, 0, 2) == 0 ? 1 : 0;
      }
    }
    if (is_negative_definite(m)) return m;
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no negative definite block of size " + std::to_string(k) + " after " +
                  std::to_string(kMaxRejections) + " attempts");
}

}  // namespace

Instance generate_instance(const InstanceSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.n_curves;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("C" + std::to_string(i + 1));

  RatMatrix mu(n);
  std::size_t block = 0;
  if (spec.shape == Template::a_chain) {
    mu = a_chain(n);
    block = n;
  } else if (n > 0) {
    Rational share = spec.negdef_fraction * static_cast<long>(n) + Rational(1, 2);
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), share.get_num_mpz_t(), share.get_den_mpz_t());
    block = static_cast<std::size_t>(
        std::clamp<long>(rounded.get_si(), 1, static_cast<long>(n)));
    const RatMatrix b = random_negdef_block(rng, block);
    for (std::size_t i = 0; i < block; ++i) {
      for (std::size_t j = 0; j < block; ++j) mu(i, j) = b(i, j);
    }
    static constexpr long kOffDiagonal[] = {0, 0, 0, 1, 2};
    for (std::size_t i = block; i < n; ++i) {
      mu(i, i) = draw(rng, -3, 2);
      for (std::size_t j = 0; j < i; ++j) {
        mu(i, j) = mu(j, i) = kOffDiagonal[draw(rng, 0, 4)];
      }
    }
  }

  auto config = surface::make_configuration(std::move(names), std::move(mu));

  std::vector<std::size_t> block_members;
  for (std::size_t i = 0; i < block; ++i) block_members.push_back(i);
  std::vector<std::size_t> cycle_members;
  for (std::size_t i = 0; i < block; ++i) {
    if (draw(rng, 0, 1) == 1) cycle_members.push_back(i);
  }
  if (cycle_members.empty() && block > 0) {
    cycle_members.push_back(static_cast<std::size_t>(draw(rng, 0, static_cast<long>(block) - 1)));
  }

  RatVector coeffs = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (draw(rng, 0, 3) == 0) continue;
    const long den = draw(rng, 1, 4);
    const Rational top = spec.coeff_bound * den;
    mpz_class cap;
    mpz_fdiv_q(cap.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    const long num = cap > 0 ? draw(rng, 0, cap.get_si()) : 0;
    coeffs[i] = make_rational(num, den);
  }

  return Instance{config, QDivisor(config, std::move(coeffs)),
                  Cycle(config, std::move(cycle_members)), Cycle(config, std::move(block_members))};
}

}  // namespace zariski::oracle
