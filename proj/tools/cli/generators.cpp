#include "generators.hpp"

#include "hcb/error.hpp"

namespace hcb::cli {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidInput("Rng::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

long long Rng::between(long long lo, long long hi) {
  return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_rational(Rng& rng, long long max_num, const std::vector<long long>& denominators) {
  const long long q = denominators.empty() ? 1 : rng.pick(denominators);
  const long long p = rng.between(-max_num * q, max_num * q);
  Rational r(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

Weight random_weight(Rng& rng, std::size_t rank, long long max_num, const std::vector<long long>& denominators) {
  std::vector<Rational> c;
  c.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) c.push_back(random_rational(rng, max_num, denominators));
  return Weight(std::move(c));
}

WeylElement random_element(Rng& rng, const CoxeterSystem& group) { return group.element(rng.below(group.size())); }

const WeylElement& random_element(Rng& rng, const std::vector<WeylElement>& elements) { return rng.pick(elements); }

BimoduleWord random_word(Rng& rng, const IntegralPtr& id, std::size_t max_length) {
  const std::size_t len = rng.below(max_length + 1);
  const std::size_t k = id->num_integral_simples();
  const std::size_t nc = id->chamber().size();
  std::vector<Letter> letters;
  for (std::size_t p = 0; p < len; ++p) {
    // Twists about a third of the time, so pushes and fusions both occur.
    if (k == 0 || rng.below(3) == 0) {
      letters.push_back(Letter::R(rng.below(nc)));
    } else {
      letters.push_back(Letter::B(rng.below(k)));
    }
  }
  return BimoduleWord(id, std::move(letters));
}

std::pair<BimoduleWord, std::size_t> random_normalize(Rng& rng, const BimoduleWord& word) {
  BimoduleWord cur = word;
  std::size_t steps = 0;
  while (true) {
    const auto rs = redexes(cur);
    if (rs.empty()) break;
    cur = apply_rewrite(cur, rng.pick(rs));
    ++steps;
  }
  return {std::move(cur), steps};
}

}  // namespace hcb::cli
