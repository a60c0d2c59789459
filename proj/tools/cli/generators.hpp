#pragma once

// Seeded random generators for words, weights and group elements. The
// sequence depends only on the seed, never on the platform's distributions.

#include <cstdint>
#include <random>
#include <vector>

#include "hcb/coxeter.hpp"
#include "hcb/integral.hpp"
#include "hcb/soergel.hpp"

namespace hcb::cli {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  long long between(long long lo, long long hi);
  bool coin() { return (next() >> 63) != 0; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  /// Derived stream for sub-task k; independent of how far this one has advanced.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

/// p/q with q drawn from denominators and |p| <= max_num * q.
Rational random_rational(Rng& rng, long long max_num, const std::vector<long long>& denominators);
Weight random_weight(Rng& rng, std::size_t rank, long long max_num, const std::vector<long long>& denominators);
WeylElement random_element(Rng& rng, const CoxeterSystem& group);
const WeylElement& random_element(Rng& rng, const std::vector<WeylElement>& elements);

/// Random letters over the integral simples and the chamber, length <= max_length.
BimoduleWord random_word(Rng& rng, const IntegralPtr& id, std::size_t max_length);

/// Rewrites with a uniformly chosen redex until the word is normal. Returns
/// the normal form and the number of steps taken.
std::pair<BimoduleWord, std::size_t> random_normalize(Rng& rng, const BimoduleWord& word);

}  // namespace hcb::cli
