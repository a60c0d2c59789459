#pragma once

// Characters of finite-dimensional irreducibles and translation of Verma
// modules at the level of the Grothendieck group.

#include <map>
#include <vector>

#include "hcb/integral.hpp"
#include "hcb/rootsys.hpp"

namespace hcb {

struct WeightMultiplicity {
  Weight weight;
  long long mult = 0;
};

/// Sorted by decreasing height, then decreasing coordinates.
using WeightMultiset = std::vector<WeightMultiplicity>;

/// Multiplicities of the dominant weights of L(highest), by Freudenthal's
/// formula. Throws InvalidInput unless highest is integral and dominant.
std::map<IntVector, long long> dominant_weight_multiplicities(const CartanDatum& datum, const Weight& highest);

/// Every weight of L(highest) with its multiplicity.
WeightMultiset irrep_weight_multiset(const CartanDatum& datum, const Weight& highest);

/// Sum of multiplicities computed from the dominant ones and orbit sizes.
long long total_mass(const CartanDatum& datum, const Weight& highest);

/// Weyl's dimension formula.
long long weyl_dimension(const CartanDatum& datum, const Weight& highest);

long long zero_weight_multiplicity(const CartanDatum& datum, const Weight& highest);

/// The dominant element of the linear orbit W x.
Weight linear_dominant_rep(const CartanDatum& datum, const Weight& x);

/// The element of W . x whose shift by rho lies in the closed fundamental chamber.
Weight dot_chamber_rep(const CartanDatum& datum, const Weight& x);

/// Same dot orbit under W.
bool linked(const CartanDatum& datum, const Weight& x, const Weight& y);

struct VermaKey {
  Weight dominant;            // dominant representative under the integral Weyl group
  WeylElement coset_rep;      // minimal element u with weight = u . dominant
  bool operator==(const VermaKey& o) const { return dominant == o.dominant && coset_rep == o.coset_rep; }
};

struct VermaTerm {
  VermaKey key;
  Weight weight;
  long long coefficient = 0;
};

struct TranslationResult {
  std::vector<VermaTerm> terms;
  bool stabilizers_nested = false;    // W_lambda contained in W_mu
  Weight extremal_weight;             // w(mu - lambda)
  long long extremal_multiplicity = 0;
  bool only_extremal = false;         // every surviving weight equals extremal_weight
  VermaKey expected;                  // key of Delta(w . mu)
  bool matches_expected = false;      // terms == 1 * Delta(w . mu)
};

/// Key of Delta(y) for y in lambda + weight lattice of the given datum.
VermaKey verma_key(const IntegralDatum& id, const Weight& y);

/// Sum over weights nu of L(mu - lambda) (highest weight taken as the dominant
/// element of the linear orbit) of mult(nu) Delta(w.lambda + nu), restricted
/// to the summands in the dot orbit of mu. Requires lambda and mu dominant,
/// mu - lambda integral and w in the integral Weyl group.
TranslationResult translate_verma(const CartanPtr& datum, const Weight& lambda, const Weight& mu, const WeylElement& w);

}  // namespace hcb
