#pragma once

// Independent reference computations used only by the tests.

#include <vector>

#include "hcb/coxeter.hpp"
#include "hcb/laurent.hpp"

namespace hcb::oracle {

/// leq[w][x] = 1 iff x is the product of some subword of the stored reduced
/// word of w.
std::vector<std::vector<char>> subword_bruhat(const CoxeterSystem& g);

/// P_{x,w} (in q) from the R-polynomials and the bar-invariance identity
/// q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w}.
/// Indexed [w][x].
std::vector<std::vector<LaurentPoly>> kl_by_r_polynomials(const CoxeterSystem& g,
                                                          const std::vector<std::vector<char>>& leq);

/// Number of distinct sets H g K over g in ambient, by direct multiplication.
std::size_t double_coset_count(const std::vector<WeylElement>& ambient, const std::vector<WeylElement>& h,
                               const std::vector<WeylElement>& k);

/// Number of stabilizer(lambda)-orbits on {w . mu : w in W} intersected with
/// lambda + (weight lattice), by Burnside's lemma. Both weights must already
/// be aligned (lambda dominant, mu - lambda integral).
std::size_t burnside_orbit_count(const CartanPtr& datum, const Weight& mu, const Weight& lambda);

}  // namespace hcb::oracle
