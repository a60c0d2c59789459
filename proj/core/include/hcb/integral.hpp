#pragma once

// Integral root data of a rational weight and the groups attached to it.

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hcb/coxeter.hpp"
#include "hcb/rootsys.hpp"

namespace hcb {

class IntegralDatum {
 public:
  const CartanPtr& datum_ptr() const { return datum_; }
  const CartanDatum& datum() const { return *datum_; }
  const Weight& lambda() const { return lambda_; }

  /// Ambient root indices alpha with <lambda, alpha^vee> integral, ascending.
  const std::vector<std::size_t>& integral_roots() const { return integral_roots_; }
  const std::vector<std::size_t>& integral_positive_roots() const { return integral_positive_; }
  bool is_integral_root(std::size_t k) const { return integral_mask_[k] != 0; }
  /// Ambient indices of the simple integral roots, ascending.
  const std::vector<std::size_t>& integral_simples() const { return w_int_->simple_roots(); }
  std::size_t num_integral_simples() const { return w_int_->rank(); }

  /// The integral Weyl group as a Coxeter system on the integral simples.
  const CoxeterSystem& w_int() const { return *w_int_; }
  const CoxeterPtr& w_int_ptr() const { return w_int_; }
  /// {w in W : w lambda - lambda in the weight lattice}, canonical order.
  const std::vector<WeylElement>& w_ext() const { return w_ext_; }
  bool in_w_ext(const WeylElement& w) const;
  /// Elements of w_ext preserving the positive integral roots, canonical order.
  const std::vector<WeylElement>& chamber() const { return chamber_; }
  const SubgroupHandle& chamber_subgroup() const { return chamber_handle_; }
  std::optional<std::size_t> chamber_index(const WeylElement& c) const;

  /// j with c s_i c^{-1} = s_j, for integral simples i, j (0-based).
  std::size_t conjugate_simple(std::size_t chamber_idx, std::size_t simple) const {
    return conjugation_[chamber_idx][simple];
  }

  const QuotientGroup& classes() const { return datum_->weight_classes(); }

 private:
  friend std::shared_ptr<const IntegralDatum> integral_datum(const CartanPtr&, const Weight&, std::size_t);
  IntegralDatum() = default;

  CartanPtr datum_;
  Weight lambda_;
  std::vector<std::size_t> integral_roots_;
  std::vector<std::size_t> integral_positive_;
  std::vector<char> integral_mask_;
  CoxeterPtr w_int_;
  std::vector<WeylElement> w_ext_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> w_ext_index_;
  std::vector<WeylElement> chamber_;
  SubgroupHandle chamber_handle_;
  std::vector<std::vector<std::size_t>> conjugation_;
};

using IntegralPtr = std::shared_ptr<const IntegralDatum>;

/// Throws BoundExceeded if |W| > bound.
IntegralPtr integral_datum(const CartanPtr& datum, const Weight& lambda, std::size_t bound = kDefaultGroupBound);

/// Class of w lambda - lambda modulo the root lattice. Requires w in w_ext.
LatticeClass tau(const IntegralDatum& id, const WeylElement& w);

struct ChamberDecomposition {
  WeylElement c;  // in the chamber subgroup
  WeylElement u;  // in the integral Weyl group
};

/// w = c u. Requires w in w_ext.
ChamberDecomposition chamber_decompose(const IntegralDatum& id, const WeylElement& w);

/// The weight in the span of the integral roots that pairs with every
/// integral coroot as lambda does.
Weight lambda_sharp(const IntegralDatum& id);

struct DominantRep {
  WeylElement w;  // in the integral Weyl group
  Weight dominant;  // w . nu
};

/// Ascends nu through integral simple reflections until it is dominant.
/// Requires nu - lambda in the weight lattice.
DominantRep dominant_dot_rep(const IntegralDatum& id, const Weight& nu);

/// Dominance tested only on the positive integral roots.
bool is_integrally_dominant(const IntegralDatum& id, const Weight& nu);

/// lambda + m rho for the least m >= 0 that is dominant and regular.
Weight find_regular_dominant(const IntegralDatum& id);

/// A dominant weight in lambda + (weight lattice) whose dot stabilizer is
/// {e, s_beta} for the integral simple beta of the given 1-based index.
Weight find_subgeneric(const IntegralDatum& id, std::size_t index);

/// True iff w . x - y is in the weight lattice for some w in W.
bool are_compatible(const CartanPtr& datum, const Weight& x, const Weight& y);

struct ProperPair {
  Weight mu;
  Weight lambda;
};

/// Normalized representatives of a pair of dot orbits: lambda is replaced by
/// its dominant representative, and mu by the first weight of W . mu (in
/// canonical order of W) lying in lambda + (weight lattice) and dominant.
/// Empty when the orbits are not compatible.
std::optional<std::pair<Weight, Weight>> align_pair(const CartanPtr& datum, const Weight& mu, const Weight& lambda);

/// One proper pair per W_lambda-orbit on (W . mu) intersected with
/// lambda + (weight lattice). The orbit representative minimizes the sum of
/// simple-root coordinates, then the coordinates lexicographically.
std::vector<ProperPair> enumerate_xi(const CartanPtr& datum, const Weight& mu, const Weight& lambda);

/// Number of W_mu \ w_ext / W_lambda double cosets for an aligned pair.
std::size_t xi_double_coset_count(const CartanPtr& datum, const Weight& mu, const Weight& lambda);

}  // namespace hcb
