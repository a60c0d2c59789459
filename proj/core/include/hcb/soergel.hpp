#pragma once

// Formal graded words in the generators B_s and the twists R_c.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcb/integral.hpp"

namespace hcb {

struct Letter {
  enum class Kind { bs, rw };
  Kind kind = Kind::bs;
  std::size_t index = 0;  // integral simple (0-based) for bs, chamber index for rw

  static Letter B(std::size_t simple) { return {Kind::bs, simple}; }
  static Letter R(std::size_t chamber_idx) { return {Kind::rw, chamber_idx}; }
  bool is_bs() const { return kind == Kind::bs; }
  bool is_rw() const { return kind == Kind::rw; }
  bool operator==(const Letter&) const = default;
};

class BimoduleWord {
 public:
  /// The shift defaults to the zero class.
  explicit BimoduleWord(IntegralPtr ambient, std::vector<Letter> letters = {},
                        std::optional<LatticeClass> grading_shift = std::nullopt);

  const IntegralPtr& ambient() const { return ambient_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const LatticeClass& grading_shift() const { return shift_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t bs_count() const;
  bool empty() const { return letters_.empty(); }

  BimoduleWord with_letters(std::vector<Letter> letters) const;
  /// Same shift and ambient; letters must agree exactly.
  bool operator==(const BimoduleWord& other) const;

 private:
  IntegralPtr ambient_;
  std::vector<Letter> letters_;
  LatticeClass shift_;
};

/// Sum of tau over the twists plus the shift.
LatticeClass grading(const BimoduleWord& word);

enum class RewriteRule {
  push_twist,  // Bs(t) Rw(c) -> Rw(c) Bs(c t c^{-1})
  fuse,        // Rw(c) Rw(c') -> Rw(c' c)
  drop_unit,   // Rw(e) -> (nothing)
};

struct Redex {
  std::size_t position = 0;
  RewriteRule rule = RewriteRule::push_twist;
  bool operator==(const Redex&) const = default;
};

std::vector<Redex> redexes(const BimoduleWord& word);
BimoduleWord apply_rewrite(const BimoduleWord& word, const Redex& redex);
/// Leftmost redex, or nothing when the word is normal.
std::optional<BimoduleWord> rewrite_step(const BimoduleWord& word);
bool is_normal(const BimoduleWord& word);
/// [Rw(c), Bs(t_1), ..., Bs(t_l)] with c omitted when trivial.
BimoduleWord normalize(const BimoduleWord& word);

/// Rank as a free left module: 2^(number of Bs letters).
unsigned long long rank_left(const BimoduleWord& word);

/// R^{S_0} (x)_{R^{S_1}} R^{S_2} (x) ... with S_0 < S_1 > S_2 < S_3 > ...
struct SingularWord {
  IntegralPtr ambient;
  std::vector<std::vector<std::size_t>> chain;  // subsets of integral simple indices (0-based)
  std::size_t twist = 0;                        // chamber index
  std::vector<std::size_t> I;                   // W_I = W_mu
  std::vector<std::size_t> J;                   // W_J = W_lambda
};

/// Odd-length chain, alternating containments, first subset = c I c^{-1},
/// last subset = J.
bool validate_singular_word(const SingularWord& word);

/// Product of |W_{S_{2k-1}}| / |W_{S_{2k}}| over the descending steps.
unsigned long long rank_left(const SingularWord& word);
/// rank_left(word) * |W_I|: the rank after restricting to the invariants of W_I.
unsigned long long rank_left_restricted(const SingularWord& word);

/// The chain [I, I, J, I, I] of P^{mu,lambda} (x) P^{lambda,mu} for J inside I.
SingularWord translation_round_trip(IntegralPtr ambient, std::vector<std::size_t> I, std::vector<std::size_t> J);

/// Order of the parabolic subgroup of the integral Weyl group on a subset.
unsigned long long parabolic_order(const IntegralDatum& id, const std::vector<std::size_t>& subset);

struct PObjectSpec {
  std::size_t c = 0;              // chamber index
  std::vector<std::size_t> I;     // integral simple indices (0-based)
  Weight mu;                      // in lambda + weight lattice
  Weight nu;                      // regular dominant
  std::map<std::size_t, Weight> nu_i;  // subgeneric, one per index in I
};

/// Fills nu and nu_i with find_regular_dominant and find_subgeneric.
PObjectSpec make_p_object_spec(const IntegralPtr& id, std::size_t c, std::vector<std::size_t> I, const Weight& mu);

struct PObject {
  std::vector<std::string> factorization;  // translation bimodules, left to right
  BimoduleWord word;                       // [Rw(c), Bs(i_1), ..., Bs(i_l)]
  BimoduleWord predicted_image;            // normalize(word)
};

/// The shift is the class of mu - lambda so that the total grading of the
/// image is the class of c.mu - lambda. Throws InvalidInput on bad certificates.
PObject build_p_object(const IntegralPtr& id, const PObjectSpec& spec);

struct IndexLabel {
  std::size_t chamber = 0;         // index into the chamber of the aligned lambda
  WeylElement representative;      // minimal element of the double coset in the integral group
  std::size_t coset_size = 0;
};

struct IndecomposableIndex {
  IntegralPtr ambient;  // integral datum of the aligned lambda
  Weight mu;            // aligned
  Weight lambda;        // aligned
  std::vector<IndexLabel> labels;
};

/// Labels (c, W_{c.mu} x W_lambda) over all c in the chamber subgroup.
/// Throws InvalidInput when the pair is incompatible.
IndecomposableIndex indecomposable_index(const CartanPtr& datum, const Weight& mu, const Weight& lambda);

}  // namespace hcb
