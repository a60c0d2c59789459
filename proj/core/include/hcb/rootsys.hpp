#pragma once

// Exact root-system and weight arithmetic.
//
// Conventions used throughout the library:
//  * Weights are stored in the fundamental-weight basis, so coordinate i of
//    a weight is its pairing with the simple coroot i.
//  * Column i of the Cartan matrix is the simple root i written in the
//    fundamental-weight basis: cartan_matrix[j][i] == <alpha_i, alpha_j^vee>.
//  * Simple roots are numbered as in Bourbaki.
//  * Roots are indexed 0..N-1; indices below num_positive_roots() are the
//    positive roots (the simple roots first, in order), and index
//    num_positive_roots() + k is the negative of positive root k.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcb/lattice.hpp"
#include "hcb/rational.hpp"

namespace hcb {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank, 0)); }
  static Weight from_integers(const IntVector& coords);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  /// Membership in the weight lattice: all coordinates are integers.
  bool is_integral() const;
  /// Requires is_integral().
  IntVector to_integers() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator-() const;
  Weight operator*(const Rational& scalar) const;
  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);

  bool operator==(const Weight& other) const { return coords_ == other.coords_; }
  /// Lexicographic on coordinates; used for ordered containers.
  bool operator<(const Weight& other) const;

  /// "(1/2, 0, -1)".
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

/// Comma-separated rationals, e.g. "-1,1/2,0".
Weight parse_weight(std::string_view csv);

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

struct Root {
  IntVector simple_coords;  // coordinates in the simple-root basis
  IntVector as_weight;      // coordinates in the fundamental-weight basis
  IntVector coroot_coords;  // the coroot in the simple-coroot basis
  long long height = 0;     // sum of simple_coords (negative for negative roots)

  /// <nu, alpha^vee>.
  Rational pairing(const Weight& nu) const;
  long long pairing(const IntVector& nu) const;
};

/// A Weyl group element. The root permutation is the canonical key; the
/// weight matrix acts on fundamental-weight coordinates.
class WeylElement {
 public:
  using Perm = std::vector<std::uint16_t>;

  WeylElement() = default;
  WeylElement(Perm root_perm, std::size_t rank, std::vector<std::int16_t> flat_matrix);

  const Perm& root_perm() const { return perm_; }
  std::size_t rank() const { return rank_; }
  IntMatrix weight_matrix() const;
  long long matrix_entry(std::size_t i, std::size_t j) const { return matrix_[i * rank_ + j]; }

  /// Image of root index k.
  std::size_t root_image(std::size_t k) const { return perm_[k]; }
  /// Number of positive roots sent to negative roots.
  int length() const;
  bool is_identity() const;

  Weight act(const Weight& lambda) const;
  IntVector act(const IntVector& lambda) const;

  /// Composition: (a * b)(x) = a(b(x)).
  WeylElement operator*(const WeylElement& other) const;

  bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }
  auto operator<=>(const WeylElement& other) const { return perm_ <=> other.perm_; }

 private:
  Perm perm_;
  std::size_t rank_ = 0;
  std::vector<std::int16_t> matrix_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

struct IrreducibleComponent {
  char series = 'A';
  int rank = 0;
  int offset = 0;  // index of its first simple root in the product
};

class CartanDatum {
 public:
  const std::string& type_label() const { return type_label_; }
  std::size_t rank() const { return cartan_.size(); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<IrreducibleComponent>& components() const { return components_; }
  /// d_i = (alpha_i, alpha_i) / 2 with the shortest root of each component at 1.
  const std::vector<long long>& symmetrizer() const { return symmetrizer_; }

  std::size_t num_positive_roots() const { return num_positive_; }
  std::size_t num_roots() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t k) const { return roots_[k]; }
  bool is_positive(std::size_t k) const { return k < num_positive_; }
  std::size_t negate(std::size_t k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }
  std::optional<std::size_t> find_root(const IntVector& simple_coords) const;

  /// Half-sum of positive roots: all fundamental-weight coordinates equal 1.
  const Weight& rho() const { return rho_; }
  /// The finite group (weight lattice)/(root lattice).
  const QuotientGroup& weight_classes() const { return weight_classes_; }
  /// det of the Cartan matrix.
  long long cartan_determinant() const { return weight_classes_.order(); }

  Rational pairing(const Weight& nu, std::size_t root_index) const { return roots_[root_index].pairing(nu); }
  /// Coordinates in the simple-root basis (exact inverse of the Cartan matrix).
  RationalVector simple_root_coords(const Weight& lambda) const;
  /// W-invariant form normalized by symmetrizer().
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// Entry (i, j) of the form on fundamental weights.
  const RationalMatrix& fundamental_gram() const { return gram_; }

  const WeylElement& identity() const { return identity_; }
  const WeylElement& simple_reflection(std::size_t i) const { return simple_reflections_[i]; }
  WeylElement reflection(std::size_t root_index) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement element_from_perm(WeylElement::Perm perm) const;
  /// Product s_{word[0]} s_{word[1]} ..., 0-based simple indices.
  WeylElement from_word(std::span<const int> word) const;
  /// Lexicographically smallest reduced word (0-based).
  std::vector<int> reduced_word(const WeylElement& w) const;
  /// Order of W from the classification.
  unsigned long long weyl_group_order() const;

 private:
  friend std::shared_ptr<const CartanDatum> build_root_system(std::string_view type_label);
  CartanDatum() = default;
  void finalize();

  std::string type_label_;
  IntMatrix cartan_;
  std::vector<IrreducibleComponent> components_;
  std::vector<long long> symmetrizer_;
  std::vector<Root> roots_;
  std::size_t num_positive_ = 0;
  Weight rho_;
  QuotientGroup weight_classes_;
  RationalMatrix cartan_inverse_;
  RationalMatrix gram_;
  WeylElement identity_;
  std::vector<WeylElement> simple_reflections_;
  std::vector<std::pair<IntVector, std::size_t>> root_lookup_;  // sorted
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

/// Parses "A2", "B3", "A1xA1", "G2xA1", ... (irreducible factors A-G of rank <= 8).
CartanPtr build_root_system(std::string_view type_label);

/// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const CartanDatum& datum, const WeylElement& w, const Weight& lambda);

struct WeightClass {
  bool dominant = false;
  bool antidominant = false;
  bool regular = false;
  /// Positive roots alpha with <lambda + rho, alpha^vee> = 0, by index.
  std::vector<std::size_t> zero_pairing_roots;
};

WeightClass classify_weight(const CartanDatum& datum, const Weight& lambda);

struct LatticeMembership {
  bool in_weight_lattice = false;
  bool in_root_lattice = false;
  std::optional<LatticeClass> weight_class;  // set iff in_weight_lattice
};

LatticeMembership weight_lattice_tests(const CartanDatum& datum, const Weight& lambda);

/// Class of lambda in (weight lattice)/(root lattice); throws InvalidInput unless lambda is integral.
LatticeClass lattice_class(const CartanDatum& datum, const Weight& lambda);

}  // namespace hcb
