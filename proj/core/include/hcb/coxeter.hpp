#pragma once

// Weyl groups and their reflection subgroups as Coxeter systems.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hcb/rootsys.hpp"

namespace hcb {

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

/// A reflection subgroup of W together with a simple system for it, given
/// as positive ambient root indices. With all simple roots of the datum this
/// is W itself.
///
/// Elements are listed in canonical order: by length in this system, then
/// lexicographically by the smallest reduced word over local (0-based)
/// simple indices.
class CoxeterSystem {
 public:
  CoxeterSystem(CartanPtr datum, std::vector<std::size_t> simple_roots, std::size_t bound = kDefaultGroupBound);
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CartanPtr& datum_ptr() const { return datum_; }
  const CartanDatum& datum() const { return *datum_; }
  std::size_t rank() const { return simple_roots_.size(); }
  const std::vector<std::size_t>& simple_roots() const { return simple_roots_; }
  const WeylElement& simple_reflection(std::size_t i) const { return simple_reflections_[i]; }
  /// Ambient indices of the positive roots of the subsystem, ascending.
  const std::vector<std::size_t>& positive_roots() const { return positive_roots_; }
  bool has_root(std::size_t ambient_index) const { return in_subsystem_[ambient_index] != 0; }

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t idx) const { return elements_[idx]; }
  std::optional<std::size_t> index_of(const WeylElement& w) const;
  /// Throws InvalidInput if w is not in the subgroup.
  std::size_t require_index(const WeylElement& w) const;
  bool contains(const WeylElement& w) const { return index_of(w).has_value(); }

  int length(std::size_t idx) const { return lengths_[idx]; }
  /// Length with respect to this system; w need not be materialized.
  int length(const WeylElement& w) const;
  const std::vector<int>& word(std::size_t idx) const { return words_[idx]; }
  std::vector<int> reduced_word(const WeylElement& w) const;
  bool is_left_descent(const WeylElement& w, std::size_t i) const;
  bool is_right_descent(const WeylElement& w, std::size_t i) const;

  std::size_t left_multiply(std::size_t idx, std::size_t i) const { return left_[idx * rank() + i]; }
  std::size_t right_multiply(std::size_t idx, std::size_t i) const { return right_[idx * rank() + i]; }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }

  /// Bruhat order; the full table is built on first use.
  bool bruhat_leq(std::size_t x, std::size_t w) const;
  bool bruhat_leq(const WeylElement& x, const WeylElement& w) const;

 private:
  void build_bruhat() const;

  CartanPtr datum_;
  std::vector<std::size_t> simple_roots_;
  std::vector<WeylElement> simple_reflections_;
  std::vector<std::size_t> positive_roots_;
  std::vector<char> in_subsystem_;
  std::vector<WeylElement> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::vector<std::uint64_t>> bruhat_;
};

using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

/// The full Weyl group, cached per type label. Throws BoundExceeded when
/// |W| > bound.
CoxeterPtr weyl_group(const CartanPtr& datum, std::size_t bound = kDefaultGroupBound);

/// All elements of W exactly once, in canonical order.
std::vector<WeylElement> generate_group(const CartanPtr& datum, std::size_t bound = kDefaultGroupBound);

/// Bruhat order in W via the lifting property; no enumeration needed.
bool bruhat_leq(const CartanDatum& datum, const WeylElement& x, const WeylElement& w);

/// Sort key for deterministic output: (length in W, smallest reduced word).
bool canonical_less(const CartanDatum& datum, const WeylElement& a, const WeylElement& b);
void sort_canonical(const CartanDatum& datum, std::vector<WeylElement>& elements);

enum class SubgroupKind { parabolic, reflection, chamber, generic };

const char* to_string(SubgroupKind kind);

struct SubgroupHandle {
  std::vector<WeylElement> generators;
  std::vector<WeylElement> elements;  // sorted by root permutation
  SubgroupKind kind = SubgroupKind::generic;

  std::size_t order() const { return elements.size(); }
  bool contains(const WeylElement& w) const;
};

/// Closure of the generators. Throws BoundExceeded past bound elements.
SubgroupHandle make_subgroup(const CartanDatum& datum, std::vector<WeylElement> generators, SubgroupKind kind,
                             std::size_t bound = kDefaultGroupBound);

/// The subgroup generated by s_alpha for the given root indices.
SubgroupHandle reflection_subgroup(const CartanDatum& datum, std::span<const std::size_t> roots,
                                   SubgroupKind kind = SubgroupKind::reflection);

/// Stabilizer of lambda under the dot action, as the reflection subgroup of
/// the positive roots with <lambda + rho, alpha^vee> = 0.
SubgroupHandle dot_stabilizer(const CartanPtr& datum, const Weight& lambda);

/// {w in W : w . lambda = lambda} by direct search.
std::vector<WeylElement> brute_force_stabilizer(const CartanPtr& datum, const Weight& lambda);

struct DoubleCoset {
  WeylElement representative;
  std::vector<WeylElement> members;  // canonical order
};

struct DoubleCosetDecomposition {
  SubgroupHandle left;
  SubgroupHandle right;
  std::size_t ambient_size = 0;
  std::vector<DoubleCoset> cosets;  // ordered by representative
};

/// Orbits of H x K on the ambient set via g -> h g k^{-1}. Representatives
/// are length-minimal with ties broken by reduced word.
DoubleCosetDecomposition double_cosets(const CartanDatum& datum, std::span<const WeylElement> ambient,
                                       const SubgroupHandle& left, const SubgroupHandle& right);

}  // namespace hcb
