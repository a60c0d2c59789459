#pragma once

// Hecke algebra of the integral Weyl group, extended by the chamber group.
//
// Conventions: H_s^2 = (v^{-1} - v) H_s + 1 and b_s = H_s + v. Basis label
// (c, x) stands for T_c H_x with T_c H_s T_c^{-1} = H_{c^{-1} s c}.

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hcb/coxeter.hpp"
#include "hcb/integral.hpp"
#include "hcb/laurent.hpp"
#include "hcb/soergel.hpp"

namespace hcb {

/// Kazhdan-Lusztig polynomials P_{x,w} in q = v^2, filled once on first use.
class KLCache {
 public:
  explicit KLCache(CoxeterPtr group) : group_(std::move(group)) {}
  KLCache(const KLCache&) = delete;
  KLCache& operator=(const KLCache&) = delete;

  const CoxeterSystem& group() const { return *group_; }
  /// Indices into group().elements(); zero unless x <= w.
  const LaurentPoly& polynomial(std::size_t x, std::size_t w) const;
  /// Throws InvalidInput when x or w lies outside the group.
  LaurentPoly kl_polynomial(const WeylElement& x, const WeylElement& w) const;
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}.
  long long mu(std::size_t x, std::size_t w) const;

 private:
  void fill() const;

  CoxeterPtr group_;
  mutable std::once_flag once_;
  mutable std::vector<std::vector<LaurentPoly>> table_;  // table_[w][x]
};

using HeckeLabel = std::pair<std::size_t, std::size_t>;  // (chamber index, integral group index)

class HeckeElement {
 public:
  const std::map<HeckeLabel, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const HeckeLabel& label) const;
  void add(const HeckeLabel& label, const LaurentPoly& p);
  HeckeElement operator+(const HeckeElement& other) const;
  HeckeElement operator-(const HeckeElement& other) const;
  HeckeElement scaled(const LaurentPoly& p) const;
  bool operator==(const HeckeElement&) const = default;

 private:
  std::map<HeckeLabel, LaurentPoly> terms_;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(IntegralPtr id);

  const IntegralDatum& integral() const { return *id_; }
  const IntegralPtr& integral_ptr() const { return id_; }
  const CoxeterSystem& group() const { return id_->w_int(); }
  const KLCache& kl() const { return kl_; }

  HeckeElement one() const { return standard(0, 0); }
  HeckeElement standard(std::size_t c, std::size_t x) const;
  /// b_s = H_s + v for the integral simple s (0-based).
  HeckeElement generator(std::size_t s) const;
  HeckeElement twist(std::size_t c) const { return standard(c, 0); }
  /// T_c b_x expanded in the standard basis.
  HeckeElement kl_basis(std::size_t c, std::size_t x) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

 private:
  IntegralPtr id_;
  KLCache kl_;
  std::vector<std::vector<std::size_t>> conj_;  // conj_[c][x] = c x c^{-1}
  std::vector<std::vector<std::size_t>> chamber_product_;
};

/// Image of the word under Bs(s) -> b_s, Rw(c) -> T_c, multiplied in word order.
HeckeElement bs_character(const HeckeAlgebra& hecke, const BimoduleWord& word);

struct DecompositionTerm {
  std::size_t c = 0;
  std::size_t x = 0;
  LaurentPoly coefficient;     // graded multiplicity
  long long multiplicity = 0;  // value at v = 1
};

/// Coordinates in the basis {T_c b_x}. Throws InvariantViolation when a
/// coefficient has a negative term.
std::vector<DecompositionTerm> decompose(const HeckeAlgebra& hecke, const HeckeElement& h);

}  // namespace hcb
