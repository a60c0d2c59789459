#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntVector invariant_factors;  // nonzero diagonal entries of D, all positive
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer solution of B x = y, if one exists.
std::optional<IntVector> solve_integer_system(const IntMatrix& b, const IntVector& y);

/// Unique solution of the square system M x = b; throws InvalidInput when M is singular.
RationalVector solve_rational_system(const RationalMatrix& m, const RationalVector& b);

/// Inverse of a square integer matrix over Q.
RationalMatrix rational_inverse(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

/// Element of a finite abelian group Z/m_1 x ... x Z/m_k (all m_i > 1).
/// The trivial group has no components.
class LatticeClass {
 public:
  LatticeClass() = default;
  LatticeClass(std::vector<long long> residues, std::vector<long long> moduli);

  static LatticeClass zero(const std::vector<long long>& moduli);

  const std::vector<long long>& residues() const { return residues_; }
  const std::vector<long long>& moduli() const { return moduli_; }
  bool is_zero() const;

  LatticeClass operator+(const LatticeClass& other) const;
  LatticeClass operator-(const LatticeClass& other) const;
  LatticeClass operator-() const;
  bool operator==(const LatticeClass& other) const = default;
  auto operator<=>(const LatticeClass& other) const = default;

  /// "r mod m" for a cyclic group, "(r1 mod m1, r2 mod m2)" otherwise,
  /// "0 mod 1" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<long long> residues_;
  std::vector<long long> moduli_;
};

/// The quotient Z^n / A Z^n for a nonsingular integer matrix A, realized
/// through the Smith form of A. For a Cartan matrix whose columns are the
/// simple roots this is the group of weights modulo roots.
class QuotientGroup {
 public:
  QuotientGroup() = default;
  explicit QuotientGroup(const IntMatrix& relations);

  const std::vector<long long>& moduli() const { return moduli_; }
  long long order() const;

  LatticeClass class_of(const IntVector& x) const;
  LatticeClass zero() const { return LatticeClass::zero(moduli_); }

 private:
  std::vector<long long> moduli_;
  IntMatrix rows_;  // one row of U per nontrivial invariant factor
};

}  // namespace hcb
