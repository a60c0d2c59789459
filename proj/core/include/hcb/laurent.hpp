#pragma once

#include <map>
#include <string>

namespace hcb {

/// Laurent polynomial in one variable with int64 coefficients. Zero
/// coefficients are never stored. Arithmetic throws BoundExceeded on overflow.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coefficient = 1);
  static LaurentPoly constant(long long c) { return monomial(0, c); }

  const std::map<int, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int exponent) const;
  /// Requires !is_zero().
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly scaled(long long factor) const;
  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes x -> x^factor (factor may be negative).
  LaurentPoly substitute_power(int factor) const;
  LaurentPoly bar() const { return substitute_power(-1); }

  long long at_one() const;
  bool nonnegative() const;

  bool operator==(const LaurentPoly&) const = default;

  /// "1 + q", "v^-1 + v", "0".
  std::string to_string(const std::string& var = "v") const;

 private:
  void add_term(int exponent, long long coefficient);
  std::map<int, long long> terms_;
};

}  // namespace hcb
