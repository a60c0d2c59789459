#include "hcb/laurent.hpp"

#include "hcb/error.hpp"

namespace hcb {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundExceeded("Laurent polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("Laurent polynomial coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, long long coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly p = *this;
  p += other;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly p = *this;
  p -= other;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) p.add_term(e1 + e2, checked_mul(c1, c2));
  }
  return p;
}

LaurentPoly LaurentPoly::scaled(long long factor) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e, checked_mul(c, factor));
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.add_term(e * factor, c);
  return p;
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    long long mag = c;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        mag = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace hcb
