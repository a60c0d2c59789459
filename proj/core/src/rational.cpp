#include "hcb/rational.hpp"

#include <cctype>

#include "hcb/error.hpp"

namespace hcb {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  std::string_view unsigned_part = body;
  if (!unsigned_part.empty() && (unsigned_part.front() == '-' || unsigned_part.front() == '+')) {
    unsigned_part.remove_prefix(1);
  }
  const auto slash = unsigned_part.find('/');
  const std::string_view num = unsigned_part.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : unsigned_part.substr(slash + 1);
  if (!is_digit_run(num) || !is_digit_run(den)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d{std::string(den)};
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  mpz_class n{std::string(num)};
  if (body.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long long to_integer(const Rational& q) {
  if (!is_integer(q)) throw InvalidInput("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw InvalidInput("integer out of range: " + to_string(q));
  return q.get_num().get_si();
}

long long ceil_to_integer(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) throw InvalidInput("integer out of range");
  return c.get_si();
}

}  // namespace hcb
