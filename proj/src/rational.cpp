#include "betacount/rational.hpp"

#include <cctype>

namespace betacount {

namespace {

bool parse_mpz(std::string_view text, mpz_class* out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  if (text.size() > 1 && text[0] == '0') return false;  // no leading zeros
  *out = mpz_class(std::string(text), 10);
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  mpz_class num, den(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_mpz(text, &num)) return std::nullopt;
  } else {
    if (!parse_mpz(text.substr(0, slash), &num)) return std::nullopt;
    if (!parse_mpz(text.substr(slash + 1), &den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

bool Rational::is_power_of_two(unsigned long* exponent) const {
  if (den() != 1) return false;
  const mpz_class& n = num();
  if (n <= 0) return false;
  // A power of two has exactly one set bit.
  if (mpz_popcount(n.get_mpz_t()) != 1) return false;
  if (exponent != nullptr) {
    *exponent = mpz_scan1(n.get_mpz_t(), 0);
  }
  return true;
}

std::string Rational::str() const {
  return num().get_str() + "/" + den().get_str();
}

}  // namespace betacount
