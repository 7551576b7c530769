#include "treelap/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace treelap {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    // "p/q" goes straight to GMP, which validates both halves.
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }

  bool negative = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    body.erase(body.begin());
  }

  // Split mantissa and exponent.
  long exponent = 0;
  const auto epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    const std::string exp_part = body.substr(epos + 1);
    body.erase(epos);
    if (exp_part.empty()) throw std::invalid_argument("malformed exponent: " + text);
    std::size_t i = (exp_part[0] == '+' || exp_part[0] == '-') ? 1 : 0;
    if (i >= exp_part.size() || !all_digits(exp_part.substr(i)))
      throw std::invalid_argument("malformed exponent: " + text);
    exponent = std::strtol(exp_part.c_str(), nullptr, 10);
  }

  std::string int_part = body;
  std::string frac_part;
  const auto dot = body.find('.');
  if (dot != std::string::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("malformed rational: " + text);
  if (!int_part.empty() && !all_digits(int_part)) throw std::invalid_argument("malformed rational: " + text);
  if (!frac_part.empty() && !all_digits(frac_part)) throw std::invalid_argument("malformed rational: " + text);

  mpz_class numerator(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    numerator *= 10;
    numerator += c - '0';
  }
  mpz_class denominator(1);
  long shift = exponent - static_cast<long>(frac_part.size());
  mpz_class ten(10);
  if (shift >= 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    numerator *= scale;
  } else {
    mpz_pow_ui(denominator.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  if (negative) numerator = -numerator;

  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  mpz_class ten(10), scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
  mpz_class num = q.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  mpz_class shifted = num * scale / q.get_den();  // truncation toward zero
  mpz_class whole = shifted / scale;
  mpz_class frac = shifted % scale;
  std::string out = (negative && shifted != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace treelap
