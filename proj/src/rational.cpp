#include "toricdist/rational.hpp"

#include <limits>

#include "toricdist/errors.hpp"

namespace toricdist {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::ParseError, "bad number '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::ParseError, "bad number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(const std::vector<int>& parts) {
  Integer out = 1;
  std::int64_t total = 0;
  for (int p : parts) {
    total += p;
    out *= binomial(total, p);
  }
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Integer elementary_symmetric(const std::vector<std::int64_t>& values, int j) {
  if (j < 0 || j > static_cast<int>(values.size())) return 0;
  std::vector<Integer> e(values.size() + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t t = i + 1; t >= 1; --t) e[t] += e[t - 1] * Integer(static_cast<long>(values[i]));
  return e[j];
}

}  // namespace toricdist
