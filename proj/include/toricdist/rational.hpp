#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace toricdist {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

Integer binomial(std::int64_t n, std::int64_t k);
Integer multinomial(const std::vector<int>& parts);

bool is_integer(const Rational& q);
// Throws if the value does not fit in int64.
std::int64_t to_int64(const Integer& z);

// Elementary symmetric polynomial e_j of the given integers (e_0 = 1).
Integer elementary_symmetric(const std::vector<std::int64_t>& values, int j);

}  // namespace toricdist
