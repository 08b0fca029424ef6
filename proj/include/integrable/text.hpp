#pragma once

// Shared lexer for the textual forms `c*eps^a*q^b*u_2^3*tv_0 + ...`.

#include "integrable/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace integrable::text {

struct Factor {
  std::string symbol;  // "eps", "q", "X", "u_3", "tv_0", ...
  int exponent = 1;
};

struct Term {
  Rational scalar{1};
  std::vector<Factor> factors;  // in the order written
};

/// Splits a signed sum of products. Numbers may appear anywhere in a
/// product; they are folded into Term::scalar. Throws ParseError.
std::vector<Term> parse_sum(std::string_view input);

/// Appends `base` or `base^e` (e != 1) to out.
void append_power(std::string& out, std::string_view base, int exponent);

}  // namespace integrable::text
