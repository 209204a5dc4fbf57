#pragma once

#include <optional>
#include <string>

#include "cubiq/poly.hpp"
#include "cubiq/projpoint.hpp"
#include "cubiq/quadext.hpp"
#include "cubiq/ratfunc.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

// Text format for polynomials and rational functions over Q.
//
//   poly    := terms like "x^3-2/5x^2+x-7", variable x or z, '*' optional
//   ratfunc := poly | "(poly) / (poly)"
//
// A '/' is a fraction bar when it sits at paren depth zero and either touches
// parentheses or has whitespace on both sides; otherwise it is part of a
// rational coefficient. print_* followed by parse_* is the identity.

Poly<Rat> parse_poly(const std::string& s);
RatFunc<Rat> parse_ratfunc(const std::string& s);

// "inf" or a rational literal.
ProjPoint<Rat> parse_point(const std::string& s);

std::string print_poly(const Poly<Rat>& p);

// Prints the integer-cleared coprime representative with positive leading
// denominator coefficient; a polynomial prints without the fraction bar.
std::string print_ratfunc(const RatFunc<Rat>& f);

std::string print_point(const ProjPoint<Rat>& p);
std::string print_point(const ProjPoint<QuadExt>& p);

// Rational-coefficient view of a function that happens to lie over Q.
std::optional<RatFunc<Rat>> try_rational(const RatFunc<QuadExt>& f);
std::string print_ratfunc_quadext(const RatFunc<QuadExt>& f);

}  // namespace cubiq
