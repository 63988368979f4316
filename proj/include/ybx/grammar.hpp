#pragma once

#include <string>
#include <string_view>

#include "ybx/ratfunc.hpp"

namespace ybx {

/// Shared text grammar used by all JSON exports: integers and fractions
/// "a/b"; monomials "c*x^k*y^m" joined by " + " / " - "; rational functions
/// "(num)/(den)", with a bare polynomial when the denominator is 1. Printing
/// lists terms in descending grlex order, so canonical values print
/// canonically and parse/print round-trips are byte-exact.
std::string to_string(const MPoly& p);
std::string to_string(const RatFunc& f);

Rat parse_rat(std::string_view text);
MPoly parse_poly(const VarContext& ctx, std::string_view text);
RatFunc parse_ratfunc(const VarContext& ctx, std::string_view text);

} // namespace ybx
