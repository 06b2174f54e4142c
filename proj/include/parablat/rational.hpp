#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace parablat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

Rat parse_rational(std::string_view text);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

Int floor_div(const Int& a, const Int& b);
Int mod(const Int& a, const Int& m);  // result in [0, |m|)
Int floor(const Rat& x);
Rat frac(const Rat& x);  // x - floor(x), in [0, 1)
bool is_integer(const Rat& x);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

RatVector to_rat(const IntVector& v);
bool is_integral(const RatVector& v);
IntVector to_int(const RatVector& v);  // throws NotIntegral
Int common_denominator(const RatVector& v);

}  // namespace parablat
