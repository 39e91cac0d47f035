/* rational.hpp: exact coefficients */
#pragma once

#include <gmpxx.h>

#include <string>

namespace gqp {

using Rational = mpq_class;

/* Accepts "3", "-3/2", "+4/6" and the unicode minus sign. Throws std::invalid_argument. */
Rational parse_rational(const std::string& text);

/* Canonical decimal form, "p/q" or "p". */
std::string to_string(const Rational& q);

}  // namespace gqp
