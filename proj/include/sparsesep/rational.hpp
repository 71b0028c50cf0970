#pragma once

#include <boost/rational.hpp>
#include <string>

namespace sparsesep {

// Exact arithmetic for average degrees and bound comparisons. Everything the
// library measures fits comfortably in 64-bit numerators/denominators.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace sparsesep
