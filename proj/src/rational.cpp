#include "sparsesep/rational.hpp"

#include <string>

#include "sparsesep/errors.hpp"

namespace sparsesep {

std::string to_string(const Rational& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw DomainError("malformed rational: " + text);
  }
}

}  // namespace sparsesep
