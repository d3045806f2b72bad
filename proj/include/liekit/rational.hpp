#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liekit {

/// Exact rational number. Arithmetic results are canonical; the two-argument
/// mpq_class constructor is not, so build fractions with make_rational.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// p/q in lowest terms with a positive denominator. Throws InputError for q = 0.
Rational make_rational(long p, long q);

/// Raised for malformed input: bad dimensions, unparsable data, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p" (optional leading sign on p). Rejects q = 0, whitespace and junk.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "3/1", "-1/2".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

RatVector unit_vector(std::size_t n, std::size_t k);
bool is_zero(const RatVector& v);

}  // namespace liekit
