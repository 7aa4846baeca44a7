// Exact rational probabilities.

#ifndef PEC_PROBABILITY_HPP_
#define PEC_PROBABILITY_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pec {

using Probability = boost::multiprecision::cpp_rational;

/// Parses `p/q`, a natural number, or a decimal such as `0.49` into an exact
/// rational. Decimals are converted digit by digit, never through a double.
std::optional<Probability> parse_probability(std::string_view text);

/// Reduced fraction `p/q`; integers are printed without a denominator.
std::string format_fraction(const Probability& p);

/// Fixed-point rendering with `digits` fractional digits, rounding half to even.
std::string format_decimal(const Probability& p, int digits);

/// Nearest double, for sampling only.
double to_double(const Probability& p);

inline bool is_unit_interval(const Probability& p) { return p >= 0 && p <= 1; }

}  // namespace pec

#endif  // PEC_PROBABILITY_HPP_
