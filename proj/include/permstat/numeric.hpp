#ifndef PERMSTAT_NUMERIC_HPP
#define PERMSTAT_NUMERIC_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace permstat {

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);
// binomial with arbitrary-precision top argument (used by series expansion)
mpz_class binomial(const mpz_class& n, unsigned k);
mpz_class catalan(unsigned n);

// Stirling numbers of the second kind S(r, j); r, j small.
mpz_class stirling2(unsigned r, unsigned j);

// "p/q" or "p"; also accepts a leading '-'.
mpq_class parse_rational(const std::string& s);
std::string format_rational(const mpq_class& q);

// Fixed-point decimal rendering with round-half-away-from-zero,
// e.g. render_decimal(1/3, 3) == "0.333", render_decimal(-1/40, 3) == "-0.025".
std::string render_decimal(const mpq_class& value, int digits);

// Exact square root of a nonnegative rational, when one exists.
std::optional<mpq_class> exact_sqrt(const mpq_class& value);

// Decimal rendering of sign * sqrt(value), value >= 0, computed with exact
// integer arithmetic (no floating point); same rounding mode as above.
std::string render_sqrt_decimal(const mpq_class& value, int sign, int digits);

}  // namespace permstat

#endif
