#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mtasep {

/// Binomial coefficient with the zero convention: C(a,k) = 0 whenever
/// a < 0, k < 0 or k > a. This makes boundary cases of the suffix-count
/// and binomial-identity formulas uniform.
mpz_class binomial(long a, long k);

/// Multinomial coefficient n! / (m_1! ... m_r!) for nonnegative parts
/// summing to n.
mpz_class multinomial(const std::vector<int>& parts);

/// q^e for a nonnegative integer exponent.
mpq_class pow_q(const mpq_class& q, unsigned long e);

/// Parses "3", "-3" or "3/4" into an exact rational.
mpq_class parse_rational(const std::string& text);

/// Canonical "p" or "p/q" rendering (never a float).
std::string format_rational(const mpq_class& q);

/// Parses a comma-separated rational list, e.g. "1/2,1,3".
std::vector<mpq_class> parse_rational_list(const std::string& text);

}  // namespace mtasep
