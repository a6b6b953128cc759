#ifndef PPOLY_BIGINT_HPP
#define PPOLY_BIGINT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <ppoly/errors.hpp>

namespace ppoly {

using BigInt = mpz_class;
using BigRational = mpq_class; // always canonical: reduced, denominator > 0

inline std::string to_decimal(const BigInt &v) { return v.get_str(10); }

inline std::string to_decimal(const BigRational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str(10);
    }
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace detail {

inline bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

// Accepts ASCII '-' and the typographic minus U+2212.
inline std::string_view strip_minus(std::string_view s, bool &negative)
{
    negative = false;
    if (!s.empty() && s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    } else if (s.size() >= 3 && s.substr(0, 3) == "\xE2\x88\x92") {
        negative = true;
        s.remove_prefix(3);
    }
    return s;
}

} // namespace detail

/// Strict base-10 integer parser: optional leading minus, then digits only.
inline BigInt parse_bigint(std::string_view text)
{
    bool negative = false;
    auto digits = detail::strip_minus(text, negative);
    if (!detail::all_digits(digits)) {
        throw parse_error("not a base-10 integer: '" + std::string(text) + "'");
    }
    BigInt v(std::string(digits), 10);
    return negative ? BigInt(-v) : v;
}

/// Parses "NUM" or "NUM/DEN" into a canonical rational.
inline BigRational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_bigint(text));
    }
    BigInt num = parse_bigint(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) {
        throw parse_error("bad denominator in '" + std::string(text) + "'");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact ceiling of q / m for m > 0.
inline BigInt ceil_div_rational(const BigRational &q, const BigInt &m)
{
    if (m <= 0) {
        throw domain_error("ceil_div_rational: divisor must be positive");
    }
    BigInt den = q.get_den() * m;
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), den.get_mpz_t());
    return out;
}

inline bool divides(const BigInt &modulus, const BigInt &value)
{
    if (modulus == 0) {
        return value == 0;
    }
    return mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

} // namespace ppoly

#endif // PPOLY_BIGINT_HPP
