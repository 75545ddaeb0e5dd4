#ifndef POLYCERT_RATIONAL_HPP
#define POLYCERT_RATIONAL_HPP

// Exact scalars. Rat is GMP's mpq_class kept in canonical form (positive
// denominator, coprime parts); every helper here returns canonical values.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "polycert/error.hpp"

namespace polycert {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& numerator, const Int& denominator) {
    if (denominator == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rat r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline bool is_canonical(const Rat& r) {
    if (sgn(r.get_den()) <= 0)
        return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

inline std::string to_string(const Int& z) { return z.get_str(10); }

/// "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace detail

/// Parses a decimal integer with an optional leading '-'.
inline Int parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (!detail::all_digits(digits))
        throw Error(ErrorKind::MalformedInput, "not an integer: '" + std::string(text) + "'");
    return Int(std::string(text), 10);
}

/// Parses "[-]p" or "[-]p/q" with q > 0. No decimals, no exponents.
inline Rat parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(text));
    Int num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text))
        throw Error(ErrorKind::MalformedInput, "bad denominator in '" + std::string(text) + "'");
    Int den(std::string(den_text), 10);
    if (den == 0)
        throw Error(ErrorKind::MalformedInput, "zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

inline Int floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rat pow(const Rat& base, unsigned long exponent) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r; // powers of coprime parts stay coprime
}

/// 2^-k as an exact rational.
inline Rat inverse_power_of_two(unsigned long k) {
    Rat r;
    r.get_num() = 1;
    mpz_ui_pow_ui(r.get_den_mpz_t(), 2, k);
    return r;
}

/// Smallest integer e >= 0 with 2^e >= r, for r > 0.
inline unsigned long ceil_log2(const Rat& r) {
    Int c = ceil(r);
    if (c <= 1)
        return 0;
    Int m = c - 1;
    return static_cast<unsigned long>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

/// The exact k-th root of a nonnegative rational, if it is rational.
inline bool exact_root(const Rat& r, unsigned long k, Rat& out) {
    if (sgn(r) < 0 || k == 0)
        return false;
    Int num, den;
    bool num_exact = mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), k) != 0;
    bool den_exact = mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), k) != 0;
    if (!num_exact || !den_exact)
        return false;
    out = make_rat(num, den);
    return true;
}

} // namespace polycert

#endif // POLYCERT_RATIONAL_HPP
