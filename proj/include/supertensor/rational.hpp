#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace supertensor {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator once canonicalized; every constructor path below canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional sign, exact.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer value(text);
            Rational r(value);
            r.canonicalize();
            return r;
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

/// Canonical text form: "p" when integral, else "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Exact square root when the argument is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational root(sn, sd);
    root.canonicalize();
    return root;
}

}  // namespace supertensor
