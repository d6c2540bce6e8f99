#ifndef CURVEZETA_INTEGER_HPP
#define CURVEZETA_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvezeta {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Lowest terms, sign carried by the numerator; integers print without "/1".
inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool fits_u64(const Integer& z) {
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& z) {
    if (!fits_u64(z)) throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
}

inline Integer from_u64(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

inline Integer from_i64(std::int64_t v) {
    Integer z = from_u64(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v));
    return v < 0 ? Integer(-z) : z;
}

}  // namespace curvezeta

#endif  // CURVEZETA_INTEGER_HPP
