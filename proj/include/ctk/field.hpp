/**
 * Coefficient field selection (the rationals or a prime field F_p) plus the
 * two concrete field implementations used by the exact linear algebra and
 * the cohomology ring.
 */

#ifndef CTK_FIELD_HPP
#define CTK_FIELD_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ctk/errors.hpp"

namespace ctk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/**
 * Runtime description of a coefficient field: either Q or F_p for a prime p.
 */
struct FieldSpec {
    bool rational = true;
    long long p = 0;

    static FieldSpec q() { return FieldSpec{true, 0}; }

    static FieldSpec fp(long long p)
    {
        if (!is_prime(p))
            throw NotPrime("p = " + std::to_string(p) + " is not prime");
        return FieldSpec{false, p};
    }

    bool operator==(const FieldSpec& o) const
    {
        return rational == o.rational && (rational || p == o.p);
    }

    std::string name() const { return rational ? "Q" : "F" + std::to_string(p); }
};

/** Field of rationals; elements are exact cpp_rational values. */
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Elem(1) / a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    FieldSpec spec() const { return FieldSpec::q(); }
};

/** Prime field F_p; elements are canonical representatives in [0, p). */
struct PrimeField {
    using Elem = long long;

    long long p;

    explicit PrimeField(long long prime) : p(prime)
    {
        if (!is_prime(prime))
            throw NotPrime("p = " + std::to_string(prime) + " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long v) const
    {
        Elem r = v % p;
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const
    {
        // extended Euclid; a must be nonzero mod p
        long long t = 0, new_t = 1, r = p, new_r = a % p;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return from_int(t);
    }
    bool is_zero(Elem a) const { return a % p == 0; }
    FieldSpec spec() const { return FieldSpec{false, p}; }
};

}  // namespace ctk

#endif  // CTK_FIELD_HPP
