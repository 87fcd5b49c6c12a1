#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "symskew/errors.hpp"

namespace symskew {

/// Exact arbitrary-precision rational, always in lowest terms with a positive
/// denominator. GMP's canonical mpq carries exactly these invariants; it is
/// the scalar of the whole library. No floating point participates in any
/// computation that feeds a certificate.
using Rational = mpq_class;
using Integer = mpz_class;

/// Serializes as "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws Error on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Half-open interval [lo, hi). Degenerate (lo >= hi) means empty.
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi > lo ? Rational(hi - lo) : Rational(0); }
    bool empty() const { return hi <= lo; }
    bool contains(const Rational& x) const { return lo <= x && x < hi; }

    RationalInterval intersect(const RationalInterval& o) const {
        RationalInterval out{lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
        return out;
    }

    RationalInterval shifted(const Rational& t) const { return {lo + t, hi + t}; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

std::string to_string(const RationalInterval& iv);

} // namespace symskew
