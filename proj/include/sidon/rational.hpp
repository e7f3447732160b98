#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sidon {

// Arbitrary-precision integers and rationals. Tower heights and spacer
// counts blow past 64 bits within a few stages, so nothing on the
// computation path uses machine integers for level arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

std::string to_decimal(const Int& v);

// Always "num/den" in lowest terms, e.g. "9/2", "0/1", "-3/4".
std::string to_fraction(const Rat& q);

std::optional<Int> parse_decimal(const std::string& text);
std::optional<Rat> parse_fraction(const std::string& text);

// Closed rational interval [lo, hi]. Carries values that are only known
// up to an unresolved tail mass.
struct RatInterval {
    Rat lo;
    Rat hi;

    static RatInterval point(const Rat& v) { return {v, v}; }
    static RatInterval zero() { return {Rat(0), Rat(0)}; }

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }

    RatInterval& operator+=(const RatInterval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
};

RatInterval operator+(RatInterval a, const RatInterval& b);
RatInterval operator*(const Rat& c, const RatInterval& v);
RatInterval operator*(const RatInterval& a, const RatInterval& b);

}  // namespace sidon
