#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "dahaknots/errors.hpp"

namespace dahaknots {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/r".
inline BigRat rat_from_string(const std::string& s) {
    BigRat r(s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const BigRat& r) { return r.get_str(); }

inline BigRat rat_pow(const BigRat& base, std::int64_t e) {
    if (e == 0) return BigRat(1);
    if (base == 0) {
        if (e < 0) throw division_by_zero("rat_pow: negative power of zero");
        return BigRat(0);
    }
    BigRat b = base;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    BigRat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return BigRat(1) / acc;
    return acc;
}

}  // namespace dahaknots
