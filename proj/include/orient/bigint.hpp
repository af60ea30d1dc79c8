#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orient {

// All counts and inequality verdicts go through exact integer arithmetic.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned long long e) {
    BigInt r = 1;
    return r << e;
}

inline BigInt ipow(const BigInt& base, unsigned long long e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string dec(const BigInt& x) { return x.str(); }

}  // namespace orient
