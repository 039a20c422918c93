#pragma once

#include <gmpxx.h>

#include <string>

namespace gec {

// Exact rational scalar used throughout the exact-mode pipeline.
// All stored values are kept canonical (lowest terms, sign on the numerator).
using Rat = mpq_class;

// num/den reduced to canonical form. The raw two-argument mpq_class
// constructor skips canonicalization, which breaks comparisons downstream;
// use this whenever the pair is not known to be coprime.
inline Rat frac(long num, long den) {
    Rat v(num, den);
    v.canonicalize();
    return v;
}

// Parses "p/q", "p", or a plain decimal string ("-1.25"). Throws
// std::invalid_argument on anything else.
Rat rat_from_string(const std::string& text);

// Canonical serialization: lowest terms, sign on the numerator, "p" when the
// denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Rat rat_factorial(unsigned long n);

// 2^e for possibly negative e.
Rat rat_pow2(long e);

}  // namespace gec
