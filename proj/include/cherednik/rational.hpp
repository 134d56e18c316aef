#ifndef CHEREDNIK_RATIONAL_HPP
#define CHEREDNIK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cherednik {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (cpp_rational keeps this canonical form itself).
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "n" or "n/d" with optional leading minus.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

/// Floor of a rational as an integer.
inline BigInt rat_floor(const Rat& r) {
    BigInt q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

/// Reduces r into [0, m) by subtracting integer multiples of m (m > 0).
inline Rat rat_mod(const Rat& r, const Rat& m) {
    Rat q = r / m;
    return r - Rat(rat_floor(q)) * m;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Least integer >= r.
inline BigInt rat_ceil(const Rat& r) {
    BigInt f = rat_floor(r);
    return (Rat(f) == r) ? f : f + 1;
}

} // namespace cherednik

#endif
