#pragma once

// Exact arbitrary-precision scalars used everywhere in the library.
// No floating point appears anywhere in the computation paths.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tfund {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Thrown on violated preconditions and malformed user input.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline std::string to_string(const Int& n) { return n.str(); }

// Canonical text form: "a" for integers, "a/b" otherwise (b > 0, reduced).
inline std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Parses "a", "-a", "a/b" with arbitrary-precision components. Rejects anything else.
Rat parse_rational(const std::string& text);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

inline RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

}  // namespace tfund
