#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace partpack {

// Exact arithmetic for densities and closed forms. Counting stays in int64;
// rationals only appear at reporting boundaries, so arbitrary precision here
// costs nothing measurable.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, m) in int64 with overflow detection. The caps elsewhere keep every
// count this library produces far below the int64 range; the check is a
// tripwire, not a supported path.
inline std::int64_t binomial(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0) throw std::invalid_argument("binomial: negative argument");
    if (m > n) return 0;
    if (m > n - m) m = n - m;
    BigInt acc = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    if (acc > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("binomial: result exceeds int64");
    return acc.convert_to<std::int64_t>();
}

// "p/q" with the denominator omitted when it is 1.
inline std::string rational_str(const BigRational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// Fixed 10 significant digits; used everywhere a decimal is printed so that
// equal values always render to equal bytes.
inline std::string decimal_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
}

inline std::string decimal_str(const BigRational& r) {
    return decimal_str(r.convert_to<double>());
}

} // namespace partpack
