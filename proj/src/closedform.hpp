#pragma once

#include "count.hpp"
#include "rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace partpack {

// Values of the form (p + q*sqrt(3)) / r, kept symbolic so density constants
// compare exactly. r > 0 after normalization.
struct Sqrt3Value {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 1;

    double value() const;
    std::string str() const; // "(2*sqrt(3)-3)/2" style, plain "p/r" when q == 0

    friend bool operator==(const Sqrt3Value&, const Sqrt3Value&) = default;
};

// Exact comparison of a rational against (p + q*sqrt(3))/r.
bool rational_less(const BigRational& x, const Sqrt3Value& y);
bool rational_greater_equal(const BigRational& x, const Sqrt3Value& y);

// (n^3 - n) / 24: the claimed alternating-word 121 count. Integral exactly
// for odd n; for even n >= 2 the true count is (m^3 - m)/3 at n = 2m, which
// this value strictly exceeds from n = 4 on.
BigRational g_formula(std::int64_t n);

// The true unrestricted 121 count of the alternating word of length n.
std::int64_t alternating_count_exact(std::int32_t n);

struct DensityConstant {
    std::string pattern;
    Sqrt3Value exact;
};

// Packing-density constants for the tabulated three-letter patterns, per
// mode. 122 is omitted: reversal carries it to 112.
std::vector<DensityConstant> pi3_density_table(Mode mode);

// Density constants for the 3/8 family of four-letter patterns.
std::vector<DensityConstant> other_constants();

// C(a+b, a) * a^a * b^b / (a+b)^(a+b): the two-layer packing density.
// Stated for a, b >= 2; smaller arguments compute with in_stated_range false.
struct LayeredPairDensity {
    BigRational value;
    bool in_stated_range = true;
};

LayeredPairDensity layered_pair_density(std::int32_t a, std::int32_t b);

// Root of (1 - k*alpha)^(k+1) = 1 - (k+1)*alpha in (0, 1), located by a
// fixed bracket scan (step 1e-3, skipping the root at 0) plus bisection, so
// repeated runs agree bit for bit.
struct AlphaRoot {
    std::int32_t k = 0;
    double alpha = 0;
    double residual = 0;
};

AlphaRoot solve_alpha(std::int32_t k, double tolerance = 1e-12);

// k * (1 - alpha) * alpha^(k-1) at the alpha root: the stated closed form
// for the 1^k 2 density. At k = 2 this evaluates near 0.4330, which the
// verifier reports against the table constant 2*sqrt(3)-3 (~0.4641).
double ones2_density(std::int32_t k);

// C(k,2) * g(2n/k) evaluated exactly, alongside the two displayed
// expansions it is compared against: the k = 3 form n^3/27 - n/12 and the
// general form n^3/(24k) - n^3/(24k^2) - n(k-1)/24.
struct KBlockBound {
    BigRational direct;
    BigRational printed_k3;      // meaningful at k = 3
    BigRational printed_general;
};

KBlockBound kblock_bound(std::int64_t n, std::int32_t k);

} // namespace partpack
