#include "closedform.hpp"

#include "word.hpp"

#include <cmath>
#include <numeric>

namespace partpack {

double Sqrt3Value::value() const {
    return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(3.0)) /
           static_cast<double>(r);
}

std::string Sqrt3Value::str() const {
    if (q == 0) {
        if (r == 1) return std::to_string(p);
        return std::to_string(p) + "/" + std::to_string(r);
    }
    std::string core;
    if (q == 1) core = "sqrt(3)";
    else if (q == -1) core = "-sqrt(3)";
    else core = std::to_string(q) + "*sqrt(3)";
    if (p > 0) core += "+" + std::to_string(p);
    else if (p < 0) core += std::to_string(p);
    if (r == 1) return core;
    return "(" + core + ")/" + std::to_string(r);
}

bool rational_less(const BigRational& x, const Sqrt3Value& y) {
    // x < (p + q*sqrt(3))/r  <=>  x*r - p < q*sqrt(3), then square with signs.
    BigRational lhs = x * y.r - y.p;
    BigInt qv = y.q;
    if (qv == 0) return lhs < 0;
    if (qv > 0) {
        if (lhs < 0) return true;
        // both sides nonnegative: compare squares exactly
        return lhs * lhs < BigRational(3 * qv * qv);
    }
    // q < 0: right side negative; x*r - p must be more negative.
    if (lhs >= 0) return false;
    return lhs * lhs > BigRational(3 * qv * qv);
}

bool rational_greater_equal(const BigRational& x, const Sqrt3Value& y) {
    return !rational_less(x, y);
}

BigRational g_formula(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("g_formula: n must be >= 0");
    BigInt nn = n;
    return BigRational(nn * nn * nn - nn, 24);
}

std::int64_t alternating_count_exact(std::int32_t n) {
    if (n < 1) throw std::invalid_argument("alternating_count_exact: n must be >= 1");
    std::int64_t nl = n;
    if (n % 2 == 1) return (nl * nl * nl - nl) / 24;
    std::int64_t m = nl / 2;
    return (m * m * m - m) / 3;
}

std::vector<DensityConstant> pi3_density_table(Mode mode) {
    // 2*sqrt(3)-3 appears as (-3 + 2*sqrt(3))/1.
    if (mode == Mode::restricted) {
        return {
            {"111", {1, 0, 1}},
            {"112", {-3, 2, 1}},
            {"121", {-3, 2, 2}},
            {"123", {1, 0, 1}},
        };
    }
    return {
        {"111", {1, 0, 1}},
        {"112", {-3, 2, 1}},
        {"121", {1, 0, 4}},
        {"123", {1, 0, 1}},
    };
}

std::vector<DensityConstant> other_constants() {
    return {
        {"1122", {3, 0, 8}},
        {"1123", {3, 0, 8}},
        {"1233", {3, 0, 8}},
    };
}

LayeredPairDensity layered_pair_density(std::int32_t a, std::int32_t b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("layered_pair_density: a, b must be >= 1");
    LayeredPairDensity out;
    out.in_stated_range = (a >= 2 && b >= 2);
    BigInt num = 1;
    for (std::int32_t i = 0; i < a; ++i) num *= a;
    for (std::int32_t i = 0; i < b; ++i) num *= b;
    BigInt den = 1;
    for (std::int32_t i = 0; i < a + b; ++i) den *= (a + b);
    BigInt binom = 1;
    for (std::int64_t i = 0; i < a; ++i) {
        binom *= (a + b - i);
        binom /= (i + 1);
    }
    out.value = BigRational(binom * num, den);
    return out;
}

namespace {

double alpha_residual(std::int32_t k, double alpha) {
    return std::pow(1.0 - k * alpha, k + 1) - (1.0 - (k + 1) * alpha);
}

} // namespace

AlphaRoot solve_alpha(std::int32_t k, double tolerance) {
    if (k < 2) throw std::invalid_argument("solve_alpha: k must be >= 2");
    // alpha = 0 solves the equation trivially; start the scan past it.
    const double step = 1e-3;
    const double exclude = 1e-6;
    double lo = 0, hi = 0;
    double prev_x = exclude;
    double prev_f = alpha_residual(k, prev_x);
    bool bracketed = false;
    for (double x = step; x < 1.0; x += step) {
        double f = alpha_residual(k, x);
        if ((prev_f < 0 && f >= 0) || (prev_f > 0 && f <= 0)) {
            lo = prev_x;
            hi = x;
            bracketed = true;
            break;
        }
        prev_x = x;
        prev_f = f;
    }
    if (!bracketed)
        throw std::runtime_error("solve_alpha: no sign change in (0,1) for k=" +
                                 std::to_string(k));
    double flo = alpha_residual(k, lo);
    for (int iter = 0; iter < 100; ++iter) {
        double mid = 0.5 * (lo + hi);
        double fmid = alpha_residual(k, mid);
        if ((flo < 0) == (fmid < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    AlphaRoot root;
    root.k = k;
    root.alpha = 0.5 * (lo + hi);
    root.residual = alpha_residual(k, root.alpha);
    if (std::abs(root.residual) > tolerance)
        throw std::runtime_error("solve_alpha: residual " + std::to_string(root.residual) +
                                 " exceeds tolerance for k=" + std::to_string(k));
    return root;
}

double ones2_density(std::int32_t k) {
    AlphaRoot root = solve_alpha(k);
    return k * (1.0 - root.alpha) * std::pow(root.alpha, k - 1);
}

KBlockBound kblock_bound(std::int64_t n, std::int32_t k) {
    if (k < 2) throw std::invalid_argument("kblock_bound: k must be >= 2");
    if (n < 1) throw std::invalid_argument("kblock_bound: n must be >= 1");
    KBlockBound out;
    BigRational x(2 * BigInt(n), k); // evaluate g at the rational point 2n/k
    out.direct = BigRational(binomial(k, 2)) * (x * x * x - x) / 24;
    BigInt n3 = BigInt(n) * n * n;
    out.printed_k3 = BigRational(n3, 27) - BigRational(n, 12);
    out.printed_general = BigRational(n3, 24 * BigInt(k)) -
                          BigRational(n3, 24 * BigInt(k) * k) -
                          BigRational(BigInt(n) * (k - 1), 24);
    return out;
}

} // namespace partpack
