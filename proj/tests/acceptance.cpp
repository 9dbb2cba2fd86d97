// Acceptance gate: one pass/fail line per criterion, exit code = failures.
// Every check recomputes from scratch; nothing is read from caches or disk.
#include "closedform.hpp"
#include "search.hpp"
#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace partpack;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& label, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void run(int criterion, const std::string& label,
         const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        report(criterion, true, label, detail);
    } catch (const std::exception& e) {
        report(criterion, false, label, e.what());
    }
}

void demand(bool ok, const std::string& why) {
    if (!ok) throw std::runtime_error(why);
}

std::string claim_text(const ClaimReport& r) {
    std::string out;
    for (const auto& line : r.computed) out += line + "\n";
    return out;
}

void demand_contains(const ClaimReport& r, const std::string& needle) {
    demand(claim_text(r).find(needle) != std::string::npos,
           r.id + " is missing the line: " + needle);
}

const ClaimReport& find_claim(const std::vector<ClaimReport>& reports,
                              const std::string& id) {
    for (const auto& r : reports)
        if (r.id == id) return r;
    throw std::runtime_error("no claim with id " + id);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

} // namespace

int main() {
    std::vector<ClaimReport> baseline; // shared between criteria 8 and 9

    run(1, "exhaustive mu(121,n,n) for n=3..10 on a single thread", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const std::int64_t expect[] = {1, 2, 5, 8, 14, 20, 30, 40};
        PatternSet s({CanonicalWord::parse("121")}, Mode::unrestricted);
        SearchOptions opts;
        opts.threads = 1;
        for (std::int32_t n = 3; n <= 10; ++n) {
            const SearchResult r = max_over_partitions(s, n, n, opts);
            demand(r.mu == expect[n - 3],
                   "mu at n=" + std::to_string(n) + " is " + std::to_string(r.mu) +
                       ", expected " + std::to_string(expect[n - 3]));
        }
        const double elapsed = seconds_since(t0);
        demand(elapsed < 120.0, "took " + fmt_seconds(elapsed) + ", limit is 120 s");
        return "1,2,5,8,14,20,30,40; " + fmt_seconds(elapsed);
    });

    run(2, "restricted maxima agree between partitions and words on the full grid", [] {
        const ClaimReport r = check_word_partition_equality(VerifyOptions{7, 4, 1});
        demand(r.status == ClaimStatus::confirmed,
               std::string("status is ") + claim_status_name(r.status));
        return std::string();
    });

    run(3, "transposition delta formula holds at every adjacent swap", [] {
        const ClaimReport r = check_swap_identity(VerifyOptions{10, 4, 1});
        demand(r.status == ClaimStatus::confirmed,
               std::string("status is ") + claim_status_name(r.status));
        return std::string();
    });

    run(4, "monotone layered realization dominates equal-structure partitions", [] {
        const ClaimReport r = check_layered_dominance(VerifyOptions{9, 4, 1});
        demand(r.status == ClaimStatus::confirmed,
               std::string("status is ") + claim_status_name(r.status));
        return std::string();
    });

    run(5, "density monotone in n (never rises) and in k (never falls)", [] {
        const ClaimReport in_n = check_density_noninc_n(VerifyOptions{10, 4, 1});
        demand(in_n.status == ClaimStatus::confirmed,
               std::string("n-direction status is ") + claim_status_name(in_n.status));
        const ClaimReport in_k = check_density_nondec_k(VerifyOptions{10, 4, 1});
        demand(in_k.status == ClaimStatus::confirmed,
               std::string("k-direction status is ") + claim_status_name(in_k.status));
        return std::string();
    });

    run(6, "closed-form constants match symbol for symbol", [] {
        demand(layered_pair_density(2, 2).value == BigRational(3, 8),
               "two-layer density at (2,2) is not 3/8");
        const double alpha = solve_alpha(2).alpha;
        const double closed = (3.0 - std::sqrt(3.0)) / 4.0;
        demand(std::abs(alpha - closed) <= 1e-12,
               "alpha at k=2 misses (3-sqrt(3))/4 by " +
                   std::to_string(std::abs(alpha - closed)));

        struct TableRow {
            const char* pattern;
            Sqrt3Value exact;
        };
        const TableRow restricted[] = {{"111", {1, 0, 1}},
                                       {"112", {-3, 2, 1}},
                                       {"121", {-3, 2, 2}},
                                       {"123", {1, 0, 1}}};
        const TableRow unrestricted[] = {{"111", {1, 0, 1}},
                                         {"112", {-3, 2, 1}},
                                         {"121", {1, 0, 4}},
                                         {"123", {1, 0, 1}}};
        for (const auto& [mode, rows] :
             {std::pair{Mode::restricted, restricted},
              std::pair{Mode::unrestricted, unrestricted}}) {
            const auto table = pi3_density_table(mode);
            demand(table.size() == 4, "three-letter table does not have 4 rows");
            for (std::size_t i = 0; i < 4; ++i) {
                demand(table[i].pattern == rows[i].pattern &&
                           table[i].exact == rows[i].exact,
                       std::string(mode_name(mode)) + " table row " +
                           std::to_string(i) + " is " + table[i].pattern + " = " +
                           table[i].exact.str());
            }
        }
        const auto other = other_constants();
        demand(other.size() == 3, "pair-family table does not have 3 rows");
        const char* names[] = {"1122", "1123", "1233"};
        for (std::size_t i = 0; i < 3; ++i)
            demand(other[i].pattern == names[i] && other[i].exact == Sqrt3Value{3, 0, 8},
                   "pair-family row " + std::to_string(i) + " is " + other[i].pattern +
                       " = " + other[i].exact.str());
        return "3/8, (3-sqrt(3))/4, both three-letter tables, 3/8 family";
    });

    run(7, "diagonal density trends: 121 toward 1/4, 112 bounded by 2*sqrt(3)-3", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const ClaimReport trend = check_two_block_density_trend(VerifyOptions{14, 4, 1});
        demand(trend.status == ClaimStatus::trend_consistent,
               std::string("121 trend status is ") + claim_status_name(trend.status));

        PatternSet s({CanonicalWord::parse("112")}, Mode::unrestricted);
        SearchOptions opts;
        opts.threads = 1;
        const Sqrt3Value bound{-3, 2, 1};
        BigRational prev;
        for (std::int32_t n = 3; n <= 12; ++n) {
            const SearchResult r = max_layered(s, n, n, opts);
            if (r.exhaustive_agreement.has_value())
                demand(*r.exhaustive_agreement,
                       "layered maximum for 112 misses the exhaustive one at n=" +
                           std::to_string(n));
            const BigRational delta(r.mu, binomial(n, 3));
            demand(rational_greater_equal(delta, bound),
                   "delta(112," + std::to_string(n) + "," + std::to_string(n) +
                       ") falls below 2*sqrt(3)-3");
            if (n > 3)
                demand(delta <= prev, "delta(112,n,n) rises at n=" + std::to_string(n));
            prev = delta;
        }
        const double elapsed = seconds_since(t0);
        demand(elapsed < 300.0, "took " + fmt_seconds(elapsed) + ", limit is 300 s");
        return fmt_seconds(elapsed);
    });

    run(8, "full claim run at n_cap=8: no deviations, discrepancies reported", [&] {
        baseline = run_claims(VerifyOptions{8, 4, 1});
        demand(baseline.size() == 16,
               "expected 16 claims, got " + std::to_string(baseline.size()));
        for (const auto& r : baseline)
            demand(r.status != ClaimStatus::deviation, r.id + " deviates");

        const ClaimReport& c8 = find_claim(baseline, "C8");
        demand(c8.status == ClaimStatus::informational,
               std::string("C8 status is ") + claim_status_name(c8.status));
        demand_contains(c8, "n=4: formula 5/2, exact 2");

        const ClaimReport& c13 = find_claim(baseline, "C13");
        demand(c13.status == ClaimStatus::informational,
               std::string("C13 status is ") + claim_status_name(c13.status));
        demand_contains(c13, "0.4330127019");
        demand_contains(c13, "0.4641016151");

        const ClaimReport& c14 = find_claim(baseline, "C14");
        demand(c14.status == ClaimStatus::informational,
               std::string("C14 status is ") + claim_status_name(c14.status));
        demand_contains(c14,
                        "k=3 display n^3/27 - n/12 equals C(3,2)*g(2n/3) at n=3,6,9,12");

        demand(report_exit_code(baseline) == 0, "exit code is not 0");
        return std::string();
    });

    run(9, "verification output is byte-identical across thread counts", [&] {
        demand(!baseline.empty(), "criterion 8 did not produce a baseline run");
        const auto threaded = run_claims(VerifyOptions{8, 4, 8});
        const std::string a = report_render(baseline, ReportFormat::json, false);
        const std::string b = report_render(threaded, ReportFormat::json, false);
        demand(a == b, "JSON renders differ between 1 and 8 threads");
        return "threads 1 vs 8, " + std::to_string(a.size()) + " bytes each";
    });

    std::cout << (failures == 0 ? "all 9 criteria hold" :
                                  std::to_string(failures) + " criterion failure(s)")
              << std::endl;
    return failures;
}
