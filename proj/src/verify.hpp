#pragma once

#include "closedform.hpp"
#include "count.hpp"
#include "search.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace partpack {

// confirmed: zero counterexamples on an exhaustively checked finite grid.
// deviation: a counterexample exists; the report embeds the first one in
//            grid order, which is the lexicographically minimal one.
// trend_consistent: a limit statement checked as far as the caps allow:
//            monotone in the stated direction and bounded on the stated side.
// informational: a documented discrepancy between two displayed values;
//            reported verbatim, never a failure by itself.
// skipped_cap: the caps leave the claim no grid to run on.
enum class ClaimStatus {
    confirmed,
    deviation,
    trend_consistent,
    informational,
    skipped_cap,
};

const char* claim_status_name(ClaimStatus s);

struct ClaimReport {
    std::string id;
    std::string statement;
    std::string parameters;            // the grid actually run
    std::string expected;              // the relation or value demanded
    std::vector<std::string> computed; // one line per finding
    ClaimStatus status = ClaimStatus::confirmed;
    std::int64_t runtime_ms = 0;
};

struct VerifyOptions {
    std::int32_t n_cap = 8;
    std::int32_t k_cap = 4;
    int threads = 1;
};

// The checkers clamp their grids to both the options and each claim's own
// fixed ceiling, so wider caps never grow a grid past what stays exact.

// C1: restricted maxima over partitions and over words coincide.
ClaimReport check_word_partition_equality(const VerifyOptions& o);
// C2a: unrestricted density never rises with n.
ClaimReport check_density_noninc_n(const VerifyOptions& o);
// C2b: unrestricted density never falls with k; extra block budget past n
// changes nothing.
ClaimReport check_density_nondec_k(const VerifyOptions& o);
// C2c: measured direction of the restricted word density in n.
ClaimReport check_restricted_direction_probe(const VerifyOptions& o);
// C3: monotone layered realization dominates every equal-structure partition.
ClaimReport check_layered_dominance(const VerifyOptions& o);
// C4: adjacent-transposition delta formula. The predictor is injectable so
// tests can prove a wrong formula is detected; empty means the real one.
using SwapPredictor = std::function<std::int64_t(const CanonicalWord&, std::int32_t)>;
ClaimReport check_swap_identity(const VerifyOptions& o, const SwapPredictor& predictor = {});
// C5: per-structure two-block family maximum dominates.
ClaimReport check_structure_dominance(const VerifyOptions& o);
// C6: the two-block family maximum sits at zero padding.
ClaimReport check_zero_padding_max(const VerifyOptions& o);
// C7: the alternating word attains the exhaustive maximum.
ClaimReport check_alternating_is_max(const VerifyOptions& o);
// C8: (n^3-n)/24 against the exact alternating count, odd and even.
ClaimReport check_alternating_formula(const VerifyOptions& o);
// C9: diagonal 121 density trends down to 1/4.
ClaimReport check_two_block_density_trend(const VerifyOptions& o);
// C10: restricted diagonal densities for 112 and 121 against their constants.
ClaimReport check_restricted_density_trend(const VerifyOptions& o);
// C11: reversal identity between 112 and 122.
ClaimReport check_reversal_identity(const VerifyOptions& o);
// C12: the 3/8 family: exact two-layer value and diagonal sequences.
ClaimReport check_pair_family_densities(const VerifyOptions& o);
// C13: alpha-equation density against the tabulated constant, side by side.
ClaimReport check_alpha_discrepancy(const VerifyOptions& o);
// C14: k-block bound against its two displayed expansions.
ClaimReport check_kblock_expansion(const VerifyOptions& o);

// All claims in id order: C1, C2a, C2b, C2c, C3..C14.
std::vector<ClaimReport> run_claims(const VerifyOptions& o);

enum class ReportFormat { json, text };

ReportFormat parse_report_format(std::string_view text);

// json: array of objects with field order id, statement, parameters,
// expected, computed, status, runtime_ms. text: block per claim. Rendering
// with include_runtime=false drops the only field that varies between runs,
// leaving byte-identical documents for identical inputs.
std::string report_render(const std::vector<ClaimReport>& reports, ReportFormat format,
                          bool include_runtime = true);

// 0 when no claim deviates, 1 otherwise.
int report_exit_code(const std::vector<ClaimReport>& reports);

} // namespace partpack
