#pragma once

#include "count.hpp"
#include "enumerate.hpp"

#include <functional>
#include <optional>
#include <string>

namespace partpack {

struct SearchOptions {
    // Candidate-count ceiling for exhaustive scans; unsafe_large lifts it.
    std::int64_t candidate_cap = 5'000'000;
    bool unsafe_large = false;
    int threads = 1;
    // Argmax words kept in the result; the exact count survives truncation.
    std::size_t witness_limit = 100;
    // Layered searches re-verify against the exhaustive maximum when the
    // space is at most this big, and record the outcome.
    std::int64_t layered_verify_cap = 25'000;
};

struct SearchResult {
    std::int64_t mu = 0;
    BigRational density;         // mu / C(n, m)
    std::vector<Word> witnesses; // every argmax word, sorted, up to witness_limit
    std::int64_t witness_total = 0;
    std::string space;           // "partitions", "words", "layered", "two-block"
    std::int64_t examined = 0;   // exactly the searched family's size
    // Set by structure-guided searches that double-checked exhaustively.
    std::optional<bool> exhaustive_agreement;
};

// Exact maximum of the match count over all partitions of [n] with at most k
// blocks. Splits the space by length-3 canonical prefixes across threads;
// results are identical for every thread count because partial results merge
// in prefix order.
SearchResult max_over_partitions(const PatternSet& s, std::int32_t n, std::int32_t k,
                                 const SearchOptions& opts = {});

// Exact maximum over all words in {1..k}^n; restricted counting only.
SearchResult max_over_words(const PatternSet& s, std::int32_t n, std::int32_t k,
                            const SearchOptions& opts = {});

// Rewrites an arbitrary word into a canonical word without lowering its
// restricted match count: relabel to the smallest alphabet, then repeatedly
// move the earliest copy of the first missing block label forward to the
// first position that violates restricted growth.
CanonicalWord word_to_partition(const Word& w, const PatternSet& s);

// Exact maximum over monotone layered words, valid as the global maximum for
// monotone layered patterns. Decreasing patterns run through the mirror:
// counts are invariant under simultaneous reversal of pattern and target.
SearchResult max_layered(const PatternSet& s, std::int32_t n, std::int32_t k,
                         const SearchOptions& opts = {});

// Exact maximum of the unrestricted 121 count over the two-block candidate
// family (padded alternations plus the all-ones word).
SearchResult max_two_block(std::int32_t n, const SearchOptions& opts = {});

// Adjacent "21" -> "12" transposition at 1-based position i of a two-block
// word. With a 1s and b 2s strictly before the pair and c 1s and d 2s
// strictly after, the unrestricted 121 count changes by (b+c) - (a+d).
struct SwapDelta {
    std::int64_t predicted = 0;
    std::int64_t actual = 0;
    CanonicalWord swapped;
};

SwapDelta swap_adjacent_delta(const CanonicalWord& p, std::int32_t i);

enum class KPolicy { k_equals_n, fixed_k };

struct DensityRow {
    std::int32_t n = 0;
    std::int32_t k = 0;
    std::int64_t mu = 0;
    BigRational delta;
    Word witness;      // lexicographically first argmax word
    std::string trend; // "start", then "down" / "flat" / "up" vs previous row
    std::string engine; // which search family produced the row
};

struct DensityTable {
    std::string patterns;
    Mode mode = Mode::unrestricted;
    std::vector<DensityRow> rows;
    std::string truncation_note; // nonempty when the cap cut the table short
};

// delta(S, n, k) for n from the pattern length up to n_max, with k = n or a
// fixed k. Monotone layered singletons route through the layered search and
// the unrestricted {121} singleton through the two-block family; everything
// else is exhaustive and stops with a notice when the cap is hit.
DensityTable density_sequence(const PatternSet& s, std::int32_t n_max, KPolicy policy,
                              std::int32_t fixed_k = 0, const SearchOptions& opts = {});

// Byte-stable table documents. "text" prints aligned columns, "csv" a
// header plus one line per row, "json" an object with patterns, mode, rows
// and, when present, the truncation note.
std::string table_render(const DensityTable& t, const std::string& format);

// Deterministic parallel fold over all of Pi_{n,k}. Visit mutates a
// per-task state for each word; merge folds task states together in the
// fixed prefix order. Exposed for the verifier's grid scans.
template <typename State>
using ScanVisit = std::function<void(State&, std::span<const Letter>)>;
template <typename State>
using ScanMerge = std::function<void(State&, State&&)>;

namespace detail {
std::vector<CanonicalWord> scan_prefixes(std::int32_t n, std::int32_t k);
void run_tasks(std::size_t task_count, int threads,
               const std::function<void(std::size_t)>& run);
} // namespace detail

template <typename State>
State parallel_partition_scan(std::int32_t n, std::int32_t k, int threads,
                              State initial, const ScanVisit<State>& visit,
                              const ScanMerge<State>& merge) {
    auto prefixes = detail::scan_prefixes(n, k);
    std::vector<State> states(prefixes.size(), initial);
    detail::run_tasks(prefixes.size(), threads, [&](std::size_t t) {
        PartitionStream stream(n, k, prefixes[t]);
        while (stream.next()) visit(states[t], stream.letters());
    });
    State result = std::move(initial);
    for (auto& st : states) merge(result, std::move(st));
    return result;
}

} // namespace partpack
