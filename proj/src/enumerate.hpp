#pragma once

#include "word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace partpack {

// Lexicographic stream of all canonical words of length n with at most k_max
// blocks. Single consumer; reset() rewinds. An optional canonical prefix
// restricts the stream to its extensions, which is how searches split work
// across threads: the sub-streams for the length-3 prefixes partition the
// whole space.
class PartitionStream {
public:
    PartitionStream(std::int32_t n, std::int32_t k_max);
    PartitionStream(std::int32_t n, std::int32_t k_max, const CanonicalWord& prefix);

    void reset();
    // Advances to the next word; false once the stream is exhausted.
    bool next();
    std::span<const Letter> letters() const { return letters_; }
    CanonicalWord current() const { return CanonicalWord::unchecked(Letters(letters_.begin(), letters_.end())); }

private:
    std::int32_t n_;
    std::int32_t k_max_;
    std::size_t prefix_len_;
    Letters letters_;
    Letters maxima_; // maxima_[i] = max(letters_[0..i])
    bool fresh_ = true;
    bool done_ = false;

    void fill_suffix(std::size_t from);
};

// Lexicographic stream of all words over {1..k} of length n.
class WordStream {
public:
    WordStream(std::int32_t n, std::int32_t k);

    void reset();
    bool next();
    std::span<const Letter> letters() const { return letters_; }

private:
    std::int32_t n_;
    std::int32_t k_;
    Letters letters_;
    bool fresh_ = true;
    bool done_ = false;
};

enum class Direction { incr, decr };

// Realizes a block-size multiset as the monotone layered word with sizes
// sorted in the requested direction: ({3,3,1}, decr) -> 1112223.
CanonicalWord layered_from_structure(const BlockStructure& sizes, Direction dir);

// One monotone increasing layered word per integer partition of n into at
// most k_max parts, in descending-lex order of the partitions:
// (4,2) -> 1111, 1222, 1122.
std::vector<CanonicalWord> layered_partitions(std::int32_t n, std::int32_t k_max);

// Two-block shape: front_ones 1s, then alt_pairs copies of "12", then a
// closing 1 unless alt_ends_in_two, then back_ones 1s. The alternating
// section may end in 2 only with no trailing 1s. Length 0 shapes never
// arise: realize() of a shape for total length n has exactly n letters.
struct TwoBlockShape {
    std::int32_t front_ones = 0;
    std::int32_t alt_pairs = 0;
    bool alt_ends_in_two = false; // permitted only when back_ones == 0
    std::int32_t back_ones = 0;

    std::int32_t length() const {
        return front_ones + 2 * alt_pairs + (alt_ends_in_two ? 0 : 1) + back_ones;
    }
    CanonicalWord realize() const;
};

// Every distinct word realized by a shape of length n, sorted, including the
// all-ones degenerate shape. The search over this family deliberately covers
// more than the near-balanced shapes so balance can be confirmed, not assumed.
std::vector<CanonicalWord> two_block_candidates(std::int32_t n);

// |Pi_{n,k}| by the restricted-growth recurrence; n <= 20 keeps it in int64.
std::int64_t space_size(std::int32_t n, std::int32_t k_max);

} // namespace partpack
