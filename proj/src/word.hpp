#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace partpack {

// A set partition of [n] is stored as its canonical word w_1..w_n: w_i is the
// index of the block containing i, blocks numbered by order of first
// appearance. Exactly the restricted growth condition: w_1 = 1 and
// w_{i+1} <= 1 + max(w_1..w_i). Plain words over {1..k} carry no such
// constraint and appear as search targets and as canonization input.
using Letter = std::int32_t;
using Letters = std::vector<Letter>;

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position(position) {}
    std::size_t position; // 1-based offset into the input text
};

struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& what, std::int64_t size, std::int64_t cap)
        : std::runtime_error(what), size(size), cap(cap) {}
    std::int64_t size;
    std::int64_t cap;
};

bool validate_canonical(std::span<const Letter> letters);

// Letter-by-letter relabeling in order of first appearance; the result is
// canonical for any input word. canonize(2,2,1) = (1,1,2).
Letters canonize_letters(std::span<const Letter> letters);

// Relabeling by rank of value: the smallest value present becomes 1, the next
// 2, and so on. Preserves order type, unlike canonize. flatten(2,1,2) = (2,1,2),
// canonize(2,1,2) = (1,2,1).
Letters flatten_letters(std::span<const Letter> letters);

// u_i <= u_j iff w_i <= w_j over all pairs; equal-length inputs only.
bool is_order_isomorphic(std::span<const Letter> u, std::span<const Letter> w);

std::string format_letters(std::span<const Letter> letters);
Letters parse_letters(std::string_view text);

class Word {
public:
    Word() = default;
    explicit Word(Letters letters);

    static Word parse(std::string_view text);

    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    Letter max_letter() const;
    std::string str() const { return format_letters(letters_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    Letters letters_;
};

class CanonicalWord {
public:
    CanonicalWord() = default;
    explicit CanonicalWord(Letters letters); // throws unless restricted-growth

    static CanonicalWord parse(std::string_view text);
    // Skips validation; for enumeration streams that construct by invariant.
    static CanonicalWord unchecked(Letters letters);

    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    Letter block_count() const; // = max letter, 0 for the empty word
    std::string str() const { return format_letters(letters_); }
    Word as_word() const { return Word(letters_); }

    friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
    friend auto operator<=>(const CanonicalWord& a, const CanonicalWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    Letters letters_;
};

CanonicalWord canonize(const Word& w);
CanonicalWord canonize(std::span<const Letter> letters);

// Blocks as 1-based position lists, ordered by minima.
using Blocks = std::vector<std::vector<std::int32_t>>;

// Rejects families that are not a partition of [n] in standard order:
// blocks must be nonempty, sorted internally, disjoint, cover 1..n, and be
// listed by increasing minimum.
CanonicalWord from_blocks(const Blocks& blocks);
Blocks to_blocks(const CanonicalWord& w);

CanonicalWord reverse_canonize(const CanonicalWord& w);

// Multiset of block sizes, sorted nondecreasing.
using BlockStructure = std::vector<std::int32_t>;
BlockStructure block_structure(const CanonicalWord& w);

// A partition is layered when its word is weakly increasing (blocks are
// intervals), and monotone layered when additionally the block sizes are
// sorted. Ties and the degenerate cases (empty, single block) classify as
// increasing.
enum class Layering {
    not_layered,
    layered_only,
    monotone_layered_incr,
    monotone_layered_decr,
};

Layering classify_layering(const CanonicalWord& w);

const char* layering_name(Layering c);

// 121212... truncated to n letters.
CanonicalWord alternating(std::int32_t n);

} // namespace partpack
