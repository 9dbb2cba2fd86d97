#pragma once

#include "rational.hpp"
#include "word.hpp"

#include <cstdint>
#include <vector>

namespace partpack {

// Restricted containment: some index subset of the target is order-isomorphic
// to the pattern. Unrestricted containment: the subsequence canonizes to the
// pattern. 232 is a restricted (and unrestricted) copy of 121; 212 is an
// unrestricted copy only.
enum class Mode { restricted, unrestricted };

const char* mode_name(Mode m);
Mode parse_mode(std::string_view text);

// Nonempty set of distinct canonical patterns of one common length, counted
// in one mode. Distinct canonical patterns are never order-isomorphic and
// never share a canonization, so each index subset matches at most one
// member: set counts are sums without double counting.
class PatternSet {
public:
    PatternSet(std::vector<CanonicalWord> patterns, Mode mode);

    const std::vector<CanonicalWord>& patterns() const { return patterns_; }
    Mode mode() const { return mode_; }
    std::int32_t pattern_length() const { return m_; }
    std::string str() const; // "112+121" style key, patterns sorted

    // True when the letters of one subsequence (length m) match some member.
    bool matches(std::span<const Letter> subsequence) const;

private:
    std::vector<CanonicalWord> patterns_;
    Mode mode_;
    std::int32_t m_;
};

// 1-based index tuples, strictly increasing.
using Occurrence = std::vector<std::int32_t>;

// Number of index subsets of the target that are copies of a member of S.
// The target of unrestricted counting must be canonical (callers holding a
// CanonicalWord pass its letters); restricted counting applies to any word.
std::int64_t count_matching(const PatternSet& s, std::span<const Letter> target);

std::int64_t count_restricted(const PatternSet& s, std::span<const Letter> target);
std::int64_t count_restricted(const PatternSet& s, const Word& target);
std::int64_t count_unrestricted(const PatternSet& s, const CanonicalWord& target);

// All matching index tuples in lexicographic order.
std::vector<Occurrence> occurrences(const PatternSet& s, std::span<const Letter> target);

// Occurrences whose last index equals the target length, counted by fixing
// the final position and choosing the rest, never by truncating the target.
std::int64_t count_with_last(const PatternSet& s, std::span<const Letter> target);

struct DensityValue {
    std::int64_t matches = 0;
    std::int64_t subsets = 0; // C(n, m)
    BigRational value;        // matches / subsets
};

DensityValue density(const PatternSet& s, std::span<const Letter> target);

} // namespace partpack
