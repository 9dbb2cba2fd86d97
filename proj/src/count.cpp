#include "count.hpp"

#include <algorithm>
#include <array>

namespace partpack {

const char* mode_name(Mode m) {
    return m == Mode::restricted ? "restricted" : "unrestricted";
}

Mode parse_mode(std::string_view text) {
    if (text == "restricted") return Mode::restricted;
    if (text == "unrestricted") return Mode::unrestricted;
    throw std::invalid_argument("mode must be 'restricted' or 'unrestricted'");
}

PatternSet::PatternSet(std::vector<CanonicalWord> patterns, Mode mode)
    : patterns_(std::move(patterns)), mode_(mode) {
    if (patterns_.empty())
        throw std::invalid_argument("PatternSet: at least one pattern required");
    m_ = static_cast<std::int32_t>(patterns_.front().size());
    if (m_ < 1) throw std::invalid_argument("PatternSet: empty pattern");
    if (m_ > 16) throw std::invalid_argument("PatternSet: pattern length capped at 16");
    for (const auto& p : patterns_)
        if (static_cast<std::int32_t>(p.size()) != m_)
            throw std::invalid_argument("PatternSet: patterns must share one length");
    std::sort(patterns_.begin(), patterns_.end());
    if (std::adjacent_find(patterns_.begin(), patterns_.end()) != patterns_.end())
        throw std::invalid_argument("PatternSet: duplicate pattern");
}

std::string PatternSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += '+';
        out += patterns_[i].str();
    }
    return out;
}

namespace {

// Order-isomorphism against one pattern, early exit on the first pair that
// disagrees. m is small (3 or 4 in every practical call), so the quadratic
// pair sweep beats building a relabeled copy.
bool order_iso_match(std::span<const Letter> sub, std::span<const Letter> pat) {
    const std::size_t m = sub.size();
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if ((sub[i] <=> sub[j]) != (pat[i] <=> pat[j])) return false;
    return true;
}

constexpr std::size_t kMaxInlinePattern = 16;

// Canonization into a stack buffer; patterns longer than kMaxInlinePattern
// are rejected at the PatternSet boundary in practice by C(n,m) cost alone.
void canonize_small(std::span<const Letter> sub, std::array<Letter, kMaxInlinePattern>& out) {
    std::array<Letter, kMaxInlinePattern> seen{};
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) {
        Letter mapped = 0;
        for (std::size_t s = 0; s < distinct; ++s) {
            if (seen[s] == sub[i]) { mapped = static_cast<Letter>(s) + 1; break; }
        }
        if (mapped == 0) {
            seen[distinct++] = sub[i];
            mapped = static_cast<Letter>(distinct);
        }
        out[i] = mapped;
    }
}

} // namespace

bool PatternSet::matches(std::span<const Letter> subsequence) const {
    if (mode_ == Mode::restricted) {
        for (const auto& p : patterns_)
            if (order_iso_match(subsequence, p.letters())) return true;
        return false;
    }
    std::array<Letter, kMaxInlinePattern> canon;
    canonize_small(subsequence, canon);
    std::span<const Letter> c(canon.data(), subsequence.size());
    for (const auto& p : patterns_) {
        auto pl = p.letters();
        if (std::equal(c.begin(), c.end(), pl.begin(), pl.end())) return true;
    }
    return false;
}

namespace {

// Visits every m-subset of indices of the target in lexicographic order.
// Fn(idx, letters) with idx 0-based.
template <typename Fn>
void for_each_subset(std::span<const Letter> target, std::int32_t m, Fn&& fn) {
    const std::int32_t n = static_cast<std::int32_t>(target.size());
    if (m > n) throw std::invalid_argument("pattern longer than target");
    std::vector<std::int32_t> idx(static_cast<std::size_t>(m));
    std::vector<Letter> sub(static_cast<std::size_t>(m));
    for (std::int32_t i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        for (std::int32_t i = 0; i < m; ++i) sub[i] = target[idx[i]];
        fn(idx, std::span<const Letter>(sub));
        // Standard combination successor.
        std::int32_t j = m - 1;
        while (j >= 0 && idx[j] == n - m + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (std::int32_t i = j + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
}

} // namespace

std::int64_t count_matching(const PatternSet& s, std::span<const Letter> target) {
    std::int64_t total = 0;
    for_each_subset(target, s.pattern_length(),
                    [&](const std::vector<std::int32_t>&, std::span<const Letter> sub) {
                        if (s.matches(sub)) ++total;
                    });
    return total;
}

std::int64_t count_restricted(const PatternSet& s, std::span<const Letter> target) {
    if (s.mode() != Mode::restricted)
        throw std::invalid_argument("count_restricted: pattern set counts unrestricted");
    return count_matching(s, target);
}

std::int64_t count_restricted(const PatternSet& s, const Word& target) {
    return count_restricted(s, target.letters());
}

std::int64_t count_unrestricted(const PatternSet& s, const CanonicalWord& target) {
    if (s.mode() != Mode::unrestricted)
        throw std::invalid_argument("count_unrestricted: pattern set counts restricted");
    return count_matching(s, target.letters());
}

std::vector<Occurrence> occurrences(const PatternSet& s, std::span<const Letter> target) {
    std::vector<Occurrence> out;
    for_each_subset(target, s.pattern_length(),
                    [&](const std::vector<std::int32_t>& idx, std::span<const Letter> sub) {
                        if (!s.matches(sub)) return;
                        Occurrence occ(idx.size());
                        for (std::size_t i = 0; i < idx.size(); ++i) occ[i] = idx[i] + 1;
                        out.push_back(std::move(occ));
                    });
    return out;
}

std::int64_t count_with_last(const PatternSet& s, std::span<const Letter> target) {
    const std::int32_t n = static_cast<std::int32_t>(target.size());
    const std::int32_t m = s.pattern_length();
    if (m > n) throw std::invalid_argument("pattern longer than target");
    std::int64_t total = 0;
    if (m == 1) return s.matches(target.subspan(static_cast<std::size_t>(n) - 1)) ? 1 : 0;
    // Choose the first m-1 indices among the first n-1 positions; the last
    // index is pinned to n.
    std::vector<Letter> sub(static_cast<std::size_t>(m));
    sub[static_cast<std::size_t>(m) - 1] = target[static_cast<std::size_t>(n) - 1];
    for_each_subset(target.first(static_cast<std::size_t>(n) - 1), m - 1,
                    [&](const std::vector<std::int32_t>&, std::span<const Letter> head) {
                        std::copy(head.begin(), head.end(), sub.begin());
                        if (s.matches(sub)) ++total;
                    });
    return total;
}

DensityValue density(const PatternSet& s, std::span<const Letter> target) {
    DensityValue d;
    d.matches = count_matching(s, target);
    d.subsets = binomial(static_cast<std::int64_t>(target.size()), s.pattern_length());
    d.value = BigRational(d.matches, d.subsets);
    return d;
}

} // namespace partpack
